#include "qcalc/dga.hpp"

#include <random>
#include <stdexcept>

#include "qcalc/library.hpp"
#include "qcalc/loader.hpp"

namespace qcalc {

namespace {

const char *const kForms[4] = {"e_a", "e_b", "e_c", "e_d"};

int need(const Presentation &p, const std::string &name)
{
	int g = p.find(name);
	if (g < 0)
		throw AlphabetError("no generator '" + name + "' in " + p.name());
	return g;
}

int need(const PresentationBuilder &b, const std::string &name)
{
	int g = b.alphabet().find(name);
	if (g < 0)
		throw AlphabetError("no generator '" + name + "'");
	return g;
}

bool is_form_only(const Alphabet &a, const NcPoly &x)
{
	for (auto &[w, c] : x.terms())
		for (Gen g : w)
			if (a.gens[g].degree == 0)
				return false;
	return !x.is_zero();
}

void add_forms(PresentationBuilder &b)
{
	for (auto f : kForms) {
		std::string alias = f;
		alias.erase(1, 1);
		b.add_generator(f, 1, {alias});
	}
}

NcPoly theta_of(const PresentationBuilder &b) { return b.gen("e_a") + b.gen("e_d"); }

// Exterior relations re-expressed in the builder's alphabet by form name.
void add_exterior(PresentationBuilder &b)
{
	auto src = omega_bqsu2();
	std::vector<Gen> to(src->gen_count(), 0);
	for (auto f : kForms)
		to[need(*src, f)] = static_cast<Gen>(need(b, f));
	for (auto &rel : exterior_relations(*src)) {
		NcPoly out;
		for (auto &[w, c] : rel.terms()) {
			Word v;
			for (Gen g : w)
				v.push_back(to[g]);
			out.add(v, c);
		}
		b.add_relation(out);
	}
}

} // namespace

GenMatrix form_matrix(const Presentation &p)
{
	return named_matrix(p, {kForms[0], kForms[1], kForms[2], kForms[3]});
}

GenMatrix named_matrix(const Presentation &p, const std::vector<std::string> &names)
{
	if (names.size() != 4)
		throw std::invalid_argument("named_matrix expects four names");
	GenMatrix m(2, std::vector<NcPoly>(2));
	for (int i = 0; i < 4; ++i)
		m[i / 2][i % 2] = NcPoly::gen(need(p, names[i]));
	return m;
}

std::vector<NcPoly> exterior_relations(const Presentation &p)
{
	std::vector<NcPoly> out;
	for (auto &r : p.relations())
		if (is_form_only(p.alphabet(), r))
			out.push_back(r);
	return out;
}

std::vector<NcPoly> bimodule_relations(const Presentation &p)
{
	std::vector<NcPoly> out;
	const Alphabet &a = p.alphabet();
	for (auto &r : p.relations()) {
		bool deg1 = !r.is_zero();
		for (auto &[w, c] : r.terms())
			if (a.degree(w) != 1)
				deg1 = false;
		if (deg1 && !is_form_only(a, r))
			out.push_back(r);
	}
	return out;
}

PresentationPtr omega_bqsu2(BracketConvention bracket)
{
	if (bracket == BracketConvention::Standard)
		return builtin("omega_bqsu2");
	auto resolve = [](const std::string &base) { return builtin(base); };
	return load_builder(builtin_source("omega_bqsu2"), "omega_bqsu2.alg", resolve, bracket).build();
}

PresentationPtr omega_cqsu2(const RMatrix &r) { return omega_frt(*builtin("cqsu2"), r); }

PresentationPtr omega_frt(const Presentation &frt, const RMatrix &r)
{
	PresentationBuilder b(frt, "omega_" + frt.name() + "(" + r.name() + ")");
	b.set_star_closure(false);
	add_forms(b);
	auto base = b.build();
	GenMatrix t = named_matrix(*base, frt_names(2));
	for (auto &rel : frt_calculus_relations(r, t, form_matrix(*base)))
		b.add_relation(rel);
	add_exterior(b);
	b.set_theta(theta_of(b), Scalar::mu().inverse());
	return b.build();
}

PresentationPtr omega_cqsu2()
{
	return cached_presentation("omega_cqsu2", [] { return omega_cqsu2(RMatrix::standard(Normalization::QuantumGroup)); });
}

PresentationPtr omega_uqsu2() { return builtin("omega_uqsu2"); }

PresentationPtr omega_eq9(const RMatrix &r)
{
	PresentationBuilder b(*builtin("bqsu2"), "omega_eq9(" + r.name() + ")");
	b.set_star_closure(false);
	add_forms(b);
	auto base = b.build();
	GenMatrix u = named_matrix(*base, braided_names(2));
	for (auto &rel : eq9_relations(r, u, form_matrix(*base)))
		b.add_relation(rel);
	add_exterior(b);
	b.set_theta(theta_of(b), Scalar::mu().inverse());
	return b.build();
}

NcPoly prop7_constraint(const Presentation &p, const Scalar &t)
{
	auto g = [&](const char *n) { return NcPoly::gen(need(p, n)); };
	Scalar q = Scalar::q(), qi = q.inverse();
	NcPoly theta = g("e_a") + g("e_d");
	NcPoly rhs = g("α") * g("e_d") + g("δ") * g("e_a") - qi * (g("β") * g("e_b")) - q * (g("γ") * g("e_c"));
	return (t + t.inverse()) * theta - (qi * (Scalar(1) + qi)) * rhs;
}

PresentationPtr omega_qfuzzy(const Scalar &t)
{
	auto base = omega_bqsu2();
	PresentationBuilder b(*base, "omega_qfuzzy");
	b.set_star_closure(false);
	Scalar q = Scalar::q();
	NcPoly trace = q.inverse() * b.gen("α") + q * b.gen("δ");
	b.add_relation(trace - NcPoly(t + t.inverse()));
	b.add_relation(prop7_constraint(*base, t));
	return b.build();
}

std::vector<Residual> eq9_crosscheck(const RMatrix &r, const Presentation &hand)
{
	std::vector<Residual> bad;
	GenMatrix u = named_matrix(hand, braided_names(2));
	GenMatrix e = form_matrix(hand);
	auto rels = eq9_relations(r, u, e);
	const char *ix = "12";
	for (size_t k = 0; k < rels.size(); ++k) {
		NcPoly v = hand.normalize(rels[k]);
		if (!v.is_zero()) {
			std::string label = "eq9[";
			for (int s = 3; s >= 0; --s)
				label += ix[(k >> s) & 1];
			bad.push_back({label + "] in " + hand.name(), v});
		}
	}
	PresentationPtr gen;
	try {
		gen = omega_eq9(r);
	} catch (const InconsistentPresentation &ex) {
		bad.push_back({std::string("generated calculus is inconsistent: ") + ex.what(), NcPoly(1)});
		return bad;
	}
	auto hands = bimodule_relations(hand);
	GenMap id = map_by_name(hand, *gen);
	for (size_t k = 0; k < hands.size(); ++k) {
		NcPoly v = apply_map(hand, *gen, id, hands[k]);
		if (!v.is_zero())
			bad.push_back({"hand[" + std::to_string(k + 1) + "] " + hand.str(hands[k]) + " in " + gen->name(), v});
	}
	return bad;
}

std::vector<Residual> eq9_crosscheck(const RMatrix &r) { return eq9_crosscheck(r, *omega_bqsu2()); }

std::vector<Residual> leibniz_check(const Presentation &p, int samples, unsigned seed, int max_len)
{
	std::mt19937 rng(seed);
	std::uniform_int_distribution<int> gen(0, p.gen_count() - 1), len(1, max_len);
	const Alphabet &a = p.alphabet();
	auto random_word = [&] {
		Word w;
		for (int k = len(rng); k > 0; --k)
			w.push_back(static_cast<Gen>(gen(rng)));
		return w;
	};
	std::vector<Residual> bad;
	for (int s = 0; s < samples; ++s) {
		Word x = random_word(), y = random_word();
		NcPoly X = NcPoly::word(x), Y = NcPoly::word(y);
		Word xy = x;
		xy.insert(xy.end(), y.begin(), y.end());
		Scalar sign = a.degree(x) % 2 ? Scalar(-1) : Scalar(1);
		NcPoly r = p.d(NcPoly::word(xy)) - p.normalize(p.d(X) * Y) - sign * p.normalize(X * p.d(Y));
		r = p.normalize(r);
		if (!r.is_zero())
			bad.push_back({"d(" + p.word_str(x) + " * " + p.word_str(y) + ")", r});
	}
	return bad;
}

std::vector<Residual> d_squared_check(const Presentation &p)
{
	std::vector<Residual> bad;
	for (int g = 0; g < p.gen_count(); ++g) {
		NcPoly r = p.d(p.d(NcPoly::gen(g)));
		if (!r.is_zero())
			bad.push_back({"d(d(" + p.alphabet().gens[g].name + "))", r});
	}
	return bad;
}

Scalar localization_coefficient()
{
	Scalar q = Scalar::q();
	Scalar k = q - q.inverse();
	return q.inverse() * k * k;
}

Scalar lambda_hat()
{
	Scalar h = Scalar::qh();
	Scalar k = Scalar(1) - h.inverse();
	return h * k * k;
}

GenMap localization_map(const Presentation &omega_b, const Presentation &omega_u, const Scalar &c)
{
	auto g = [&](const char *n) { return NcPoly::gen(need(omega_u, n)); };
	Scalar nu = Scalar::qh().inverse() * (Scalar::q() - Scalar::q().inverse());
	std::map<std::string, NcPoly> img = {
	    {"α", g("K") * g("K")},
	    {"β", nu * (g("K") * g("x₋"))},
	    {"γ", nu * (g("x₊") * g("K"))},
	    {"δ", g("K^-1") * g("K^-1") + c * (g("x₊") * g("x₋"))},
	};
	for (auto f : kForms)
		img[f] = g(f);
	GenMap out;
	for (auto &gen : omega_b.alphabet().gens) {
		auto it = img.find(gen.name);
		if (it == img.end())
			throw AlphabetError("no localization image for '" + gen.name + "'");
		out.push_back(it->second);
	}
	return out;
}

std::vector<NcPoly> form_coefficients(const Presentation &p, const NcPoly &x)
{
	std::vector<NcPoly> out(4);
	int f[4];
	for (int k = 0; k < 4; ++k)
		f[k] = need(p, kForms[k]);
	for (auto &[w, c] : x.terms()) {
		int slot = -1;
		for (int k = 0; k < 4; ++k)
			if (!w.empty() && w.back() == f[k])
				slot = k;
		if (slot < 0 || p.alphabet().degree(w) != 1)
			throw std::invalid_argument("not of the form f*e: " + p.word_str(w));
		out[slot].add(Word(w.begin(), w.end() - 1), c);
	}
	return out;
}

} // namespace qcalc
