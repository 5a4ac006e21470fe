#include "qcalc/freealg.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>

namespace qcalc {

// ---------------------------------------------------------------------------
// NcPoly

NcPoly::NcPoly(const Scalar &c)
{
	if (!c.is_zero())
		terms_.emplace(Word(), c);
}

NcPoly NcPoly::word(Word w, Scalar c)
{
	NcPoly p;
	if (!c.is_zero())
		p.terms_.emplace(std::move(w), std::move(c));
	return p;
}

Scalar NcPoly::constant() const { return coefficient(Word()); }

bool NcPoly::is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

Scalar NcPoly::coefficient(const Word &w) const
{
	auto it = terms_.find(w);
	return it == terms_.end() ? Scalar() : it->second;
}

void NcPoly::add(const Word &w, const Scalar &c)
{
	if (c.is_zero())
		return;
	auto [it, fresh] = terms_.try_emplace(w, c);
	if (!fresh) {
		it->second += c;
		if (it->second.is_zero())
			terms_.erase(it);
	}
}

NcPoly NcPoly::map_scalars(const std::function<Scalar(const Scalar &)> &f) const
{
	NcPoly out;
	for (auto &[w, c] : terms_)
		out.add(w, f(c));
	return out;
}

NcPoly &NcPoly::operator+=(const NcPoly &b)
{
	for (auto &[w, c] : b.terms_)
		add(w, c);
	return *this;
}

NcPoly &NcPoly::operator-=(const NcPoly &b)
{
	for (auto &[w, c] : b.terms_)
		add(w, -c);
	return *this;
}

NcPoly operator+(const NcPoly &a, const NcPoly &b)
{
	NcPoly r = a;
	r += b;
	return r;
}

NcPoly operator-(const NcPoly &a, const NcPoly &b)
{
	NcPoly r = a;
	r -= b;
	return r;
}

NcPoly operator-(const NcPoly &a)
{
	NcPoly r;
	for (auto &[w, c] : a.terms_)
		r.terms_.emplace(w, -c);
	return r;
}

NcPoly operator*(const NcPoly &a, const NcPoly &b)
{
	NcPoly r;
	for (auto &[u, c] : a.terms_)
		for (auto &[v, e] : b.terms_)
			r.add(u + v, c * e);
	return r;
}

NcPoly operator*(const Scalar &c, const NcPoly &a)
{
	if (c.is_zero())
		return NcPoly();
	NcPoly r;
	for (auto &[w, x] : a.terms_)
		r.terms_.emplace(w, c * x);
	return r;
}

// ---------------------------------------------------------------------------
// Alphabet

int Alphabet::find(const std::string &name) const
{
	for (int g = 0; g < size(); ++g) {
		if (gens[g].name == name)
			return g;
		for (auto &a : gens[g].aliases)
			if (a == name)
				return g;
	}
	return -1;
}

int Alphabet::degree(const Word &w) const
{
	int d = 0;
	for (Gen g : w)
		d += gens[g].degree;
	return d;
}

bool Alphabet::has_star() const
{
	for (auto &s : star)
		if (s)
			return true;
	return false;
}

long default_step_budget()
{
	if (const char *env = std::getenv("QCALC_STEP_BUDGET")) {
		long v = std::atol(env);
		if (v > 0)
			return v;
	}
	return 2000000;
}

// ---------------------------------------------------------------------------
// Presentation

int Presentation::require(const std::string &name) const
{
	int g = find(name);
	if (g < 0)
		throw AlphabetError("unknown generator '" + name + "' in " + name_);
	return g;
}

bool Presentation::is_graded() const
{
	for (auto &g : alpha_.gens)
		if (g.degree != 0)
			return true;
	return false;
}

int Presentation::compare(const Word &a, const Word &b) const
{
	if (&a == &b)
		return 0;
	// forms, then (from the rightmost form) the number of function letters to
	// the right of each form, then function letters, then lex by index
	auto profile = [&](const Word &w, int &forms, std::vector<int> &inv, int &funcs) {
		forms = 0;
		funcs = 0;
		inv.clear();
		for (size_t k = w.size(); k-- > 0;) {
			if (alpha_.gens[w[k]].degree != 0) {
				++forms;
				inv.push_back(funcs);
			} else {
				++funcs;
			}
		}
	};
	int fa, fb, na, nb;
	std::vector<int> ia, ib;
	profile(a, fa, ia, na);
	profile(b, fb, ib, nb);
	if (fa != fb)
		return fa < fb ? -1 : 1;
	if (ia != ib)
		return ia < ib ? -1 : 1;
	if (na != nb)
		return na < nb ? -1 : 1;
	if (a.size() != b.size())
		return a.size() < b.size() ? -1 : 1;
	int c = a.compare(b);
	return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

void Presentation::index_rules()
{
	head_index_.clear();
	std::set<size_t> lengths;
	for (size_t k = 0; k < rules_.size(); ++k) {
		head_index_[rules_[k].head] = k;
		lengths.insert(rules_[k].head.size());
	}
	head_lengths_.assign(lengths.begin(), lengths.end());
}

const Rule *Presentation::match(const Word &w, size_t &pos) const
{
	if (head_index_.empty())
		return nullptr;
	Word probe;
	for (size_t i = 0; i < w.size(); ++i) {
		for (size_t len : head_lengths_) {
			if (i + len > w.size())
				break;
			probe.assign(w, i, len);
			auto it = head_index_.find(probe);
			if (it != head_index_.end()) {
				pos = i;
				return &rules_[it->second];
			}
		}
	}
	return nullptr;
}

bool Presentation::reducible(const Word &w) const
{
	size_t pos;
	return match(w, pos) != nullptr;
}

NcPoly Presentation::normalize(const NcPoly &x) const
{
	struct Greater {
		const Presentation *p;
		bool operator()(const Word &a, const Word &b) const { return p->compare(a, b) > 0; }
	};
	std::map<Word, Scalar, Greater> pending(Greater{this});
	for (auto &[w, c] : x.terms())
		pending.emplace(w, c);
	NcPoly out;
	long steps = 0;
	long budget = step_budget_ > 0 ? step_budget_ : default_step_budget();
	while (!pending.empty()) {
		auto it = pending.begin();
		Word w = it->first;
		Scalar c = std::move(it->second);
		pending.erase(it);
		if (c.is_zero())
			continue;
		size_t pos;
		const Rule *r = match(w, pos);
		if (!r) {
			out.add(w, c);
			continue;
		}
		if (++steps > budget)
			throw BudgetExceeded("rewrite step budget exhausted while reducing " + word_str(w) + " in " + name_);
		Word prefix = w.substr(0, pos);
		Word suffix = w.substr(pos + r->head.size());
		for (auto &[u, e] : r->rhs.terms()) {
			Word nw = prefix + u + suffix;
			Scalar add = c * e;
			auto [jt, fresh] = pending.try_emplace(std::move(nw), add);
			if (!fresh) {
				jt->second += add;
				if (jt->second.is_zero())
					pending.erase(jt);
			}
		}
	}
	return out;
}

NcPoly Presentation::pow(const NcPoly &a, int n) const
{
	NcPoly r(1);
	for (int k = 0; k < n; ++k)
		r = mul(r, a);
	return r;
}

bool Presentation::star_defined(const NcPoly &x) const
{
	for (auto &[w, c] : x.terms())
		for (Gen g : w)
			if (!alpha_.star[g])
				return false;
	return true;
}

namespace {

NcPoly star_raw(const Alphabet &alpha, const NcPoly &x)
{
	NcPoly out;
	for (auto &[w, c] : x.terms()) {
		Word r;
		Scalar k = c.conj();
		for (size_t i = w.size(); i-- > 0;) {
			const auto &s = alpha.star[w[i]];
			if (!s)
				throw AlphabetError("star not defined on generator " + alpha.gens[w[i]].name);
			r.push_back(static_cast<Gen>(s->gen));
			k *= s->coeff;
		}
		out.add(r, k);
	}
	return out;
}

int word_degree_sign(const Alphabet &alpha, const Word &w) { return alpha.degree(w) % 2 == 0 ? 1 : -1; }

} // namespace

NcPoly star_unnormalized(const Alphabet &alpha, const NcPoly &x) { return star_raw(alpha, x); }

NcPoly inner_d_unnormalized(const Alphabet &alpha, const NcPoly &x)
{
	if (!alpha.theta)
		throw std::logic_error("no inner differential defined");
	NcPoly raw;
	for (auto &[w, c] : x.terms()) {
		int sign = word_degree_sign(alpha, w);
		for (auto &[t, e] : alpha.theta->terms()) {
			raw.add(t + w, c * e);
			raw.add(w + t, sign > 0 ? -(c * e) : c * e);
		}
	}
	return alpha.sigma * raw;
}

NcPoly Presentation::star(const NcPoly &x) const { return normalize(star_raw(alpha_, x)); }

NcPoly Presentation::graded_commutator(const NcPoly &a, const NcPoly &b) const
{
	NcPoly out;
	for (auto &[u, c] : a.terms())
		for (auto &[v, e] : b.terms()) {
			Scalar k = c * e;
			out.add(u + v, k);
			int du = alpha_.degree(u), dv = alpha_.degree(v);
			out.add(v + u, (du * dv) % 2 == 0 ? -k : k);
		}
	return normalize(out);
}

NcPoly Presentation::d(const NcPoly &x) const
{
	if (!alpha_.theta)
		throw std::logic_error("presentation " + name_ + " has no inner differential");
	return normalize(inner_d_unnormalized(alpha_, x));
}

std::vector<Residual> Presentation::check_local_confluence(int max_degree) const
{
	std::vector<Residual> bad;
	for (auto &ri : rules_) {
		const Word &hi = ri.head;
		for (auto &rj : rules_) {
			const Word &hj = rj.head;
			// overlaps: suffix of hi equals prefix of hj
			size_t lim = std::min(hi.size(), hj.size());
			for (size_t k = 1; k < lim; ++k) {
				if (hi.compare(hi.size() - k, k, hj, 0, k) != 0)
					continue;
				if (static_cast<int>(hi.size() + hj.size() - k) > max_degree)
					continue;
				Word tail = hj.substr(k);
				Word head = hi.substr(0, hi.size() - k);
				NcPoly a = ri.rhs * NcPoly::word(tail);
				NcPoly b = NcPoly::word(head) * rj.rhs;
				NcPoly diff = normalize(a - b);
				if (!diff.is_zero())
					bad.push_back({"overlap " + word_str(hi + tail), diff});
			}
			// inclusions
			bool shorter = hj.size() < hi.size() || (hj.size() == hi.size() && &rj < &ri);
			if (&ri != &rj && shorter && static_cast<int>(hi.size()) <= max_degree) {
				size_t p = hi.find(hj);
				while (p != Word::npos) {
					NcPoly b = NcPoly::word(hi.substr(0, p)) * rj.rhs * NcPoly::word(hi.substr(p + hj.size()));
					NcPoly diff = normalize(ri.rhs - b);
					if (!diff.is_zero())
						bad.push_back({"inclusion " + word_str(hj) + " in " + word_str(hi), diff});
					p = hi.find(hj, p + 1);
				}
			}
		}
	}
	return bad;
}

std::vector<Residual> Presentation::centrality_check(const NcPoly &c) const
{
	std::vector<Residual> out;
	for (int g = 0; g < gen_count(); ++g)
		out.push_back({"[c, " + alpha_.gens[g].name + "]", graded_commutator(c, NcPoly::gen(g))});
	return out;
}

std::string Presentation::word_str(const Word &w) const
{
	std::string out;
	size_t i = 0;
	while (i < w.size()) {
		size_t j = i;
		while (j < w.size() && w[j] == w[i])
			++j;
		int run = static_cast<int>(j - i);
		Gen g = w[i];
		if (!out.empty())
			out += "*";
		const std::string &name = alpha_.gens[g].name;
		int base = alpha_.inverse[g];
		if (base >= 0 && name == alpha_.gens[base].name + "^-1") {
			out += alpha_.gens[base].name + "^-" + std::to_string(run);
		} else {
			out += name;
			if (run > 1)
				out += "^" + std::to_string(run);
		}
		i = j;
	}
	return out;
}

namespace {

// Returns (negative, magnitude string, needs parentheses as a factor).
struct CoeffText {
	bool negative = false;
	std::string text;
	bool unit = false;
};

CoeffText coeff_text(const Scalar &c)
{
	CoeffText t;
	Scalar m = c;
	const auto &nt = c.num().terms();
	if (nt.size() == 1) {
		const GaussRat &k = nt[0].c;
		if (!k.compound() && (sgn(k.re) < 0 || (sgn(k.re) == 0 && sgn(k.im) < 0))) {
			t.negative = true;
			m = -c;
		}
	}
	t.unit = m.is_one();
	t.text = m.str();
	if (m.den().is_one() && m.num().terms().size() > 1)
		t.text = "(" + t.text + ")";
	else if (m.den().is_one() && m.num().terms().size() == 1 && m.num().terms()[0].c.compound())
		t.text = "(" + t.text + ")";
	return t;
}

} // namespace

std::string Presentation::str(const NcPoly &x) const
{
	if (x.is_zero())
		return "0";
	std::vector<const std::pair<const Word, Scalar> *> terms;
	for (auto &t : x.terms())
		terms.push_back(&t);
	std::sort(terms.begin(), terms.end(), [&](auto *a, auto *b) { return compare(a->first, b->first) > 0; });
	std::string out;
	bool first = true;
	for (auto *t : terms) {
		CoeffText ct = coeff_text(t->second);
		if (first)
			out += ct.negative ? "-" : "";
		else
			out += ct.negative ? " - " : " + ";
		first = false;
		if (t->first.empty())
			out += ct.text;
		else if (ct.unit)
			out += word_str(t->first);
		else
			out += ct.text + "*" + word_str(t->first);
	}
	return out;
}

PresentationPtr Presentation::map_scalars(const std::function<Scalar(const Scalar &)> &f) const
{
	PresentationBuilder b(*this);
	b.map_scalars(f);
	return b.build();
}

// ---------------------------------------------------------------------------
// PresentationBuilder

PresentationBuilder::PresentationBuilder(std::string name) : name_(std::move(name)) {}

PresentationBuilder::PresentationBuilder(const Presentation &base, std::string name)
    : name_(name.empty() ? base.name_ : std::move(name)), alpha_(base.alpha_), relations_(base.relations_)
{
	// base relations are already star-closed; new ones get closed in build()
	closed_count_ = relations_.size();
}

int PresentationBuilder::add_generator(const std::string &name, int degree, std::vector<std::string> aliases)
{
	if (alpha_.find(name) >= 0)
		throw AlphabetError("duplicate generator " + name);
	if (alpha_.size() >= 0xD000)
		throw AlphabetError("too many generators");
	alpha_.gens.push_back({name, std::move(aliases), degree});
	alpha_.star.emplace_back();
	alpha_.inverse.push_back(-1);
	return alpha_.size() - 1;
}

void PresentationBuilder::set_star(int g, int image, Scalar coeff)
{
	alpha_.star[g] = StarImage{image, coeff};
	if (image != g) {
		// involution: star(image) = conj(coeff)^{-1} g
		alpha_.star[image] = StarImage{g, coeff.conj().inverse()};
	}
}

void PresentationBuilder::add_inverse(int g, int ginv)
{
	alpha_.inverse[g] = ginv;
	alpha_.inverse[ginv] = g;
}

void PresentationBuilder::add_relation(const NcPoly &r) { relations_.push_back(r); }

void PresentationBuilder::add_rule(const Word &head, const NcPoly &rhs) { raw_rules_.push_back({head, rhs}); }

void PresentationBuilder::set_theta(const NcPoly &theta, const Scalar &sigma)
{
	alpha_.theta = theta;
	alpha_.sigma = sigma;
}

void PresentationBuilder::map_scalars(const std::function<Scalar(const Scalar &)> &f)
{
	for (auto &r : relations_)
		r = r.map_scalars(f);
	for (auto &s : alpha_.star)
		if (s)
			s->coeff = f(s->coeff);
	if (alpha_.theta)
		alpha_.theta = alpha_.theta->map_scalars(f);
	alpha_.sigma = f(alpha_.sigma);
}

NcPoly PresentationBuilder::gen(const std::string &name) const
{
	int g = alpha_.find(name);
	if (g < 0)
		throw AlphabetError("unknown generator " + name);
	return NcPoly::gen(g);
}

namespace {

Word greatest_word(const Presentation &p, const NcPoly &x)
{
	const Word *best = nullptr;
	for (auto &[w, c] : x.terms())
		if (!best || p.compare(w, *best) > 0)
			best = &w;
	return *best;
}

} // namespace

PresentationPtr PresentationBuilder::build() const
{
	auto p = std::make_shared<Presentation>();
	p->name_ = name_;
	p->alpha_ = alpha_;
	p->step_budget_ = default_step_budget();

	std::vector<NcPoly> rels = relations_;
	size_t start = star_closure_ ? closed_count_ : rels.size();
	size_t n = rels.size();
	for (size_t k = start; k < n; ++k) {
		bool defined = true;
		for (auto &[w, c] : rels[k].terms())
			for (Gen g : w)
				if (!alpha_.star[g])
					defined = false;
		if (defined) {
			NcPoly s = star_raw(alpha_, rels[k]);
			if (s != rels[k] && s != -rels[k])
				rels.push_back(s);
		}
	}
	p->relations_ = rels;

	std::deque<NcPoly> todo;
	for (int g = 0; g < alpha_.size(); ++g) {
		int gi = alpha_.inverse[g];
		if (gi > g) {
			todo.push_back(NcPoly::word(Word{static_cast<Gen>(g), static_cast<Gen>(gi)}) - NcPoly(1));
			todo.push_back(NcPoly::word(Word{static_cast<Gen>(gi), static_cast<Gen>(g)}) - NcPoly(1));
		}
	}
	for (auto &r : rels)
		todo.push_back(r);

	auto orient = [&](std::deque<NcPoly> &queue) {
		while (!queue.empty()) {
			NcPoly r = p->normalize(queue.front());
			queue.pop_front();
			if (r.is_zero())
				continue;
			Word lead = greatest_word(*p, r);
			if (lead.empty())
				throw InconsistentPresentation("relations of " + name_ + " force 1 = 0");
			Scalar c = r.coefficient(lead);
			NcPoly rhs = (-c.inverse()) * (r - NcPoly::word(lead, c));
			std::vector<Rule> kept;
			for (auto &rule : p->rules_) {
				if (rule.head.find(lead) != Word::npos)
					queue.push_back(NcPoly::word(rule.head) - rule.rhs);
				else
					kept.push_back(std::move(rule));
			}
			kept.push_back({lead, rhs});
			p->rules_ = std::move(kept);
			p->index_rules();
		}
	};
	orient(todo);

	// commutation rules for adjoined inverses, derived by conjugation
	for (int pass = 0; pass < 4; ++pass) {
		bool changed = false;
		for (int g = 0; g < alpha_.size(); ++g) {
			int gi = alpha_.inverse[g];
			if (gi < 0)
				continue;
			Gen G = static_cast<Gen>(g), GI = static_cast<Gen>(gi);
			for (int h = 0; h < alpha_.size(); ++h) {
				if (h == g || h == gi)
					continue;
				Gen H = static_cast<Gen>(h);
				Word hgi{H, GI}, gih{GI, H};
				const Word &big = p->compare(hgi, gih) > 0 ? hgi : gih;
				if (p->reducible(big))
					continue;
				Word hg{H, G}, gh{G, H};
				NcPoly ginv = NcPoly::gen(gi), hp = NcPoly::gen(h);
				std::optional<NcPoly> rel;
				if (auto it = p->head_index_.find(hg); it != p->head_index_.end()) {
					// h g = c g h + R  gives  g^-1 h = c h g^-1 + g^-1 R g^-1
					const NcPoly &rhs = p->rules_[it->second].rhs;
					Scalar c = rhs.coefficient(gh);
					if (!c.is_zero()) {
						NcPoly rest = rhs - NcPoly::word(gh, c);
						rel = ginv * hp - c * (hp * ginv) - ginv * rest * ginv;
					}
				} else if (auto jt = p->head_index_.find(gh); jt != p->head_index_.end()) {
					// g h = c h g + R  gives  h g^-1 = c g^-1 h + g^-1 R g^-1
					const NcPoly &rhs = p->rules_[jt->second].rhs;
					Scalar c = rhs.coefficient(hg);
					if (!c.is_zero()) {
						NcPoly rest = rhs - NcPoly::word(hg, c);
						rel = hp * ginv - c * (ginv * hp) - ginv * rest * ginv;
					}
				}
				if (rel) {
					std::deque<NcPoly> q{*rel};
					orient(q);
					changed = true;
				}
			}
		}
		if (!changed)
			break;
	}

	for (auto &r : raw_rules_)
		p->rules_.push_back(r);
	p->index_rules();

	// interreduce right-hand sides
	for (int pass = 0; pass < 3; ++pass) {
		bool changed = false;
		for (size_t k = 0; k < p->rules_.size(); ++k) {
			NcPoly r = p->normalize(p->rules_[k].rhs);
			if (r != p->rules_[k].rhs) {
				p->rules_[k].rhs = std::move(r);
				changed = true;
			}
		}
		if (!changed)
			break;
	}
	return p;
}

// ---------------------------------------------------------------------------
// maps

NcPoly apply_map(const Presentation &source, const Presentation &target, const GenMap &images, const NcPoly &x)
{
	if (static_cast<int>(images.size()) != source.gen_count())
		throw AlphabetError("map from " + source.name() + " must give an image for every generator");
	NcPoly out;
	for (auto &[w, c] : x.terms()) {
		NcPoly acc(c);
		for (Gen g : w)
			acc = target.normalize(acc * images[g]);
		out += acc;
	}
	return target.normalize(out);
}

std::vector<Residual> hom_check(const Presentation &source, const Presentation &target, const GenMap &images,
                                bool check_star)
{
	std::vector<Residual> out;
	for (auto &rule : source.rules()) {
		NcPoly img = apply_map(source, target, images, NcPoly::word(rule.head) - rule.rhs);
		out.push_back({source.word_str(rule.head) + " -> " + source.str(rule.rhs), img});
	}
	if (check_star) {
		const Alphabet &a = source.alphabet();
		for (int g = 0; g < source.gen_count(); ++g) {
			if (!a.star[g] || !target.star_defined(images[g]))
				continue;
			NcPoly lhs = target.star(images[g]);
			NcPoly rhs = a.star[g]->coeff * images[a.star[g]->gen];
			out.push_back({"star " + a.gens[g].name, target.normalize(lhs - rhs)});
		}
	}
	return out;
}

bool all_zero(const std::vector<Residual> &r)
{
	for (auto &x : r)
		if (!x.value.is_zero())
			return false;
	return true;
}

GenMap map_by_name(const Presentation &source, const Presentation &target)
{
	GenMap images;
	for (auto &g : source.alphabet().gens) {
		int t = target.find(g.name);
		for (size_t k = 0; t < 0 && k < g.aliases.size(); ++k)
			t = target.find(g.aliases[k]);
		if (t < 0)
			throw AlphabetError("no generator '" + g.name + "' in " + target.name());
		images.push_back(NcPoly::gen(t));
	}
	return images;
}

} // namespace qcalc
