#include "qcalc/bicross.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "qcalc/dga.hpp"
#include "qcalc/library.hpp"

namespace qcalc {

// ---------------------------------------------------------------------------
// ExpSum

ExpSum ExpSum::exp(const Scalar &rate, const Scalar &c)
{
	ExpSum e;
	e.add(rate, c);
	return e;
}

void ExpSum::add(const Scalar &exponent, const Scalar &c)
{
	if (c.is_zero())
		return;
	std::string key = exponent.str();
	auto [it, fresh] = terms_.try_emplace(key, exponent, c);
	if (!fresh) {
		it->second.second += c;
		if (it->second.second.is_zero())
			terms_.erase(it);
	}
}

ExpSum operator+(const ExpSum &a, const ExpSum &b)
{
	ExpSum out = a;
	for (auto &[k, t] : b.terms_)
		out.add(t.first, t.second);
	return out;
}

ExpSum operator-(const ExpSum &a, const ExpSum &b)
{
	ExpSum out = a;
	for (auto &[k, t] : b.terms_)
		out.add(t.first, -t.second);
	return out;
}

ExpSum operator*(const ExpSum &a, const ExpSum &b)
{
	ExpSum out;
	for (auto &[ka, ta] : a.terms_)
		for (auto &[kb, tb] : b.terms_)
			out.add(ta.first + tb.first, ta.second * tb.second);
	return out;
}

bool operator==(const ExpSum &a, const ExpSum &b) { return (a - b).is_zero(); }

std::string ExpSum::str() const
{
	if (terms_.empty())
		return "0";
	std::string s;
	for (auto &[k, t] : terms_) {
		if (!s.empty())
			s += " + ";
		std::string c = t.second.compound() ? "(" + t.second.str() + ")" : t.second.str();
		if (t.first.is_zero())
			s += c;
		else
			s += (t.second.is_one() ? std::string() : c + "*") + "exp(" + t.first.str() + ")";
	}
	return s;
}

std::optional<Scalar> ExpSum::constant_term_at_zero(int v) const
{
	int pole = 0;
	for (auto &[k, t] : terms_) {
		if (!t.first.specialize({{v, GaussRat(0)}}).is_zero())
			throw std::invalid_argument("exponent " + t.first.str() + " does not vanish at 0");
		pole = std::max(pole, t.second.den().degree(v));
	}
	// truncated exponential series, exact through order v^0 after the pole
	int order = pole + 1;
	Scalar sum;
	for (auto &[k, t] : terms_) {
		Scalar series(1), power(1);
		long fact = 1;
		for (int n = 1; n <= order; ++n) {
			power *= t.first;
			fact *= n;
			series += power * Scalar::rational(1, fact);
		}
		sum += t.second * series;
	}
	Scalar scaled = sum * Scalar::variable(v).pow(pole);
	if (scaled.den().contains(v))
		return std::nullopt;
	for (int j = 0; j < pole; ++j)
		if (!scaled.coefficient(v, j).is_zero())
			return std::nullopt;
	return scaled.coefficient(v, pole);
}

double ExpSum::evaluate(const Assignment &at) const
{
	auto real = [&](const Scalar &x) {
		auto c = x.specialize(at).constant_value();
		if (!c || c->im != 0)
			throw std::invalid_argument("not a real constant at the sample point: " + x.str());
		return c->re.get_d();
	};
	double out = 0;
	for (auto &[k, t] : terms_)
		out += real(t.second) * std::exp(real(t.first));
	return out;
}

// ---------------------------------------------------------------------------
// NOFunction

bool NOFunction::Key::operator<(const Key &o) const
{
	if (m != o.m)
		return m < o.m;
	if (n != o.n)
		return n < o.n;
	if (k != o.k)
		return k < o.k;
	return std::tuple(bx.str(), by.str(), az.str()) < std::tuple(o.bx.str(), o.by.str(), o.az.str());
}

NOFunction::NOFunction(const Scalar &c) { add(Key{}, ExpSum(c)); }

NOFunction NOFunction::monomial(int m, int n, int k, const Scalar &c)
{
	NOFunction f;
	f.add(Key{m, n, k, {}, {}, {}}, ExpSum(c));
	return f;
}

NOFunction NOFunction::plane_wave(const Scalar &k1, const Scalar &k2, const Scalar &omega)
{
	NOFunction f;
	Scalar i = Scalar::i();
	f.add(Key{0, 0, 0, i * k1, i * k2, i * omega}, ExpSum(Scalar(1)));
	return f;
}

NOFunction NOFunction::z_atom(const Scalar &alpha, int k, const Scalar &c)
{
	NOFunction f;
	f.add(Key{0, 0, k, {}, {}, alpha}, ExpSum(c));
	return f;
}

void NOFunction::add(const Key &key, const ExpSum &c)
{
	if (c.is_zero())
		return;
	auto [it, fresh] = terms_.try_emplace(key, c);
	if (!fresh) {
		it->second = it->second + c;
		if (it->second.is_zero())
			terms_.erase(it);
	}
}

NOFunction operator+(const NOFunction &a, const NOFunction &b)
{
	NOFunction out = a;
	for (auto &[k, c] : b.terms_)
		out.add(k, c);
	return out;
}

NOFunction operator-(const NOFunction &a, const NOFunction &b) { return a + ExpSum(Scalar(-1)) * b; }

NOFunction operator*(const ExpSum &c, const NOFunction &f)
{
	NOFunction out;
	for (auto &[k, x] : f.terms_)
		out.add(k, c * x);
	return out;
}

bool operator==(const NOFunction &a, const NOFunction &b) { return (a - b).is_zero(); }

std::string NOFunction::str() const
{
	if (terms_.empty())
		return "0";
	std::string s;
	for (auto &[k, c] : terms_) {
		if (!s.empty())
			s += " + ";
		std::string part;
		auto factor = [&](const std::string &f) { part += (part.empty() ? "" : "*") + f; };
		auto pw = [&](const char *v, int e) {
			if (e == 1)
				factor(v);
			else if (e > 1)
				factor(std::string(v) + "^" + std::to_string(e));
		};
		pw("x", k.m);
		pw("y", k.n);
		if (!k.bx.is_zero() || !k.by.is_zero())
			factor("E(" + (k.bx * Scalar::named("x")).str() + " + " + (k.by * Scalar::named("y")).str() + ")");
		pw("z", k.k);
		if (!k.az.is_zero())
			factor("E((" + k.az.str() + ")*z)");
		std::string coef = c.str();
		if (part.empty())
			s += coef;
		else if (coef == "1")
			s += part;
		else
			s += "(" + coef + ")*" + part;
	}
	return s;
}

NOFunction NOFunction::d_x(int which) const
{
	NOFunction out;
	for (auto &[k, c] : terms_) {
		int e = which == 0 ? k.m : k.n;
		const Scalar &rate = which == 0 ? k.bx : k.by;
		if (e > 0) {
			Key lower = k;
			(which == 0 ? lower.m : lower.n) -= 1;
			out.add(lower, ExpSum(Scalar(e)) * c);
		}
		if (!rate.is_zero())
			out.add(k, ExpSum(rate) * c);
	}
	return out;
}

NOFunction NOFunction::shift_z(const Scalar &s) const
{
	NOFunction out;
	for (auto &[k, c] : terms_) {
		ExpSum scaled = k.az.is_zero() ? c : ExpSum::exp(k.az * s) * c;
		// (z + s)^k
		Scalar binom(1);
		for (int j = 0; j <= k.k; ++j) {
			Key lower = k;
			lower.k = k.k - j;
			out.add(lower, ExpSum(binom * s.pow(j)) * scaled);
			binom = binom * Scalar(k.k - j) * Scalar::rational(1, j + 1);
		}
	}
	return out;
}

bool NOFunction::is_polynomial() const
{
	for (auto &[k, c] : terms_) {
		if (!k.bx.is_zero() || !k.by.is_zero() || !k.az.is_zero())
			return false;
		for (auto &[e, t] : c.terms())
			if (!t.first.is_zero())
				return false;
	}
	return true;
}

// ---------------------------------------------------------------------------
// partials and the Laplacian

namespace {

Scalar i_ell() { return Scalar::i() * Scalar::ell(); }

ExpSum constant(const Scalar &c) { return ExpSum(c); }

} // namespace

Partials partials(const NOFunction &f)
{
	Partials p;
	Scalar il = i_ell();
	p.d1 = f.d_x(0);
	p.d2 = f.d_x(1);
	p.dz = constant(il.inverse()) * (f - f.shift_z(-il));
	NOFunction lap = p.d1.d_x(0) + p.d2.d_x(1);
	NOFunction second = f.shift_z(il) + f.shift_z(-il) - constant(Scalar(2)) * f;
	NOFunction over = constant(Scalar::rational(1, 2)) * lap.shift_z(il) +
	                  constant(Scalar::rational(1, 2) * il.pow(-2)) * second;
	p.d0 = constant(il) * over;
	return p;
}

ExpSum laplacian_eigenvalue(const Scalar &k1, const Scalar &k2, const Scalar &omega)
{
	auto wave = NOFunction::plane_wave(k1, k2, omega);
	NOFunction lap = constant(Scalar(2) * i_ell().inverse()) * partials(wave).d0;
	if (lap.is_zero())
		return ExpSum();
	if (lap.terms().size() != 1 || lap.terms().begin()->first.k != 0 || lap.terms().begin()->first.m != 0 ||
	    lap.terms().begin()->first.n != 0)
		throw std::logic_error("Laplacian of a plane wave is not a multiple of the wave: " + lap.str());
	return lap.terms().begin()->second;
}

ExpSum expected_laplacian_eigenvalue(const Scalar &k1, const Scalar &k2, const Scalar &omega)
{
	Scalar l = Scalar::ell(), k_sq = k1 * k1 + k2 * k2;
	Scalar half = omega * l * Scalar::rational(1, 2);
	// sinh(ωℓ/2)/(ℓ/2) = (e^{ωℓ/2} - e^{-ωℓ/2}) / ℓ
	ExpSum sinh_over = ExpSum::exp(half, l.inverse()) - ExpSum::exp(-half, l.inverse());
	return ExpSum::exp(-omega * l, -k_sq) - sinh_over * sinh_over;
}

// ---------------------------------------------------------------------------
// presentations

PresentationPtr omega_bicross() { return builtin("bicross"); }

namespace {

Scalar shift_scalar() { return Scalar::named("w"); }
Scalar rate_symbol() { return Scalar::named("α"); }

} // namespace

PresentationPtr omega_bicross_exp()
{
	return cached_presentation("bicross_exp", [] {
		PresentationBuilder b(*omega_bicross(), "bicross_exp");
		b.set_star_closure(false);
		int e = b.add_generator("E");
		NcPoly E = NcPoly::gen(e);
		Scalar w = shift_scalar(), wi = w.inverse(), half = Scalar::rational(1, 2);
		NcPoly x = b.gen("x"), y = b.gen("y"), z = b.gen("z");
		NcPoly dx = b.gen("dx"), dy = b.gen("dy"), dz = b.gen("dz"), th = b.gen("θ");
		// E(αz) x = x E(α(z - iℓ))
		b.add_relation(E * x - wi * (x * E));
		b.add_relation(E * y - wi * (y * E));
		b.add_relation(z * E - E * z);
		b.add_relation(dx * E - E * dx);
		b.add_relation(dy * E - E * dy);
		// θ ± dz shift z by ±iℓ
		b.add_relation(th * E - E * (half * (w + wi) * th + half * (w - wi) * dz));
		b.add_relation(dz * E - E * (half * (w - wi) * th + half * (w + wi) * dz));
		return b.build();
	});
}

NcPoly to_bicross(const Presentation &p, const NOFunction &f, const std::optional<Scalar> &alpha)
{
	NcPoly x = p.gen("x"), y = p.gen("y"), z = p.gen("z");
	NcPoly out;
	for (auto &[k, c] : f.terms()) {
		if (!k.bx.is_zero() || !k.by.is_zero())
			throw std::invalid_argument("x, y exponentials have no image in the presentation");
		NcPoly word(1);
		for (int j = 0; j < k.m; ++j)
			word = word * x;
		for (int j = 0; j < k.n; ++j)
			word = word * y;
		for (int j = 0; j < k.k; ++j)
			word = word * z;
		if (!k.az.is_zero()) {
			if (!alpha || k.az != *alpha)
				throw std::invalid_argument("z exponential of rate " + k.az.str() + " has no image");
			word = word * p.gen("E");
		}
		Scalar coef;
		for (auto &[key, t] : c.terms()) {
			if (t.first.is_zero()) {
				coef += t.second;
				continue;
			}
			if (!alpha)
				throw std::invalid_argument("exponential factor without a rate");
			Scalar ratio = t.first / (Scalar::i() * *alpha * Scalar::ell());
			auto r = ratio.constant_value();
			if (!r || r->im != 0 || r->re.get_den() != 1)
				throw std::invalid_argument("factor exp(" + t.first.str() + ") is not a power of the shift");
			coef += t.second * shift_scalar().pow(static_cast<int>(r->re.get_num().get_si()));
		}
		out += coef * word;
	}
	return p.normalize(out);
}

NcPoly assemble_differential(const Presentation &p, const Partials &d, const std::optional<Scalar> &alpha)
{
	NcPoly out = to_bicross(p, d.d1, alpha) * p.gen("dx") + to_bicross(p, d.d2, alpha) * p.gen("dy") +
	             to_bicross(p, d.dz, alpha) * p.gen("dz") +
	             to_bicross(p, d.d0, alpha) * (p.gen("θ") + p.gen("dz"));
	return p.normalize(out);
}

// ---------------------------------------------------------------------------
// scaling limit from C_q[SU2]

namespace {

struct LimitContext {
	PresentationPtr cq = omega_cqsu2();
	PresentationPtr bc = omega_bicross();
	Scalar q = Scalar::q(), qh = Scalar::qh(), mu = Scalar::mu(), il = i_ell();
	Scalar kappa_minus = qh * mu / il;           // b = κ₋ x₋
	Scalar kappa_plus = qh.pow(3) * mu / il;     // c = κ₊ x₊
	Scalar eps = Scalar::named("ε");
	std::map<int, NcPoly> image; // cqsu2 generator -> bicross element, κ stripped
	std::map<int, Scalar> weight;

	LimitContext()
	{
		Scalar i = Scalar::i(), half = Scalar::rational(1, 2);
		NcPoly x = bc->gen("x"), y = bc->gen("y"), dx = bc->gen("dx"), dy = bc->gen("dy");
		NcPoly dz = bc->gen("dz"), th = bc->gen("θ");
		NcPoly dxp = half * (dx + i * dy), dxm = half * (dx - i * dy);
		set("a", NcPoly(1), Scalar(1));
		set("d", NcPoly(1), Scalar(1));
		set("b", half * (x - i * y), kappa_minus);
		set("c", half * (x + i * y), kappa_plus);
		// dz = i(e_a - e_d), θ = i(e_a + e_d), dx₊ = i e_b, dx₋ = i e_c
		Scalar mi = -i;
		set("e_a", half * mi * (th + dz), Scalar(1));
		set("e_d", half * mi * (th - dz), Scalar(1));
		set("e_b", mi * dxp, Scalar(1));
		set("e_c", mi * dxm, Scalar(1));
	}

	void set(const std::string &name, const NcPoly &img, const Scalar &w)
	{
		int g = cq->require(name);
		image[g] = img;
		weight[g] = w;
	}

	// Leading term at q = 1 of a Scalar in q^(1/2); throws PoleError when it diverges.
	Scalar leading(const Scalar &s) const
	{
		Scalar t = s.substitute({{0, Scalar(1) + eps}});
		return t.substitute({{variable_index("ε"), Scalar(0)}});
	}

	// Leading-order image in omega_bicross of an omega_cqsu2 element.
	NcPoly map(const NcPoly &x, std::string &error) const
	{
		NcPoly out;
		for (auto &[w, c] : x.terms()) {
			Scalar coef = c;
			NcPoly img(1);
			for (Gen g : w) {
				coef *= weight.at(g);
				img = img * image.at(g);
			}
			try {
				Scalar lead = leading(coef);
				if (!lead.is_zero())
					out += lead * img;
			} catch (const PoleError &) {
				error += (error.empty() ? "" : "; ") + std::string("diverges: ") + cq->word_str(w);
			}
		}
		return bc->normalize(out);
	}
};

} // namespace

std::vector<LimitEntry> limit_table()
{
	LimitContext ctx;
	auto &cq = *ctx.cq;
	struct Side {
		std::string label;
		std::string gen;
	};
	std::vector<Side> lefts = {{"e_a", "e_a"}, {"e_b", "e_b"}, {"e_c", "e_c"}, {"e_d", "e_d"}, {"x₋", "b"}, {"x₊", "c"}};
	std::vector<Side> rights = {{"z", "a"}, {"x₋", "b"}, {"x₊", "c"}};
	std::vector<LimitEntry> out;
	for (auto &l : lefts)
		for (auto &r : rights) {
			if (l.gen == r.gen)
				continue;
			NcPoly L = cq.gen(l.gen), R = cq.gen(r.gen);
			NcPoly comm = cq.normalize(L * R - R * L);
			// undo the scaling of both sides; a = q^{z/(iℓ)} gives [., a] ~ (q - 1)/(iℓ) a [., z]
			Scalar scale(1);
			for (auto *s : {&l, &r}) {
				if (s->gen == "b")
					scale /= ctx.kappa_minus;
				if (s->gen == "c")
					scale /= ctx.kappa_plus;
			}
			if (r.gen == "a")
				scale *= ctx.il / (ctx.q - Scalar(1));
			LimitEntry e{l.label, r.label, {}, {}};
			e.value = ctx.map(scale * comm, e.error);
			out.push_back(std::move(e));
		}
	return out;
}

std::vector<LimitEntry> limit_differentials()
{
	LimitContext ctx;
	auto &cq = *ctx.cq;
	// d f = ℓ^-1 [e_a + e_d, f]
	NcPoly th = cq.gen("e_a") + cq.gen("e_d");
	auto d = [&](const std::string &g) {
		NcPoly f = cq.gen(g);
		return cq.normalize(th * f - f * th);
	};
	Scalar l = Scalar::ell();
	std::vector<LimitEntry> out;
	LimitEntry dz{"d", "z", {}, {}};
	dz.value = ctx.map((ctx.il / (ctx.q - Scalar(1)) / l) * d("a"), dz.error);
	out.push_back(dz);
	LimitEntry dm{"d", "x₋", {}, {}};
	dm.value = ctx.map((l * ctx.kappa_minus).inverse() * d("b"), dm.error);
	out.push_back(dm);
	LimitEntry dp{"d", "x₊", {}, {}};
	dp.value = ctx.map((l * ctx.kappa_plus).inverse() * d("c"), dp.error);
	out.push_back(dp);
	return out;
}

std::vector<LaplacianSample> laplacian_table(int count, unsigned seed)
{
	std::mt19937 rng(seed);
	std::uniform_int_distribution<int> num(-6, 6), den(1, 4), pos(1, 8);
	std::vector<LaplacianSample> out;
	Scalar k1 = Scalar::named("k1"), k2 = Scalar::named("k2"), om = Scalar::named("ω");
	ExpSum ev = laplacian_eigenvalue(k1, k2, om);
	for (int j = 0; j < count; ++j) {
		mpq_class a(num(rng), den(rng)), b(num(rng), den(rng)), w(num(rng), den(rng)), l(pos(rng), den(rng));
		for (auto *x : {&a, &b, &w, &l})
			x->canonicalize();
		Assignment at{{variable_index("k1"), GaussRat(a)},
		              {variable_index("k2"), GaussRat(b)},
		              {variable_index("ω"), GaussRat(w)},
		              {variable_index("ℓ"), GaussRat(l)}};
		out.push_back({a.get_d(), b.get_d(), w.get_d(), l.get_d(), ev.evaluate(at)});
	}
	return out;
}

// ---------------------------------------------------------------------------
// suites

namespace {

std::vector<NOFunction> polynomial_samples(int max_degree, bool with_z)
{
	std::vector<NOFunction> out;
	for (int m = 0; m <= max_degree; ++m)
		for (int n = 0; m + n <= max_degree; ++n)
			for (int k = 0; m + n + k <= (with_z ? max_degree : m + n); ++k)
				out.push_back(NOFunction::monomial(m, n, k));
	return out;
}

// {dx, dy, dz, θ'} is a left basis: the change of frame is invertible at random ℓ and
// function * form words are already normal.
void coframe_claim(CheckReport &rep, const Presentation &p, unsigned seed)
{
	const std::string id = "coframe-independent";
	const std::string anchor = "dx, dy, dz, θ' are a free left basis of the 1-forms";
	rep.guard(id, anchor, [&] {
		std::mt19937 rng(seed);
		std::uniform_int_distribution<int> num(1, 50), den(1, 9);
		std::vector<std::string> bad;
		NcPoly frame[4] = {p.gen("dx"), p.gen("dy"), p.gen("dz"), p.gen("θ") + p.gen("dz")};
		int forms[4] = {p.require("dx"), p.require("dy"), p.require("dz"), p.require("θ")};
		for (int s = 0; s < 3; ++s) {
			mpq_class l(num(rng), den(rng));
			l.canonicalize();
			ScalarMatrix m(4);
			for (int r = 0; r < 4; ++r)
				for (int c = 0; c < 4; ++c)
					m(r, c) = frame[r].coefficient(Word(1, static_cast<Gen>(forms[c])))
					              .specialize({{variable_index("ℓ"), GaussRat(l)}});
			try {
				m.inverse();
			} catch (const DivisionByZero &) {
				bad.push_back("singular at ℓ = " + l.get_str());
			}
		}
		for (auto &f : polynomial_samples(3, true))
			for (int g : forms) {
				NcPoly fw = to_bicross(p, f);
				NcPoly prod = fw * NcPoly::gen(g);
				if (p.normalize(prod) != prod)
					bad.push_back(p.str(prod) + " is not normal");
			}
		rep.expect(id, anchor, bad.empty(), bad.empty() ? "" : bad.front());
	});
}

} // namespace

CheckReport bicross_dga_suite()
{
	CheckReport rep("bicross:dga");
	auto pp = omega_bicross();
	const Presentation &p = *pp;
	Scalar il = i_ell();
	auto parse = [&](const NcPoly &x) { return p.normalize(x); };
	NcPoly x = p.gen("x"), y = p.gen("y"), z = p.gen("z");
	NcPoly dx = p.gen("dx"), dy = p.gen("dy"), dz = p.gen("dz"), th = p.gen("θ");
	NcPoly thp = th + dz;

	rep.guard("bicross.confluent", "rewrite system is confluent up to degree 4", [&] {
		rep.expect_zero("bicross.confluent", "rewrite system is confluent up to degree 4", p,
		                p.check_local_confluence(4));
	});
	rep.guard("bicross.sigma", "d = (iℓ)^-1 [θ, ·]", [&] {
		rep.expect("bicross.sigma", "d = (iℓ)^-1 [θ, ·]", p.alphabet().sigma == il.inverse(),
		           "σ = " + p.alphabet().sigma.str());
	});
	rep.guard("bicross.leibniz", "Leibniz rule on random monomials", [&] {
		rep.expect_zero("bicross.leibniz", "Leibniz rule on random monomials", p, leibniz_check(p, 60, 3, 3));
	});
	rep.guard("bicross.leibniz-xy", "d(xy) - (dx) y - x dy = 0", [&] {
		rep.expect_zero("bicross.leibniz-xy", "d(xy) - (dx) y - x dy = 0", p,
		                parse(p.d(x * y) - dx * y - x * dy));
	});
	rep.guard("bicross.d-squared", "d² = 0 on generators", [&] {
		rep.expect_zero("bicross.d-squared", "d² = 0 on generators", p, d_squared_check(p));
	});
	rep.guard("bicross.differentials", "d x_i = dx_i and d z = dz", [&] {
		rep.expect_zero("bicross.differentials", "d x_i = dx_i and d z = dz", p,
		                std::vector<Residual>{{"x", p.d(x) - dx}, {"y", p.d(y) - dy}, {"z", p.d(z) - dz}});
	});
	rep.guard("bicross.dz-z", "[dz, z] = iℓ θ", [&] {
		rep.expect_zero("bicross.dz-z", "[dz, z] = iℓ θ", p, parse(dz * z - z * dz - il * th));
	});
	rep.guard("bicross.theta-prime-central", "θ' = θ + dz commutes with x_i and anticommutes with dx_i", [&] {
		std::vector<Residual> res;
		for (auto *f : {&x, &y})
			res.push_back({"[θ', " + p.str(*f) + "]", parse(thp * *f - *f * thp)});
		for (auto *f : {&dx, &dy})
			res.push_back({"{θ', " + p.str(*f) + "}", parse(thp * *f + *f * thp)});
		rep.expect_zero("bicross.theta-prime-central", "θ' = θ + dz commutes with x_i and anticommutes with dx_i",
		                p, res);
	});
	rep.guard("bicross.theta-prime-shift", "θ' z = (z + iℓ) θ'", [&] {
		rep.expect_zero("bicross.theta-prime-shift", "θ' z = (z + iℓ) θ'", p, parse(thp * z - (z + il) * thp));
	});
	rep.guard("bicross.star", "relations are closed under x* = x, y* = y, z* = z, θ* = θ", [&] {
		std::vector<Residual> res;
		for (auto &r : p.relations())
			res.push_back({p.str(r), p.star(r)});
		rep.expect_zero("bicross.star", "relations are closed under x* = x, y* = y, z* = z, θ* = θ", p, res);
	});
	coframe_claim(rep, p, 5);
	return rep;
}

CheckReport bicross_limit_suite()
{
	CheckReport rep("bicross:limit");
	auto bc = omega_bicross();
	const Presentation &p = *bc;
	Scalar il = i_ell(), i = Scalar::i(), half = Scalar::rational(1, 2);
	std::vector<LimitEntry> table;
	rep.guard("limit.table", "leading-order commutators exist under the scaling", [&] {
		table = limit_table();
		std::string err;
		for (auto &e : table)
			if (!e.error.empty())
				err += "[" + e.left + ", " + e.right + "] " + e.error + " ";
		rep.expect("limit.table", "leading-order commutators exist under the scaling", err.empty(), err);
	});
	if (table.empty())
		return rep;
	auto entry = [&](const std::string &l, const std::string &r) -> NcPoly {
		for (auto &e : table)
			if (e.left == l && e.right == r)
				return e.value;
		return NcPoly();
	};
	NcPoly dz = p.gen("dz"), th = p.gen("θ"), dx = p.gen("dx"), dy = p.gen("dy");
	NcPoly ea = half * -i * (th + dz), ed = half * -i * (th - dz);
	NcPoly eb = -i * half * (dx + i * dy), ec = -i * half * (dx - i * dy);

	rep.guard("limit.dictionary", "dz = i(e_a - e_d), dx₋ = i e_c, dx₊ = i e_b at leading order", [&] {
		auto ds = limit_differentials();
		std::vector<Residual> res;
		NcPoly expect[3] = {dz, half * (dx - i * dy), half * (dx + i * dy)};
		for (int j = 0; j < 3; ++j)
			res.push_back({"d" + ds[j].right + (ds[j].error.empty() ? "" : " " + ds[j].error),
			               p.normalize(ds[j].value - expect[j])});
		rep.expect_zero("limit.dictionary", "dz = i(e_a - e_d), dx₋ = i e_c, dx₊ = i e_b at leading order", p, res);
	});

	rep.guard("limit.form-table", "[e_a, z] = [e_b, x₋] = [e_c, x₊] = iℓ e_a, [e_d, (z, x₋, x₊)] = iℓ(-e_d, e_c, e_b), others 0", [&] {
		std::map<std::pair<std::string, std::string>, NcPoly> expect = {
		    {{"e_a", "z"}, il * ea},  {{"e_b", "x₋"}, il * ea}, {{"e_c", "x₊"}, il * ea},
		    {{"e_d", "z"}, -il * ed}, {{"e_d", "x₋"}, il * ec}, {{"e_d", "x₊"}, il * eb}};
		std::vector<Residual> res;
		for (auto &e : table) {
			if (e.left.rfind("e_", 0) != 0)
				continue;
			auto it = expect.find({e.left, e.right});
			NcPoly want = it == expect.end() ? NcPoly() : it->second;
			res.push_back({"[" + e.left + ", " + e.right + "]", p.normalize(e.value - want)});
		}
		rep.expect_zero("limit.form-table",
		                "[e_a, z] = [e_b, x₋] = [e_c, x₊] = iℓ e_a, [e_d, (z, x₋, x₊)] = iℓ(-e_d, e_c, e_b), others 0", p,
		                res);
	});

	rep.guard("limit.spacetime", "[x, y] = 0 and [x_i, z] = iℓ x_i from the exponentiated relations", [&] {
		NcPoly xm = half * (p.gen("x") - i * p.gen("y")), xp = half * (p.gen("x") + i * p.gen("y"));
		std::vector<Residual> res = {{"[x₋, z]", p.normalize(entry("x₋", "z") - il * xm)},
		                             {"[x₊, z]", p.normalize(entry("x₊", "z") - il * xp)},
		                             {"[x₋, x₊]", entry("x₋", "x₊")},
		                             {"[x₊, x₋]", entry("x₊", "x₋")}};
		// and the same in omega_bicross itself
		NcPoly x = p.gen("x"), y = p.gen("y"), z = p.gen("z");
		res.push_back({"bicross [x, z]", p.normalize(x * z - z * x - il * x)});
		res.push_back({"bicross [y, z]", p.normalize(y * z - z * y - il * y)});
		res.push_back({"bicross [x, y]", p.normalize(x * y - y * x)});
		rep.expect_zero("limit.spacetime", "[x, y] = 0 and [x_i, z] = iℓ x_i from the exponentiated relations", p,
		                res);
	});

	rep.guard("limit.calculus", "every bimodule relation of the bicrossproduct calculus is the leading-order limit", [&] {
		// frame in the e basis: dx = i(e_b + e_c), dy = e_b - e_c, dz = i(e_a - e_d), θ = i(e_a + e_d)
		struct Combo {
			std::string name;
			std::vector<std::pair<std::string, Scalar>> parts;
		};
		std::vector<Combo> forms = {{"dx", {{"e_b", i}, {"e_c", i}}},
		                            {"dy", {{"e_b", Scalar(1)}, {"e_c", Scalar(-1)}}},
		                            {"dz", {{"e_a", i}, {"e_d", -i}}},
		                            {"θ", {{"e_a", i}, {"e_d", i}}}};
		// x = x₊ + x₋, y = -i x₊ + i x₋
		std::vector<Combo> fns = {{"x", {{"x₊", Scalar(1)}, {"x₋", Scalar(1)}}},
		                          {"y", {{"x₊", -i}, {"x₋", i}}},
		                          {"z", {{"z", Scalar(1)}}}};
		std::vector<Residual> res;
		for (auto &f : forms)
			for (auto &g : fns) {
				NcPoly predicted;
				for (auto &[fe, fc] : f.parts)
					for (auto &[ge, gc] : g.parts)
						predicted += (fc * gc) * entry(fe, ge);
				NcPoly actual = p.normalize(p.gen(f.name) * p.gen(g.name) - p.gen(g.name) * p.gen(f.name));
				res.push_back({"[" + f.name + ", " + g.name + "]", p.normalize(actual - predicted)});
			}
		rep.expect_zero("limit.calculus",
		                "every bimodule relation of the bicrossproduct calculus is the leading-order limit", p, res);
	});

	rep.guard("limit.exponentiated-z", "a^-1 e_a a = q e_a + O(μ) and a^-1 e_d a = q^-1 e_d + O(μ)", [&] {
		auto cq = omega_cqsu2();
		NcPoly a = cq->gen("a");
		Scalar q = Scalar::q();
		std::vector<Residual> res;
		// e a - q^c a e has only terms that vanish under the scaling
		LimitContext ctx;
		for (auto [name, power] : {std::pair{"e_a", 1}, std::pair{"e_d", -1}}) {
			NcPoly e = cq->gen(name);
			NcPoly rest = cq->normalize(e * a - q.pow(power) * (a * e));
			std::string err;
			NcPoly lead = ctx.map(rest, err);
			res.push_back({std::string(name) + (err.empty() ? "" : " " + err), lead});
			// the a e coefficient itself
			Scalar coef = cq->normalize(e * a).coefficient(Word{static_cast<Gen>(cq->require("a")),
			                                                     static_cast<Gen>(cq->require(name))});
			if (coef != q.pow(power))
				res.push_back({std::string(name) + " coefficient " + coef.str(), NcPoly(1)});
		}
		rep.expect_zero("limit.exponentiated-z", "a^-1 e_a a = q e_a + O(μ) and a^-1 e_d a = q^-1 e_d + O(μ)", p,
		                res);
	});
	return rep;
}

CheckReport bicross_partials_suite(unsigned seed)
{
	CheckReport rep("bicross:partials");
	auto pp = omega_bicross();
	const Presentation &p = *pp;
	Scalar il = i_ell();

	rep.guard("partials.extended-classical", "df = Σ ∂f/∂x_i dx_i + (iℓ/2) Σ ∂²f/∂x_i² θ' for f(x, y) of degree <= 4", [&] {
		std::vector<Residual> res;
		NcPoly thp = p.gen("θ") + p.gen("dz");
		for (auto &f : polynomial_samples(4, false)) {
			NOFunction fx = f.d_x(0), fy = f.d_x(1);
			NOFunction lap = fx.d_x(0) + fy.d_x(1);
			NcPoly rhs = to_bicross(p, fx) * p.gen("dx") + to_bicross(p, fy) * p.gen("dy") +
			             (il * Scalar::rational(1, 2)) * (to_bicross(p, lap) * thp);
			NcPoly fw = to_bicross(p, f);
			res.push_back({p.str(fw), p.normalize(p.d(fw) - rhs)});
		}
		rep.expect_zero("partials.extended-classical",
		                "df = Σ ∂f/∂x_i dx_i + (iℓ/2) Σ ∂²f/∂x_i² θ' for f(x, y) of degree <= 4", p, res);
	});

	rep.guard("partials.reassemble", "reassembled df equals d f for normal-ordered f of degree <= 4", [&] {
		std::vector<Residual> res;
		for (auto &f : polynomial_samples(4, true)) {
			NcPoly fw = to_bicross(p, f);
			res.push_back({p.str(fw), p.normalize(p.d(fw) - assemble_differential(p, partials(f)))});
		}
		rep.expect_zero("partials.reassemble", "reassembled df equals d f for normal-ordered f of degree <= 4", p,
		                res);
	});

	coframe_claim(rep, p, seed);

	rep.guard("partials.examples", "x²: ∂¹ = 2x, (iℓ)^-1 ∂⁰ = 1; z: ∂^z = 1, ∂⁰ = 0; z²: ∂^z = 2z - iℓ, (iℓ)^-1 ∂⁰ = 1", [&] {
		std::vector<std::string> bad;
		auto x2 = partials(NOFunction::monomial(2, 0, 0));
		if (!(x2.d1 == NOFunction::monomial(1, 0, 0, Scalar(2))))
			bad.push_back("∂¹x² = " + x2.d1.str());
		if (!(ExpSum(il.inverse()) * x2.d0 == NOFunction(Scalar(1))))
			bad.push_back("∂⁰x² = " + x2.d0.str());
		auto z1 = partials(NOFunction::monomial(0, 0, 1));
		if (!(z1.dz == NOFunction(Scalar(1))) || !z1.d0.is_zero())
			bad.push_back("∂z = " + z1.dz.str() + ", ∂⁰z = " + z1.d0.str());
		auto z2 = partials(NOFunction::monomial(0, 0, 2));
		if (!(z2.dz == NOFunction::monomial(0, 0, 1, Scalar(2)) - NOFunction(il)))
			bad.push_back("∂^z z² = " + z2.dz.str());
		if (!(ExpSum(il.inverse()) * z2.d0 == NOFunction(Scalar(1))))
			bad.push_back("∂⁰z² = " + z2.d0.str());
		rep.expect("partials.examples",
		           "x²: ∂¹ = 2x, (iℓ)^-1 ∂⁰ = 1; z: ∂^z = 1, ∂⁰ = 0; z²: ∂^z = 2z - iℓ, (iℓ)^-1 ∂⁰ = 1",
		           bad.empty(), bad.empty() ? "" : bad.front());
	});

	rep.guard("partials.exponential", "finite differences on E(αz) agree with the calculus extended by E(αz)", [&] {
		auto ep = omega_bicross_exp();
		const Presentation &e = *ep;
		std::vector<Residual> res = e.check_local_confluence(4);
		Scalar alpha = rate_symbol();
		std::vector<NOFunction> samples;
		for (int k = 0; k <= 2; ++k)
			samples.push_back(NOFunction::z_atom(alpha, k));
		NOFunction atom = NOFunction::z_atom(alpha);
		for (auto [m, n] : {std::pair{1, 0}, std::pair{2, 0}, std::pair{1, 1}, std::pair{0, 3}}) {
			NOFunction f;
			for (auto &[k, c] : atom.terms()) {
				NOFunction::Key key = k;
				key.m = m;
				key.n = n;
				f.add(key, c);
			}
			samples.push_back(f);
		}
		for (auto &f : samples) {
			NcPoly fw = to_bicross(e, f, alpha);
			res.push_back({e.str(fw), e.normalize(e.d(fw) - assemble_differential(e, partials(f), alpha))});
		}
		rep.expect_zero("partials.exponential",
		                "finite differences on E(αz) agree with the calculus extended by E(αz)", e, res);
	});
	return rep;
}

CheckReport bicross_laplacian_suite(bool with_table, unsigned seed)
{
	CheckReport rep("bicross:laplacian");
	Scalar k1 = Scalar::named("k1"), k2 = Scalar::named("k2"), om = Scalar::named("ω"), l = Scalar::ell();
	ExpSum ev;
	rep.guard("laplacian.eigenvalue", "2(iℓ)^-1 ∂⁰ on plane waves = -k² e^{-ωℓ} - (sinh(ωℓ/2)/(ℓ/2))²", [&] {
		ev = laplacian_eigenvalue(k1, k2, om);
		ExpSum want = expected_laplacian_eigenvalue(k1, k2, om);
		rep.expect("laplacian.eigenvalue", "2(iℓ)^-1 ∂⁰ on plane waves = -k² e^{-ωℓ} - (sinh(ωℓ/2)/(ℓ/2))²",
		           ev == want, "got " + ev.str() + ", want " + want.str());
	});
	rep.guard("laplacian.k-zero", "k = 0 leaves -(sinh(ωℓ/2)/(ℓ/2))²", [&] {
		ExpSum got = laplacian_eigenvalue(Scalar(0), Scalar(0), om);
		Scalar half = om * l * Scalar::rational(1, 2);
		ExpSum s = ExpSum::exp(half, l.inverse()) - ExpSum::exp(-half, l.inverse());
		ExpSum want = ExpSum(Scalar(-1)) * s * s;
		rep.expect("laplacian.k-zero", "k = 0 leaves -(sinh(ωℓ/2)/(ℓ/2))²", got == want, got.str());
	});
	rep.guard("laplacian.omega-zero", "ω = 0 gives -k²", [&] {
		ExpSum got = laplacian_eigenvalue(k1, k2, Scalar(0));
		rep.expect("laplacian.omega-zero", "ω = 0 gives -k²", got == ExpSum(-(k1 * k1 + k2 * k2)), got.str());
	});
	rep.guard("laplacian.classical-limit", "ℓ → 0 gives -k² - ω²", [&] {
		auto c = laplacian_eigenvalue(k1, k2, om).constant_term_at_zero(variable_index("ℓ"));
		Scalar want = -(k1 * k1 + k2 * k2 + om * om);
		rep.expect("laplacian.classical-limit", "ℓ → 0 gives -k² - ω²", c && *c == want,
		           c ? "got " + c->str() : "pole survives at ℓ = 0");
	});
	if (with_table) {
		std::string table = "k1 k2 ω ℓ value:";
		for (auto &s : laplacian_table(6, seed))
			table += " (" + std::to_string(s.k1) + ", " + std::to_string(s.k2) + ", " + std::to_string(s.omega) +
			         ", " + std::to_string(s.ell) + ") -> " + std::to_string(s.value) + ";";
		rep.pass("laplacian.table", "eigenvalues at rational samples", table);
	}
	return rep;
}

} // namespace qcalc
