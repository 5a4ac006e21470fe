#include "qcalc/scalar.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <sstream>

namespace qcalc {

// ---------------------------------------------------------------------------
// GaussRat

GaussRat GaussRat::inverse() const
{
	if (is_zero())
		throw DivisionByZero("division by zero in Q(i)");
	if (sgn(im) == 0)
		return GaussRat(1 / re);
	mpq_class n = re * re + im * im;
	return GaussRat(re / n, -im / n);
}

std::string GaussRat::str() const
{
	auto rat = [](const mpq_class &v) { return v.get_str(); };
	if (sgn(im) == 0)
		return rat(re);
	std::string imag;
	if (im == 1)
		imag = "i";
	else if (im == -1)
		imag = "-i";
	else
		imag = rat(im) + "*i";
	if (sgn(re) == 0)
		return imag;
	if (sgn(im) < 0)
		return rat(re) + " - " + imag.substr(1);
	return rat(re) + " + " + imag;
}

// ---------------------------------------------------------------------------
// Variable registry

namespace {

struct Registry {
	std::mutex lock;
	std::deque<std::string> names{"qh", "λ", "t", "s", "ℓ", "ω", "k1", "k2"};
	std::map<std::string, int> aliases{
	    {"qh", 0},     {"q^(1/2)", 0}, {"λ", 1},  {"lambda", 1}, {"lam", 1}, {"t", 2},
	    {"s", 3},      {"ℓ", 4},       {"ell", 4}, {"ω", 5},      {"omega", 5}, {"k1", 6},
	    {"k₁", 6},     {"k2", 7},      {"k₂", 7},
	};
};

Registry &registry()
{
	static Registry r;
	return r;
}

thread_local ScalarAssignment *active_specialization = nullptr;

} // namespace

int variable_index(const std::string &name, bool create)
{
	auto &r = registry();
	std::lock_guard<std::mutex> g(r.lock);
	auto it = r.aliases.find(name);
	if (it != r.aliases.end())
		return it->second;
	if (!create)
		return -1;
	if (static_cast<int>(r.names.size()) >= kMaxVars)
		throw std::runtime_error("too many scalar indeterminates: " + name);
	int idx = static_cast<int>(r.names.size());
	r.names.push_back(name);
	r.aliases[name] = idx;
	return idx;
}

const std::string &variable_name(int index)
{
	auto &r = registry();
	std::lock_guard<std::mutex> g(r.lock);
	return r.names.at(index);
}

int variable_count()
{
	auto &r = registry();
	std::lock_guard<std::mutex> g(r.lock);
	return static_cast<int>(r.names.size());
}

// ---------------------------------------------------------------------------
// Monomial

bool Monomial::is_one() const
{
	for (auto x : e)
		if (x != 0)
			return false;
	return true;
}

int Monomial::total_degree() const
{
	int d = 0;
	for (auto x : e)
		d += x;
	return d;
}

Monomial operator*(const Monomial &a, const Monomial &b)
{
	Monomial r;
	for (int k = 0; k < kMaxVars; ++k)
		r.e[k] = static_cast<int16_t>(a.e[k] + b.e[k]);
	return r;
}

bool Monomial::divides(const Monomial &other) const
{
	for (int k = 0; k < kMaxVars; ++k)
		if (e[k] > other.e[k])
			return false;
	return true;
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(long c)
{
	if (c != 0)
		terms_.push_back({Monomial{}, GaussRat(c)});
}

Poly::Poly(GaussRat c)
{
	if (!c.is_zero())
		terms_.push_back({Monomial{}, std::move(c)});
}

Poly Poly::variable(int index, int power)
{
	Monomial m;
	m.e[index] = static_cast<int16_t>(power);
	return monomial(m, GaussRat(1));
}

Poly Poly::monomial(Monomial m, GaussRat c)
{
	Poly p;
	if (!c.is_zero())
		p.terms_.push_back({m, std::move(c)});
	return p;
}

void Poly::canonicalize()
{
	std::sort(terms_.begin(), terms_.end(), [](const Term &a, const Term &b) { return b.m < a.m; });
	std::vector<Term> out;
	out.reserve(terms_.size());
	for (auto &t : terms_) {
		if (!out.empty() && out.back().m == t.m)
			out.back().c += t.c;
		else
			out.push_back(std::move(t));
	}
	terms_.clear();
	for (auto &t : out)
		if (!t.c.is_zero())
			terms_.push_back(std::move(t));
}

GaussRat Poly::constant_term() const
{
	if (!terms_.empty() && terms_.back().m.is_one())
		return terms_.back().c;
	return GaussRat(0);
}

int Poly::degree(int v) const
{
	int d = 0;
	for (auto &t : terms_)
		d = std::max<int>(d, t.m.e[v]);
	return d;
}

Monomial Poly::min_monomial() const
{
	Monomial m;
	if (terms_.empty())
		return m;
	m = terms_[0].m;
	for (auto &t : terms_)
		for (int k = 0; k < kMaxVars; ++k)
			m.e[k] = std::min(m.e[k], t.m.e[k]);
	return m;
}

Poly Poly::coefficient(int v, int k) const
{
	Poly p;
	for (auto &t : terms_)
		if (t.m.e[v] == k) {
			Term c = t;
			c.m.e[v] = 0;
			p.terms_.push_back(std::move(c));
		}
	// order is preserved because removing a fixed exponent keeps lex order
	return p;
}

std::vector<Poly> Poly::coefficients(int v) const
{
	std::vector<Poly> out(degree(v) + 1);
	for (auto &t : terms_) {
		Term c = t;
		c.m.e[v] = 0;
		out[t.m.e[v]].terms_.push_back(std::move(c));
	}
	return out;
}

Poly Poly::conj() const
{
	Poly p = *this;
	for (auto &t : p.terms_)
		t.c = t.c.conj();
	return p;
}

Poly Poly::shift_down(const Monomial &m) const
{
	Poly p = *this;
	for (auto &t : p.terms_)
		for (int k = 0; k < kMaxVars; ++k)
			t.m.e[k] = static_cast<int16_t>(t.m.e[k] - m.e[k]);
	return p;
}

Poly Poly::scaled(const GaussRat &c) const
{
	if (c.is_zero())
		return Poly();
	Poly p = *this;
	for (auto &t : p.terms_)
		t.c = t.c * c;
	return p;
}

Poly Poly::times_monomial(const Monomial &m, const GaussRat &c) const
{
	if (c.is_zero())
		return Poly();
	Poly p = *this;
	for (auto &t : p.terms_) {
		t.m = t.m * m;
		t.c = t.c * c;
	}
	return p;
}

Poly Poly::monic() const
{
	if (terms_.empty())
		return *this;
	return scaled(terms_[0].c.inverse());
}

Poly operator+(const Poly &a, const Poly &b)
{
	Poly r;
	r.terms_.reserve(a.terms_.size() + b.terms_.size());
	size_t i = 0, j = 0;
	while (i < a.terms_.size() && j < b.terms_.size()) {
		const auto &x = a.terms_[i];
		const auto &y = b.terms_[j];
		if (y.m < x.m) {
			r.terms_.push_back(x);
			++i;
		} else if (x.m < y.m) {
			r.terms_.push_back(y);
			++j;
		} else {
			GaussRat c = x.c + y.c;
			if (!c.is_zero())
				r.terms_.push_back({x.m, std::move(c)});
			++i;
			++j;
		}
	}
	for (; i < a.terms_.size(); ++i)
		r.terms_.push_back(a.terms_[i]);
	for (; j < b.terms_.size(); ++j)
		r.terms_.push_back(b.terms_[j]);
	return r;
}

Poly operator-(const Poly &a)
{
	Poly r = a;
	for (auto &t : r.terms_)
		t.c = -t.c;
	return r;
}

Poly operator-(const Poly &a, const Poly &b) { return a + (-b); }

Poly operator*(const Poly &a, const Poly &b)
{
	if (a.is_zero() || b.is_zero())
		return Poly();
	if (b.terms_.size() == 1)
		return a.times_monomial(b.terms_[0].m, b.terms_[0].c);
	if (a.terms_.size() == 1)
		return b.times_monomial(a.terms_[0].m, a.terms_[0].c);
	Poly r;
	r.terms_.reserve(a.terms_.size() * b.terms_.size());
	for (auto &x : a.terms_)
		for (auto &y : b.terms_)
			r.terms_.push_back({x.m * y.m, x.c * y.c});
	r.canonicalize();
	return r;
}

bool operator==(const Poly &a, const Poly &b)
{
	if (a.terms_.size() != b.terms_.size())
		return false;
	for (size_t k = 0; k < a.terms_.size(); ++k)
		if (a.terms_[k].m != b.terms_[k].m || a.terms_[k].c != b.terms_[k].c)
			return false;
	return true;
}

std::optional<Poly> Poly::divide_exact(const Poly &d) const
{
	if (d.is_zero())
		throw DivisionByZero("polynomial division by zero");
	if (is_zero())
		return Poly();
	const Term &ld = d.terms_.front();
	if (d.terms_.size() == 1) {
		for (auto &t : terms_)
			if (!ld.m.divides(t.m))
				return std::nullopt;
		Poly q = shift_down(ld.m);
		return q.scaled(ld.c.inverse());
	}
	GaussRat inv = ld.c.inverse();
	Poly r = *this;
	Poly q;
	while (!r.is_zero()) {
		const Term &lr = r.terms_.front();
		if (!ld.m.divides(lr.m))
			return std::nullopt;
		Monomial m;
		for (int k = 0; k < kMaxVars; ++k)
			m.e[k] = static_cast<int16_t>(lr.m.e[k] - ld.m.e[k]);
		GaussRat c = lr.c * inv;
		q.terms_.push_back({m, c});
		r = r - d.times_monomial(m, c);
	}
	return q;
}

namespace {

bool std_needs_paren(const GaussRat &c) { return c.compound(); }

std::string var_power(int v, int e)
{
	if (v == var::qh) {
		if (e % 2 == 0)
			return e == 2 ? "q" : "q^" + std::to_string(e / 2);
		return "q^(" + std::to_string(e) + "/2)";
	}
	std::string n = variable_name(v);
	return e == 1 ? n : n + "^" + std::to_string(e);
}

std::string monomial_str(const Monomial &m)
{
	std::string s;
	for (int v = 0; v < kMaxVars; ++v) {
		if (m.e[v] == 0)
			continue;
		if (!s.empty())
			s += "*";
		s += var_power(v, m.e[v]);
	}
	return s;
}

} // namespace

std::string Poly::str() const
{
	if (terms_.empty())
		return "0";
	std::string out;
	bool first = true;
	for (auto &t : terms_) {
		GaussRat c = t.c;
		bool negative = false;
		if (!c.compound()) {
			if (sgn(c.re) < 0 || (sgn(c.re) == 0 && sgn(c.im) < 0)) {
				negative = true;
				c = -c;
			}
		}
		if (first)
			out += negative ? "-" : "";
		else
			out += negative ? " - " : " + ";
		first = false;
		std::string mono = monomial_str(t.m);
		std::string cs = c.str();
		if (std_needs_paren(c))
			cs = "(" + cs + ")";
		if (mono.empty())
			out += cs;
		else if (c.is_one())
			out += mono;
		else
			out += cs + "*" + mono;
	}
	return out;
}

// Multivariate gcd over Q(i): recursive content / primitive pseudo-remainder
// sequence. Result is monic (leading coefficient 1).

namespace {

Poly gcd_nomono(const Poly &a, const Poly &b);

Poly content(const Poly &p, int v)
{
	auto cs = p.coefficients(v);
	Poly g;
	for (auto &c : cs) {
		if (c.is_zero())
			continue;
		g = g.is_zero() ? c.monic() : Poly::gcd(g, c);
		if (g.is_constant())
			return Poly(1);
	}
	return g;
}

Poly prem(const Poly &a, const Poly &b, int v)
{
	// lc(b)^(deg a - deg b + 1) * a mod b
	int db = b.degree(v);
	Poly lcb = b.coefficient(v, db);
	Poly r = a;
	int dr = r.degree(v);
	int budget = dr - db + 1;
	while (!r.is_zero() && dr >= db) {
		Poly lcr = r.coefficient(v, dr);
		Monomial shift;
		shift.e[v] = static_cast<int16_t>(dr - db);
		r = lcb * r - (lcr * b).times_monomial(shift, GaussRat(1));
		--budget;
		dr = r.is_zero() ? 0 : r.degree(v);
	}
	for (; budget > 0; --budget)
		r = r * lcb;
	return r;
}

Poly primitive(const Poly &p, int v)
{
	Poly c = content(p, v);
	if (c.is_constant())
		return p.monic();
	return p.divide_exact(c).value().monic();
}

int first_variable(const Poly &a, const Poly &b, bool &in_both)
{
	for (int v = 0; v < kMaxVars; ++v) {
		bool ia = a.contains(v), ib = b.contains(v);
		if (ia || ib) {
			in_both = ia && ib;
			return v;
		}
	}
	in_both = false;
	return -1;
}

bool only_variable(const Poly &p, int v)
{
	for (auto &t : p.terms())
		for (int k = 0; k < kMaxVars; ++k)
			if (k != v && t.m.e[k] != 0)
				return false;
	return true;
}

Poly remainder_field(const Poly &a, const Poly &b, int v)
{
	// univariate remainder over Q(i); b monic
	int db = b.degree(v);
	Poly r = a;
	while (!r.is_zero() && r.degree(v) >= db) {
		int dr = r.degree(v);
		Monomial shift;
		shift.e[v] = static_cast<int16_t>(dr - db);
		r = r - b.times_monomial(shift, r.leading().c);
	}
	return r;
}

Poly gcd_nomono(const Poly &a, const Poly &b)
{
	if (a.is_constant() || b.is_constant())
		return Poly(1);
	if (a == b)
		return a.monic();
	bool both = false;
	int v = first_variable(a, b, both);
	if (!both) {
		const Poly &with = a.contains(v) ? a : b;
		const Poly &without = a.contains(v) ? b : a;
		Poly g = without.monic();
		for (auto &c : with.coefficients(v)) {
			if (c.is_zero())
				continue;
			g = Poly::gcd(g, c);
			if (g.is_constant())
				return Poly(1);
		}
		return g;
	}
	if (only_variable(a, v) && only_variable(b, v)) {
		Poly x = a.monic(), y = b.monic();
		if (x.degree(v) < y.degree(v))
			std::swap(x, y);
		while (!y.is_zero()) {
			Poly r = remainder_field(x, y, v);
			x = std::move(y);
			y = r.is_zero() ? r : r.monic();
		}
		return x;
	}
	Poly ca = content(a, v), cb = content(b, v);
	Poly pa = ca.is_constant() ? a : a.divide_exact(ca).value();
	Poly pb = cb.is_constant() ? b : b.divide_exact(cb).value();
	Poly c = (ca.is_constant() || cb.is_constant()) ? Poly(1) : Poly::gcd(ca, cb);
	if (pa.degree(v) < pb.degree(v))
		std::swap(pa, pb);
	// subresultant remainder sequence
	Poly g(1), h(1);
	while (true) {
		int delta = pa.degree(v) - pb.degree(v);
		Poly r = prem(pa, pb, v);
		if (r.is_zero())
			return (c * primitive(pb, v)).monic();
		if (r.degree(v) == 0)
			return c.monic();
		Poly hd(1);
		for (int k = 0; k < delta; ++k)
			hd = hd * h;
		pa = std::move(pb);
		pb = r.divide_exact(g * hd).value();
		g = pa.coefficient(v, pa.degree(v));
		if (delta == 0)
			continue;
		Poly gd(1), hd1(1);
		for (int k = 0; k < delta; ++k)
			gd = gd * g;
		for (int k = 0; k < delta - 1; ++k)
			hd1 = hd1 * h;
		h = gd.divide_exact(hd1).value();
	}
}

} // namespace

Poly Poly::gcd(const Poly &a, const Poly &b)
{
	if (a.is_zero())
		return b.monic();
	if (b.is_zero())
		return a.monic();
	Monomial ma = a.min_monomial(), mb = b.min_monomial();
	Monomial m;
	for (int k = 0; k < kMaxVars; ++k)
		m.e[k] = std::min(ma.e[k], mb.e[k]);
	Poly ra = a.shift_down(ma), rb = b.shift_down(mb);
	Poly g = gcd_nomono(ra, rb);
	return g.times_monomial(m, GaussRat(1)).monic();
}

// ---------------------------------------------------------------------------
// Scalar

Scalar Scalar::fraction(const Poly &n, const Poly &d)
{
	if (d.is_zero())
		throw DivisionByZero("zero denominator");
	Scalar s;
	s.num_ = n;
	s.den_ = d;
	s.reduce();
	return s;
}

Scalar Scalar::rational(long n, long d)
{
	if (d == 0)
		throw DivisionByZero("zero denominator");
	return Scalar(GaussRat(mpq_class(n) / mpq_class(d)));
}

void Scalar::reduce()
{
	if (num_.is_zero()) {
		den_ = Poly(1);
		return;
	}
	if (!den_.is_constant()) {
		if (den_.is_monomial()) {
			Monomial mn = num_.min_monomial();
			Monomial md = den_.leading().m;
			Monomial m;
			for (int k = 0; k < kMaxVars; ++k)
				m.e[k] = std::min(mn.e[k], md.e[k]);
			if (!m.is_one()) {
				num_ = num_.shift_down(m);
				den_ = den_.shift_down(m);
			}
		} else {
			Poly g = Poly::gcd(num_, den_);
			if (!g.is_constant()) {
				num_ = num_.divide_exact(g).value();
				den_ = den_.divide_exact(g).value();
			}
		}
	}
	GaussRat lc = den_.leading().c;
	if (!lc.is_one()) {
		GaussRat inv = lc.inverse();
		num_ = num_.scaled(inv);
		den_ = den_.scaled(inv);
	}
}

Scalar Scalar::variable(int index) { return Scalar(Poly::variable(index)); }

Scalar Scalar::named(const std::string &name)
{
	if (name == "q")
		return named("qh").pow(2);
	if (name == "i")
		return i();
	int idx = variable_index(name, true);
	if (active_specialization) {
		auto it = active_specialization->find(idx);
		if (it != active_specialization->end())
			return it->second;
	}
	return variable(idx);
}

Scalar Scalar::qh() { return named("qh"); }
Scalar Scalar::q() { return qh().pow(2); }
Scalar Scalar::mu() { return Scalar(1) - q().pow(-2); }
Scalar Scalar::lambda() { return named("λ"); }
Scalar Scalar::t() { return named("t"); }
Scalar Scalar::s() { return named("s"); }
Scalar Scalar::ell() { return named("ℓ"); }

std::optional<GaussRat> Scalar::constant_value() const
{
	if (!is_constant())
		return std::nullopt;
	return num_.constant_term();
}

Scalar Scalar::inverse() const
{
	if (is_zero())
		throw DivisionByZero("division by zero Scalar");
	return fraction(den_, num_);
}

Scalar Scalar::pow(int n) const
{
	if (n < 0)
		return inverse().pow(-n);
	Scalar result(1), base = *this;
	while (n > 0) {
		if (n & 1)
			result *= base;
		base *= base;
		n >>= 1;
	}
	return result;
}

Scalar Scalar::conj() const
{
	Scalar s;
	s.num_ = num_.conj();
	s.den_ = den_.conj();
	s.reduce();
	return s;
}

Scalar operator+(const Scalar &a, const Scalar &b)
{
	if (a.is_zero())
		return b;
	if (b.is_zero())
		return a;
	if (a.den_ == b.den_) {
		Scalar s;
		s.num_ = a.num_ + b.num_;
		s.den_ = a.den_;
		if (!s.den_.is_one())
			s.reduce();
		else if (s.num_.is_zero())
			s.den_ = Poly(1);
		return s;
	}
	Scalar s;
	if (a.den_.is_monomial() && b.den_.is_monomial()) {
		// common denominator is the lcm monomial
		Monomial ma = a.den_.leading().m, mb = b.den_.leading().m, l;
		for (int k = 0; k < kMaxVars; ++k)
			l.e[k] = std::max(ma.e[k], mb.e[k]);
		Monomial fa, fb;
		for (int k = 0; k < kMaxVars; ++k) {
			fa.e[k] = static_cast<int16_t>(l.e[k] - ma.e[k]);
			fb.e[k] = static_cast<int16_t>(l.e[k] - mb.e[k]);
		}
		s.num_ = a.num_.times_monomial(fa, a.den_.leading().c.inverse()) +
		         b.num_.times_monomial(fb, b.den_.leading().c.inverse());
		s.den_ = Poly::monomial(l, GaussRat(1));
	} else {
		Poly g = Poly::gcd(a.den_, b.den_);
		Poly da = a.den_.divide_exact(g).value();
		Poly db = b.den_.divide_exact(g).value();
		s.num_ = a.num_ * db + b.num_ * da;
		s.den_ = a.den_ * db;
	}
	s.reduce();
	return s;
}

Scalar operator-(const Scalar &a)
{
	Scalar s = a;
	s.num_ = -s.num_;
	return s;
}

Scalar operator-(const Scalar &a, const Scalar &b) { return a + (-b); }

Scalar operator*(const Scalar &a, const Scalar &b)
{
	if (a.is_zero() || b.is_zero())
		return Scalar();
	Scalar s;
	if (a.den_.is_one() && b.den_.is_one()) {
		s.num_ = a.num_ * b.num_;
		s.den_ = Poly(1);
		return s;
	}
	if (a.den_.is_monomial() && b.den_.is_monomial()) {
		s.num_ = a.num_ * b.num_;
		s.den_ = a.den_ * b.den_;
		s.reduce();
		return s;
	}
	Poly g1 = a.den_.is_one() ? Poly(1) : Poly::gcd(b.num_, a.den_);
	Poly g2 = b.den_.is_one() ? Poly(1) : Poly::gcd(a.num_, b.den_);
	Poly an = g2.is_one() ? a.num_ : a.num_.divide_exact(g2).value();
	Poly bd = g2.is_one() ? b.den_ : b.den_.divide_exact(g2).value();
	Poly bn = g1.is_one() ? b.num_ : b.num_.divide_exact(g1).value();
	Poly ad = g1.is_one() ? a.den_ : a.den_.divide_exact(g1).value();
	s.num_ = an * bn;
	s.den_ = ad * bd;
	s.reduce();
	return s;
}

Scalar operator/(const Scalar &a, const Scalar &b) { return a * b.inverse(); }

Scalar evaluate(const Poly &p, const ScalarAssignment &a)
{
	// Precompute powers lazily per variable.
	std::map<std::pair<int, int>, Scalar> powers;
	auto power = [&](int v, int e) -> Scalar {
		auto key = std::make_pair(v, e);
		auto it = powers.find(key);
		if (it != powers.end())
			return it->second;
		Scalar val = a.at(v).pow(e);
		powers.emplace(key, val);
		return val;
	};
	Scalar result;
	for (auto &t : p.terms()) {
		Monomial rest = t.m;
		Scalar factor(1);
		for (auto &[v, value] : a) {
			if (t.m.e[v] != 0) {
				factor *= power(v, t.m.e[v]);
				rest.e[v] = 0;
			}
		}
		result += factor * Scalar(Poly::monomial(rest, t.c));
	}
	return result;
}

Scalar Scalar::substitute(const ScalarAssignment &a) const
{
	bool touches = false;
	for (auto &[v, _] : a)
		if (contains(v))
			touches = true;
	if (!touches)
		return *this;
	Scalar n = evaluate(num_, a);
	Scalar d = evaluate(den_, a);
	if (d.is_zero())
		throw PoleError("pole: denominator " + den_.str() + " vanishes under substitution");
	return n / d;
}

Scalar Scalar::specialize(const Assignment &a) const
{
	ScalarAssignment sa;
	for (auto &[v, val] : a)
		sa.emplace(v, Scalar(val));
	return substitute(sa);
}

Scalar Scalar::coefficient(int v, int k) const
{
	if (den_.contains(v))
		throw std::invalid_argument("coefficient extraction: denominator involves the variable");
	return fraction(num_.coefficient(v, k), den_);
}

bool Scalar::compound() const
{
	if (!den_.is_one())
		return true;
	if (num_.terms().size() > 1)
		return true;
	if (num_.terms().size() == 1 && num_.terms()[0].c.compound())
		return true;
	return false;
}

std::string Scalar::str() const
{
	if (den_.is_one())
		return num_.str();
	std::string n = num_.str();
	if (num_.terms().size() > 1 || (num_.terms().size() == 1 && num_.terms()[0].c.compound()))
		n = "(" + n + ")";
	std::string d = den_.str();
	bool bare = den_.terms().size() == 1 && den_.terms()[0].c.is_one();
	if (bare) {
		int factors = 0;
		for (auto e : den_.terms()[0].m.e)
			factors += e != 0;
		bare = factors == 1;
	}
	if (!bare)
		d = "(" + d + ")";
	return n + "/" + d;
}

ScopedSpecialization::ScopedSpecialization(ScalarAssignment values)
{
	if (active_specialization)
		previous_ = *active_specialization;
	auto *fresh = new ScalarAssignment(previous_);
	for (auto &[k, v] : values)
		(*fresh)[k] = v;
	delete active_specialization;
	active_specialization = fresh;
}

ScopedSpecialization::~ScopedSpecialization()
{
	delete active_specialization;
	active_specialization = previous_.empty() ? nullptr : new ScalarAssignment(previous_);
}

std::string specialization_key()
{
	if (!active_specialization)
		return "";
	std::string key;
	for (auto &[k, v] : *active_specialization)
		key += variable_name(k) + "=" + v.str() + ";";
	return key;
}

} // namespace qcalc
