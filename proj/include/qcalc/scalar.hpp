#pragma once

// Exact coefficient field: rational functions in q^{1/2} and a small set of
// real central parameters, over the Gaussian rationals Q(i).

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qcalc {

class PoleError : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

class DivisionByZero : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// Element a + b*i of Q(i).
struct GaussRat {
	mpq_class re{0};
	mpq_class im{0};

	GaussRat() = default;
	GaussRat(long v) : re(v) {}
	GaussRat(mpq_class r, mpq_class i = 0) : re(std::move(r)), im(std::move(i)) {}

	static GaussRat I() { return GaussRat(0, 1); }

	bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
	bool is_one() const { return re == 1 && sgn(im) == 0; }
	bool is_real() const { return sgn(im) == 0; }

	GaussRat conj() const { return GaussRat(re, -im); }
	GaussRat inverse() const;

	friend GaussRat operator+(const GaussRat &a, const GaussRat &b) { return {a.re + b.re, a.im + b.im}; }
	friend GaussRat operator-(const GaussRat &a, const GaussRat &b) { return {a.re - b.re, a.im - b.im}; }
	friend GaussRat operator-(const GaussRat &a) { return {-a.re, -a.im}; }
	friend GaussRat operator*(const GaussRat &a, const GaussRat &b)
	{
		return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
	}
	friend GaussRat operator/(const GaussRat &a, const GaussRat &b) { return a * b.inverse(); }
	GaussRat &operator+=(const GaussRat &b)
	{
		re += b.re;
		im += b.im;
		return *this;
	}
	GaussRat &operator-=(const GaussRat &b)
	{
		re -= b.re;
		im -= b.im;
		return *this;
	}
	friend bool operator==(const GaussRat &a, const GaussRat &b) { return a.re == b.re && a.im == b.im; }
	friend bool operator!=(const GaussRat &a, const GaussRat &b) { return !(a == b); }

	std::string str() const;
	/// True when str() would need parentheses inside a product.
	bool compound() const { return sgn(re) != 0 && sgn(im) != 0; }
};

/// Indeterminates. Index 0 is q^{1/2}; the others are real central parameters.
/// Extra names can be registered at runtime up to kMaxVars.
constexpr int kMaxVars = 12;

namespace var {
constexpr int qh = 0;
constexpr int lambda = 1;
constexpr int t = 2;
constexpr int s = 3;
constexpr int ell = 4;
constexpr int omega = 5;
constexpr int k1 = 6;
constexpr int k2 = 7;
} // namespace var

/// Returns the index for a variable name (canonical or alias), registering it
/// if `create` is set. Returns -1 if unknown.
int variable_index(const std::string &name, bool create = false);
const std::string &variable_name(int index);
int variable_count();

using Exponents = std::array<int16_t, kMaxVars>;

struct Monomial {
	Exponents e{};

	bool is_one() const;
	int total_degree() const;
	friend bool operator==(const Monomial &a, const Monomial &b) { return a.e == b.e; }
	friend bool operator!=(const Monomial &a, const Monomial &b) { return a.e != b.e; }
	/// Lexicographic with variable 0 most significant.
	friend bool operator<(const Monomial &a, const Monomial &b) { return a.e < b.e; }
	friend Monomial operator*(const Monomial &a, const Monomial &b);
	bool divides(const Monomial &other) const;
};

/// Sparse multivariate polynomial with Q(i) coefficients, terms sorted by
/// decreasing lexicographic monomial order.
class Poly {
public:
	struct Term {
		Monomial m;
		GaussRat c;
	};

	Poly() = default;
	Poly(long c);
	Poly(GaussRat c);
	static Poly variable(int index, int power = 1);
	static Poly monomial(Monomial m, GaussRat c);

	bool is_zero() const { return terms_.empty(); }
	bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }
	bool is_one() const { return terms_.size() == 1 && terms_[0].m.is_one() && terms_[0].c.is_one(); }
	bool is_monomial() const { return terms_.size() == 1; }
	const std::vector<Term> &terms() const { return terms_; }
	const Term &leading() const { return terms_.front(); }
	GaussRat constant_term() const;

	int degree(int v) const;
	bool contains(int v) const { return degree(v) > 0; }
	/// Minimum exponent of each variable over all terms.
	Monomial min_monomial() const;
	/// Coefficient of v^k, as a polynomial free of v.
	Poly coefficient(int v, int k) const;
	std::vector<Poly> coefficients(int v) const;

	Poly conj() const;
	Poly shift_down(const Monomial &m) const;
	Poly scaled(const GaussRat &c) const;
	Poly times_monomial(const Monomial &m, const GaussRat &c) const;
	/// Divide by leading coefficient.
	Poly monic() const;
	/// Exact division; nullopt when `d` does not divide.
	std::optional<Poly> divide_exact(const Poly &d) const;

	friend Poly operator+(const Poly &a, const Poly &b);
	friend Poly operator-(const Poly &a, const Poly &b);
	friend Poly operator-(const Poly &a);
	friend Poly operator*(const Poly &a, const Poly &b);
	friend bool operator==(const Poly &a, const Poly &b);
	friend bool operator!=(const Poly &a, const Poly &b) { return !(a == b); }

	std::string str() const;

	static Poly gcd(const Poly &a, const Poly &b);

private:
	std::vector<Term> terms_;
	void canonicalize();
	friend class PolyBuilder;
};

class Scalar;
using Assignment = std::map<int, GaussRat>;
using ScalarAssignment = std::map<int, Scalar>;

/// Reduced fraction num/den; den is monic and coprime to num.
class Scalar {
public:
	Scalar() : num_(0), den_(1) {}
	Scalar(long v) : num_(v), den_(1) {}
	Scalar(GaussRat v) : num_(std::move(v)), den_(1) {}
	Scalar(const Poly &p) : num_(p), den_(1) {}
	static Scalar fraction(const Poly &n, const Poly &d);
	static Scalar rational(long n, long d);

	static Scalar variable(int index);
	/// Named variable; honours the thread-local specialization (see ScopedSpecialization).
	static Scalar named(const std::string &name);
	static Scalar qh();
	static Scalar q();
	static Scalar i() { return Scalar(GaussRat::I()); }
	/// mu = 1 - q^{-2}
	static Scalar mu();
	static Scalar lambda();
	static Scalar t();
	static Scalar s();
	static Scalar ell();

	const Poly &num() const { return num_; }
	const Poly &den() const { return den_; }
	bool is_zero() const { return num_.is_zero(); }
	bool is_one() const { return num_.is_one() && den_.is_one(); }
	bool is_polynomial() const { return den_.is_one(); }
	bool is_constant() const { return num_.is_constant() && den_.is_one(); }
	std::optional<GaussRat> constant_value() const;
	bool contains(int v) const { return num_.contains(v) || den_.contains(v); }

	Scalar inverse() const;
	Scalar pow(int n) const;
	Scalar conj() const;

	/// Partial evaluation at Gaussian-rational points; throws PoleError.
	Scalar specialize(const Assignment &a) const;
	/// Substitute Scalars for variables; throws PoleError if the denominator vanishes.
	Scalar substitute(const ScalarAssignment &a) const;
	/// For a Scalar whose denominator does not involve v, the coefficient of v^k.
	Scalar coefficient(int v, int k) const;
	int degree(int v) const { return num_.degree(v); }

	friend Scalar operator+(const Scalar &a, const Scalar &b);
	friend Scalar operator-(const Scalar &a, const Scalar &b);
	friend Scalar operator-(const Scalar &a);
	friend Scalar operator*(const Scalar &a, const Scalar &b);
	friend Scalar operator/(const Scalar &a, const Scalar &b);
	Scalar &operator+=(const Scalar &b) { return *this = *this + b; }
	Scalar &operator-=(const Scalar &b) { return *this = *this - b; }
	Scalar &operator*=(const Scalar &b) { return *this = *this * b; }
	Scalar &operator/=(const Scalar &b) { return *this = *this / b; }
	friend bool operator==(const Scalar &a, const Scalar &b) { return a.num_ == b.num_ && a.den_ == b.den_; }
	friend bool operator!=(const Scalar &a, const Scalar &b) { return !(a == b); }

	std::string str() const;
	/// True when str() needs parentheses to be used as a factor.
	bool compound() const;

private:
	Poly num_;
	Poly den_;
	void reduce();
};

/// Evaluate a polynomial with Scalars substituted for some variables.
Scalar evaluate(const Poly &p, const ScalarAssignment &a);

/// While alive, Scalar::named() returns the given values for the given
/// variables on this thread (used for specialized reruns such as --q-at).
class ScopedSpecialization {
public:
	explicit ScopedSpecialization(ScalarAssignment values);
	~ScopedSpecialization();
	ScopedSpecialization(const ScopedSpecialization &) = delete;
	ScopedSpecialization &operator=(const ScopedSpecialization &) = delete;

private:
	ScalarAssignment previous_;
};

/// Printable key of the specialization active on this thread, empty when none.
/// Caches of presentations built from named scalars are keyed on it.
std::string specialization_key();

} // namespace qcalc
