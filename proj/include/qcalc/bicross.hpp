#pragma once

// Bicrossproduct spacetime [x_i, z] = iℓ x_i with its 4D calculus,
// normal-ordered functions f(x, y) g(z), partial derivatives and the
// plane-wave Laplacian.

#include <map>
#include <optional>
#include <string>

#include "qcalc/freealg.hpp"
#include "qcalc/report.hpp"

namespace qcalc {

/// Exact exponential polynomial Σ c_j e^{r_j} with Scalar coefficients and exponents.
class ExpSum {
public:
	ExpSum() = default;
	ExpSum(const Scalar &c) { add(Scalar(0), c); }
	static ExpSum exp(const Scalar &rate, const Scalar &c = Scalar(1));

	void add(const Scalar &exponent, const Scalar &c);
	bool is_zero() const { return terms_.empty(); }
	/// exponent string -> (exponent, coefficient)
	const std::map<std::string, std::pair<Scalar, Scalar>> &terms() const { return terms_; }

	friend ExpSum operator+(const ExpSum &a, const ExpSum &b);
	friend ExpSum operator-(const ExpSum &a, const ExpSum &b);
	friend ExpSum operator*(const ExpSum &a, const ExpSum &b);
	friend bool operator==(const ExpSum &a, const ExpSum &b);
	std::string str() const;

	/// Value of the ℓ^0 term of the Laurent expansion at v = 0, assuming every
	/// exponent vanishes at v = 0 and poles cancel; empty if a pole survives.
	std::optional<Scalar> constant_term_at_zero(int v) const;
	/// Numerical value at a point where every exponent and coefficient becomes a real rational.
	double evaluate(const Assignment &at) const;

private:
	std::map<std::string, std::pair<Scalar, Scalar>> terms_;
};

/// Finite sum of c e^ρ x^m y^n E(β₁x + β₂y) z^k E(αz), z-dependence to the right.
class NOFunction {
public:
	struct Key {
		int m = 0, n = 0, k = 0;
		Scalar bx, by, az; // exponential rates, zero when absent
		bool operator<(const Key &o) const;
	};

	NOFunction() = default;
	NOFunction(const Scalar &c);
	static NOFunction monomial(int m, int n, int k, const Scalar &c = Scalar(1));
	/// E(i(k₁x + k₂y)) E(iωz) for Scalars k₁, k₂, ω.
	static NOFunction plane_wave(const Scalar &k1, const Scalar &k2, const Scalar &omega);
	/// c E(αz) z^k.
	static NOFunction z_atom(const Scalar &alpha, int k = 0, const Scalar &c = Scalar(1));

	void add(const Key &key, const ExpSum &c);
	bool is_zero() const { return terms_.empty(); }
	const std::map<Key, ExpSum> &terms() const { return terms_; }

	friend NOFunction operator+(const NOFunction &a, const NOFunction &b);
	friend NOFunction operator-(const NOFunction &a, const NOFunction &b);
	friend NOFunction operator*(const ExpSum &c, const NOFunction &f);
	friend bool operator==(const NOFunction &a, const NOFunction &b);
	std::string str() const;

	/// ∂/∂x (which = 0) or ∂/∂y (which = 1) of the x, y part.
	NOFunction d_x(int which) const;
	/// g(z) -> g(z + s), binomial and exponential shift expanded exactly.
	NOFunction shift_z(const Scalar &s) const;

	bool is_polynomial() const;

private:
	std::map<Key, ExpSum> terms_;
};

struct Partials {
	NOFunction d1, d2, dz, d0; // ∂¹, ∂², ∂^z, ∂⁰
};

/// (13)-(14) style: ∂^i(fg) = (∂f/∂x_i) g, ∂^z(fg) = f (g(z) - g(z - iℓ))/(iℓ),
/// (iℓ)^-1 ∂⁰(fg) = ½ (Σ ∂²f/∂x_i²) g(z + iℓ) + ½ f (g(z + iℓ) + g(z - iℓ) - 2g(z))/(iℓ)².
Partials partials(const NOFunction &f);

/// 2 (iℓ)^-1 ∂⁰ on plane waves, divided by the wave.
ExpSum laplacian_eigenvalue(const Scalar &k1, const Scalar &k2, const Scalar &omega);
/// -k² e^{-ωℓ} - (sinh(ωℓ/2)/(ℓ/2))² with sinh expanded in exponentials.
ExpSum expected_laplacian_eigenvalue(const Scalar &k1, const Scalar &k2, const Scalar &omega);

/// The calculus on the bicrossproduct spacetime (shipped bicross.alg).
PresentationPtr omega_bicross();
/// omega_bicross with an exponential E = E(αz) and w = e^{iαℓ} as a scalar variable.
PresentationPtr omega_bicross_exp();
/// Polynomial NOFunction (or one z-atom rate α with e^ρ factors in powers of e^{iαℓ}) in
/// omega_bicross / omega_bicross_exp.
NcPoly to_bicross(const Presentation &p, const NOFunction &f, const std::optional<Scalar> &alpha = std::nullopt);
/// Σ ∂^i f dx_i + ∂^z f dz + ∂⁰ f θ', assembled in p.
NcPoly assemble_differential(const Presentation &p, const Partials &d,
                             const std::optional<Scalar> &alpha = std::nullopt);

struct LimitEntry {
	std::string left;  // e_a ... e_d, x₋, x₊
	std::string right; // z, x₋, x₊
	NcPoly value;      // leading-order [left, right] in omega_bicross
	std::string error;    // non-empty when a coefficient diverges
};
/// Leading-order commutators of the C_q[SU2] forms and x₋, x₊ with z, x₋, x₊ under
/// b = (qμ/iℓ) q^{-1/2} x₋, c = (qμ/iℓ) q^{1/2} x₊, a = q^{z/(iℓ)}.
std::vector<LimitEntry> limit_table();
/// Leading-order images of dz, dx₋, dx₊ for d = (iℓ)^-1 [i(e_a + e_d), ·].
std::vector<LimitEntry> limit_differentials();

struct LaplacianSample {
	double k1, k2, omega, ell, value;
};
std::vector<LaplacianSample> laplacian_table(int count, unsigned seed);

CheckReport bicross_dga_suite();
CheckReport bicross_limit_suite();
CheckReport bicross_partials_suite(unsigned seed = 1);
CheckReport bicross_laplacian_suite(bool with_table = false, unsigned seed = 1);

} // namespace qcalc
