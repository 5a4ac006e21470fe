#pragma once

// Hopf structure on FRT algebras t = (t^i_j): coproduct, counit, antipode,
// the braiding functional ℛ(t^a_b, t^m_n) = R^a_b^m_n extended to monomials,
// transmutation, and the cotwisted products on the 1-forms.

#include <map>
#include <memory>

#include "qcalc/freealg.hpp"
#include "qcalc/report.hpp"
#include "qcalc/rmatrix.hpp"

namespace qcalc {

/// Element of A^{(x)k}: words per leg with coefficients.
class TensorElement {
public:
	explicit TensorElement(int legs = 2) : legs_(legs) {}
	int legs() const { return legs_; }
	const std::map<std::vector<Word>, Scalar> &terms() const { return terms_; }
	void add(const std::vector<Word> &legs, const Scalar &c);
	bool is_zero() const { return terms_.empty(); }
	/// Every leg in normal form, expanded bilinearly.
	TensorElement normalized(const Presentation &p) const;
	friend bool operator==(const TensorElement &a, const TensorElement &b) { return a.terms_ == b.terms_; }
	std::string str(const Presentation &p) const;

private:
	int legs_;
	std::map<std::vector<Word>, Scalar> terms_;
};

struct HopfCache;

struct HopfData {
	PresentationPtr algebra;
	RMatrix r;
	int n = 0;
	std::vector<int> row, col;         // matrix position of each generator
	std::vector<std::vector<int>> gen; // generator at (i, j)
	std::vector<NcPoly> S, S_inv;      // on generators, normalized
	Scalar det_coefficient;            // determinant t11 t22 - det_coefficient t12 t21 = 1
	std::shared_ptr<HopfCache> cache;

	NcPoly t(int i, int j) const { return NcPoly::gen(gen[i][j]); }
};

/// FRT algebra of r (2x2, quantum-group normalization) with the determinant
/// convention under which the cofactor antipode satisfies the antipode axiom.
/// Tries a d - q^-1 b c = 1 first, then a d - q b c = 1.
HopfData make_hopf(const RMatrix &r);

/// The determinant coefficient c for which S t = (c-scaled cofactors) solves
/// S(t) t = t S(t) = 1 in the FRT algebra with a d - c b c = 1; empty if none.
std::optional<std::vector<NcPoly>> solve_antipode(const Presentation &frt, const std::vector<std::vector<int>> &gen);

TensorElement coproduct(const HopfData &h, const NcPoly &x, int legs = 2);
Scalar counit(const HopfData &h, const NcPoly &x);
/// Anti-multiplicative extension of the generator table, normalized.
NcPoly antipode(const HopfData &h, const NcPoly &x);
NcPoly antipode_inverse(const HopfData &h, const NcPoly &x);

/// ℛ(x, y) through ℛ(ab, c) = ℛ(a, c(1)) ℛ(b, c(2)) and ℛ(a, bc) = ℛ(a(1), c) ℛ(a(2), b),
/// evaluated on words of the free algebra (well-definedness is checked separately).
Scalar cqt_eval(const HopfData &h, const NcPoly &x, const NcPoly &y);
/// ℛ^-1(x, y) = ℛ(S x, y).
Scalar cqt_inverse_eval(const HopfData &h, const NcPoly &x, const NcPoly &y);

/// v^-1(a) = ℛ(S^2 a(1), a(2)).
Scalar v_inv(const HopfData &h, const NcPoly &a);
/// u(a) = ℛ(a(2), S a(1)).
Scalar u_functional(const HopfData &h, const NcPoly &a);

/// a • b = a(2) b(2) ℛ((S a(1)) a(3), S b(1)), normalized in the FRT algebra.
NcPoly transmute_product(const HopfData &h, const NcPoly &a, const NcPoly &b);

/// F(a (x) b, c (x) d) = ε(a) ℛ^-1(b, c d) on A (x) A^op.
Scalar cocycle(const HopfData &h, const NcPoly &a, const NcPoly &b, const NcPoly &c, const NcPoly &d);

// ---------------------------------------------------------------------------
// 1-forms. A left-invariant form is a coefficient vector on e_m^n, index m n + n'.

using FormVector = std::vector<Scalar>;

struct CalculusData {
	HopfData h;
	PresentationPtr omega;        // calculus on the FRT algebra
	std::vector<int> fn_to_omega; // FRT generator -> omega generator
	std::vector<int> form;        // e_m^n -> omega generator, index m n + n'
	NcPoly to_omega(const NcPoly &x) const;
	NcPoly form_poly(const FormVector &v) const;
	/// Coefficients of a left-invariant form; throws if a function coefficient appears.
	FormVector form_vector(const NcPoly &x) const;
};

CalculusData make_calculus(const RMatrix &r);

/// Δ_R e_α^β = e_m^n (x) t^m_α S t^β_n, as (form index, FRT element) pairs.
std::vector<std::pair<int, NcPoly>> form_coaction(const CalculusData &c, int form_index);
/// e_α^β ◁ t^a_b = e_m^n R^m_α^a_c R^c_b^β_n, extended to monomials.
FormVector right_action(const CalculusData &c, const FormVector &v, const NcPoly &a);
/// S(a(1)) v a(2) computed in the calculus.
NcPoly adjoint_action(const CalculusData &c, const FormVector &v, const NcPoly &a);

/// Maurer-Cartan form S(a(1)) d a(2) in the calculus.
NcPoly maurer_cartan(const CalculusData &c, const NcPoly &a);

/// Cotwisted products on Ω(A^op)_F, written in Ω(A):
/// a • v = v^(1) a(1) ℛ(a(2), v^(2)), v • a = a(2) v^(1) ℛ(v^(2), (S a(1)) a(3)),
/// v • w = w^(1) v^(1) ℛ(v^(2), w^(2)).
NcPoly cotwist_function_form(const CalculusData &c, const NcPoly &a, const FormVector &v);
NcPoly cotwist_form_function(const CalculusData &c, const FormVector &v, const NcPoly &a);
NcPoly cotwist_form_form(const CalculusData &c, const FormVector &v, const FormVector &w);
/// Transmuted v • a = a(2) (v^(1) ◁ a(3)) ℛ(v^(2), S a(1)).
NcPoly transmute_form_function(const CalculusData &c, const FormVector &v, const NcPoly &a);

/// Θ(a • db) = (d b(2)) a(1) ℛ(a(2), (S b(1)) b(3)).
NcPoly theta_map(const CalculusData &c, const NcPoly &a, const NcPoly &b);
/// Θ and Θ^-1 on left-invariant forms, rows indexed by the input basis form:
/// Θ(ω(a)) = -v^-1(a(1)) ℛ(a(2), S a(4)) ω(S^-1 a(3)),
/// Θ^-1(ω(a)) = -ω(S a(2)) u(a(3)) ℛ(a(4), a(1)).
ScalarMatrix theta_matrix(const CalculusData &c);
ScalarMatrix theta_inverse_matrix(const CalculusData &c);
/// Rows ω(t^i_j) in the e basis.
ScalarMatrix maurer_cartan_matrix(const CalculusData &c);
FormVector apply_form_matrix(const ScalarMatrix &m, const FormVector &v);

/// Suites.
CheckReport hopf_structure_suite(const RMatrix &r);
CheckReport transmutation_suite(const RMatrix &r);
CheckReport cotwist_suite(const RMatrix &r, unsigned seed = 1);

} // namespace qcalc
