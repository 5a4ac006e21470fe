#pragma once

// R-matrices on V (x) V and the relation generators built from them.
// Entry R^i_j^k_l sits at row (i,k), column (j,l); indices are 0-based in
// code and 1-based in files and names.

#include <string>
#include <vector>

#include "qcalc/freealg.hpp"

namespace qcalc {

/// Dense square matrix over Scalar.
class ScalarMatrix {
public:
	ScalarMatrix() = default;
	explicit ScalarMatrix(int n) : n_(n), e_(static_cast<size_t>(n) * n) {}
	static ScalarMatrix identity(int n);

	int size() const { return n_; }
	Scalar &operator()(int r, int c) { return e_[static_cast<size_t>(r) * n_ + c]; }
	const Scalar &operator()(int r, int c) const { return e_[static_cast<size_t>(r) * n_ + c]; }

	friend ScalarMatrix operator*(const ScalarMatrix &a, const ScalarMatrix &b);
	friend ScalarMatrix operator-(const ScalarMatrix &a, const ScalarMatrix &b);
	friend bool operator==(const ScalarMatrix &a, const ScalarMatrix &b) { return a.e_ == b.e_; }
	/// Gauss-Jordan; throws DivisionByZero when singular.
	ScalarMatrix inverse() const;
	bool is_zero() const;
	bool is_diagonal() const;

private:
	int n_ = 0;
	std::vector<Scalar> e_;
};

enum class Normalization { Hecke, QuantumGroup, Other };

class RMatrix {
public:
	RMatrix() = default;
	RMatrix(int n, Normalization norm, std::string name = "");

	static RMatrix identity(int n);
	/// Standard SL2 solution: q on 11,11 and 22,22, 1 on 12,12 and 21,21, q - q^-1 at R^1_2^2_1.
	static RMatrix standard(Normalization norm = Normalization::Hecke);
	/// Two-parameter deformation: 12,12 entry p and 21,21 entry 1/p; real type when |p| = 1.
	static RMatrix two_parameter(const Scalar &p);
	/// Diagonal diag(p, 1, 1, p).
	static RMatrix diagonal(const Scalar &p);

	int n() const { return n_; }
	Normalization normalization() const { return norm_; }
	const std::string &name() const { return name_; }
	void set_name(std::string n) { name_ = std::move(n); }

	Scalar &at(int i, int j, int k, int l) { return m_(i * n_ + k, j * n_ + l); }
	const Scalar &at(int i, int j, int k, int l) const { return m_(i * n_ + k, j * n_ + l); }
	const ScalarMatrix &matrix() const { return m_; }

	RMatrix scaled(const Scalar &c, Normalization tag) const;
	/// Hecke -> quantum-group by q^{-1/2}; identity on other tags.
	RMatrix to_quantum_group() const;
	RMatrix inverse() const;
	/// Swap of the two tensor factors, R21.
	RMatrix flipped() const;
	RMatrix map_scalars(const std::function<Scalar(const Scalar &)> &f) const;

private:
	int n_ = 0;
	Normalization norm_ = Normalization::Other;
	std::string name_;
	ScalarMatrix m_;
};

std::string normalization_name(Normalization n);

/// Parses the R-matrix file format (YAML with n, normalization, entries "R[i,j,k,l] = expr").
RMatrix load_rmatrix(const std::string &text, const std::string &origin = "<input>");
RMatrix load_rmatrix_file(const std::string &path);
/// Shipped R-matrix by name ("standard", "twoparam") or a file path.
RMatrix load_rmatrix_any(const std::string &path_or_name);

struct EntryResidual {
	std::string label;
	Scalar value;
};

/// R12 R13 R23 - R23 R13 R12, nonzero entries only.
std::vector<EntryResidual> ybe_residual(const RMatrix &r);
bool ybe_check(const RMatrix &r);
/// conj(R^i_j^k_l) - R^l_k^j_i, nonzero entries only.
std::vector<EntryResidual> real_type_residual(const RMatrix &r);
bool real_type_check(const RMatrix &r);

/// ((R^{t2})^{-1})^{t2}; throws DivisionByZero when R^{t2} is singular.
RMatrix second_inverse(const RMatrix &r);
/// The four contraction identities of the second inverse, nonzero entries only.
std::vector<EntryResidual> second_inverse_residual(const RMatrix &r, const RMatrix &rt);
/// Which pair of second-inverse indices is traced to form the metric u.
/// Braiding: u^i_j = sum_a Rt^i_a^a_j, read off from ev (id (x) phi) Psi_{V,V*} coev
/// with Psi_{V,V*}(e_i (x) f^j) = Rt^a_i^j_b f^b (x) e_a.
/// Transposed: u^i_j = sum_a Rt^a_j^i_a, the other index order.
enum class UContraction { Braiding, Transposed };
ScalarMatrix u_matrix(const RMatrix &r, UContraction c = UContraction::Braiding);

/// Matrix of generators of a presentation, entry (i,j) = generator names[i*n+j].
using GenMatrix = std::vector<std::vector<NcPoly>>;

/// Names used for the n = 2 generator matrices.
std::vector<std::string> frt_names(int n);    // a, b, c, d
std::vector<std::string> braided_names(int n); // α, β, γ, δ

/// Entries of R t1 t2 - t2 t1 R over a generator matrix.
std::vector<NcPoly> frt_ideal(const RMatrix &r, const GenMatrix &t);
/// Entries of u2 R21 u1 R - R21 u1 R u2.
std::vector<NcPoly> reflection_ideal(const RMatrix &r, const GenMatrix &u);

/// FRT algebra on a, b, c, d (order b < c < a < d) with optional determinant a d - q^-1 b c = 1.
PresentationPtr frt_relations(const RMatrix &r, bool with_determinant);
/// Braided matrices on α < β < γ < δ, star α, δ fixed and β <-> γ.
PresentationPtr reflection_relations(const RMatrix &r);

struct BraidedSphere {
	std::vector<NcPoly> ideal;     // entries of e^2 - e over {a, b, b†} with x eliminated
	PresentationPtr presentation;  // oriented, on a < b < b†
	ScalarMatrix u;                // the metric, scaled so u(0,0) = 1
	NcPoly trace_before_elimination; // trace(e u) over {x, a, b, b†}
	PresentationPtr free_with_x;   // free algebra carrying trace_before_elimination
};

/// Projector relations e^2 = e, e† = e, trace(e u) = 1 + lambda for e = (x, b; b†, a).
BraidedSphere braided_sphere_relations(const RMatrix &r, const Scalar &lambda);

/// Bimodule relation generators between forms e_m^n and a matrix of functions.
/// braided: LHS R^m_α^a_d R^{-1}^β_n^d_c e_m^n u^c_b, RHS u^a_c e_m^n R^m_α^c_d R^d_b^β_n.
/// FRT:     e_α^β t^a_b - t^a_c e_m^n R^m_α^c_d R^d_b^β_n.
/// forms(m, n) gives the form generator e_m^n; 16 relations for n = 2, indexed ((α n + β) n + a) n + b.
std::vector<NcPoly> eq9_relations(const RMatrix &r, const GenMatrix &u, const GenMatrix &forms);
std::vector<NcPoly> frt_calculus_relations(const RMatrix &r, const GenMatrix &t, const GenMatrix &forms);

/// (R21 R)^c_b^m_n as a matrix with the index layout of RMatrix.
RMatrix r21_r(const RMatrix &r);

} // namespace qcalc
