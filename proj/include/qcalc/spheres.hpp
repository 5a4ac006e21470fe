#pragma once

// Sphere algebras from projectors, their identifications with the Podleś
// sphere, the Casimir quotient of U_q(su2) and the time slice of B_q[SU2].

#include <optional>

#include "qcalc/freealg.hpp"
#include "qcalc/report.hpp"
#include "qcalc/rmatrix.hpp"

namespace qcalc {

enum class SphereKind { Classical, Fuzzy, QSphere, QFuzzy };

std::string sphere_kind_name(SphereKind k);

struct ProjectorMatrix {
	PresentationPtr algebra;
	GenMatrix e;
	Scalar lambda;
	Scalar trace_weight[2]; // trace = w0 e11 + w1 e22
	Scalar trace_target;
};

/// e over the matching shipped presentation; lambda defaults to the symbol λ
/// and is substituted into the presentation when given.
ProjectorMatrix build_projector(SphereKind kind, const std::optional<Scalar> &lambda = std::nullopt);

struct ProjectorResiduals {
	std::vector<Residual> idempotent;   // entries of e^2 - e
	std::vector<Residual> self_adjoint; // e_ij† - e_ji
	std::vector<Residual> trace;        // weighted trace minus target
	bool ok() const { return all_zero(idempotent) && all_zero(self_adjoint) && all_zero(trace); }
};

ProjectorResiduals projector_residuals(const ProjectorMatrix &e);

/// Replaces s^2 by `square` in a scalar that is a polynomial in s^2 over the other variables.
Scalar substitute_s_squared(const Scalar &x, const Scalar &square);
/// Podleś sphere with s^2 fixed.
PresentationPtr podles_at(const Scalar &s_squared);
/// Podleś sphere with s^2 fixed and x^-1 adjoined.
PresentationPtr podles_patch(const Scalar &s_squared);
/// U_q(su2) modulo c_q = value.
PresentationPtr uqsu2_casimir_quotient(const Scalar &value);
/// K^2 q^-1 + q K^-2 + x₊ x₋ (q - q^-1)^2 in uqsu2.
NcPoly casimir(const Presentation &uq);
/// B_q[SU2] modulo q^-1 α + q δ = t + 1/t.
PresentationPtr bqsu2_slice(const Scalar &t);
/// λ = t^2 (1 - q^2) / (1 - t^2); throws DivisionByZero at t^2 = 1.
Scalar slice_lambda(const Scalar &t);

struct LocalizationResult {
	std::optional<Scalar> c; // empty when no consistent coefficient exists
	PresentationPtr source;  // B_q[SU2] with α^-1 adjoined
	GenMap images;           // into uqsu2, using c
};
/// Determines the x₊x₋ coefficient of the localization matrix from the braided determinant.
LocalizationResult solve_localization();

struct SphereOptions {
	std::optional<Scalar> t;  // slice / Casimir parameter, symbolic when empty
	bool flip_mu = false;     // Casimir suite: other sign of the square root for μ
	bool flip_nu = false;     // and for ν
};

CheckReport projector_suite(SphereKind kind);
CheckReport pauli_form_check();
CheckReport prop1_suite();
CheckReport prop3_suite(const SphereOptions &opt = {});
CheckReport prop4_suite(const SphereOptions &opt = {});
CheckReport localization_suite();

} // namespace qcalc
