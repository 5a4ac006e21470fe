#pragma once

// Graded presentations with an inner differential d = sigma [theta, . }:
// the calculi on C_q[SU2], B_q[SU2], U_q(su2) and the q-fuzzy sphere.
// 1-forms e_a, e_b, e_c, e_d stand for e_1^1, e_1^2, e_2^1, e_2^2.

#include <string>
#include <vector>

#include "qcalc/expr.hpp"
#include "qcalc/freealg.hpp"
#include "qcalc/rmatrix.hpp"

namespace qcalc {

/// (e_a, e_b; e_c, e_d) in the given presentation.
GenMatrix form_matrix(const Presentation &p);
/// Generator matrix from four names in row order.
GenMatrix named_matrix(const Presentation &p, const std::vector<std::string> &names);

/// Relations of p involving only 1-forms (the exterior algebra part).
std::vector<NcPoly> exterior_relations(const Presentation &p);
/// Relations of p of degree one (bimodule relations).
std::vector<NcPoly> bimodule_relations(const Presentation &p);

/// Hand bimodule relations on B_q[SU2]; `bracket` selects the meaning of [x, y]_p.
PresentationPtr omega_bqsu2(BracketConvention bracket = BracketConvention::Standard);
/// FRT calculus e_α^β t^a_b = t^a_c e_m^n R^m_α^c_d R^d_b^β_n on C_q[SU2].
PresentationPtr omega_cqsu2(const RMatrix &r);
PresentationPtr omega_cqsu2();
/// The same calculus over any 2x2 FRT presentation on a, b, c, d.
PresentationPtr omega_frt(const Presentation &frt, const RMatrix &r);
/// Localized calculus on U_q(su2), d = [θ, .].
PresentationPtr omega_uqsu2();
/// B_q[SU2] with bimodule relations generated from the braided formula for R.
PresentationPtr omega_eq9(const RMatrix &r);
/// omega_bqsu2 with Tr_q(u) = t + 1/t and the θ constraint.
PresentationPtr omega_qfuzzy(const Scalar &t);

/// Both directions: each generated relation in the hand calculus and each
/// hand relation in the generated one. Empty when the ideals agree.
std::vector<Residual> eq9_crosscheck(const RMatrix &r, const Presentation &hand);
std::vector<Residual> eq9_crosscheck(const RMatrix &r);

/// d(xy) - d(x) y - (-1)^|x| x d(y) on random monomial pairs of length <= max_len.
std::vector<Residual> leibniz_check(const Presentation &p, int samples, unsigned seed, int max_len = 3);
/// d(d(g)) for every generator g.
std::vector<Residual> d_squared_check(const Presentation &p);

/// Images of the B_q[SU2] generators and forms in omega_uqsu2:
/// α = K^2, β = q^-1/2 (q - 1/q) K x₋, γ = q^-1/2 (q - 1/q) x₊ K, δ = K^-2 + c x₊ x₋.
GenMap localization_map(const Presentation &omega_b, const Presentation &omega_u, const Scalar &c);
/// c = q^-1 (q - 1/q)^2, forced by the braided determinant.
Scalar localization_coefficient();
/// q^1/2 (1 - q^-1/2)^2
Scalar lambda_hat();

/// (t + 1/t) θ - q^-1 (1 + q^-1)(α e_d + δ e_a - q^-1 β e_b - q γ e_c) in omega_bqsu2.
NcPoly prop7_constraint(const Presentation &omega_b, const Scalar &t);

/// Coefficients of a degree-1 element on the four forms, assuming every term is f*e.
std::vector<NcPoly> form_coefficients(const Presentation &p, const NcPoly &x);

} // namespace qcalc
