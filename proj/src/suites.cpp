#include "qcalc/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "qcalc/bicross.hpp"
#include "qcalc/dga.hpp"
#include "qcalc/expr.hpp"
#include "qcalc/hopf.hpp"
#include "qcalc/library.hpp"
#include "qcalc/loader.hpp"
#include "qcalc/spheres.hpp"

namespace qcalc {

namespace {

using Runner = CheckReport (*)(const SuiteOptions &);

struct Entry {
	SuiteInfo info;
	Runner run;
};

std::string residual_text(const std::vector<EntryResidual> &r)
{
	std::string s;
	for (size_t j = 0; j < r.size() && j < 3; ++j)
		s += (j ? "; " : "") + r[j].label + " -> " + r[j].value.str();
	if (r.size() > 3)
		s += "; ... (" + std::to_string(r.size()) + " nonzero)";
	return s;
}

bool same_ideal(const Presentation &a, const Presentation &b, std::vector<Residual> &out)
{
	auto ab = hom_check(a, b, map_by_name(a, b), false);
	auto ba = hom_check(b, a, map_by_name(b, a), false);
	for (auto *side : {&ab, &ba})
		for (auto &r : *side)
			if (!r.value.is_zero())
				out.push_back(r);
	return out.empty();
}

NcPoly unreduced(const Presentation &p, const std::string &src)
{
	EvalContext ctx;
	ctx.alphabet = &p.alphabet();
	return evaluate(*parse_expr(src), ctx);
}

RMatrix chosen_r(const SuiteOptions &opt) { return load_rmatrix_any(opt.rmatrix); }

bool is_standard(const RMatrix &r)
{
	return r.matrix() == RMatrix::standard().matrix() ||
	       r.matrix() == RMatrix::standard(Normalization::QuantumGroup).matrix();
}

// ---------------------------------------------------------------------------
// freealg

CheckReport confluence_suite(const SuiteOptions &opt)
{
	CheckReport rep("freealg:confluence");
	int deg = opt.max_degree;
	auto check = [&](const std::string &name, const std::function<PresentationPtr()> &make) {
		std::string id = "confluent." + name;
		std::string anchor = name + " is locally confluent up to degree " + std::to_string(deg);
		rep.guard(id, anchor, [&] {
			auto p = make();
			rep.expect_zero(id, anchor, *p, p->check_local_confluence(deg));
		});
	};
	for (auto &name : builtin_names())
		check(name, [&] { return builtin(name); });
	check("omega_bqsu2-generated", [] { return omega_bqsu2(); });
	check("omega_cqsu2-generated", [] { return omega_cqsu2(); });
	return rep;
}

CheckReport roundtrip_suite(const SuiteOptions &)
{
	CheckReport rep("freealg:roundtrip");
	for (auto &name : builtin_names()) {
		std::string id = "roundtrip." + name;
		std::string anchor = "re-emitted " + name + " presents the same algebra";
		rep.guard(id, anchor, [&] {
			auto p = builtin(name);
			auto again = load_presentation(emit_presentation(*p), name + " (emitted)",
			                               [](const std::string &b) { return builtin(b); });
			std::vector<Residual> diff;
			same_ideal(*p, *again, diff);
			if (!(p->alphabet().sigma == again->alphabet().sigma))
				diff.push_back({"sigma", NcPoly(1)});
			rep.expect_zero(id, anchor, *p, diff);
		});
	}
	return rep;
}

// ---------------------------------------------------------------------------
// rmatrix

CheckReport ybe_suite(const SuiteOptions &opt)
{
	CheckReport rep = rmatrix_suite(chosen_r(opt));
	return rep;
}

CheckReport frt_suite(const SuiteOptions &opt)
{
	CheckReport rep("rmatrix:frt");
	RMatrix r = chosen_r(opt);
	bool standard = is_standard(r);
	rep.guard("frt.confluent", "FRT relations R t1 t2 = t2 t1 R orient to a confluent system", [&] {
		auto frt = frt_relations(r, standard);
		rep.expect_zero("frt.confluent", "FRT relations R t1 t2 = t2 t1 R orient to a confluent system", *frt,
		                frt->check_local_confluence(4));
	});
	rep.guard("frt.counit", "t^a_b -> δ^a_b respects the FRT relations", [&] {
		auto frt = frt_relations(r, false);
		auto one = builtin("classical"); // any commutative target works for scalars
		GenMap img;
		for (int g = 0; g < frt->gen_count(); ++g) {
			auto nm = frt->alphabet().gens[g].name;
			img.push_back(NcPoly(Scalar(nm == "a" || nm == "d" ? 1 : 0)));
		}
		rep.expect_zero("frt.counit", "t^a_b -> δ^a_b respects the FRT relations", *frt,
		                hom_check(*frt, *one, img, false));
	});
	rep.guard("reflection.confluent", "reflection equation u2 R21 u1 R = R21 u1 R u2 orients to a confluent system", [&] {
		auto refl = reflection_relations(r);
		rep.expect_zero("reflection.confluent",
		                "reflection equation u2 R21 u1 R = R21 u1 R u2 orients to a confluent system", *refl,
		                refl->check_local_confluence(4));
	});
	if (!standard) {
		rep.skip("frt.matches-cqsu2", "FRT algebra of the standard R is C_q[SU2]", "not the standard R-matrix");
		rep.skip("reflection.matches-bqm2", "reflection algebra of the standard R is B_q[M2]", "not the standard R-matrix");
		return rep;
	}
	rep.guard("frt.matches-cqsu2", "FRT algebra of the standard R is C_q[SU2]", [&] {
		std::vector<Residual> diff;
		auto frt = frt_relations(r, true);
		same_ideal(*frt, *builtin("cqsu2"), diff);
		rep.expect_zero("frt.matches-cqsu2", "FRT algebra of the standard R is C_q[SU2]", *frt, diff);
	});
	rep.guard("reflection.matches-bqm2", "reflection algebra of the standard R is B_q[M2]", [&] {
		std::vector<Residual> diff;
		auto refl = reflection_relations(r);
		same_ideal(*refl, *builtin("bqm2"), diff);
		rep.expect_zero("reflection.matches-bqm2", "reflection algebra of the standard R is B_q[M2]", *refl, diff);
	});
	rep.guard("reflection.qtrace-central", "q^-1 α + q δ is central in B_q[M2]", [&] {
		auto refl = reflection_relations(r);
		rep.expect_zero("reflection.qtrace-central", "q^-1 α + q δ is central in B_q[M2]", *refl,
		                refl->centrality_check(parse_element(*refl, "q^-1*α + q*δ")));
	});
	rep.guard("metric.q-trace", "u^2_2 / u^1_1 = q^2 so trace(e u) is the q-trace", [&] {
		ScalarMatrix u = u_matrix(r);
		Scalar ratio = u(1, 1) / u(0, 0);
		rep.expect("metric.q-trace", "u^2_2 / u^1_1 = q^2 so trace(e u) is the q-trace",
		           u.is_diagonal() && ratio == Scalar::q().pow(2), "ratio " + ratio.str());
	});
	return rep;
}

// ---------------------------------------------------------------------------
// spheres

CheckReport classical_suite(const SuiteOptions &) { return projector_suite(SphereKind::Classical); }
CheckReport fuzzy_suite(const SuiteOptions &) { return projector_suite(SphereKind::Fuzzy); }
CheckReport qsphere_suite(const SuiteOptions &) { return projector_suite(SphereKind::QSphere); }
CheckReport qfuzzy_suite(const SuiteOptions &) { return projector_suite(SphereKind::QFuzzy); }
CheckReport prop1(const SuiteOptions &) { return prop1_suite(); }
CheckReport prop3(const SuiteOptions &opt) { return prop3_suite({opt.t, false, false}); }
CheckReport prop4(const SuiteOptions &opt) { return prop4_suite({opt.t, false, false}); }
CheckReport localization(const SuiteOptions &) { return localization_suite(); }

CheckReport prop2(const SuiteOptions &opt)
{
	CheckReport rep("spheres:prop2");
	std::vector<std::string> names = {"standard", "twoparam"};
	if (opt.rmatrix != "standard" && opt.rmatrix != "twoparam")
		names.push_back(opt.rmatrix);
	for (auto &name : names) {
		std::string pre = "prop2." + name;
		RMatrix r = load_rmatrix_any(name);
		rep.guard(pre + ".admissible", "R obeys the braid relation and is of real type", [&] {
			bool ok = ybe_check(r) && real_type_check(r);
			rep.expect(pre + ".admissible", "R obeys the braid relation and is of real type", ok,
			           residual_text(ybe_residual(r)) + " " + residual_text(real_type_residual(r)));
		});
		BraidedSphere s;
		rep.guard(pre + ".confluent", "e^2 = e, e† = e, trace(e u) = 1 + λ is confluent to degree 4", [&] {
			s = braided_sphere_relations(r, Scalar::lambda());
			rep.expect_zero(pre + ".confluent", "e^2 = e, e† = e, trace(e u) = 1 + λ is confluent to degree 4",
			                *s.presentation, s.presentation->check_local_confluence(4));
		});
		if (!s.presentation)
			continue;
		rep.guard(pre + ".star-closed", "the sphere relations are closed under the star", [&] {
			auto &p = *s.presentation;
			rep.expect_zero(pre + ".star-closed", "the sphere relations are closed under the star", p,
			                hom_check(p, p, map_by_name(p, p)));
		});
		rep.guard(pre + ".trace-self-adjoint", "trace(e u) is fixed by the star", [&] {
			auto &f = *s.free_with_x;
			NcPoly tr = s.trace_before_elimination;
			rep.expect_zero(pre + ".trace-self-adjoint", "trace(e u) is fixed by the star", f,
			                f.normalize(f.star(tr) - tr));
		});
	}
	return rep;
}

// ---------------------------------------------------------------------------
// dga

CheckReport bqsu2_calculus(const SuiteOptions &opt)
{
	CheckReport rep("dga:bqsu2");
	auto pp = omega_bqsu2();
	auto &p = *pp;
	rep.guard("bqsu2.confluent", "calculus on B_q[SU2] is confluent", [&] {
		rep.expect_zero("bqsu2.confluent", "calculus on B_q[SU2] is confluent", p,
		                p.check_local_confluence(opt.max_degree));
	});
	rep.guard("bqsu2.d-det", "d(αδ - q^2 γβ) = 0", [&] {
		rep.expect_zero("bqsu2.d-det", "d(αδ - q^2 γβ) = 0", p, p.d(unreduced(p, "α*δ - q^2*γ*β")));
	});
	rep.guard("bqsu2.ec-ec-delta", "e_c^2 δ = 0 in both evaluation orders", [&] {
		NcPoly ec = p.gen("e_c"), D = p.gen("δ");
		rep.expect_zero("bqsu2.ec-ec-delta", "e_c^2 δ = 0 in both evaluation orders", p,
		                std::vector<Residual>{{"e_c (e_c δ)", p.normalize(ec * p.normalize(ec * D))},
		                                      {"(e_c e_c) δ", p.normalize(p.normalize(ec * ec) * D)}});
	});
	rep.guard("bqsu2.d-generators", "d(α; γ) = μ^-1((q - 1)(α; γ)(e_a - q^-1 e_d) + μ(β; δ) e_b)", [&] {
		std::vector<Residual> res;
		for (auto [g, rhs] : {std::pair{"α", "μ^-1*((q - 1)*α*(e_a - q^-1*e_d) + μ*β*e_b)"},
		                      std::pair{"γ", "μ^-1*((q - 1)*γ*(e_a - q^-1*e_d) + μ*δ*e_b)"}})
			res.push_back({std::string("d") + g, p.normalize(p.d(p.gen(g)) - parse_element(p, rhs))});
		rep.expect_zero("bqsu2.d-generators", "d(α; γ) = μ^-1((q - 1)(α; γ)(e_a - q^-1 e_d) + μ(β; δ) e_b)", p, res);
	});
	rep.guard("bqsu2.d-squared", "d^2 = 0 on generators", [&] {
		rep.expect_zero("bqsu2.d-squared", "d^2 = 0 on generators", p, d_squared_check(p));
	});
	rep.guard("bqsu2.leibniz", "graded Leibniz rule on 60 random monomials of length <= 3", [&] {
		rep.expect_zero("bqsu2.leibniz", "graded Leibniz rule on 60 random monomials of length <= 3", p,
		                leibniz_check(p, 60, opt.seed, 3));
	});
	return rep;
}

CheckReport cqsu2_calculus(const SuiteOptions &opt)
{
	CheckReport rep("dga:cqsu2");
	auto pp = omega_cqsu2();
	auto &p = *pp;
	rep.guard("cqsu2.confluent", "calculus on C_q[SU2] is confluent", [&] {
		rep.expect_zero("cqsu2.confluent", "calculus on C_q[SU2] is confluent", p,
		                p.check_local_confluence(opt.max_degree));
	});
	rep.guard("cqsu2.d-det", "d(ad - q^-1 bc) = 0", [&] {
		rep.expect_zero("cqsu2.d-det", "d(ad - q^-1 bc) = 0", p, p.d(unreduced(p, "a*d - q^-1*b*c")));
	});
	rep.guard("cqsu2.dt", "d t^a_b = μ^-1 (t^a_c (R21 R)^c_b^α_β e_α^β - t^a_b θ)", [&] {
		RMatrix q = r21_r(RMatrix::standard(Normalization::QuantumGroup));
		GenMatrix t = named_matrix(p, frt_names(2)), e = form_matrix(p);
		NcPoly theta = p.gen("e_a") + p.gen("e_d");
		std::vector<Residual> res;
		for (int a = 0; a < 2; ++a)
			for (int b = 0; b < 2; ++b) {
				NcPoly rhs = Scalar(-1) * (t[a][b] * theta);
				for (int c = 0; c < 2; ++c)
					for (int al = 0; al < 2; ++al)
						for (int be = 0; be < 2; ++be)
							rhs += q.at(c, b, al, be) * (t[a][c] * e[al][be]);
				res.push_back({"d" + p.str(t[a][b]), p.normalize(p.d(t[a][b]) - Scalar::mu().inverse() * rhs)});
			}
		rep.expect_zero("cqsu2.dt", "d t^a_b = μ^-1 (t^a_c (R21 R)^c_b^α_β e_α^β - t^a_b θ)", p, res);
	});
	rep.guard("cqsu2.d-squared", "d^2 = 0 on generators", [&] {
		rep.expect_zero("cqsu2.d-squared", "d^2 = 0 on generators", p, d_squared_check(p));
	});
	rep.guard("cqsu2.leibniz", "graded Leibniz rule on 60 random monomials of length <= 3", [&] {
		rep.expect_zero("cqsu2.leibniz", "graded Leibniz rule on 60 random monomials of length <= 3", p,
		                leibniz_check(p, 60, opt.seed, 3));
	});
	return rep;
}

CheckReport eq9_suite(const SuiteOptions &opt)
{
	CheckReport rep("dga:eq9-crosscheck");
	RMatrix r = chosen_r(opt);
	Normalization norm = opt.normalization.value_or(Normalization::QuantumGroup);
	if (norm == Normalization::QuantumGroup)
		r = r.to_quantum_group();
	else if (r.normalization() != norm)
		throw std::invalid_argument("cannot convert " + r.name() + " to " + normalization_name(norm));
	auto hand = omega_bqsu2(opt.inverted_bracket ? BracketConvention::Inverted : BracketConvention::Standard);
	const std::string anchor = "braided bimodule formula and the hand relations generate the same ideal";
	rep.guard("eq9.ideal", anchor, [&] { rep.expect_zero("eq9.ideal", anchor, *hand, eq9_crosscheck(r, *hand)); });
	rep.guard("eq9.inner", "tracing α = β gives θ = e_a + e_d with the same d", [&] {
		auto g = omega_eq9(r);
		std::vector<Residual> res;
		for (auto name : {"α", "β", "γ", "δ"})
			res.push_back({std::string("d") + name, g->normalize(g->d(g->gen(name)) -
			                                                      apply_map(*hand, *g, map_by_name(*hand, *g),
			                                                                hand->d(hand->gen(name))))});
		rep.expect_zero("eq9.inner", "tracing α = β gives θ = e_a + e_d with the same d", *g, res);
	});
	return rep;
}

CheckReport uqsu2_calculus(const SuiteOptions &opt)
{
	CheckReport rep("dga:uqsu2");
	auto u = omega_uqsu2();
	auto b = omega_bqsu2();
	rep.guard("uqsu2.confluent", "localized calculus is confluent", [&] {
		rep.expect_zero("uqsu2.confluent", "localized calculus is confluent", *u,
		                u->check_local_confluence(opt.max_degree));
	});
	rep.guard("uqsu2.localization", "every B_q[SU2] calculus relation maps to zero under α = K^2, β, γ, δ", [&] {
		rep.expect_zero("uqsu2.localization", "every B_q[SU2] calculus relation maps to zero under α = K^2, β, γ, δ",
		                *u, hom_check(*b, *u, localization_map(*b, *u, localization_coefficient()), false));
	});
	rep.guard("uqsu2.dK", "dK K = (1 + λ̂) K dK + λ̂ K^2 θ with λ̂ = q^1/2 (1 - q^-1/2)^2", [&] {
		NcPoly K = u->gen("K"), theta = u->gen("e_a") + u->gen("e_d");
		Scalar lh = lambda_hat();
		bool form = lh == parse_scalar("q^(1/2)*(1 - q^(-1/2))^2");
		NcPoly r = u->normalize(u->d(K) * K - (Scalar(1) + lh) * (K * u->d(K)) - lh * (K * K * theta));
		if (!form)
			r += NcPoly(1);
		rep.expect_zero("uqsu2.dK", "dK K = (1 + λ̂) K dK + λ̂ K^2 θ with λ̂ = q^1/2 (1 - q^-1/2)^2", *u, r);
	});
	rep.guard("uqsu2.d-squared", "d^2 = 0 on generators", [&] {
		rep.expect_zero("uqsu2.d-squared", "d^2 = 0 on generators", *u, d_squared_check(*u));
	});
	rep.guard("uqsu2.leibniz", "graded Leibniz rule on 60 random monomials of length <= 3", [&] {
		rep.expect_zero("uqsu2.leibniz", "graded Leibniz rule on 60 random monomials of length <= 3", *u,
		                leibniz_check(*u, 60, opt.seed, 3));
	});
	return rep;
}

CheckReport qfuzzy_calculus(const SuiteOptions &opt)
{
	CheckReport rep("dga:qfuzzy");
	auto b = omega_bqsu2();
	Scalar t = opt.t.value_or(Scalar::t()), q = Scalar::q();
	NcPoly tr = parse_element(*b, "q^-1*α + q*δ");
	NcPoly rhs = parse_element(*b, "q^-1*(1 + q^-1)*(α*e_d + δ*e_a - q^-1*β*e_b - q*γ*e_c)");
	NcPoly theta = b->gen("e_a") + b->gen("e_d");
	rep.guard("qfuzzy.d-trace", "d Tr_q(u) = q^2/(q + 1) (Tr_q(u) θ - q^-1(1 + q^-1)(α e_d + δ e_a - q^-1 β e_b - q γ e_c))", [&] {
		rep.expect_zero("qfuzzy.d-trace",
		                "d Tr_q(u) = q^2/(q + 1) (Tr_q(u) θ - q^-1(1 + q^-1)(α e_d + δ e_a - q^-1 β e_b - q γ e_c))",
		                *b, b->normalize(b->d(tr) - (q * q / (q + Scalar(1))) * (tr * theta - rhs)));
	});
	rep.guard("qfuzzy.constraint-nonzero", "the θ constraint is a nonzero 1-form before the quotient", [&] {
		NcPoly c = b->normalize(prop7_constraint(*b, t));
		bool match = c == b->normalize((t + t.inverse()) * theta - rhs);
		rep.expect("qfuzzy.constraint-nonzero", "the θ constraint is a nonzero 1-form before the quotient",
		           !c.is_zero() && match, b->str(c));
	});
	rep.guard("qfuzzy.quotient", "with Tr_q(u) = t + 1/t and the constraint, d Tr_q(u) = 0", [&] {
		auto f = omega_qfuzzy(t);
		std::vector<Residual> res = {{"Tr_q(u) - (t + 1/t)", f->normalize(tr) - NcPoly(t + t.inverse())},
		                             {"constraint", f->normalize(prop7_constraint(*b, t))},
		                             {"d Tr_q(u)", f->d(tr)}};
		rep.expect_zero("qfuzzy.quotient", "with Tr_q(u) = t + 1/t and the constraint, d Tr_q(u) = 0", *f, res);
	});
	return rep;
}

// ---------------------------------------------------------------------------
// hopf, bicross

RMatrix hopf_r(const SuiteOptions &opt) { return chosen_r(opt).to_quantum_group(); }
CheckReport hopf_structure(const SuiteOptions &opt) { return hopf_structure_suite(hopf_r(opt)); }
CheckReport hopf_transmutation(const SuiteOptions &opt) { return transmutation_suite(hopf_r(opt)); }
CheckReport hopf_calculus(const SuiteOptions &opt) { return cotwist_suite(hopf_r(opt), opt.seed); }
CheckReport bicross_dga(const SuiteOptions &) { return bicross_dga_suite(); }
CheckReport bicross_limit(const SuiteOptions &) { return bicross_limit_suite(); }
CheckReport bicross_partials(const SuiteOptions &opt) { return bicross_partials_suite(opt.seed); }
CheckReport bicross_laplacian(const SuiteOptions &opt) { return bicross_laplacian_suite(opt.table, opt.seed); }

// ---------------------------------------------------------------------------
// negative controls

RMatrix broken_ybe()
{
	RMatrix r = RMatrix::standard();
	r.at(0, 1, 1, 0) = Scalar::q();
	r.set_name("standard with R^1_2^2_1 = q");
	return r;
}

CheckReport controls_suite(const SuiteOptions &)
{
	CheckReport rep("robustness:controls");
	auto expect_failure = [&](const std::string &id, const std::string &anchor, const CheckReport &r) {
		std::string first;
		for (auto &c : r.claims())
			if (c.status == ClaimStatus::Fail && first.empty())
				first = c.id + ": " + c.residual.substr(0, 160);
		rep.expect(id, anchor, !r.ok(), "the perturbed input passed " + r.suite());
		if (!r.ok())
			rep.pass(id + ".detail", "failure recorded by " + r.suite(), first);
	};
	rep.guard("control.broken-ybe", "R with R^1_2^2_1 replaced by q fails the braid relation", [&] {
		expect_failure("control.broken-ybe", "R with R^1_2^2_1 replaced by q fails the braid relation",
		               rmatrix_suite(broken_ybe()));
	});
	rep.guard("control.hecke", "the bimodule cross-check fails under Hecke normalization", [&] {
		SuiteOptions o;
		o.normalization = Normalization::Hecke;
		expect_failure("control.hecke", "the bimodule cross-check fails under Hecke normalization", eq9_suite(o));
	});
	rep.guard("control.bracket", "the bimodule cross-check fails with [x, y]_p = x y - p^-1 y x", [&] {
		SuiteOptions o;
		o.inverted_bracket = true;
		expect_failure("control.bracket", "the bimodule cross-check fails with [x, y]_p = x y - p^-1 y x",
		               eq9_suite(o));
	});
	rep.guard("control.hecke-calculus", "the C_q[SU2] calculus with Hecke normalized R is not confluent", [&] {
		auto p = omega_cqsu2(RMatrix::standard());
		rep.expect("control.hecke-calculus", "the C_q[SU2] calculus with Hecke normalized R is not confluent",
		           !p->check_local_confluence(3).empty());
	});
	return rep;
}

const std::vector<Entry> &entries()
{
	static const std::vector<Entry> list = {
	    {{"freealg:confluence", "every shipped presentation is locally confluent"}, confluence_suite},
	    {{"freealg:roundtrip", "shipped presentations survive emit and reload"}, roundtrip_suite},
	    {{"rmatrix:ybe", "braid relation, real type and second inverse of --rmatrix"}, ybe_suite},
	    {{"rmatrix:frt", "FRT and reflection-equation algebras"}, frt_suite},
	    {{"spheres:classical", "commutative sphere projector"}, classical_suite},
	    {{"spheres:fuzzy", "fuzzy sphere projector"}, fuzzy_suite},
	    {{"spheres:qsphere", "standard q-sphere projector"}, qsphere_suite},
	    {{"spheres:qfuzzy", "q-fuzzy sphere projector"}, qfuzzy_suite},
	    {{"spheres:prop1", "identifications of the q-fuzzy sphere", true}, prop1},
	    {{"spheres:prop2", "braided spheres from R-matrices"}, prop2},
	    {{"spheres:prop3", "Casimir quotient of U_q(su2) and the Podleś patch"}, prop3},
	    {{"spheres:prop4", "time slice of B_q[SU2]"}, prop4},
	    {{"spheres:localization", "x₊x₋ coefficient of the localization map"}, localization},
	    {{"dga:bqsu2", "calculus on B_q[SU2]"}, bqsu2_calculus},
	    {{"dga:cqsu2", "calculus on C_q[SU2]"}, cqsu2_calculus},
	    {{"dga:eq9-crosscheck", "braided bimodule formula against the hand relations"}, eq9_suite},
	    {{"dga:uqsu2", "localized calculus on U_q(su2)"}, uqsu2_calculus},
	    {{"dga:qfuzzy", "3D calculus on the q-fuzzy sphere"}, qfuzzy_calculus},
	    {{"hopf:structure", "coquasitriangular Hopf structure on the FRT algebra"}, hopf_structure},
	    {{"hopf:transmutation", "transmuted product gives braided matrices"}, hopf_transmutation},
	    {{"hopf:calculus", "Maurer-Cartan form, Θ and the cotwisted calculus"}, hopf_calculus},
	    {{"bicross:dga", "calculus on the bicrossproduct spacetime"}, bicross_dga},
	    {{"bicross:limit", "scaling limit of the C_q[SU2] calculus", true}, bicross_limit},
	    {{"bicross:partials", "normal-ordered partial derivatives"}, bicross_partials},
	    {{"bicross:laplacian", "plane-wave Laplacian eigenvalue"}, bicross_laplacian},
	    {{"robustness:controls", "perturbed inputs are rejected"}, controls_suite},
	};
	return list;
}

} // namespace

CheckReport rmatrix_suite(const RMatrix &r)
{
	CheckReport rep("rmatrix:ybe");
	std::string who = r.name().empty() ? "R" : r.name();
	rep.guard("rmatrix.ybe", "R12 R13 R23 = R23 R13 R12 for " + who, [&] {
		auto res = ybe_residual(r);
		rep.expect("rmatrix.ybe", "R12 R13 R23 = R23 R13 R12 for " + who, res.empty(), residual_text(res));
	});
	rep.guard("rmatrix.real-type", "conj R^i_j^k_l = R^l_k^j_i for " + who, [&] {
		auto res = real_type_residual(r);
		rep.expect("rmatrix.real-type", "conj R^i_j^k_l = R^l_k^j_i for " + who, res.empty(), residual_text(res));
	});
	rep.guard("rmatrix.second-inverse", "second inverse satisfies its contraction identities", [&] {
		auto res = second_inverse_residual(r, second_inverse(r));
		rep.expect("rmatrix.second-inverse", "second inverse satisfies its contraction identities", res.empty(),
		           residual_text(res));
	});
	return rep;
}

const std::vector<SuiteInfo> &suite_list()
{
	static const std::vector<SuiteInfo> infos = [] {
		std::vector<SuiteInfo> v;
		for (auto &e : entries())
			v.push_back(e.info);
		return v;
	}();
	return infos;
}

std::vector<std::string> expand_suites(const std::string &pattern)
{
	std::vector<std::string> out;
	for (auto &e : entries())
		if (pattern == "all" || e.info.name == pattern || (pattern.ends_with(':') && e.info.name.starts_with(pattern)))
			out.push_back(e.info.name);
	if (out.empty())
		throw UnknownSuite("unknown suite: " + pattern);
	return out;
}

mpq_class sqrt_rational(const mpq_class &q)
{
	if (sgn(q) <= 0)
		throw std::invalid_argument("q must be positive, got " + q.get_str());
	mpz_class n = sqrt(mpz_class(q.get_num())), d = sqrt(mpz_class(q.get_den()));
	if (n * n != q.get_num() || d * d != q.get_den())
		throw std::invalid_argument("q = " + q.get_str() + " is not the square of a rational, so q^(1/2) is not rational");
	mpq_class r(n, d);
	r.canonicalize();
	return r;
}

CheckReport run_suite(const std::string &name, const SuiteOptions &opt)
{
	auto it = std::find_if(entries().begin(), entries().end(), [&](const Entry &e) { return e.info.name == name; });
	if (it == entries().end())
		throw UnknownSuite("unknown suite: " + name);
	auto start = std::chrono::steady_clock::now();
	CheckReport rep;
	if (opt.q_at && it->info.symbolic_q) {
		rep = it->run(opt);
		rep.skip("options.q-at", "q kept symbolic", "this suite takes a limit in q or needs it free; ran symbolically");
	} else if (opt.q_at) {
		ScalarAssignment at{{variable_index("qh", true), Scalar(GaussRat(sqrt_rational(*opt.q_at)))}};
		ScopedSpecialization scope(at);
		rep = it->run(opt);
	} else {
		rep = it->run(opt);
	}
	rep.set_elapsed_ms(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
	return rep;
}

std::vector<CheckReport> run_suites(const std::vector<std::string> &names, const SuiteOptions &opt, int jobs)
{
	for (auto &n : names)
		if (std::none_of(entries().begin(), entries().end(), [&](const Entry &e) { return e.info.name == n; }))
			throw UnknownSuite("unknown suite: " + n);
	if (jobs <= 0)
		jobs = std::max(1u, std::thread::hardware_concurrency());
	std::vector<CheckReport> out(names.size());
	std::atomic<size_t> next{0};
	auto work = [&] {
		for (size_t j; (j = next++) < names.size();) {
			try {
				out[j] = run_suite(names[j], opt);
			} catch (const std::exception &e) {
				out[j] = CheckReport(names[j]);
				out[j].fail("suite.error", "suite ran to completion", e.what());
			}
		}
	};
	std::vector<std::thread> pool;
	for (int k = 0; k < std::min<int>(jobs, static_cast<int>(names.size())); ++k)
		pool.emplace_back(work);
	for (auto &t : pool)
		t.join();
	std::sort(out.begin(), out.end(), [](const CheckReport &a, const CheckReport &b) { return a.suite() < b.suite(); });
	return out;
}

} // namespace qcalc
