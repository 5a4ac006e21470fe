#include "qcalc/spheres.hpp"

#include <stdexcept>

#include "qcalc/dga.hpp"
#include "qcalc/expr.hpp"
#include "qcalc/library.hpp"

namespace qcalc {

namespace {

Scalar with_lambda(const Scalar &x, const Scalar &lam) { return x.substitute({{variable_index("λ"), lam}}); }

PresentationPtr lambda_at(const PresentationPtr &p, const Scalar &lam)
{
	return p->map_scalars([&](const Scalar &x) { return with_lambda(x, lam); });
}

PresentationPtr q_at_one(const PresentationPtr &p)
{
	return p->map_scalars([](const Scalar &x) { return x.specialize({{0, GaussRat(1)}}); });
}

GenMap images_by_name(const Presentation &source, const std::map<std::string, NcPoly> &img)
{
	GenMap out;
	for (auto &g : source.alphabet().gens) {
		auto it = img.find(g.name);
		if (it == img.end())
			throw AlphabetError("no image for '" + g.name + "' from " + source.name());
		out.push_back(it->second);
	}
	return out;
}

// g(f(x)) - x on the generators of a.
std::vector<Residual> composite_residual(const Presentation &a, const Presentation &b, const GenMap &f, const GenMap &g)
{
	std::vector<Residual> out;
	for (int k = 0; k < a.gen_count(); ++k) {
		NcPoly x = apply_map(b, a, g, f[k]) - NcPoly::gen(k);
		out.push_back({a.alphabet().gens[k].name, a.normalize(x)});
	}
	return out;
}

// hom_check both ways plus both composites.
void isomorphism_claims(CheckReport &rep, const std::string &id, const std::string &anchor, const Presentation &a,
                        const Presentation &b, const GenMap &f, const GenMap &g)
{
	rep.guard(id + ".forward", anchor, [&] {
		rep.expect_zero(id + ".forward", anchor + ": " + a.name() + " -> " + b.name(), b, hom_check(a, b, f));
	});
	rep.guard(id + ".backward", anchor, [&] {
		rep.expect_zero(id + ".backward", anchor + ": " + b.name() + " -> " + a.name(), a, hom_check(b, a, g));
	});
	rep.guard(id + ".composite", anchor, [&] {
		auto r1 = composite_residual(a, b, f, g), r2 = composite_residual(b, a, g, f);
		r1.insert(r1.end(), r2.begin(), r2.end());
		rep.expect_zero(id + ".composite", anchor + ": both composites are the identity on generators", a, r1);
	});
}

} // namespace

std::string sphere_kind_name(SphereKind k)
{
	switch (k) {
	case SphereKind::Classical: return "classical";
	case SphereKind::Fuzzy: return "fuzzy";
	case SphereKind::QSphere: return "qsphere";
	default: return "qfuzzy";
	}
}

// ---------------------------------------------------------------------------
// projectors

ProjectorMatrix build_projector(SphereKind kind, const std::optional<Scalar> &lambda)
{
	ProjectorMatrix out;
	Scalar q2 = Scalar::q().pow(2);
	bool has_lambda = kind == SphereKind::Fuzzy || kind == SphereKind::QFuzzy;
	out.lambda = has_lambda ? lambda.value_or(Scalar::lambda()) : Scalar(0);
	out.algebra = builtin(sphere_kind_name(kind));
	if (has_lambda && lambda)
		out.algebra = lambda_at(out.algebra, *lambda);
	bool q_trace = kind == SphereKind::QSphere || kind == SphereKind::QFuzzy;
	out.trace_weight[0] = Scalar(1);
	out.trace_weight[1] = q_trace ? q2 : Scalar(1);
	out.trace_target = Scalar(1) + out.lambda;

	const Presentation &p = *out.algebra;
	NcPoly a = p.gen("a"), b = p.gen("b"), bs = p.gen("b†");
	NcPoly corner = NcPoly(Scalar(1) + out.lambda) - out.trace_weight[1] * a;
	out.e = {{corner, b}, {bs, a}};
	return out;
}

ProjectorResiduals projector_residuals(const ProjectorMatrix &m)
{
	ProjectorResiduals r;
	const Presentation &p = *m.algebra;
	const GenMatrix &e = m.e;
	const char *ix = "12";
	for (int i = 0; i < 2; ++i)
		for (int j = 0; j < 2; ++j) {
			std::string at = std::string("[") + ix[i] + "," + ix[j] + "]";
			NcPoly sq = e[i][0] * e[0][j] + e[i][1] * e[1][j] - e[i][j];
			r.idempotent.push_back({"(e^2 - e)" + at, p.normalize(sq)});
			r.self_adjoint.push_back({"(e† - e)" + at, p.normalize(p.star(e[j][i]) - e[i][j])});
		}
	NcPoly tr = m.trace_weight[0] * e[0][0] + m.trace_weight[1] * e[1][1] - NcPoly(m.trace_target);
	r.trace.push_back({"trace - (1 + λ)", p.normalize(tr)});
	return r;
}

// ---------------------------------------------------------------------------
// Podleś, Casimir quotient, slice

Scalar substitute_s_squared(const Scalar &x, const Scalar &square)
{
	int s = variable_index("s");
	if (x.den().contains(s))
		throw std::invalid_argument("s appears in a denominator: " + x.str());
	Scalar out;
	for (int k = 0; k <= x.degree(s); ++k) {
		Scalar c = x.coefficient(s, k);
		if (c.is_zero())
			continue;
		if (k % 2)
			throw std::invalid_argument("odd power of s in " + x.str());
		out += c * square.pow(k / 2);
	}
	return out;
}

PresentationPtr podles_at(const Scalar &s_squared)
{
	auto p = builtin("podles")->map_scalars([&](const Scalar &x) { return substitute_s_squared(x, s_squared); });
	return p;
}

PresentationPtr podles_patch(const Scalar &s_squared)
{
	PresentationBuilder b(*podles_at(s_squared), "podles-patch");
	int x = b.alphabet().find("x");
	int xi = b.add_generator("x^-1", 0, {"xinv"});
	b.set_star(xi, xi);
	b.add_inverse(x, xi);
	return b.build();
}

NcPoly casimir(const Presentation &uq)
{
	Scalar q = Scalar::q(), qi = q.inverse(), k = q - qi;
	NcPoly K = uq.gen("K"), Ki = uq.gen("K^-1");
	return uq.normalize(qi * (K * K) + q * (Ki * Ki) + (k * k) * (uq.gen("x₊") * uq.gen("x₋")));
}

PresentationPtr uqsu2_casimir_quotient(const Scalar &value)
{
	auto uq = builtin("uqsu2");
	PresentationBuilder b(*uq, "uqsu2/(c_q = " + value.str() + ")");
	b.add_relation(casimir(*uq) - NcPoly(value));
	return b.build();
}

PresentationPtr bqsu2_slice(const Scalar &t)
{
	auto base = builtin("bqsu2");
	Scalar q = Scalar::q();
	PresentationBuilder b(*base, "bqsu2/(Tr_q u = t + 1/t)");
	b.add_relation(q.inverse() * b.gen("α") + q * b.gen("δ") - NcPoly(t + t.inverse()));
	return b.build();
}

Scalar slice_lambda(const Scalar &t)
{
	Scalar t2 = t * t;
	return t2 * (Scalar(1) - Scalar::q().pow(2)) / (Scalar(1) - t2);
}

LocalizationResult solve_localization()
{
	LocalizationResult out;
	PresentationBuilder b(*builtin("bqsu2"), "bqsu2[α^-1]");
	int al = b.alphabet().find("α");
	int ai = b.add_generator("α^-1", 0, {"alphainv"});
	b.set_star(ai, ai);
	b.add_inverse(al, ai);
	out.source = b.build();
	auto uq = builtin("uqsu2");
	Scalar kappa = Scalar::named("κ");
	int kv = variable_index("κ");
	auto images = [&](const Scalar &c) {
		Scalar nu = Scalar::qh().inverse() * (Scalar::q() - Scalar::q().inverse());
		NcPoly K = uq->gen("K"), Ki = uq->gen("K^-1");
		return images_by_name(*out.source, {{"α", K * K},
		                                    {"α^-1", Ki * Ki},
		                                    {"β", nu * (K * uq->gen("x₋"))},
		                                    {"γ", nu * (uq->gen("x₊") * K)},
		                                    {"δ", Ki * Ki + c * (uq->gen("x₊") * uq->gen("x₋"))}});
	};
	const Presentation &src = *out.source;
	NcPoly det = src.gen("α") * src.gen("δ") - Scalar::q().pow(2) * (src.gen("γ") * src.gen("β"));
	NcPoly r = apply_map(src, *uq, images(kappa), det) - NcPoly(1);
	std::optional<Scalar> c;
	for (auto &[w, coef] : r.terms()) {
		if (coef.den().contains(kv) || coef.degree(kv) > 1)
			return out;
		Scalar lin = coef.coefficient(kv, 1), con = coef.coefficient(kv, 0);
		if (!lin.is_zero()) {
			c = -con / lin;
			break;
		}
	}
	if (!c)
		return out;
	NcPoly check = r.map_scalars([&](const Scalar &x) { return x.substitute({{kv, *c}}); });
	if (!check.is_zero())
		return out;
	out.c = c;
	out.images = images(*c);
	return out;
}

// ---------------------------------------------------------------------------
// suites

CheckReport projector_suite(SphereKind kind)
{
	std::string name = sphere_kind_name(kind);
	CheckReport rep("spheres:" + name);
	static const char *what[] = {"commutative sphere projector", "fuzzy sphere projector, trace(e) = 1 + λ",
	                             "standard q-sphere projector, trace_q(e) = 1", "q-fuzzy projector, trace_q(e) = 1 + λ"};
	std::string anchor = what[static_cast<int>(kind)];
	ProjectorMatrix e;
	try {
		e = build_projector(kind);
	} catch (const std::exception &ex) {
		rep.fail(name + ".build", anchor, ex.what());
		return rep;
	}
	rep.guard(name + ".projector", anchor, [&] {
		auto r = projector_residuals(e);
		rep.expect_zero(name + ".idempotent", anchor + ": e^2 = e", *e.algebra, r.idempotent);
		rep.expect_zero(name + ".self-adjoint", anchor + ": e† = e", *e.algebra, r.self_adjoint);
		rep.expect_zero(name + ".trace", anchor + ": trace condition", *e.algebra, r.trace);
	});
	if (kind == SphereKind::Fuzzy) {
		rep.guard("fuzzy.lambda-zero", "fuzzy sphere at λ = 0 is the commutative sphere", [&] {
			auto f0 = build_projector(SphereKind::Fuzzy, Scalar(0));
			auto cl = build_projector(SphereKind::Classical);
			GenMap f = map_by_name(*f0.algebra, *cl.algebra), g = map_by_name(*cl.algebra, *f0.algebra);
			isomorphism_claims(rep, "fuzzy.lambda-zero", "fuzzy sphere at λ = 0 is the commutative sphere",
			                   *f0.algebra, *cl.algebra, f, g);
			std::vector<Residual> diff;
			for (int i = 0; i < 2; ++i)
				for (int j = 0; j < 2; ++j)
					diff.push_back({"e" + std::to_string(i + 1) + std::to_string(j + 1),
					                apply_map(*f0.algebra, *cl.algebra, f, f0.e[i][j]) - cl.algebra->normalize(cl.e[i][j])});
			rep.expect_zero("fuzzy.lambda-zero.matrix", "λ = 0 fuzzy projector equals the commutative one",
			                *cl.algebra, diff);
		});
	}
	if (kind == SphereKind::QFuzzy) {
		rep.guard("qfuzzy.lambda-zero.matrix", "q-fuzzy projector at λ = 0 is the q-sphere projector", [&] {
			auto f0 = build_projector(SphereKind::QFuzzy, Scalar(0));
			auto qs = build_projector(SphereKind::QSphere);
			GenMap f = map_by_name(*f0.algebra, *qs.algebra);
			std::vector<Residual> diff;
			for (int i = 0; i < 2; ++i)
				for (int j = 0; j < 2; ++j)
					diff.push_back({"e" + std::to_string(i + 1) + std::to_string(j + 1),
					                apply_map(*f0.algebra, *qs.algebra, f, f0.e[i][j]) - qs.algebra->normalize(qs.e[i][j])});
			rep.expect_zero("qfuzzy.lambda-zero.matrix", "q-fuzzy projector at λ = 0 is the q-sphere projector",
			                *qs.algebra, diff);
		});
	}
	return rep;
}

CheckReport pauli_form_check()
{
	CheckReport rep("spheres:pauli");
	const std::string anchor = "fuzzy projector as (1 + λ)/2 - σ·x";
	// Pauli matrices
	Scalar I = Scalar::i();
	ScalarMatrix s[3] = {ScalarMatrix(2), ScalarMatrix(2), ScalarMatrix(2)};
	s[0](0, 1) = Scalar(1);
	s[0](1, 0) = Scalar(1);
	s[1](0, 1) = -I;
	s[1](1, 0) = I;
	s[2](0, 0) = Scalar(1);
	s[2](1, 1) = Scalar(-1);
	{
		std::string bad;
		for (int i = 0; i < 3; ++i)
			for (int j = 0; j < 3; ++j) {
				ScalarMatrix rhs = i == j ? ScalarMatrix::identity(2) : ScalarMatrix(2);
				for (int k = 0; k < 3; ++k) {
					int eps = (i == j || j == k || i == k) ? 0 : (((j - i + 3) % 3 == 1) ? 1 : -1);
					if (eps)
						for (int r = 0; r < 2; ++r)
							for (int c = 0; c < 2; ++c)
								rhs(r, c) += Scalar(eps) * I * s[k](r, c);
				}
				if (!(s[i] * s[j] - rhs).is_zero())
					bad += "σ" + std::to_string(i + 1) + "σ" + std::to_string(j + 1) + " ";
			}
		rep.expect("pauli.sigma-algebra", "σ_i σ_j = δ_ij + i ε_ijk σ_k", bad.empty(), bad);
	}

	rep.guard("pauli.matrix", anchor, [&] {
		auto cart = builtin("fuzzy_cartesian");
		Scalar half = Scalar::rational(1, 2), c = half * (Scalar(1) + Scalar::lambda());
		NcPoly x[3] = {cart->gen("x1"), cart->gen("x2"), cart->gen("x3")};
		GenMatrix e(2, std::vector<NcPoly>(2));
		for (int r = 0; r < 2; ++r)
			for (int col = 0; col < 2; ++col) {
				NcPoly v = r == col ? NcPoly(c) : NcPoly();
				for (int k = 0; k < 3; ++k)
					v -= s[k](r, col) * x[k];
				e[r][col] = v;
			}
		auto fz = build_projector(SphereKind::Fuzzy);
		GenMap f = images_by_name(*fz.algebra, {{"a", x[2] + NcPoly(c)}, {"b", -x[0] + I * x[1]}, {"b†", -x[0] - I * x[1]}});
		rep.expect_zero("pauli.coordinates", "a = x3 + (1 + λ)/2, b = -x1 + i x2 is a *-homomorphism", *cart,
		                hom_check(*fz.algebra, *cart, f));
		std::vector<Residual> diff;
		for (int i = 0; i < 2; ++i)
			for (int j = 0; j < 2; ++j)
				diff.push_back({"e" + std::to_string(i + 1) + std::to_string(j + 1),
				                apply_map(*fz.algebra, *cart, f, fz.e[i][j]) - cart->normalize(e[i][j])});
		rep.expect_zero("pauli.matrix", anchor + " equals the fuzzy projector", *cart, diff);

		// e^2 - e over the commutation relations alone
		PresentationBuilder b("fuzzy R^3");
		for (auto n : {"x1", "x2", "x3"})
			b.add_generator(n);
		for (int k = 0; k < 3; ++k)
			b.set_star(k, k);
		EvalContext ctx;
		ctx.alphabet = &b.alphabet();
		for (auto rel : {"[x1, x2] = -i*λ*x3", "[x2, x3] = -i*λ*x1", "[x3, x1] = -i*λ*x2"})
			b.add_relation(parse_relation(rel, ctx));
		auto r3 = b.build();
		NcPoly y[3] = {r3->gen("x1"), r3->gen("x2"), r3->gen("x3")};
		NcPoly radius = y[0] * y[0] + y[1] * y[1] + y[2] * y[2] - NcPoly(Scalar::rational(1, 4) * (Scalar(1) - Scalar::lambda().pow(2)));
		GenMatrix e3(2, std::vector<NcPoly>(2));
		for (int r = 0; r < 2; ++r)
			for (int col = 0; col < 2; ++col) {
				NcPoly v = r == col ? NcPoly(c) : NcPoly();
				for (int k = 0; k < 3; ++k)
					v -= s[k](r, col) * y[k];
				e3[r][col] = v;
			}
		std::vector<Residual> res;
		for (int i = 0; i < 2; ++i)
			for (int j = 0; j < 2; ++j) {
				NcPoly sq = e3[i][0] * e3[0][j] + e3[i][1] * e3[1][j] - e3[i][j];
				NcPoly expect = i == j ? radius : NcPoly();
				res.push_back({"(e^2 - e)" + std::to_string(i + 1) + std::to_string(j + 1), r3->normalize(sq - expect)});
			}
		rep.expect_zero("pauli.radius", "e^2 - e = (Σ x_i^2 - (1 - λ^2)/4) times the identity", *r3, res);

		auto cart0 = lambda_at(cart, Scalar(0));
		NcPoly z[3] = {cart0->gen("x1"), cart0->gen("x2"), cart0->gen("x3")};
		rep.expect_zero("pauli.lambda-zero", "radius 1/2 sphere at λ = 0", *cart0,
		                cart0->normalize(z[0] * z[0] + z[1] * z[1] + z[2] * z[2] - NcPoly(Scalar::rational(1, 4))));
	});
	return rep;
}

CheckReport prop1_suite()
{
	CheckReport rep("spheres:prop1");
	auto qf = builtin("qfuzzy");
	Scalar q2 = Scalar::q().pow(2);
	Scalar lam = Scalar::lambda();

	rep.guard("prop1.part1", "q-fuzzy at q^2 = 1 is the fuzzy sphere", [&] {
		auto a = q_at_one(qf), b = builtin("fuzzy");
		isomorphism_claims(rep, "prop1.part1", "q-fuzzy at q^2 = 1 is the fuzzy sphere", *a, *b, map_by_name(*a, *b),
		                   map_by_name(*b, *a));
	});
	rep.guard("prop1.part2", "q-fuzzy at λ = 0 is the standard q-sphere", [&] {
		auto a = lambda_at(qf, Scalar(0)), b = builtin("qsphere");
		isomorphism_claims(rep, "prop1.part2", "q-fuzzy at λ = 0 is the standard q-sphere", *a, *b,
		                   map_by_name(*a, *b), map_by_name(*b, *a));
	});
	rep.guard("prop1.part2-top", "q-fuzzy at λ = q^2 - 1 is the q-sphere in a' = 1 - a", [&] {
		auto a = lambda_at(qf, q2 - Scalar(1)), b = builtin("qsphere");
		GenMap f = images_by_name(*a, {{"a", NcPoly(1) - b->gen("a")}, {"b", b->gen("b")}, {"b†", b->gen("b†")}});
		GenMap g = images_by_name(*b, {{"a", NcPoly(1) - a->gen("a")}, {"b", a->gen("b")}, {"b†", a->gen("b†")}});
		isomorphism_claims(rep, "prop1.part2-top", "q-fuzzy at λ = q^2 - 1 is the q-sphere in a' = 1 - a", *a, *b, f, g);
	});

	Scalar lp = lam / (q2 - Scalar(1));
	Scalar one = Scalar(1);
	Scalar s2 = lp / (one - lp);
	Scalar s2_alt = (one - lp) / lp;
	rep.guard("prop1.part3", "q-fuzzy is the Podleś sphere with s^2 = λ/(q^2 - 1 - λ)", [&] {
		rep.expect("prop1.part3.s2", "s^2 = λ'/(1 - λ') = λ/(q^2 - 1 - λ)", s2 == lam / (q2 - one - lam),
		           s2.str());
		auto pd = podles_at(s2);
		NcPoly x = pd->gen("x"), z = pd->gen("z"), zs = pd->gen("z†");
		NcPoly a = qf->gen("a"), b = qf->gen("b"), bs = qf->gen("b†");
		GenMap f = images_by_name(*qf, {{"a", (one - lp) * x + NcPoly(lp)}, {"b", (one - lp) * z}, {"b†", (one - lp) * zs}});
		Scalar inv = (one - lp).inverse();
		GenMap g = images_by_name(*pd, {{"x", inv * (a - NcPoly(lp))}, {"z", inv * b}, {"z†", inv * bs}});
		isomorphism_claims(rep, "prop1.part3", "b = (1 - λ')z, a = x(1 - λ') + λ'", *qf, *pd, f, g);
	});
	rep.guard("prop1.part3-alt", "other root: b = λ'z, a = λ'(1 - x), s^2 = (1 - λ')/λ'", [&] {
		auto pd = podles_at(s2_alt);
		NcPoly x = pd->gen("x"), z = pd->gen("z"), zs = pd->gen("z†");
		NcPoly a = qf->gen("a"), b = qf->gen("b"), bs = qf->gen("b†");
		GenMap f = images_by_name(*qf, {{"a", lp * (NcPoly(1) - x)}, {"b", lp * z}, {"b†", lp * zs}});
		Scalar inv = lp.inverse();
		GenMap g = images_by_name(*pd, {{"x", NcPoly(1) - inv * a}, {"z", inv * b}, {"z†", inv * bs}});
		isomorphism_claims(rep, "prop1.part3-alt", "b = λ'z, a = λ'(1 - x)", *qf, *pd, f, g);
		rep.expect("prop1.part3-alt.inverse-s", "s^2 s'^2 = 1 for the two roots", s2 * s2_alt == one,
		           (s2 * s2_alt).str());
	});
	rep.guard("prop1.part4", "λ -> q^2 - 1 - λ with a -> 1 - a, b -> b", [&] {
		Scalar lam2 = q2 - one - lam;
		auto flipped = lambda_at(qf, lam2);
		GenMap f = images_by_name(*flipped, {{"a", NcPoly(1) - qf->gen("a")}, {"b", qf->gen("b")}, {"b†", qf->gen("b†")}});
		GenMap g = images_by_name(*qf, {{"a", NcPoly(1) - flipped->gen("a")}, {"b", flipped->gen("b")},
		                                {"b†", flipped->gen("b†")}});
		isomorphism_claims(rep, "prop1.part4", "q-fuzzy at q^2 - 1 - λ is q-fuzzy at λ via a -> 1 - a", *flipped, *qf,
		                   f, g);
		rep.expect("prop1.part4.involution", "λ -> q^2 - 1 - λ is an involution", with_lambda(lam2, lam2) == lam);
	});
	return rep;
}

CheckReport prop3_suite(const SphereOptions &opt)
{
	CheckReport rep("spheres:prop3");
	Scalar t = opt.t.value_or(Scalar::t());
	Scalar q = Scalar::q(), qi = q.inverse(), qh = Scalar::qh();
	Scalar one(1);
	auto uq = builtin("uqsu2");

	rep.guard("prop3.casimir-central", "c_q = K^2 q^-1 + q K^-2 + x₊x₋(q - q^-1)^2 is central", [&] {
		rep.expect_zero("prop3.casimir-central", "c_q commutes with every generator", *uq, uq->centrality_check(casimir(*uq)));
	});
	Scalar s2 = -(t * t);
	Scalar s = Scalar::i() * t;
	rep.expect("prop3.s-sign", "s = i t, so s^2 = -t^2 (not a real s)", s * s == s2, (s * s).str());

	auto run = [&](bool flip_mu, bool flip_nu, const std::string &id, bool main) {
		Scalar mu = qi * t, nu = qh * t * (q - qi);
		if (flip_mu)
			mu = -mu;
		if (flip_nu)
			nu = -nu;
		// the sign of μ fixes the sign of the Casimir value
		Scalar value = flip_mu ? -(t + t.inverse()) : t + t.inverse();
		auto quot = uqsu2_casimir_quotient(value);
		auto patch = podles_patch(s2);
		NcPoly K = quot->gen("K"), Ki = quot->gen("K^-1"), xm = quot->gen("x₋"), xp = quot->gen("x₊");
		GenMap f = images_by_name(*patch, {{"x", mu * (K * K)},
		                                   {"x^-1", mu.inverse() * (Ki * Ki)},
		                                   {"z", nu * (K * xm)},
		                                   {"z†", nu * (xp * K)}});
		std::string anchor = "Podleś patch into U_q(su2)/(c_q = " + value.str() + ")";
		rep.expect_zero(id, anchor, *quot, hom_check(*patch, *quot, f));
		if (!main)
			return;
		rep.expect("prop3.mu", "μ = q^-1 t solves μ^2 q^2 = t^2", (mu * q).pow(2) == t * t);
		rep.expect("prop3.nu", "ν = q^1/2 t (q - q^-1) solves ν^2 = q t^2 (q - q^-1)^2",
		           nu.pow(2) == q * t * t * (q - qi).pow(2));
		NcPoly zx = apply_map(*patch, *quot, f, patch->gen("z") * patch->gen("x") - q * q * (patch->gen("x") * patch->gen("z")));
		rep.expect_zero("prop3.zx", "z x - q^2 x z maps to zero", *quot, zx);
		NcPoly X = patch->gen("x");
		NcPoly zsz = apply_map(*patch, *quot, f, patch->gen("z†") * patch->gen("z"));
		NcPoly want = apply_map(*patch, *quot, f, (NcPoly(s2) + X) * (NcPoly(1) - X));
		rep.expect_zero("prop3.zstar-z", "z†z maps to (s^2 + x)(1 - x) with s^2 = -t^2", *quot, quot->normalize(zsz - want));
		// same μ sign into the opposite quotient fails
		auto wrong = uqsu2_casimir_quotient(-value);
		NcPoly K2 = wrong->gen("K"), Ki2 = wrong->gen("K^-1");
		GenMap f2 = images_by_name(*patch, {{"x", mu * (K2 * K2)},
		                             {"x^-1", mu.inverse() * (Ki2 * Ki2)},
		                             {"z", nu * (K2 * wrong->gen("x₋"))},
		                             {"z†", nu * (wrong->gen("x₊") * K2)}});
		rep.expect("prop3.casimir-sign", "the same images fail for c_q = " + (-value).str(),
		           !all_zero(hom_check(*patch, *wrong, f2)));
	};
	rep.guard("prop3.patch", "Podleś patch into the Casimir quotient", [&] { run(opt.flip_mu, opt.flip_nu, "prop3.patch", true); });
	if (!opt.flip_mu && !opt.flip_nu) {
		rep.guard("prop3.signs", "other square-root branches", [&] {
			run(false, true, "prop3.sign(+mu,-nu)", false);
			run(true, false, "prop3.sign(-mu,+nu)", false);
			run(true, true, "prop3.sign(-mu,-nu)", false);
		});
	}
	return rep;
}

CheckReport prop4_suite(const SphereOptions &opt)
{
	CheckReport rep("spheres:prop4");
	Scalar t = opt.t.value_or(Scalar::t());
	Scalar q = Scalar::q(), qi = q.inverse(), one(1);
	Scalar s2 = -(t * t);

	rep.guard("prop4.slice", "time slice Tr_q(u) = t + 1/t is the Podleś sphere with s^2 = -t^2", [&] {
		auto bq = builtin("bqsu2");
		auto sl = bqsu2_slice(t);
		auto pd = podles_at(s2);
		NcPoly x = pd->gen("x"), z = pd->gen("z"), zs = pd->gen("z†");
		Scalar k = (q * t).inverse();
		std::map<std::string, NcPoly> img = {{"α", (k * q * q) * x},
		                                     {"β", k * z},
		                                     {"γ", k * zs},
		                                     {"δ", k * (NcPoly(t * t + one) - x)}};
		rep.expect_zero("prop4.global", "u = (q^2 x, z; z†, t^2 + 1 - x)/(q t) maps B_q[SU2] into Podleś", *pd,
		                hom_check(*bq, *pd, images_by_name(*bq, img)));
		GenMap f = images_by_name(*sl, img);
		GenMap g = images_by_name(*pd, {{"x", (t * qi) * sl->gen("α")}, {"z", (q * t) * sl->gen("β")}, {"z†", (q * t) * sl->gen("γ")}});
		isomorphism_claims(rep, "prop4.slice", "slice of B_q[SU2] is Podleś with s^2 = -t^2", *sl, *pd, f, g);

		NcPoly u[2][2] = {{sl->gen("α"), sl->gen("β")}, {sl->gen("γ"), sl->gen("δ")}};
		Scalar tt = t + t.inverse();
		std::vector<Residual> sq;
		for (int i = 0; i < 2; ++i)
			for (int j = 0; j < 2; ++j) {
				NcPoly v = u[i][0] * u[0][j] + u[i][1] * u[1][j] - (tt * qi) * u[i][j];
				if (i == j)
					v += NcPoly(qi * qi);
				sq.push_back({"u^2[" + std::to_string(i + 1) + std::to_string(j + 1) + "]", sl->normalize(v)});
			}
		rep.expect_zero("prop4.u-squared", "u^2 = -q^-2 + ((t + 1/t)/q) u", *sl, sq);

		ProjectorMatrix e;
		e.algebra = sl;
		e.lambda = slice_lambda(t);
		e.trace_weight[0] = one;
		e.trace_weight[1] = q * q;
		e.trace_target = one + e.lambda;
		Scalar den = (one - t * t).inverse();
		e.e = GenMatrix(2, std::vector<NcPoly>(2));
		for (int i = 0; i < 2; ++i)
			for (int j = 0; j < 2; ++j)
				e.e[i][j] = den * ((i == j ? NcPoly(1) : NcPoly()) - (q * t) * u[i][j]);
		auto r = projector_residuals(e);
		rep.expect_zero("prop4.projector", "e = (1 - q t u)/(1 - t^2) satisfies e^2 = e", *sl, r.idempotent);
		rep.expect_zero("prop4.self-adjoint", "e† = e", *sl, r.self_adjoint);
		rep.expect_zero("prop4.trace", "trace_q(e) = 1 + t^2 (1 - q^2)/(1 - t^2)", *sl, r.trace);
	});

	if (Scalar::qh().is_constant()) {
		rep.skip("prop4.q-one", "u^2 = -1 + (t + 1/t) u at q = 1", "q is fixed by the active specialization");
	} else {
		rep.guard("prop4.q-one", "u^2 = -1 + (t + 1/t) u at q = 1", [&] {
			auto sl = q_at_one(bqsu2_slice(t));
			NcPoly u[2][2] = {{sl->gen("α"), sl->gen("β")}, {sl->gen("γ"), sl->gen("δ")}};
			Scalar tt = t + t.inverse();
			std::vector<Residual> sq;
			for (int i = 0; i < 2; ++i)
				for (int j = 0; j < 2; ++j) {
					NcPoly v = u[i][0] * u[0][j] + u[i][1] * u[1][j] - tt * u[i][j];
					if (i == j)
						v += NcPoly(1);
					sq.push_back({"u^2[" + std::to_string(i + 1) + std::to_string(j + 1) + "]", sl->normalize(v)});
				}
			rep.expect_zero("prop4.q-one", "u^2 = -1 + (t + 1/t) u at q = 1", *sl, sq);
		});
	}

	for (int sign : {1, -1}) {
		std::string id = sign > 0 ? "prop4.pole(t=1)" : "prop4.pole(t=-1)";
		bool threw = false;
		try {
			(void)slice_lambda(Scalar(sign));
		} catch (const DivisionByZero &) {
			threw = true;
		}
		rep.expect(id, "λ(t) has a pole at t^2 = 1, where no projector exists", threw);
	}
	return rep;
}

CheckReport localization_suite()
{
	CheckReport rep("spheres:localization");
	const std::string anchor = "localization of B_q[SU2] into U_q(su2)";
	rep.guard("localization.solve", anchor, [&] {
		auto loc = solve_localization();
		if (!loc.c) {
			rep.fail("localization.solve", anchor, "no coefficient of x₊x₋ makes the braided determinant 1");
			return;
		}
		Scalar c = *loc.c;
		rep.pass("localization.solve", "coefficient of x₊x₋ forced by α δ - q^2 γ β = 1", "c = " + c.str());
		rep.expect("localization.c-value", "forced coefficient is q^-1 (q - q^-1)^2", c == localization_coefficient(),
		           c.str());
		auto uq = builtin("uqsu2");
		const Presentation &src = *loc.source;
		rep.expect_zero("localization.hom", anchor + " is a *-homomorphism", *uq, hom_check(src, *uq, loc.images));
		Scalar q = Scalar::q();
		auto img = [&](const NcPoly &x) { return apply_map(src, *uq, loc.images, x); };
		NcPoly al = src.gen("α"), be = src.gen("β"), ga = src.gen("γ"), de = src.gen("δ");
		rep.expect_zero("localization.det", "α δ - q^2 γ β maps to 1", *uq,
		                uq->normalize(img(al * de - q * q * (ga * be)) - NcPoly(1)));
		rep.expect_zero("localization.beta-alpha", "β α - q^2 α β maps to 0", *uq, img(be * al - q * q * (al * be)));
		rep.expect_zero("localization.trace", "Tr_q(u) = q^-1 α + q δ maps to c_q", *uq,
		                uq->normalize(img(q.inverse() * al + q * de) - casimir(*uq)));

		// printed coefficient q^-1 (q - q^-2)^2
		Scalar printed = q.inverse() * (q - q.pow(-2)).pow(2);
		GenMap bad = loc.images;
		NcPoly K = uq->gen("K^-1");
		bad[src.require("δ")] = K * K + printed * (uq->gen("x₊") * uq->gen("x₋"));
		NcPoly r = uq->normalize(apply_map(src, *uq, bad, al * de - q * q * (ga * be)) - NcPoly(1));
		if (r.is_zero())
			rep.pass("localization.printed", "printed coefficient q^-1 (q - q^-2)^2 also gives determinant 1");
		else
			rep.pass("localization.printed", "printed coefficient q^-1 (q - q^-2)^2 is inconsistent with the determinant",
			         "determinant residual " + uq->str(r));
	});
	return rep;
}

} // namespace qcalc
