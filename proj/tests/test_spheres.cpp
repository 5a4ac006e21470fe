#include <doctest.h>

#include "qcalc/expr.hpp"
#include "qcalc/library.hpp"
#include "qcalc/spheres.hpp"

using namespace qcalc;

namespace {

void require_ok(const CheckReport &r)
{
	for (auto &c : r.claims())
		if (c.status == ClaimStatus::Fail)
			MESSAGE(c.id << ": " << c.residual);
	CHECK(r.ok());
	CHECK(r.count(ClaimStatus::Pass) > 0);
}

} // namespace

TEST_CASE("projectors for the four spheres")
{
	for (auto k : {SphereKind::Classical, SphereKind::Fuzzy, SphereKind::QSphere, SphereKind::QFuzzy}) {
		CAPTURE(sphere_kind_name(k));
		auto e = build_projector(k);
		CHECK(e.algebra->check_local_confluence(4).empty());
		CHECK(projector_residuals(e).ok());
		require_ok(projector_suite(k));
	}
	// wrong corner breaks the projector
	auto e = build_projector(SphereKind::QFuzzy);
	e.e[0][0] = e.e[0][0] + NcPoly(Scalar::lambda());
	CHECK_FALSE(all_zero(projector_residuals(e).idempotent));
	CHECK_FALSE(all_zero(projector_residuals(e).trace));
}

TEST_CASE("projector at a specialized λ")
{
	auto e = build_projector(SphereKind::QFuzzy, Scalar::rational(1, 3));
	CHECK(projector_residuals(e).ok());
	auto &p = *e.algebra;
	CHECK(p.str(parse_element(p, "b*a")) == "q^2*a*b - 1/3*b");
}

TEST_CASE("pauli form of the fuzzy projector") { require_ok(pauli_form_check()); }

TEST_CASE("q-fuzzy identifications") { require_ok(prop1_suite()); }

TEST_CASE("Podleś parameter substitution")
{
	Scalar s = Scalar::s();
	CHECK(substitute_s_squared(s * s + Scalar(1), Scalar(5)) == Scalar(6));
	CHECK_THROWS(substitute_s_squared(s, Scalar(5)));
	auto p = podles_at(Scalar(-4));
	CHECK(p->str(parse_element(*p, "z†*z")) == "-x^2 + 5*x - 4");
}

TEST_CASE("Casimir quotient and Podleś patch")
{
	auto r = prop3_suite();
	require_ok(r);
	// every sign branch is present
	int branches = 0;
	for (auto &c : r.claims())
		branches += c.id.starts_with("prop3.sign(");
	CHECK(branches == 3);
	SphereOptions o;
	o.t = Scalar(2);
	require_ok(prop3_suite(o));
	o.flip_mu = true;
	require_ok(prop3_suite(o));
}

TEST_CASE("time slice of B_q[SU2]")
{
	require_ok(prop4_suite());
	SphereOptions o;
	o.t = Scalar(2);
	require_ok(prop4_suite(o));
	CHECK(slice_lambda(Scalar(2)) == Scalar::rational(4, 3) * (Scalar::q().pow(2) - Scalar(1)));
	CHECK_THROWS_AS(slice_lambda(Scalar(1)), DivisionByZero);
}

TEST_CASE("localization coefficient is forced by the determinant")
{
	auto loc = solve_localization();
	REQUIRE(loc.c);
	Scalar q = Scalar::q();
	// hand value: q K^-2 ... c_q needs q c = (q - 1/q)^2
	CHECK(*loc.c == (q - q.inverse()).pow(2) / q);
	auto r = localization_suite();
	require_ok(r);
	bool recorded = false;
	for (auto &c : r.claims())
		if (c.id == "localization.solve")
			recorded = c.note.find("c = ") == 0;
	CHECK(recorded);
}
