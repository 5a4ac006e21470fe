#include <doctest.h>

#include "qcalc/bicross.hpp"
#include "qcalc/expr.hpp"

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

Scalar il() { return Scalar::i() * Scalar::ell(); }

} // namespace

TEST_CASE("bicross spacetime relations")
{
	auto &p = *omega_bicross();
	NcPoly x = p.gen("x"), y = p.gen("y"), z = p.gen("z");
	NcPoly dx = p.gen("dx"), dy = p.gen("dy"), dz = p.gen("dz"), th = p.gen("θ");
	CHECK(p.normalize(x * z - z * x) == p.normalize(il() * x));
	CHECK(p.normalize(x * y - y * x).is_zero());
	CHECK(p.normalize(dz * z - z * dz) == p.normalize(il() * th));
	CHECK(p.normalize(p.d(x * y) - dx * y - x * dy).is_zero());
	// d(x²) = 2x dx + iℓ θ'
	CHECK(p.normalize(p.d(x * x)) == p.normalize(Scalar(2) * (x * dx) + il() * (th + dz)));
	NcPoly thp = th + dz;
	CHECK(p.normalize(thp * x - x * thp).is_zero());
	CHECK(p.normalize(thp * z - (z + il()) * thp).is_zero());
	NcPoly thm = th - dz;
	CHECK(p.normalize(thm * z - (z - il()) * thm).is_zero());
}

TEST_CASE("normal-ordered partial derivatives")
{
	Scalar inv = il().inverse();
	auto x2 = partials(NOFunction::monomial(2, 0, 0));
	CHECK(x2.d1 == NOFunction::monomial(1, 0, 0, Scalar(2)));
	CHECK(x2.d2.is_zero());
	CHECK(x2.dz.is_zero());
	CHECK(ExpSum(inv) * x2.d0 == NOFunction(Scalar(1)));

	auto z1 = partials(NOFunction::monomial(0, 0, 1));
	CHECK(z1.dz == NOFunction(Scalar(1)));
	CHECK(z1.d0.is_zero());

	auto z2 = partials(NOFunction::monomial(0, 0, 2));
	CHECK(z2.dz == NOFunction::monomial(0, 0, 1, Scalar(2)) - NOFunction(il()));
	CHECK(ExpSum(inv) * z2.d0 == NOFunction(Scalar(1)));

	// mixed: d(x z) has ∂^x = z, ∂^z = x
	auto xz = partials(NOFunction::monomial(1, 0, 1));
	CHECK(xz.d1 == NOFunction::monomial(0, 0, 1));
	CHECK(xz.dz == NOFunction::monomial(1, 0, 0));
}

TEST_CASE("partials reassemble the differential")
{
	auto &p = *omega_bicross();
	for (int m = 0; m <= 2; ++m)
		for (int k = 0; k <= 3; ++k) {
			auto f = NOFunction::monomial(m, 1, k);
			NcPoly fw = to_bicross(p, f);
			CHECK(p.normalize(p.d(fw) - assemble_differential(p, partials(f))).is_zero());
		}
}

TEST_CASE("z shift")
{
	auto g = NOFunction::monomial(0, 0, 2).shift_z(Scalar(1));
	// (z + 1)² = z² + 2z + 1
	CHECK(g == NOFunction::monomial(0, 0, 2) + NOFunction::monomial(0, 0, 1, Scalar(2)) + NOFunction(Scalar(1)));
	Scalar a = Scalar::named("α");
	auto e = NOFunction::z_atom(a).shift_z(Scalar(3));
	REQUIRE(e.terms().size() == 1);
	CHECK(e.terms().begin()->second == ExpSum::exp(Scalar(3) * a));
}

TEST_CASE("exponential sums")
{
	Scalar l = Scalar::ell();
	ExpSum e = ExpSum::exp(l) + ExpSum::exp(-l);
	CHECK(e * e == ExpSum::exp(Scalar(2) * l) + ExpSum(Scalar(2)) + ExpSum::exp(Scalar(-2) * l));
	CHECK((e - e).is_zero());
	// (e^ℓ - e^-ℓ)/ℓ -> 2
	ExpSum s = ExpSum::exp(l, l.inverse()) - ExpSum::exp(-l, l.inverse());
	auto c = s.constant_term_at_zero(variable_index("ℓ"));
	REQUIRE(c);
	CHECK(*c == Scalar(2));
	// 1/ℓ alone has no finite limit
	CHECK(!ExpSum(l.inverse()).constant_term_at_zero(variable_index("ℓ")));
	Assignment at{{variable_index("ℓ"), GaussRat(0)}};
	CHECK(e.evaluate(at) == doctest::Approx(2.0));
}

TEST_CASE("plane-wave Laplacian")
{
	Scalar k1 = Scalar::named("k1"), k2 = Scalar::named("k2"), om = Scalar::named("ω");
	CHECK(laplacian_eigenvalue(k1, k2, om) == expected_laplacian_eigenvalue(k1, k2, om));
	CHECK(laplacian_eigenvalue(k1, k2, Scalar(0)) == ExpSum(-(k1 * k1 + k2 * k2)));
	auto lim = laplacian_eigenvalue(k1, k2, om).constant_term_at_zero(variable_index("ℓ"));
	REQUIRE(lim);
	CHECK(*lim == -(k1 * k1 + k2 * k2 + om * om));
	// numeric: k = (1, 0), ω = 0, any ℓ gives -1
	for (auto &s : laplacian_table(5, 3))
		if (s.omega == 0)
			CHECK(s.value == doctest::Approx(-(s.k1 * s.k1 + s.k2 * s.k2)));
}

TEST_CASE("exponential atom in the calculus")
{
	auto &e = *omega_bicross_exp();
	CHECK(e.check_local_confluence(4).empty());
	Scalar a = Scalar::named("α");
	auto f = NOFunction::z_atom(a, 1);
	NcPoly fw = to_bicross(e, f, a);
	CHECK(e.normalize(e.d(fw) - assemble_differential(e, partials(f), a)).is_zero());
}

TEST_CASE("scaling limit from the quantum group")
{
	auto table = limit_table();
	CHECK(table.size() == 16);
	for (auto &t : table)
		CHECK_MESSAGE(t.error.empty(), t.left << " " << t.right << " " << t.error);
	auto &p = *omega_bicross();
	for (auto &t : limit_differentials())
		CHECK(t.error.empty());
	// [x₋, x₊] survives as 0
	for (auto &t : table)
		if (t.left == "x₋" && t.right == "x₊")
			CHECK(p.normalize(t.value).is_zero());
}

TEST_CASE("bicross suites")
{
	require_ok(bicross_dga_suite());
	require_ok(bicross_partials_suite(4));
	require_ok(bicross_laplacian_suite(true, 2));
	require_ok(bicross_limit_suite());
}
