#include <doctest.h>

#include "qcalc/expr.hpp"
#include "qcalc/library.hpp"
#include "qcalc/rmatrix.hpp"

using namespace qcalc;

#ifndef QCALC_TEST_DATA
#define QCALC_TEST_DATA "tests/data"
#endif

namespace {

Scalar sc(const std::string &s) { return parse_scalar(s); }

// Each presentation's relations vanish in the other, generators matched by name.
bool same_ideal(const Presentation &a, const Presentation &b)
{
	return all_zero(hom_check(a, b, map_by_name(a, b))) && all_zero(hom_check(b, a, map_by_name(b, a)));
}

Scalar at_q_one(const Scalar &x) { return x.specialize({{0, GaussRat(1)}}); }

} // namespace

TEST_CASE("file and builtin standard agree")
{
	RMatrix f = load_rmatrix_any("standard");
	RMatrix s = RMatrix::standard();
	CHECK(f.matrix() == s.matrix());
	CHECK(f.normalization() == Normalization::Hecke);
	CHECK(RMatrix::standard(Normalization::QuantumGroup).matrix() == s.scaled(sc("q^(-1/2)"), Normalization::Other).matrix());
}

TEST_CASE("malformed R-matrix files report the line")
{
	try {
		load_rmatrix("n: 2\nentries:\n  - \"R[1,1,1,1] = q\"\n  - \"R[1,3,1,1] = 1\"\n", "bad.rmat");
		FAIL("expected a parse error");
	} catch (const ParseError &e) {
		CHECK(e.line() == 4);
	}
	CHECK_THROWS_AS(load_rmatrix("n: 2\nentries: [\"S[1,1,1,1] = q\"]\n"), ParseError);
	CHECK_THROWS_AS(load_rmatrix("n: 2\nnormalization: odd\n"), ParseError);
}

TEST_CASE("braid relation")
{
	CHECK(ybe_check(RMatrix::standard()));
	CHECK(ybe_check(RMatrix::standard(Normalization::QuantumGroup)));
	CHECK(ybe_check(RMatrix::identity(2)));
	CHECK(ybe_check(RMatrix::identity(3)));
	CHECK(ybe_check(load_rmatrix_any("twoparam")));
	CHECK(ybe_check(RMatrix::diagonal(sc("t"))));
	RMatrix bad = load_rmatrix_file(QCALC_TEST_DATA "/perturbed.rmat");
	auto res = ybe_residual(bad);
	CHECK_FALSE(res.empty());
}

TEST_CASE("second inverse")
{
	RMatrix id = RMatrix::identity(2);
	CHECK(second_inverse(id).matrix() == id.matrix());

	// diagonal R: second inverse is the entrywise reciprocal
	RMatrix dg = RMatrix::diagonal(sc("t"));
	RMatrix dt = second_inverse(dg);
	CHECK(dt.at(0, 0, 0, 0) == sc("1/t"));
	CHECK(dt.at(1, 1, 1, 1) == sc("1/t"));
	CHECK(dt.at(0, 0, 1, 1) == Scalar(1));
	CHECK(dt.at(1, 1, 0, 0) == Scalar(1));

	// hand inverse of R^{t2} = [[q,0,0,q-1/q],[0,1,0,0],[0,0,1,0],[0,0,0,q]]
	RMatrix r = RMatrix::standard();
	RMatrix rt = second_inverse(r);
	CHECK(rt.at(0, 0, 0, 0) == sc("1/q"));
	CHECK(rt.at(1, 1, 1, 1) == sc("1/q"));
	CHECK(rt.at(0, 0, 1, 1) == Scalar(1));
	CHECK(rt.at(1, 1, 0, 0) == Scalar(1));
	CHECK(rt.at(0, 1, 1, 0) == sc("-(q - q^-1)/q^2"));
	CHECK(rt.at(1, 0, 0, 1).is_zero());
	CHECK(second_inverse_residual(r, rt).empty());
	CHECK(second_inverse_residual(load_rmatrix_any("twoparam"), second_inverse(load_rmatrix_any("twoparam"))).empty());
}

TEST_CASE("metric u reproduces the q-trace")
{
	RMatrix r = RMatrix::standard();
	ScalarMatrix u = u_matrix(r);
	REQUIRE(u.is_diagonal());
	CHECK(u(0, 0) == sc("q^-3"));
	CHECK(u(1, 1) == sc("q^-1"));
	CHECK(u(1, 1) / u(0, 0) == sc("q^2"));
	// normalization only rescales u
	ScalarMatrix uq = u_matrix(r.to_quantum_group());
	CHECK(uq(1, 1) / uq(0, 0) == sc("q^2"));

	// the other index order gives q^-2 and would break trace(e u) = trace_q(e)
	ScalarMatrix w = u_matrix(r, UContraction::Transposed);
	CHECK(w(1, 1) / w(0, 0) == sc("q^-2"));
	CHECK(w(1, 1) / w(0, 0) != sc("q^2"));

	ScalarMatrix ui = u_matrix(RMatrix::identity(2));
	CHECK(ui == ScalarMatrix::identity(2));
}

TEST_CASE("real type")
{
	CHECK(real_type_check(RMatrix::standard()));
	CHECK(real_type_check(load_rmatrix_any("twoparam")));
	CHECK_FALSE(real_type_check(RMatrix::two_parameter(sc("2"))));
}

TEST_CASE("FRT relations give the SU_q(2) coordinate algebra")
{
	auto frt = frt_relations(RMatrix::standard(), true);
	CHECK(frt->check_local_confluence(4).empty());
	CHECK(same_ideal(*frt, *builtin("cqsu2")));
	// normalization does not matter for a homogeneous ideal
	CHECK(same_ideal(*frt_relations(RMatrix::standard(Normalization::QuantumGroup), true), *builtin("cqsu2")));
	auto plain = frt_relations(RMatrix::standard(), false);
	auto m = plain->normalize(parse_element(*plain, "b*a"));
	CHECK(m == parse_element(*plain, "q*a*b"));
}

TEST_CASE("reflection relations give braided matrices")
{
	auto refl = reflection_relations(RMatrix::standard());
	CHECK(refl->check_local_confluence(4).empty());
	CHECK(same_ideal(*refl, *builtin("bqm2")));
	// q-trace is central
	CHECK(all_zero(refl->centrality_check(parse_element(*refl, "q^-1*α + q*δ"))));
}

TEST_CASE("braided sphere")
{
	RMatrix r = RMatrix::standard();
	BraidedSphere s = braided_sphere_relations(r, Scalar::lambda());
	CHECK(s.u(0, 0) == Scalar(1));
	CHECK(s.u(1, 1) == sc("q^2"));
	CHECK(s.trace_before_elimination == parse_element(*s.free_with_x, "x + q^2*a"));
	CHECK(s.presentation->check_local_confluence(4).empty());
	CHECK(same_ideal(*s.presentation, *builtin("qfuzzy")));

	// at q = 1 the q-fuzzy sphere becomes the fuzzy sphere
	auto classical = s.presentation->map_scalars(at_q_one);
	CHECK(same_ideal(*classical, *builtin("fuzzy")));
	// and the same holds for the shipped q-fuzzy presentation
	CHECK(same_ideal(*builtin("qfuzzy")->map_scalars(at_q_one), *builtin("fuzzy")));
}

TEST_CASE("two-parameter R-matrix")
{
	RMatrix r = load_rmatrix_any("twoparam");
	CHECK(r.at(0, 0, 1, 1) == sc("(3 + 4*i)/5"));
	auto frt = frt_relations(r, false);
	CHECK(frt->check_local_confluence(4).empty());
	auto refl = reflection_relations(r);
	CHECK(refl->check_local_confluence(4).empty());
	// star closes on the reflection ideal when R is of real type
	GenMap id;
	for (int g = 0; g < refl->gen_count(); ++g)
		id.push_back(NcPoly::gen(g));
	CHECK(all_zero(hom_check(*refl, *refl, id)));
	auto s = braided_sphere_relations(r, Scalar::lambda());
	CHECK(s.presentation->check_local_confluence(4).empty());
	CHECK(all_zero(hom_check(*s.presentation, *s.presentation, map_by_name(*s.presentation, *s.presentation))));
}
