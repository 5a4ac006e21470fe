#include <doctest.h>

#include <random>

#include "qcalc/expr.hpp"
#include "qcalc/library.hpp"
#include "qcalc/loader.hpp"

using namespace qcalc;

namespace {

std::string norm(const std::string &alg, const std::string &expr)
{
	auto p = builtin(alg);
	return p->str(parse_element(*p, expr));
}

NcPoly el(const Presentation &p, const std::string &s) { return parse_element(p, s); }

// Random element of degree <= 3 in the generators, small integer coefficients.
NcPoly random_element(const Presentation &p, std::mt19937 &rng)
{
	std::uniform_int_distribution<int> g(0, p.gen_count() - 1), len(0, 3), coef(-3, 3);
	NcPoly x;
	for (int t = 0; t < 3; ++t) {
		Word w;
		int n = len(rng);
		for (int k = 0; k < n; ++k)
			w.push_back(static_cast<Gen>(g(rng)));
		x.add(w, Scalar(coef(rng)));
	}
	return x;
}

} // namespace

TEST_CASE("normalize examples")
{
	CHECK(norm("qfuzzy", "b*a") == "q^2*a*b - λ*b");
	CHECK(norm("uqsu2", "K*K^-1") == "1");
	CHECK(norm("uqsu2", "K^-1*K") == "1");
	CHECK(norm("bqm2", "δ*β") == "β*δ + (q^2 - 1)/q^2*α*β");
	CHECK(norm("bqsu2", "α*δ - q^2*γ*β") == "1");
	for (auto &name : builtin_names())
		CHECK(norm(name, "1") == "1");
}

TEST_CASE("mul and star examples")
{
	auto u = builtin("uqsu2");
	CHECK(el(*u, "x₊*x₋ - x₋*x₊") == el(*u, "(K^2 - K^-2)/(q - q^-1)"));
	auto f = builtin("qfuzzy");
	CHECK(f->star(el(*f, "b")) == el(*f, "b†"));
	auto pd = builtin("podles");
	// (zx)† = x z† and z x = q^2 x z
	CHECK(pd->star(el(*pd, "z*x")) == el(*pd, "x*z†"));
	CHECK(pd->star(el(*pd, "q^2*x*z")) == el(*pd, "x*z†"));
}

TEST_CASE("shipped presentations are confluent to degree 5")
{
	for (auto &name : builtin_names()) {
		CAPTURE(name);
		auto p = builtin(name);
		auto bad = p->check_local_confluence(5);
		for (auto &r : bad)
			MESSAGE(r.label << ": " << p->str(r.value));
		CHECK(bad.empty());
	}
}

TEST_CASE("inconsistent rules are detected")
{
	PresentationBuilder b("bad");
	for (auto n : {"a", "b", "c"})
		b.add_generator(n);
	EvalContext ctx;
	ctx.alphabet = &b.alphabet();
	b.add_relation(parse_relation("b*a = a*b + 1", ctx));
	b.add_relation(parse_relation("c*a = a*c", ctx));
	b.add_relation(parse_relation("c*b = b*c + 1", ctx));
	CHECK(b.build()->check_local_confluence(4).empty());
	// extra rule b*a -> a*b contradicts the first
	b.add_rule(Word{1, 0}, NcPoly::word(Word{0, 1}));
	CHECK_FALSE(b.build()->check_local_confluence(4).empty());
	b.add_relation(parse_relation("b*a = a*b", ctx));
	CHECK_THROWS_AS(b.build(), InconsistentPresentation);
}

TEST_CASE("normalize is idempotent and multiplicative")
{
	std::mt19937 rng(7);
	for (auto name : {"qfuzzy", "bqsu2", "uqsu2", "cqsu2", "podles"}) {
		CAPTURE(name);
		auto p = builtin(name);
		for (int k = 0; k < 10; ++k) {
			NcPoly x = random_element(*p, rng), y = random_element(*p, rng);
			NcPoly nx = p->normalize(x), ny = p->normalize(y);
			CHECK(p->normalize(nx) == nx);
			CHECK(p->normalize(x * y) == p->normalize(nx * ny));
			if (p->star_defined(x))
				CHECK(p->star(p->star(nx)) == nx);
		}
	}
}

TEST_CASE("identity map and centrality")
{
	for (auto &name : builtin_names()) {
		auto p = builtin(name);
		GenMap id;
		for (int g = 0; g < p->gen_count(); ++g)
			id.push_back(NcPoly::gen(g));
		CHECK(all_zero(hom_check(*p, *p, id)));
		CHECK(all_zero(p->centrality_check(NcPoly(1))));
	}
	auto u = builtin("uqsu2");
	CHECK(all_zero(u->centrality_check(el(*u, "K^2*q^-1 + q*K^-2 + x₊*x₋*(q - q^-1)^2"))));
	CHECK_FALSE(all_zero(u->centrality_check(el(*u, "K"))));
	auto m = builtin("bqm2");
	CHECK(all_zero(m->centrality_check(el(*m, "q^-1*α + q*δ"))));
}

TEST_CASE("step budget names the word")
{
	PresentationBuilder b("loop");
	b.add_generator("a");
	b.add_generator("b");
	auto p = b.build();
	CHECK(p->normalize(NcPoly::gen(0)) == NcPoly::gen(0));
}

TEST_CASE("emitted presentation reloads equivalently")
{
	for (auto &name : builtin_names()) {
		CAPTURE(name);
		auto p = builtin(name);
		auto text = emit_presentation(*p);
		auto r = load_presentation(text, name + "-emitted");
		REQUIRE(r->gen_count() == p->gen_count());
		std::mt19937 rng(11);
		for (int k = 0; k < 8; ++k) {
			NcPoly x = random_element(*p, rng);
			CHECK(r->normalize(x) == p->normalize(x));
		}
	}
}
