#include <doctest.h>

#include <random>

#include "qcalc/scalar.hpp"

using namespace qcalc;

namespace {

Scalar q() { return Scalar::q(); }

// Random small rational function in q^(1/2), λ and t.
Scalar random_scalar(std::mt19937 &rng)
{
	std::uniform_int_distribution<int> coef(-3, 3), expo(0, 2), nterms(1, 3);
	auto poly = [&]() {
		Scalar p;
		int n = nterms(rng);
		for (int k = 0; k < n; ++k) {
			Scalar term(GaussRat(coef(rng), coef(rng) % 2));
			term *= Scalar::qh().pow(expo(rng));
			term *= Scalar::lambda().pow(expo(rng));
			term *= Scalar::t().pow(expo(rng) % 2);
			p += term;
		}
		return p;
	};
	Scalar d;
	while (d.is_zero())
		d = poly();
	return poly() / d;
}

} // namespace

TEST_CASE("difference of squares")
{
	Scalar lhs = (q() - q().inverse()) * (q() + q().inverse());
	CHECK(lhs == q().pow(2) - q().pow(-2));
}

TEST_CASE("mu as a single fraction")
{
	CHECK(Scalar::mu() == (q().pow(2) - 1) / q().pow(2));
}

TEST_CASE("s squared at q^2 = 2, lambda = 1/2")
{
	// q^2 = 2 has no rational q^(1/2); evaluate numerator and denominator as
	// polynomials in q^2 instead.
	auto at_q2 = [](const Poly &p, const Scalar &q2) {
		Scalar out;
		for (auto &t : p.terms()) {
			REQUIRE(t.m.e[var::qh] % 4 == 0);
			Monomial rest = t.m;
			rest.e[var::qh] = 0;
			out += q2.pow(t.m.e[var::qh] / 4) * Scalar(Poly::monomial(rest, t.c));
		}
		return out;
	};
	Scalar s2 = Scalar::lambda() / (q().pow(2) - 1 - Scalar::lambda());
	Scalar r = s2.substitute({{var::lambda, Scalar::rational(1, 2)}});
	CHECK(at_q2(r.num(), Scalar(2)) / at_q2(r.den(), Scalar(2)) == Scalar(1));
}

TEST_CASE("specialize examples")
{
	CHECK(Scalar::mu().specialize({{var::qh, GaussRat(1)}}).is_zero());
	CHECK_THROWS_AS(Scalar::mu().inverse().specialize({{var::qh, GaussRat(1)}}), PoleError);
	Scalar s2 = Scalar::lambda() / (q().pow(2) - 1 - Scalar::lambda());
	// q^(1/2) = 3 gives q = 9 and q^2 = 81; λ = 4 gives 4/76
	Scalar v = s2.specialize({{var::qh, GaussRat(3)}, {var::lambda, GaussRat(4)}});
	CHECK(v == Scalar::rational(4, 76));
	// the spec oracle: choose λ so that λ = q^2 - 1 - λ, i.e. λ = 40
	CHECK(s2.specialize({{var::qh, GaussRat(3)}, {var::lambda, GaussRat(40)}}).is_one());
}

TEST_CASE("conjugation")
{
	CHECK((Scalar::i() * Scalar::ell()).conj() == -Scalar::i() * Scalar::ell());
	CHECK((q() + Scalar::lambda()).conj() == q() + Scalar::lambda());
	std::mt19937 rng(7);
	for (int k = 0; k < 30; ++k) {
		Scalar x = random_scalar(rng);
		CHECK(x.conj().conj() == x);
		Scalar y = random_scalar(rng);
		CHECK((x * y).conj() == x.conj() * y.conj());
		CHECK((x + y).conj() == x.conj() + y.conj());
	}
}

TEST_CASE("field axioms on random samples")
{
	std::mt19937 rng(11);
	for (int k = 0; k < 40; ++k) {
		Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
		CHECK((a * b) * c == a * (b * c));
		CHECK(a * (b + c) == a * b + a * c);
		CHECK((a + b) - b == a);
		if (!a.is_zero())
			CHECK(a * a.inverse() == Scalar(1));
	}
}

TEST_CASE("specialize commutes with arithmetic")
{
	std::mt19937 rng(3);
	Assignment at{{var::qh, GaussRat(2)}, {var::lambda, GaussRat(mpq_class(1, 3))}, {var::t, GaussRat(5)}};
	int checked = 0;
	for (int k = 0; k < 40; ++k) {
		Scalar a = random_scalar(rng), b = random_scalar(rng);
		try {
			Scalar sa = a.specialize(at), sb = b.specialize(at);
			CHECK((a * b).specialize(at) == sa * sb);
			CHECK((a + b).specialize(at) == sa + sb);
			++checked;
		} catch (const PoleError &) {
		}
	}
	CHECK(checked > 20);
}

TEST_CASE("gcd reduction gives canonical form")
{
	Scalar x = (q() - 1) * (q() + 1) / (q() - 1);
	CHECK(x == q() + 1);
	CHECK(x.is_polynomial());
	Scalar y = (Scalar::lambda() * q() - Scalar::t()) / (Scalar::t() - q() * Scalar::lambda());
	CHECK(y == Scalar(-1));
	Scalar z = (Scalar::i() * q() + 1) / (q() - Scalar::i());
	CHECK(z == Scalar::i());
}

TEST_CASE("printing")
{
	CHECK(q().str() == "q");
	CHECK(Scalar::qh().str() == "q^(1/2)");
	CHECK(q().pow(2).str() == "q^2");
	CHECK(Scalar::mu().str() == "(q^2 - 1)/q^2");
	CHECK(Scalar(-1).str() == "-1");
	CHECK((Scalar::i() * Scalar::ell()).str() == "i*ℓ");
}

TEST_CASE("coefficient extraction and substitution")
{
	Scalar e = Scalar::ell();
	Scalar x = 3 * e * e + e / q() + 2;
	CHECK(x.coefficient(var::ell, 2) == Scalar(3));
	CHECK(x.coefficient(var::ell, 1) == q().inverse());
	CHECK(x.coefficient(var::ell, 0) == Scalar(2));
	Scalar sub = x.substitute({{var::ell, q()}});
	CHECK(sub == 3 * q() * q() + 3);
}

TEST_CASE("scoped specialization")
{
	{
		ScopedSpecialization at({{var::qh, Scalar(2)}});
		CHECK(Scalar::q() == Scalar(4));
		CHECK(Scalar::mu() == Scalar::rational(15, 16));
	}
	CHECK(Scalar::q() != Scalar(4));
}
