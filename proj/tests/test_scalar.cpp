#include "doctest.h"
#include "planarize/random.hpp"
#include "planarize/scalar.hpp"

using namespace planarize;

TEST_CASE("rational arithmetic") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(Integer(4), Integer(-6)).str() == "-2/3");
    CHECK(Rational::parse("10/4") == Rational(5, 2));
    CHECK(Rational::parse("-7").str() == "-7");
    CHECK_THROWS_AS(Rational(1) / Rational(0), MathError);
}

TEST_CASE("quadratic extension") {
    const QuadExt r2(Rational(0), Rational(1), Integer(2));
    CHECK((QuadExt(1) + r2) * (QuadExt(1) - r2) == QuadExt(-1));

    const QuadExt a(Rational(3), Rational(1), Integer(5));
    const QuadExt inv = a.inverse();
    CHECK(inv == QuadExt(Rational(3, 4), Rational(-1, 4), Integer(5)));
    CHECK((a * inv).is_one());
    CHECK(a.norm() == Rational(4));
    CHECK(a.conjugate() == QuadExt(Rational(3), Rational(-1), Integer(5)));

    // b = 0 demotes to a rational.
    CHECK((r2 * r2).is_rational());
    CHECK((r2 * r2).disc() == 0);

    const QuadExt r3(Rational(0), Rational(1), Integer(3));
    CHECK_THROWS_AS(r2 + r3, MathError);
    CHECK_THROWS_AS(QuadExt(0).inverse(), MathError);
}

TEST_CASE("sqrt_in_field") {
    CHECK(sqrt_in_field(Rational(4)) == QuadExt(2));
    CHECK(sqrt_in_field(Rational(2)) == QuadExt(Rational(0), Rational(1), Integer(2)));
    const QuadExt s = sqrt_in_field(Rational(9, 2));
    CHECK(s.a().is_zero());
    CHECK(s.b() == Rational(3, 2));
    CHECK(s.disc() == 2);
    CHECK(sqrt_in_field(Rational(-3)).disc() == -3);
    CHECK(sqrt_in_field(Rational(0)).is_zero());

    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        const Rational r = rng.nonzero_rational();
        const QuadExt q = sqrt_in_field(r);
        CHECK(q * q == QuadExt(r));
        if (!q.is_rational()) CHECK(q.b().sign() > 0);
    }
}

TEST_CASE("square-free decomposition") {
    CHECK(squarefree_decompose(Integer(72)) == std::pair<Integer, Integer>(6, 2));
    CHECK(squarefree_decompose(Integer(-12)) == std::pair<Integer, Integer>(2, -3));
    CHECK(is_squarefree(Integer(30)));
    CHECK_FALSE(is_squarefree(Integer(50)));
}

TEST_CASE("field axioms on random triples") {
    Rng rng(3);
    for (long d : {0L, 2L, -1L, 5L, -7L}) {
        auto draw = [&] {
            if (d == 0) return QuadExt(rng.rational());
            return QuadExt(rng.rational(), rng.nonzero_rational(), Integer(d));
        };
        for (int i = 0; i < 40; ++i) {
            const QuadExt a = draw(), b = draw(), c = draw();
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
        }
    }
}
