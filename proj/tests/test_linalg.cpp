#include "doctest.h"
#include "support.hpp"

using namespace planarize;
using namespace planarize::testing;

namespace {

using RVec = std::vector<Rational>;

bool annihilates(const Matrix<Rational>& m, const RVec& v) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Rational s;
        for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * v[j];
        if (!s.is_zero()) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("kernel_basis") {
    const Matrix<Rational> a(std::vector<std::vector<Rational>>{{1, 1}});
    CHECK(kernel_basis(a) == std::vector<RVec>{{1, -1}});

    CHECK(kernel_basis(identity<Rational>(2)).empty());

    const Matrix<Rational> b(std::vector<std::vector<Rational>>{{1, 2, 3}, {2, 4, 6}});
    const auto k = kernel_basis(b);
    REQUIRE(k.size() == 2);
    for (const auto& v : k) CHECK(annihilates(b, v));
}

TEST_CASE("symbolic_kernel_vector") {
    const Ring L({"l0", "l1"});
    const Poly l0 = Poly::variable(L, 0), l1 = Poly::variable(L, 1);
    const Matrix<Poly> m(std::vector<std::vector<Poly>>{{l0, l1}});
    const auto v = symbolic_kernel_vector(m);
    REQUIRE(v.size() == 2);
    CHECK(proportional_tuples(v, std::vector<Poly>{l1, -l0}));

    const Poly one = Poly::constant(L, Rational(1)), zero(L);
    const Matrix<Poly> c(std::vector<std::vector<Poly>>{{one, zero, l0}, {zero, one, l1}});
    const auto w = symbolic_kernel_vector(c);
    CHECK(proportional_tuples(w, std::vector<Poly>{-l0, -l1, one}));

    // Nullity two is rejected.
    const Matrix<Poly> d(std::vector<std::vector<Poly>>{{l0, l1, zero}});
    CHECK_THROWS_AS(symbolic_kernel_vector(d), MathError);
}

TEST_CASE("determinants") {
    const Matrix<Rational> a(std::vector<std::vector<Rational>>{{2, 1}, {7, 4}});
    CHECK(determinant(a) == Rational(1));
    const Matrix<Poly> p(std::vector<std::vector<Poly>>{{X, Y}, {Y, X}});
    CHECK(determinant(p) == P("x^2 - y^2"));
    auto inv = inverse(a);
    REQUIRE(inv);
    CHECK(multiply(a, *inv) == identity<Rational>(2));
}

TEST_CASE("kernel vectors annihilate random matrices") {
    Rng rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        const auto rows = static_cast<std::size_t>(rng.uniform(1, 5));
        const auto cols = static_cast<std::size_t>(rng.uniform(2, 7));
        Matrix<Rational> m(rows, cols, Rational(0));
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.rational();
        if (rng.uniform(0, 1) == 0 && rows > 1)
            for (std::size_t j = 0; j < cols; ++j) m(rows - 1, j) = m(0, j) * Rational(3);
        const auto k = kernel_basis(m);
        CHECK(k.size() == cols - rank(m));
        for (const auto& v : k) {
            CHECK(annihilates(m, v));
            for (const auto& x : v) CHECK(x.is_integer());
        }
    }
}
