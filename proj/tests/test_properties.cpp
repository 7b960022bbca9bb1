// Randomized algebraic identities.

#include "doctest.h"
#include "planarize/intersection.hpp"
#include "planarize/planarity.hpp"
#include "support.hpp"

using namespace planarize;
using namespace planarize::testing;

namespace {

const Ring& plane() {
    static const Ring r({"x", "y"});
    return r;
}

// Affine curve of degree <= 3 through the origin.
Poly random_curve(Rng& rng) {
    Poly p(plane());
    const auto deg = static_cast<unsigned>(rng.uniform(1, 3));
    for (unsigned d = 1; d <= deg; ++d)
        for (const auto& m : monomials_of_degree(2, d))
            if (rng.uniform(0, 2) != 0) p.add_term(m, Rational(rng.uniform(-4, 4)));
    if (p.is_zero()) p = Poly::variable(plane(), rng.uniform(0, 1));
    return p;
}

using Mult = std::optional<unsigned>;

Mult add(Mult a, Mult b) {
    if (!a || !b) return std::nullopt;
    return *a + *b;
}

}  // namespace

TEST_CASE("Fulton axioms") {
    Rng rng(1000);
    const std::vector<QuadExt> o{0, 0};
    const Poly x = Poly::variable(plane(), 0), y = Poly::variable(plane(), 1);
    const Poly one = Poly::constant(plane(), Rational(1));
    CHECK(intersection_multiplicity(x, y, o) == 1u);  // (vi)

    for (int i = 0; i < 50; ++i) {
        const Poly f = random_curve(rng), g = random_curve(rng), h = random_curve(rng), a = random_curve(rng);
        const Mult fg = intersection_multiplicity(f, g, o);
        INFO("F = " << to_string(f) << ", G = " << to_string(g));

        // (i) positive at common points, zero away from them.
        if (fg) CHECK(*fg >= 1);
        CHECK(intersection_multiplicity(f + one, g, o) == 0u);
        // (ii) common component through p.
        CHECK_FALSE(intersection_multiplicity(f * h, g * h, o).has_value());
        // (iii)
        CHECK(intersection_multiplicity(g, f, o) == fg);
        // (iv)
        CHECK(intersection_multiplicity(f, g * h, o) == add(fg, intersection_multiplicity(f, h, o)));
        // (v)
        CHECK(intersection_multiplicity(f, g + a * f, o) == fg);
        // Units do not change anything.
        CHECK(intersection_multiplicity(f, g * (one + x), o) == fg);
    }
}

TEST_CASE("Euler identity") {
    Rng rng(2000);
    for (int i = 0; i < 100; ++i) {
        const auto d = static_cast<unsigned>(rng.uniform(0, 6));
        Poly p(Ring::xyz());
        for (const auto& m : monomials_of_degree(3, d))
            if (rng.uniform(0, 1) == 0) p.add_term(m, rng.rational());
        const Poly euler = X * p.derivative(0) + Y * p.derivative(1) + Z * p.derivative(2);
        CHECK(euler == p * Rational(static_cast<long>(d)));
    }
}

TEST_CASE("resultant multiplicativity") {
    Rng rng(3000);
    int tested = 0;
    while (tested < 50) {
        const Poly p = random_form(rng, static_cast<unsigned>(rng.uniform(1, 2)), 4);
        const Poly q1 = random_form(rng, static_cast<unsigned>(rng.uniform(1, 2)), 4);
        const Poly q2 = random_form(rng, static_cast<unsigned>(rng.uniform(1, 2)), 4);
        if (!p.depends_on(0) || !q1.depends_on(0) || !q2.depends_on(0)) continue;
        ++tested;
        const Poly lhs = resultant(p, q1 * q2, 0);
        CHECK(lhs == resultant(p, q1, 0) * resultant(p, q2, 0));
        CHECK(lhs.depends_on(0) == false);
    }
}

TEST_CASE("symbolic kernels annihilate their matrices") {
    for (const char* label : {"Q2", "Q6", "Q9", "C2", "C5"}) {
        const Matrix<Poly> m = line_restriction_matrix(form(label));
        if (m.rows() < 4) {
            const std::vector<Poly> v = symbolic_kernel_vector(m);
            for (std::size_t i = 0; i < m.rows(); ++i) {
                Poly s(m(i, 0).ring());
                for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * v[j];
                CHECK(s.is_zero());
            }
        } else {
            // Cubic planarizations: rank 3, so one row is redundant.
            CHECK(determinant(m).is_zero());
        }
    }
}

TEST_CASE("homogeneity is preserved") {
    Rng rng(4000);
    for (int i = 0; i < 30; ++i) {
        const Poly a = random_form(rng, 2), b = random_form(rng, 3);
        CHECK((a * b).is_homogeneous());
        const std::array<Rational, 3> p{rng.rational(), rng.rational(), rng.rational()};
        const std::array<Rational, 3> q{rng.rational(), rng.rational(), rng.rational()};
        const Poly r = restrict_to_line(b, p, q);
        CHECK(r.is_homogeneous());
        CHECK((r.is_zero() || r.total_degree() == 3));
    }
}
