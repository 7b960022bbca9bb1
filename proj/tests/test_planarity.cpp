#include "doctest.h"
#include "planarize/planarity.hpp"
#include "support.hpp"

using namespace planarize;
using namespace planarize::testing;

TEST_CASE("line restriction matrix") {
    const Matrix<Poly> lin = line_restriction_matrix(M("[x : y : z : 0]"));
    CHECK(lin.rows() == 2);
    CHECK(to_string(lin(0, 0)) == "p0");
    CHECK(to_string(lin(1, 2)) == "q2");
    CHECK(lin(0, 3).is_zero());

    const Matrix<Poly> q10 = line_restriction_matrix(form("Q10"));
    CHECK(q10.rows() == 3);
    CHECK(to_string(q10(0, 0)) == "p0^2");
    CHECK(to_string(q10(0, 1)) == "p0*p1");
    CHECK(to_string(q10(0, 3)) == "p2^2");

    // Row 0 of a cubic map is the map evaluated at p.
    const Matrix<Poly> c1 = line_restriction_matrix(form("C1"));
    const Ring& pp = Ring::point_pairs();
    std::vector<Poly> at_p;
    for (std::size_t i = 0; i < 3; ++i) at_p.push_back(Poly::variable(pp, i));
    for (std::size_t a = 0; a < 4; ++a) CHECK(c1(0, a) == form("C1").component(a).compose<Rational>(at_p));
}

TEST_CASE("planarization test") {
    CHECK(is_planarization(form("Q1")));
    CHECK(is_planarization(form("C1")));
    const RationalMap bad = M("[x^3 : y^3 : z^3 : x^2*y]");
    CHECK_FALSE(is_planarization(bad));
    const std::array<Rational, 3> p{1, 1, 1}, q{1, 2, 3};
    CHECK(determinant(line_restriction_matrix(bad, p, q)).abs() == Rational(12));
    for (const auto& f : catalog()) CHECK_MESSAGE(is_planarization(f.map), f.label);
}

TEST_CASE("triviality") {
    CHECK(is_trivial(M("[x^2 : x*y : y^2 : x^2 + x*y]")));
    CHECK_FALSE(is_trivial(form("Q10")));
    CHECK(is_trivial(M("[x^3 : y^3 : z^3 : x^3 + y^3 + z^3]")));
    const std::vector<Poly> f{P("x^2"), P("x*y"), P("x^2 + x*y")};
    CHECK(linear_relations(f) == std::vector<std::vector<Rational>>{{1, 1, -1}});
}

TEST_CASE("dual maps") {
    const DualMap q10 = dual_map(form("Q10"));
    CHECK(q10.degree == 2);
    CHECK(q10.as_map().degree() == 2);
    CHECK(dual_map(form("Q7")).degree == 2);
    CHECK(dual_map(form("Q1")).degree == 3);
    CHECK(dual_map(form("C1")).degree == 2);
    CHECK(dual_map(form("Phi1a")).degree == 1);

    CHECK_THROWS_AS(dual_map(M("[x^3 : y^3 : z^3 : x^2*y]")), MathError);
    CHECK_THROWS_AS(dual_map(M("[x^2 : x*y : y^2 : x^2 + x*y]")), MathError);

    // c(l) . phi(x) is divisible by l . x.
    const Ring R({"l0", "l1", "l2", "x", "y", "z"});
    std::vector<Poly> lvars, xvars;
    for (std::size_t i = 0; i < 3; ++i) {
        lvars.push_back(Poly::variable(R, i));
        xvars.push_back(Poly::variable(R, i + 3));
    }
    for (const char* label : {"Q3", "Q8", "C4", "Phi2"}) {
        const RationalMap& phi = form(label);
        const DualMap d = dual_map(phi);
        Poly sum(R);
        for (std::size_t a = 0; a < 4; ++a) sum += d.components[a].compose<Rational>(lvars) * phi.component(a).compose<Rational>(xvars);
        const Poly lx = lvars[0] * xvars[0] + lvars[1] * xvars[1] + lvars[2] * xvars[2];
        CHECK_MESSAGE(divide_exact(sum, lx).has_value(), label);
    }
}

TEST_CASE("co-triviality") {
    const Cotriviality a = cotriviality(form("Phi1a"));
    CHECK(a.cotrivial);
    REQUIRE(a.center);
    CHECK(*a.center == ProjPoint::rational({0, 0, 0, 1}));

    const Cotriviality b = cotriviality(form("Phi2"));
    CHECK(b.cotrivial);
    REQUIRE(b.center);
    CHECK(*b.center == ProjPoint::rational({0, 0, 1, 0}));

    CHECK(is_cotrivial(form("Phi1b")));
    CHECK_FALSE(is_cotrivial(form("Q10")));
    CHECK(is_cotrivial(M("[x^2 : x*y : y^2 : x^2 + x*y]")));

    // The center annihilates the dual identically.
    const DualMap d = dual_map(form("Phi2"));
    Poly s(Ring::lines());
    for (std::size_t i = 0; i < 4; ++i) s += d.components[i] * (*b.center)[i].to_rational();
    CHECK(s.is_zero());
}

TEST_CASE("plane of a line") {
    const std::array<Rational, 3> z{0, 0, 1};
    const LineAnalysis q = plane_of_line(form("Q10"), z);
    CHECK_FALSE(q.special);
    REQUIRE(q.plane);
    CHECK(*q.plane == std::vector<Rational>{0, 0, 0, 1});

    const std::array<Rational, 3> x{1, 0, 0};
    CHECK(plane_of_line(form("Phi1a"), x).special);

    const std::array<Rational, 3> l{1, 2, -1};
    const LineAnalysis c = plane_of_line(form("C1"), l);
    CHECK_FALSE(c.special);
    REQUIRE(c.residual_conic);
    CHECK(to_string(*c.residual_conic) == "x*y - 2*x*z - y*z");

    // Cubic planarizations: 50 random lines give a plane with kappa_P = line * conic.
    Rng rng(12);
    for (int i = 0; i < 50; ++i) {
        const std::array<Rational, 3> line{rng.nonzero_rational(), rng.rational(), rng.rational()};
        const LineAnalysis a = plane_of_line(form("C5"), line);
        if (a.special) continue;
        REQUIRE(a.plane);
        REQUIRE(a.residual_conic);
        const Poly kappa = form("C5").web_member(*a.plane);
        const Poly lf = X * line[0] + Y * line[1] + Z * line[2];
        CHECK(proportional(kappa, lf * *a.residual_conic));
    }
}

TEST_CASE("implicitization") {
    const SurfaceModel c1 = implicitize(form("C1"));
    CHECK(c1.degree == 3);
    REQUIRE(c1.equations.size() == 1);
    CHECK(to_string(c1.equations[0]) == "4*t^3 - t*u^2 - t*v^2 - t*w^2 + u*v*w");

    const SurfaceModel q10 = implicitize(form("Q10"));
    CHECK(q10.degree == 2);
    CHECK(proportional(q10.equations.at(0), parse_poly("u*w - v^2")));

    const SurfaceModel c6 = implicitize(form("C6"));
    CHECK(proportional(c6.equations.at(0), parse_poly("u*(4*t*v - w^2) + v^3")));

    // Trivial maps have a linear equation, and only they do.
    CHECK(implicitize(M("[x^2 : x*y : y^2 : x^2 + x*y]")).degree == 1);
    CHECK(implicitize(form("Q8")).degree == 3);

    CHECK_THROWS_AS(implicitize(form("Q1"), 3), MathError);

    // The equations annihilate the map.
    for (const char* label : {"Q1", "Q9", "C3", "Phi1b"}) {
        const RationalMap& m = form(label);
        const SurfaceModel s = implicitize(m);
        std::vector<Poly> images(4, Poly(Ring::xyz()));
        for (std::size_t a = 0; a < 4; ++a) images[target_var_of_component(a)] = m.component(a);
        for (const auto& e : s.equations) CHECK(e.compose<Rational>(images).is_zero());
    }

    const SurfaceModel curve = implicitize(M("[x^2 : y^2 : x*y : x^2 + y^2]"));
    CHECK(curve.image_dimension == 1);
}

TEST_CASE("degree formula") {
    const DegreeFormula c1 = degree_formula_check(form("C1"));
    CHECK(c1.map_degree_squared == 9);
    CHECK(c1.surface_degree == 3);
    CHECK(c1.topological_degree == 2);
    CHECK(c1.base_weight == 3);
    CHECK(c1.holds);

    const DegreeFormula q10 = degree_formula_check(form("Q10"));
    CHECK(q10.surface_degree * q10.topological_degree + q10.base_weight == 4);
    CHECK(q10.holds);

    const DegreeFormula q8 = degree_formula_check(form("Q8"));
    CHECK(q8.surface_degree == 3);
    CHECK(q8.base_weight == 1);
    CHECK(q8.holds);
}

TEST_CASE("double dual") {
    CHECK(double_dual_check(form("Q10")));
    CHECK(double_dual_check(form("C1")));
    CHECK(double_dual_check(form("Q7")));
    CHECK_THROWS_AS(double_dual_check(form("Phi1a")), MathError);
}

TEST_CASE("x^3, y^3, z^3, xyz") {
    // Neither trivial nor co-trivial, yet its dual is cubic again.
    const RationalMap m = M("[x^3 : y^3 : z^3 : x*y*z]");
    CHECK(is_planarization(m));
    CHECK_FALSE(is_trivial(m));
    CHECK_FALSE(is_cotrivial(m));
    const DualMap d = dual_map(m);
    CHECK(d.degree == 3);
    CHECK(proportional_tuples(d.components, std::vector<Poly>{parse_poly("x^3").relabel(Ring::lines()),
                                                             parse_poly("y^3").relabel(Ring::lines()),
                                                             parse_poly("z^3").relabel(Ring::lines()),
                                                             parse_poly("-3*x*y*z").relabel(Ring::lines())}));
    CHECK(to_string(implicitize(m).equations.at(0)) == "t^3 - u*v*w");
    CHECK(topological_degree(m).sampled == 3);
    CHECK(base_locus(m).points.empty());
    CHECK(jacobian_degeneracy(m).common_factor == P("1"));
    CHECK(double_dual_check(m));
}
