#include <algorithm>

#include "doctest.h"
#include "planarize/intersection.hpp"
#include "planarize/solver.hpp"
#include "support.hpp"

using namespace planarize;
using namespace planarize::testing;

namespace {

ProjPoint pt(std::vector<Rational> c) { return ProjPoint::rational(std::move(c)); }

bool contains(const std::vector<ProjPoint>& v, const ProjPoint& p) { return std::find(v.begin(), v.end(), p) != v.end(); }

}  // namespace

TEST_CASE("normalize clears common content") {
    const auto raw = parse_map("[x*x^2 : x*x*y : x*y^2 : x*z^2]");
    const RationalMap m = RationalMap::normalize(raw.components);
    CHECK(m.components() == form("Q10").components());
    CHECK(m.extracted_content() == X);
    CHECK(m.degree() == 2);

    CHECK(form("Q10").extracted_content() == P("1"));
    const RationalMap c = M("[x^3 : y^3 : z^3 : x^2*y]");
    CHECK(c.degree() == 3);
    CHECK(c.extracted_content() == P("1"));

    std::array<Poly, 4> zero{Poly(Ring::xyz()), Poly(Ring::xyz()), Poly(Ring::xyz()), Poly(Ring::xyz())};
    CHECK_THROWS_AS(RationalMap::normalize(zero), MathError);
}

TEST_CASE("evaluate") {
    CHECK_FALSE(evaluate(form("Phi1a"), pt({0, 1, 0})).has_value());
    CHECK(evaluate(form("Q10"), pt({1, 1, 1})) == pt({1, 1, 1, 1}));
    CHECK_FALSE(evaluate(form("C1"), pt({1, 0, 0})).has_value());

    Rng rng(4);
    for (int i = 0; i < 10; ++i) {
        auto c = random_source_point(rng);
        const Rational s = rng.nonzero_rational();
        auto scaled = c;
        for (auto& x : scaled) x *= s;
        CHECK(evaluate(form("C3"), pt(c)) == evaluate(form("C3"), pt(scaled)));
    }
}

TEST_CASE("base loci") {
    const BaseLocus phi1 = base_locus(form("Phi1a"));
    REQUIRE(phi1.points.size() == 2);
    CHECK(phi1.weight == 2);
    CHECK(phi1.complete);
    CHECK(phi1.points[0].point == pt({0, 0, 1}));
    CHECK(phi1.points[1].point == pt({0, 1, 0}));
    for (const auto& b : phi1.points) CHECK(b.multiplicity == 1);

    const BaseLocus q1 = base_locus(form("Q1"));
    CHECK(q1.points.empty());
    CHECK(q1.weight == 0);
    CHECK(q1.complete);

    const BaseLocus c1 = base_locus(form("C1"));
    CHECK(c1.weight == 3);
    CHECK(c1.complete);
    for (const auto& p : {pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})}) {
        bool found = false;
        for (const auto& b : c1.points) found = found || (b.point == p && b.multiplicity == 1);
        CHECK(found);
    }

    // Phi1b: a conjugate pair over Q(i).
    const BaseLocus p1b = base_locus(form("Phi1b"));
    REQUIRE(p1b.points.size() == 2);
    CHECK(p1b.points[0].point.field_disc() == -1);
    CHECK(p1b.points[0].point.conjugate() == p1b.points[1].point);
}

TEST_CASE("base point multiplicities") {
    CHECK(base_point_multiplicity(form("Phi1a"), pt({0, 1, 0})) == 1);
    CHECK(base_point_multiplicity(form("Q8"), pt({1, 0, 0})) == 1);
    CHECK_THROWS_AS(base_point_multiplicity(form("Q8"), pt({1, 1, 1})), MathError);

    const BaseLocus c6 = base_locus(form("C6"));
    CHECK(c6.complete);
    CHECK(c6.weight == 3);
}

TEST_CASE("fibres and topological degree") {
    const Fiber f = fiber_over(form("Q10"), pt({1, 1, 1, 1}));
    CHECK(f.complete);
    CHECK(f.points.size() == 2);
    CHECK(contains(f.points, pt({1, 1, 1})));
    CHECK(contains(f.points, pt({1, 1, -1})));

    const Fiber g = fiber_over(form("Phi1a"), pt({1, 1, 1, 1}));
    CHECK(g.points == std::vector<ProjPoint>{pt({1, 1, 1})});

    Rng rng(8);
    for (const char* label : {"C2", "Q5", "Phi2"}) {
        const auto p = pt(random_source_point(rng));
        const auto y = evaluate(form(label), p);
        if (!y) continue;
        CHECK(contains(fiber_over(form(label), *y).points, p));
    }

    CHECK(topological_degree(form("Q10")).sampled == 2);
    CHECK(topological_degree(form("Phi1a")).sampled == 1);
    const TopologicalDegree k = topological_degree(form("C1"));
    CHECK(k.sampled == 2);
    CHECK(k.samples_complete);
}

TEST_CASE("jacobian degeneracy") {
    const JacobianDegeneracy q10 = jacobian_degeneracy(form("Q10"));
    CHECK(divide_exact(q10.common_factor, Z).has_value());
    CHECK(q10.generic_rank == 3);

    const JacobianDegeneracy lin = jacobian_degeneracy(M("[x : y : z : 0]"));
    CHECK(lin.generic_rank == 3);
    CHECK(lin.common_factor == P("1"));

    // Components in the net spanned by x^2, y^2, x*y: the image is a curve.
    const JacobianDegeneracy curve = jacobian_degeneracy(M("[x^2 : y^2 : x*y : x^2 + y^2]"));
    CHECK(curve.generic_rank <= 2);
    CHECK_THROWS_AS(topological_degree(M("[x^2 : y^2 : x*y : x^2 + y^2]")), MathError);
}

TEST_CASE("intersection multiplicity") {
    const Ring R({"x", "y"});
    const Poly x = Poly::variable(R, 0), y = Poly::variable(R, 1);
    const std::vector<QuadExt> origin{0, 0};
    CHECK(intersection_multiplicity(x, y, origin) == 1u);
    CHECK(intersection_multiplicity(y, y - x * x, origin) == 2u);
    const std::vector<QuadExt> one{1, 1};
    CHECK(intersection_multiplicity(x - y, x + y, one) == 0u);
    CHECK_FALSE(intersection_multiplicity(x * y, x * (x + y), origin).has_value());
    // Cusp against its tangent.
    CHECK(intersection_multiplicity(y * y - x * x * x, y, origin) == 3u);
    // Conjugate point of x^2 + 1 = 0 on y = 0.
    const std::vector<QuadExt> i{QuadExt(Rational(0), Rational(1), Integer(-1)), 0};
    CHECK(intersection_multiplicity(x * x + Poly::constant(R, Rational(1)), y, i) == 1u);
}

TEST_CASE("projective solver") {
    const std::vector<Poly> forms{P("x*y"), P("x*z"), P("y*z")};
    const SolveResult r = solve_projective(forms);
    CHECK(r.complete);
    CHECK(r.points.size() == 3);

    const std::vector<Poly> shared{P("x*y"), P("x*z")};
    CHECK_THROWS_AS(solve_projective(shared), MathError);

    const std::vector<Poly> irr{P("x^2 + y^2 - 3*z^2"), P("x^2 - y^2")};
    const SolveResult s = solve_projective(irr);
    REQUIRE(s.points.size() == 4);
    CHECK(s.points[0].field_disc() == 6);
}
