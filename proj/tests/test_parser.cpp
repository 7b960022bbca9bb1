#include "doctest.h"
#include "support.hpp"

using namespace planarize;
using namespace planarize::testing;

namespace {

std::size_t error_offset(std::string_view text) {
    try {
        parse_map(text);
    } catch (const ParseError& e) {
        return e.offset();
    }
    return std::string_view::npos;
}

}  // namespace

TEST_CASE("maps") {
    CHECK(M("[x^2 : x*y : y^2 : z^2]") == form("Q10"));
    CHECK(M("[z*(x^2+y^2) : y*(x^2+z^2) : x*(y^2+z^2) : x*y*z]").component(0) == P("x^2*z + y^2*z"));
    CHECK(proportional_tuples(M("[ x^2:xy : y*y : 1/2 z^2 ]").components(), M("[2*x^2 : 2*x*y : 2*y^2 : z^2]").components()));
    CHECK(M("[2x^2 : 3 x y : y^2 : z^2]").component(1) == P("3*x*y"));
}

TEST_CASE("syntax errors carry offsets") {
    CHECK(error_offset("[x : y : z : x+]") == 14);
    CHECK(error_offset("[x : y : z]") != std::string_view::npos);
    CHECK(error_offset("[x : y : z : w]") != std::string_view::npos);  // mixed alphabets
    CHECK(error_offset("[x^2 : y : z : x]") != std::string_view::npos);  // degrees disagree
    CHECK(error_offset("[x^2 + y : y^2 : z^2 : x^2]") != std::string_view::npos);
    CHECK(error_offset("[1 : 2 : 3 : 4]") != std::string_view::npos);
    CHECK(error_offset("[x^10 : y^10 : z^10 : x^10]") != std::string_view::npos);
    CHECK(error_offset("[x : y : z : 1/0*x]") != std::string_view::npos);
    CHECK_THROWS_AS(parse_poly("x + u"), ParseError);
    CHECK_THROWS_AS(parse_poly("x^"), ParseError);
}

TEST_CASE("surface alphabet") {
    const Poly f = parse_poly("4t^3 - t(u^2 + v^2 + w^2) + uvw");
    CHECK(f.ring() == Ring::tuvw());
    CHECK(to_string(f) == "4*t^3 - t*u^2 - t*v^2 - t*w^2 + u*v*w");
}

TEST_CASE("round trip of catalog forms") {
    for (const auto& f : catalog()) {
        const MapExpression e = parse_map(f.text);
        const std::string printed = print_map(e);
        CHECK(parse_map(printed).components == e.components);
        CHECK(parse_rational_map(f.map.str()) == f.map);
    }
}

TEST_CASE("round trip of random polynomials") {
    Rng rng(99);
    for (int i = 0; i < 200; ++i) {
        Poly p(Ring::xyz());
        const auto deg = static_cast<unsigned>(rng.uniform(0, 5));
        for (const auto& m : monomials_of_degree(3, deg))
            if (rng.uniform(0, 2) == 0) p.add_term(m, rng.rational());
        CHECK(parse_poly(to_string(p)) == p);
    }
}
