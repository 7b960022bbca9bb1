#ifndef PLANARIZE_PARSER_HPP
#define PLANARIZE_PARSER_HPP

#include <array>
#include <string>
#include <string_view>

#include "planarize/poly.hpp"
#include "planarize/ratmap.hpp"

namespace planarize {

inline constexpr unsigned kMaxParsedExponent = 9;
inline constexpr std::size_t kMaxParsedTerms = 10000;

/// Parses a polynomial over x, y, z or over t, u, v, w (the alphabet is
/// inferred; mixing is an error). Grammar, whitespace insensitive:
///   poly   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor (['*'] factor)*
///   factor := integer ['/' integer] | var ['^' nat] | '(' poly ')' ['^' nat]
/// Throws ParseError with the byte offset of the problem.
Poly parse_poly(std::string_view text);

/// Four polynomials in x, y, z between brackets, separated by ':'. Every
/// non-zero component must be a form, all of one positive degree.
struct MapExpression {
    std::array<Poly, 4> components{Poly(Ring::xyz()), Poly(Ring::xyz()), Poly(Ring::xyz()), Poly(Ring::xyz())};
};

MapExpression parse_map(std::string_view text);

/// parse_map followed by RationalMap::normalize.
RationalMap parse_rational_map(std::string_view text);

/// Text that parse_map reads back to the same components.
std::string print_map(const MapExpression& m);

}  // namespace planarize

#endif
