#ifndef PLANARIZE_INTERSECTION_HPP
#define PLANARIZE_INTERSECTION_HPP

#include <optional>
#include <span>

#include "planarize/poly.hpp"

namespace planarize {

/// Intersection number I_p(F, G) of two affine plane curves given by
/// polynomials in a two-variable ring, at a point with coordinates in Q or
/// Q(sqrt(D)). Returns nullopt (infinite) when F and G share a component
/// through p. Uses Fulton's reduction.
std::optional<unsigned> intersection_multiplicity(const Poly& f, const Poly& g, std::span<const QuadExt> p);

}  // namespace planarize

#endif
