#ifndef PLANARIZE_SOLVER_HPP
#define PLANARIZE_SOLVER_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "planarize/point.hpp"
#include "planarize/poly.hpp"

namespace planarize {

struct SolveResult {
    std::vector<ProjPoint> points;  // sorted by point_less
    /// False when some solutions may have coordinates outside every
    /// quadratic field, or the projection could not be made generic.
    bool complete = true;
};

/// Common zeros in P^2 of forms of one degree in (x, y, z). Eliminates z
/// after a random shear, splits the eliminant into linear and quadratic
/// factors over Q and lifts each root. Every returned point is checked by
/// exact substitution. Throws PositiveDimensional when the forms share a
/// factor.
SolveResult solve_projective(std::span<const Poly> forms, std::uint64_t seed = 0);

}  // namespace planarize

#endif
