#ifndef PLANARIZE_PLANARITY_HPP
#define PLANARIZE_PLANARITY_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "planarize/linalg.hpp"
#include "planarize/point.hpp"
#include "planarize/ratmap.hpp"

namespace planarize {

/// (d+1) x 4 matrix over (p0, p1, p2, q0, q1, q2): entry (i, alpha) is the
/// coefficient of s^(d-i) t^i in phi_alpha(s p + t q).
Matrix<Poly> line_restriction_matrix(const RationalMap& map);

/// The same matrix for one concrete line through p and q.
Matrix<Rational> line_restriction_matrix(const RationalMap& map, std::span<const Rational, 3> p,
                                         std::span<const Rational, 3> q);

/// Every line maps into a plane. Always true for d <= 2; for d = 3 the 4 x 4
/// determinant must vanish identically. Random lines are tried first and
/// any non-zero value rejects at once.
bool is_planarization(const RationalMap& map, std::uint64_t seed = 0);

/// Image contained in a plane: the components are linearly dependent.
bool is_trivial(const RationalMap& map);

/// Linear relations sum b_alpha phi_alpha = 0, canonical integer vectors.
std::vector<std::vector<Rational>> linear_relations(std::span<const Poly> forms);

/// Dual planarization in line coordinates (l0, l1, l2).
struct DualMap {
    std::array<Poly, 4> components;
    int degree = 0;

    /// The dual read as a map P^2 -> P^3 in (x, y, z).
    RationalMap as_map() const;
};

/// Solves sum c_alpha(l) phi_alpha(x) = (l0 x + l1 y + l2 z) m(l, x) for
/// c, clears content and re-checks the divisibility identity. Throws
/// NotAPlanarization, ImageSpansLine (generic lines map into lines) or
/// DegenerateKernel for trivial maps.
DualMap dual_map(const RationalMap& map, std::uint64_t seed = 0);

struct Cotriviality {
    bool cotrivial = false;
    /// Common point of all planes P_lambda when it is unique.
    std::optional<ProjPoint> center;
    bool trivial = false;
    bool image_spans_line = false;
};

Cotriviality cotriviality(const RationalMap& map, std::uint64_t seed = 0);
bool is_cotrivial(const RationalMap& map, std::uint64_t seed = 0);

struct LineAnalysis {
    std::array<Rational, 3> line;
    bool special = false;
    /// P_lambda, canonical integer vector (absent for special lines).
    std::optional<std::vector<Rational>> plane;
    /// sigma_lambda = kappa_P / line, for cubic maps only.
    std::optional<Poly> residual_conic;
};

LineAnalysis plane_of_line(const RationalMap& map, std::span<const Rational, 3> line);

struct SurfaceModel {
    /// Forms in (t, u, v, w), canonical integer form.
    std::vector<Poly> equations;
    int degree = 0;
    int image_dimension = 2;
};

/// Smallest-degree forms F with F(phi_3, phi_0, phi_1, phi_2) = 0, where the
/// target coordinates are t, u, v, w and u, v, w, t receive components
/// 0, 1, 2, 3. Throws DegreeBoundExceeded past dmax.
SurfaceModel implicitize(const RationalMap& map, unsigned dmax = 4, std::uint64_t seed = 0);

struct DegreeFormula {
    int map_degree_squared = 0;
    int surface_degree = 0;
    int topological_degree = 0;
    int base_weight = 0;
    bool holds = false;
};

/// d^2 == surface degree * k + |B|. Throws IncompleteCheck when the base
/// locus or the fibre samples are incomplete.
DegreeFormula degree_formula_check(const RationalMap& map, std::uint64_t seed = 0, unsigned dmax = 4);

/// Dual of the dual equals the map up to one scalar. Requires a planarization
/// that is neither trivial nor co-trivial.
bool double_dual_check(const RationalMap& map, std::uint64_t seed = 0);

}  // namespace planarize

#endif
