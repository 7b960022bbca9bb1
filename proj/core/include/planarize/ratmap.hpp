#ifndef PLANARIZE_RATMAP_HPP
#define PLANARIZE_RATMAP_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "planarize/point.hpp"
#include "planarize/poly.hpp"
#include "planarize/random.hpp"

namespace planarize {

/// Four forms of one degree d in (x, y, z) without common factor. The same
/// object is the linear web spanned by the components.
class RationalMap {
   public:
    /// Divides the raw components by their gcd (kept as extracted_content).
    /// Throws ZeroInput when every component is zero, NonHomogeneous when
    /// degrees disagree and UnsupportedDegree unless 1 <= d <= 3 afterwards.
    static RationalMap normalize(std::array<Poly, 4> raw);

    const std::array<Poly, 4>& components() const noexcept { return components_; }
    const Poly& component(std::size_t alpha) const { return components_[alpha]; }
    const Poly& extracted_content() const noexcept { return content_; }
    int degree() const noexcept { return degree_; }

    /// kappa_c = sum c_alpha phi_alpha.
    Poly web_member(std::span<const Rational> c) const;

    /// `[x^2 : x*y : y^2 : z^2]`.
    std::string str() const;

    friend bool operator==(const RationalMap&, const RationalMap&) = default;

   private:
    RationalMap(std::array<Poly, 4> components, Poly content, int degree)
        : components_(std::move(components)), content_(std::move(content)), degree_(degree) {}

    std::array<Poly, 4> components_;
    Poly content_;
    int degree_;
};

/// Image of a point of P^2, or nullopt when every component vanishes there.
std::optional<ProjPoint> evaluate(const RationalMap& map, const ProjPoint& p);

struct BasePoint {
    ProjPoint point;
    unsigned multiplicity;
};

struct BaseLocus {
    std::vector<BasePoint> points;
    unsigned weight = 0;
    bool complete = true;
    /// The raw components had a common factor, so the original base locus
    /// contained a curve; points and weight refer to the cleared map.
    bool positive_dimensional = false;
};

BaseLocus base_locus(const RationalMap& map, std::uint64_t seed = 0);

/// Minimum of I_b(kappa_c, kappa_c') over 8 seeded random pairs of web
/// members. Throws NotABasePoint.
unsigned base_point_multiplicity(const RationalMap& map, const ProjPoint& b, std::uint64_t seed = 0);

struct Fiber {
    std::vector<ProjPoint> points;
    bool complete = true;
};

/// Points outside the base locus mapping to the rational point y of P^3.
Fiber fiber_over(const RationalMap& map, const ProjPoint& y, std::uint64_t seed = 0);

struct TopologicalDegree {
    unsigned sampled = 0;
    bool samples_complete = true;
};

/// Largest complete fibre over the images of 5 seeded random points.
/// Throws NotASurfaceImage when the Jacobian has generic rank below 3.
TopologicalDegree topological_degree(const RationalMap& map, std::uint64_t seed = 0);

struct JacobianDegeneracy {
    /// minors[alpha] drops row alpha of the 4 x 3 Jacobian matrix.
    std::array<Poly, 4> minors;
    Poly common_factor;
    unsigned generic_rank = 0;
};

JacobianDegeneracy jacobian_degeneracy(const RationalMap& map, std::uint64_t seed = 0);

/// True when b = s * a for one non-zero rational s (componentwise).
bool proportional_tuples(std::span<const Poly> a, std::span<const Poly> b);

/// Scales a tuple jointly to primitive integer coefficients with the first
/// non-zero leading coefficient positive.
void normalize_tuple(std::span<Poly> tuple);

/// Uniform random point of P^2 with small rational coordinates.
std::vector<Rational> random_source_point(Rng& rng);

}  // namespace planarize

#endif
