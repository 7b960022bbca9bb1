#ifndef PLANARIZE_POINT_HPP
#define PLANARIZE_POINT_HPP

#include <string>
#include <vector>

#include "planarize/scalar.hpp"

namespace planarize {

/// Point of P^2 or P^3 with coordinates in Q or one Q(sqrt(D)), scaled so
/// that the first non-zero coordinate is 1.
class ProjPoint {
   public:
    explicit ProjPoint(std::vector<QuadExt> coords);
    static ProjPoint rational(std::vector<Rational> coords);

    const std::vector<QuadExt>& coords() const noexcept { return coords_; }
    std::size_t size() const noexcept { return coords_.size(); }
    const QuadExt& operator[](std::size_t i) const { return coords_[i]; }

    /// 0 for rational points.
    const Integer& field_disc() const noexcept { return disc_; }
    bool is_rational() const noexcept { return disc_ == 0; }
    /// Requires is_rational().
    std::vector<Rational> rational_coords() const;
    ProjPoint conjugate() const;

    /// `[1:0:-1/2]`, irrational entries as `1/2*sqrt(-3)` etc.
    std::string str() const;

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.coords_ == b.coords_; }

   private:
    std::vector<QuadExt> coords_;
    Integer disc_ = 0;
};

/// Orders points by their text, which is deterministic and readable.
bool point_less(const ProjPoint& a, const ProjPoint& b);

}  // namespace planarize

#endif
