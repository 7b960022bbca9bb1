#ifndef PLANARIZE_RANDOM_HPP
#define PLANARIZE_RANDOM_HPP

#include <cstdint>
#include <random>

#include "planarize/scalar.hpp"

namespace planarize {

/// Seeded generator used by every randomized routine. Draws are computed
/// from raw mt19937_64 output (no std distributions), so results are
/// identical across standard library implementations.
class Rng {
   public:
    static constexpr long kBound = 97;

    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Uniform integer in [lo, hi].
    long uniform(long lo, long hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(gen_() % span);
    }

    long nonzero(long bound = kBound) {
        long v = uniform(1, bound);
        return uniform(0, 1) == 0 ? v : -v;
    }

    /// Rational with |numerator| <= 97 and 1 <= denominator <= 97.
    Rational rational() { return Rational(Integer(uniform(-kBound, kBound)), Integer(uniform(1, kBound))); }

    Rational nonzero_rational() { return Rational(Integer(nonzero()), Integer(uniform(1, kBound))); }

    /// Derives an independent stream for a sub-computation.
    Rng fork(std::uint64_t salt) { return Rng(gen_() ^ (salt * 0x9e3779b97f4a7c15ULL)); }

   private:
    std::mt19937_64 gen_;
};

}  // namespace planarize

#endif
