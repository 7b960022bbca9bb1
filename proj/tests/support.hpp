#ifndef PLANARIZE_TESTS_SUPPORT_HPP
#define PLANARIZE_TESTS_SUPPORT_HPP

#include <array>
#include <string_view>

#include "planarize/catalog.hpp"
#include "planarize/classify.hpp"
#include "planarize/linalg.hpp"
#include "planarize/parser.hpp"
#include "planarize/random.hpp"

namespace planarize::testing {

inline const Poly X = Poly::variable(Ring::xyz(), 0);
inline const Poly Y = Poly::variable(Ring::xyz(), 1);
inline const Poly Z = Poly::variable(Ring::xyz(), 2);

inline Poly P(std::string_view text) { return parse_poly(text); }
inline RationalMap M(std::string_view text) { return parse_rational_map(text); }
inline const RationalMap& form(std::string_view label) { return find_normal_form(label)->map; }

inline Matrix<QuadExt> random_invertible(Rng& rng, std::size_t n) {
    Matrix<QuadExt> m(n, n, QuadExt(0));
    do {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.rational();
    } while (determinant(m).is_zero());
    return m;
}

inline EquivalenceWitness random_witness(Rng& rng) {
    auto eta = random_invertible(rng, 3);
    auto mu = random_invertible(rng, 4);
    return {std::move(eta), std::move(mu)};
}

// mu . phi(eta x) as a rational map; the witness must be rational.
inline RationalMap conjugate(const RationalMap& phi, const EquivalenceWitness& w) {
    const auto q = apply_witness(phi, w);
    std::array<Poly, 4> comps{Poly(Ring::xyz()), Poly(Ring::xyz()), Poly(Ring::xyz()), Poly(Ring::xyz())};
    for (std::size_t a = 0; a < 4; ++a)
        for (const auto& [m, c] : q[a].terms()) comps[a].add_term(m, c.to_rational());
    return RationalMap::normalize(comps);
}

// Random form of one degree in (x, y, z) with small integer coefficients.
inline Poly random_form(Rng& rng, unsigned degree, long bound = 5) {
    Poly p(Ring::xyz());
    for (const auto& m : monomials_of_degree(3, degree))
        if (rng.uniform(0, 2) != 0) p.add_term(m, Rational(rng.uniform(-bound, bound)));
    return p;
}

}  // namespace planarize::testing

#endif
