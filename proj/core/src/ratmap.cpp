#include "planarize/ratmap.hpp"

#include <algorithm>
#include <limits>

#include "planarize/intersection.hpp"
#include "planarize/linalg.hpp"
#include "planarize/random.hpp"
#include "planarize/solver.hpp"

namespace planarize {

namespace {

constexpr int kMultiplicityPairs = 8;
constexpr int kDegreeSamples = 5;

const Ring& chart_ring() {
    static const Ring r({"a", "b"});
    return r;
}

// Sets coordinate `chart` to 1; the remaining two become the chart variables.
Poly dehomogenize(const Poly& f, std::size_t chart) {
    const Ring& r = chart_ring();
    std::vector<Poly> images;
    std::size_t next = 0;
    for (std::size_t i = 0; i < 3; ++i)
        images.push_back(i == chart ? Poly::constant(r, Rational(1)) : Poly::variable(r, next++));
    return f.compose<Rational>(images);
}

}  // namespace

RationalMap RationalMap::normalize(std::array<Poly, 4> raw) {
    int degree = -1;
    for (const auto& p : raw) {
        if (!(p.ring() == Ring::xyz()) && !p.is_zero())
            throw MathError(ErrorKind::RingMismatch, "map components must be forms in x, y, z");
        if (p.is_zero()) continue;
        if (!p.is_homogeneous()) throw MathError(ErrorKind::NonHomogeneous, "component " + to_string(p));
        if (degree >= 0 && p.total_degree() != degree)
            throw MathError(ErrorKind::NonHomogeneous, "components have different degrees");
        degree = p.total_degree();
    }
    if (degree < 0) throw MathError(ErrorKind::ZeroInput, "all components are zero");
    for (auto& p : raw)
        if (p.is_zero()) p = Poly(Ring::xyz());
    const Poly content = gcd(std::span<const Poly>(raw));
    for (auto& p : raw) p = *divide_exact(p, content);
    const int d = degree - content.total_degree();
    if (d < 1 || d > 3)
        throw MathError(ErrorKind::UnsupportedDegree,
                        "map degree after clearing is " + std::to_string(d) + ", expected 1, 2 or 3");
    return RationalMap(std::move(raw), content, d);
}

Poly RationalMap::web_member(std::span<const Rational> c) const {
    if (c.size() != 4) throw MathError(ErrorKind::DimensionMismatch, "web member needs 4 coefficients");
    Poly k(Ring::xyz());
    for (std::size_t i = 0; i < 4; ++i) k += components_[i] * c[i];
    return k;
}

std::string RationalMap::str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < 4; ++i) {
        if (i) out += " : ";
        out += to_string(components_[i]);
    }
    return out + "]";
}

std::optional<ProjPoint> evaluate(const RationalMap& map, const ProjPoint& p) {
    if (p.size() != 3) throw MathError(ErrorKind::DimensionMismatch, "source points live in P^2");
    std::vector<QuadExt> image;
    bool all_zero = true;
    for (const auto& f : map.components()) {
        image.push_back(f.evaluate<QuadExt>(p.coords()));
        all_zero = all_zero && image.back().is_zero();
    }
    if (all_zero) return std::nullopt;
    return ProjPoint(std::move(image));
}

bool proportional_tuples(std::span<const Poly> a, std::span<const Poly> b) {
    if (a.size() != b.size()) return false;
    std::optional<Rational> ratio;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero() != b[i].is_zero()) return false;
        if (a[i].is_zero()) continue;
        if (!ratio) ratio = b[i].leading_coefficient() / a[i].leading_coefficient();
        if (!(a[i] * *ratio == b[i])) return false;
    }
    return ratio.has_value();
}

void normalize_tuple(std::span<Poly> tuple) {
    Integer den_lcm = 1, num_gcd = 0;
    int sign = 0;
    for (const auto& p : tuple)
        for (const auto& [m, c] : p.terms()) {
            const Integer d = c.denominator();
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        }
    for (const auto& p : tuple) {
        if (sign == 0 && !p.is_zero()) sign = p.leading_coefficient().sign();
        for (const auto& [m, c] : p.terms()) {
            const Integer n = c.numerator() * (den_lcm / c.denominator());
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        }
    }
    if (sign == 0) return;
    Rational scale(den_lcm, num_gcd);
    if (sign < 0) scale = -scale;
    for (auto& p : tuple) p *= scale;
}

std::vector<Rational> random_source_point(Rng& rng) {
    while (true) {
        std::vector<Rational> p = {rng.rational(), rng.rational(), rng.rational()};
        if (!(p[0].is_zero() && p[1].is_zero() && p[2].is_zero())) return p;
    }
}

BaseLocus base_locus(const RationalMap& map, std::uint64_t seed) {
    BaseLocus out;
    out.positive_dimensional = !map.extracted_content().is_constant();
    const SolveResult sol = solve_projective(map.components(), seed);
    out.complete = sol.complete;
    for (const auto& p : sol.points) {
        const unsigned m = base_point_multiplicity(map, p, seed);
        out.points.push_back({p, m});
        out.weight += m;
    }
    return out;
}

unsigned base_point_multiplicity(const RationalMap& map, const ProjPoint& b, std::uint64_t seed) {
    if (evaluate(map, b)) throw MathError(ErrorKind::NotABasePoint, b.str() + " has an image");
    std::size_t chart = 0;
    while (b[chart].is_zero()) ++chart;
    std::vector<QuadExt> affine;
    for (std::size_t i = 0; i < 3; ++i)
        if (i != chart) affine.push_back(b[i] / b[chart]);
    std::array<Poly, 4> local = {dehomogenize(map.component(0), chart), dehomogenize(map.component(1), chart),
                                 dehomogenize(map.component(2), chart), dehomogenize(map.component(3), chart)};
    Rng rng(seed ^ 0x6d756c74ULL);
    unsigned best = std::numeric_limits<unsigned>::max();
    for (int i = 0; i < kMultiplicityPairs; ++i) {
        Poly f(chart_ring()), g(chart_ring());
        for (std::size_t a = 0; a < 4; ++a) {
            f += local[a] * rng.rational();
            g += local[a] * rng.rational();
        }
        if (f.is_zero() || g.is_zero()) continue;
        const auto m = intersection_multiplicity(f, g, affine);
        if (m) best = std::min(best, *m);
    }
    if (best == std::numeric_limits<unsigned>::max())
        throw MathError(ErrorKind::Internal, "no web pair meets properly at " + b.str());
    return best;
}

Fiber fiber_over(const RationalMap& map, const ProjPoint& y, std::uint64_t seed) {
    if (y.size() != 4) throw MathError(ErrorKind::DimensionMismatch, "fibres are taken over points of P^3");
    const std::vector<Rational> yc = y.rational_coords();
    std::vector<Poly> eqs;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) {
            Poly e = map.component(i) * yc[j] - map.component(j) * yc[i];
            if (!e.is_zero()) eqs.push_back(std::move(e));
        }
    Fiber out;
    if (eqs.empty()) throw MathError(ErrorKind::PositiveDimensional, "the whole plane maps to " + y.str());
    const SolveResult sol = solve_projective(eqs, seed);
    out.complete = sol.complete;
    for (const auto& p : sol.points) {
        const auto img = evaluate(map, p);
        if (!img) continue;
        if (!(*img == y)) throw MathError(ErrorKind::Internal, "fibre point " + p.str() + " maps elsewhere");
        out.points.push_back(p);
    }
    return out;
}

TopologicalDegree topological_degree(const RationalMap& map, std::uint64_t seed) {
    if (jacobian_degeneracy(map, seed).generic_rank < 3)
        throw MathError(ErrorKind::NotASurfaceImage, "the image of " + map.str() + " is not a surface");
    Rng rng(seed ^ 0x746f706fULL);
    TopologicalDegree out;
    int taken = 0;
    while (taken < kDegreeSamples) {
        const ProjPoint x = ProjPoint::rational(random_source_point(rng));
        const auto y = evaluate(map, x);
        if (!y) continue;
        ++taken;
        Fiber f;
        try {
            f = fiber_over(map, *y, rng.fork(static_cast<std::uint64_t>(taken)).uniform(0, 1L << 40));
        } catch (const MathError& e) {
            if (e.kind() != ErrorKind::PositiveDimensional) throw;
            out.samples_complete = false;
            continue;
        }
        if (!f.complete) {
            out.samples_complete = false;
            continue;
        }
        out.sampled = std::max(out.sampled, static_cast<unsigned>(f.points.size()));
    }
    return out;
}

JacobianDegeneracy jacobian_degeneracy(const RationalMap& map, std::uint64_t seed) {
    JacobianDegeneracy out{{Poly(Ring::xyz()), Poly(Ring::xyz()), Poly(Ring::xyz()), Poly(Ring::xyz())},
                           Poly(Ring::xyz()),
                           0};
    Matrix<Poly> jac(4, 3, Poly(Ring::xyz()));
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t j = 0; j < 3; ++j) jac(a, j) = map.component(a).derivative(j);
    for (std::size_t a = 0; a < 4; ++a) {
        std::vector<std::size_t> rows;
        for (std::size_t r = 0; r < 4; ++r)
            if (r != a) rows.push_back(r);
        out.minors[a] = determinant(jac.select_rows(rows));
    }
    out.common_factor = gcd(std::span<const Poly>(out.minors));
    Rng rng(seed ^ 0x6a61636fULL);
    const std::vector<Rational> pt = {rng.nonzero_rational(), rng.nonzero_rational(), rng.nonzero_rational()};
    out.generic_rank = static_cast<unsigned>(rank(evaluate(jac, pt)));
    return out;
}

}  // namespace planarize
