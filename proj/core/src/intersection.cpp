#include "planarize/intersection.hpp"

namespace planarize {

namespace {

// Coefficients of P(x, 0), index = power of x.
std::vector<QuadExt> restrict_to_x_axis(const QPoly& p) {
    std::vector<QuadExt> c;
    for (const auto& [m, v] : p.terms()) {
        if (m.exponent(1) != 0) continue;
        const unsigned e = m.exponent(0);
        if (c.size() <= e) c.resize(e + 1, QuadExt(0));
        c[e] = v;
    }
    while (!c.empty() && c.back().is_zero()) c.pop_back();
    return c;
}

unsigned lowest_power(const std::vector<QuadExt>& c) {
    unsigned i = 0;
    while (c[i].is_zero()) ++i;
    return i;
}

QPoly translate(const Poly& p, std::span<const QuadExt> at) {
    const Ring& r = p.ring();
    std::vector<QPoly> images;
    for (std::size_t i = 0; i < 2; ++i)
        images.push_back(QPoly::variable(r, i) + QPoly::constant(r, at[i]));
    return p.compose<QuadExt>(images);
}

}  // namespace

std::optional<unsigned> intersection_multiplicity(const Poly& f, const Poly& g, std::span<const QuadExt> p) {
    f.check_ring(g);
    if (f.ring().size() != 2 || p.size() != 2)
        throw MathError(ErrorKind::DimensionMismatch, "intersection_multiplicity works in the affine plane");
    if (f.is_zero() && g.is_zero()) throw MathError(ErrorKind::ZeroInput, "both curves are zero");

    const Poly common = gcd(f, g);
    if (!common.is_constant() && common.evaluate<QuadExt>(p).is_zero()) return std::nullopt;
    if (f.is_zero() || g.is_zero()) return 0u;  // the other curve misses p, else common(p) = 0

    QPoly a = translate(*divide_exact(f, common), p);
    QPoly b = translate(*divide_exact(g, common), p);
    const Ring& ring = a.ring();
    const QPoly y = QPoly::variable(ring, 1);

    unsigned total = 0;
    for (int guard = 0; guard < 100000; ++guard) {
        if (!a.constant_term().is_zero() || !b.constant_term().is_zero()) return total;
        auto ax = restrict_to_x_axis(a);
        auto bx = restrict_to_x_axis(b);
        // Arrange deg a(x,0) <= deg b(x,0), an identically zero restriction
        // counting as infinite degree.
        const bool swap = ax.empty() || (!bx.empty() && bx.size() < ax.size());
        if (swap) {
            std::swap(a, b);
            std::swap(ax, bx);
        }
        if (ax.empty()) throw MathError(ErrorKind::Internal, "coprime curves both contain y = 0");
        if (bx.empty()) {
            // b = y * h, and I(a, y) is the order of a(x, 0) at 0.
            total += lowest_power(ax);
            b = *divide_exact(b, y);
            continue;
        }
        const std::size_t shift = bx.size() - ax.size();
        b = b * ax.back() - (a * bx.back()).mul_monomial(Monomial::variable(0, static_cast<unsigned>(shift)));
    }
    throw MathError(ErrorKind::Internal, "intersection multiplicity did not terminate");
}

}  // namespace planarize
