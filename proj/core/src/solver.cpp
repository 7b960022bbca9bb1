#include "planarize/solver.hpp"

#include <algorithm>

#include "planarize/random.hpp"
#include "planarize/upoly.hpp"

namespace planarize {

namespace {

constexpr int kAttempts = 8;

Poly shear(const Poly& f, const Rational& a, const Rational& b) {
    const Ring& r = f.ring();
    const Poly z = Poly::variable(r, 2);
    std::vector<Poly> images = {Poly::variable(r, 0) + z * a, Poly::variable(r, 1) + z * b, z};
    return f.compose<Rational>(images);
}

// Univariate polynomial in z obtained by fixing (x, y).
UPoly<QuadExt> fix_xy(const Poly& f, const QuadExt& x, const QuadExt& y) {
    const auto parts = f.coefficients_in(2);
    std::vector<QuadExt> c;
    const std::vector<QuadExt> at = {x, y, QuadExt(0)};
    for (const auto& part : parts) c.push_back(part.evaluate<QuadExt>(at));
    return UPoly<QuadExt>(std::move(c));
}

UPoly<Rational> dehomogenize_binary(const Poly& r) {
    // r is a form in (x, y); set y = 1.
    std::vector<Rational> c(static_cast<std::size_t>(std::max(r.total_degree(), 0)) + 1, Rational(0));
    for (const auto& [m, v] : r.terms()) c[m.exponent(0)] += v;
    return UPoly<Rational>(std::move(c));
}

struct Candidate {
    QuadExt x;
    QuadExt y;
};

enum class LiftOutcome { Point, Empty, Collision };

struct Attempt {
    std::vector<ProjPoint> points;
    bool complete = true;
    bool collision = false;
};

bool vanishes_at(std::span<const Poly> forms, const ProjPoint& p) {
    for (const auto& f : forms)
        if (!f.evaluate<QuadExt>(p.coords()).is_zero()) return false;
    return true;
}

std::optional<Attempt> try_shear(std::span<const Poly> forms, Rng& rng) {
    const Rational a = rng.rational();
    const Rational b = rng.rational();
    std::vector<Poly> sheared;
    for (const auto& f : forms) sheared.push_back(shear(f, a, b));
    const unsigned d = static_cast<unsigned>(forms.front().total_degree());

    auto combo = [&]() {
        Poly c(forms.front().ring());
        for (const auto& g : sheared) c += g * rng.nonzero_rational();
        return c;
    };
    std::vector<Poly> combos;
    const std::size_t wanted = sheared.size() == 2 ? 2 : 3;
    for (std::size_t i = 0; i < wanted; ++i) {
        Poly c = sheared.size() == 2 ? sheared[i] : combo();
        if (c.degree_in(2) != static_cast<int>(d)) return std::nullopt;  // (a, b, 1) is a zero
        combos.push_back(std::move(c));
    }
    Poly eliminant(forms.front().ring());
    for (std::size_t i = 0; i < combos.size(); ++i)
        for (std::size_t j = i + 1; j < combos.size(); ++j) {
            const Poly r = resultant(combos[i], combos[j], 2);
            if (r.is_zero()) return std::nullopt;
            eliminant = gcd(eliminant, r);
        }

    std::vector<Candidate> candidates;
    Attempt out;
    if (eliminant.evaluate<Rational>(std::vector<Rational>{1, 0, 0}).is_zero())
        candidates.push_back({QuadExt(1), QuadExt(0)});
    const UPoly<Rational> uni = squarefree_part(dehomogenize_binary(eliminant));
    const RationalFactors factors = factor_low_degree(uni);
    for (const auto& l : factors.linear) candidates.push_back({QuadExt(-l.coeff(0)), QuadExt(1)});
    for (const auto& q : factors.quadratic) {
        const auto [r1, r2] = quadratic_roots(q);
        candidates.push_back({r1, QuadExt(1)});
        candidates.push_back({r2, QuadExt(1)});
    }
    if (!factors.higher.empty()) out.complete = false;

    for (const auto& c : candidates) {
        UPoly<QuadExt> g;
        for (const auto& f : sheared) g = gcd(g, fix_xy(f, c.x, c.y));
        if (g.is_zero()) {
            out.collision = true;  // the whole vertical line lies in the zero set
            continue;
        }
        g = squarefree_part(g);
        if (g.degree() == 0) continue;
        if (g.degree() >= 2) {
            out.collision = true;
            continue;
        }
        const QuadExt z = -g.coeff(0) / g.coeff(1);
        ProjPoint p({c.x + QuadExt(a) * z, c.y + QuadExt(b) * z, z});
        if (!vanishes_at(forms, p)) throw MathError(ErrorKind::Internal, "lifted point is not a solution");
        out.points.push_back(std::move(p));
    }
    return out;
}

}  // namespace

SolveResult solve_projective(std::span<const Poly> input, std::uint64_t seed) {
    std::vector<Poly> forms;
    for (const auto& f : input)
        if (!f.is_zero()) forms.push_back(f);
    if (forms.empty()) throw MathError(ErrorKind::PositiveDimensional, "every form is zero");
    const Ring& ring = forms.front().ring();
    if (ring.size() != 3) throw MathError(ErrorKind::DimensionMismatch, "solve_projective works in P^2");
    const int d = forms.front().total_degree();
    for (const auto& f : forms) {
        f.check_ring(forms.front());
        if (!f.is_homogeneous() || f.total_degree() != d)
            throw MathError(ErrorKind::NonHomogeneous, "solve_projective needs forms of one degree");
    }
    SolveResult result;
    if (d == 0) return result;
    if (!gcd(forms).is_constant())
        throw MathError(ErrorKind::PositiveDimensional, "the forms share a common factor");

    Rng rng(seed);
    std::optional<Attempt> last;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        Rng sub = rng.fork(static_cast<std::uint64_t>(attempt));
        auto a = try_shear(forms, sub);
        if (!a) continue;
        last = std::move(a);
        if (!last->collision) break;
    }
    if (!last) {
        result.complete = false;
        return result;
    }
    result.points = std::move(last->points);
    result.complete = last->complete && !last->collision;
    std::sort(result.points.begin(), result.points.end(), point_less);
    result.points.erase(std::unique(result.points.begin(), result.points.end()), result.points.end());
    return result;
}

}  // namespace planarize
