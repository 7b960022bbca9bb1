#include "planarize/planarity.hpp"

#include "planarize/random.hpp"

namespace planarize {

namespace {

constexpr int kPrefilterLines = 6;

const Ring& dual_check_ring() {
    static const Ring r({"l0", "l1", "l2", "x", "y", "z"});
    return r;
}

Matrix<Rational> coefficient_matrix(std::span<const Poly> forms, const std::vector<Monomial>& monomials) {
    Matrix<Rational> m(monomials.size(), forms.size(), Rational(0));
    for (std::size_t j = 0; j < forms.size(); ++j)
        for (std::size_t i = 0; i < monomials.size(); ++i) m(i, j) = forms[j].coefficient(monomials[i]);
    return m;
}

int common_degree(std::span<const Poly> forms) {
    for (const auto& f : forms)
        if (!f.is_zero()) return f.total_degree();
    return -1;
}

}  // namespace

Matrix<Poly> line_restriction_matrix(const RationalMap& map) {
    const int d = map.degree();
    const Ring& target = Ring::point_pairs();
    Matrix<Poly> m(static_cast<std::size_t>(d + 1), 4, Poly(target));
    for (std::size_t a = 0; a < 4; ++a) {
        const Poly r = restrict_to_line(map.component(a));
        for (const auto& [mono, c] : r.terms()) {
            const std::size_t row = mono.exponent(1);
            std::vector<unsigned> e(6);
            for (std::size_t k = 0; k < 6; ++k) e[k] = mono.exponent(k + 2);
            m(row, a).add_term(Monomial::from_exponents(e), c);
        }
    }
    return m;
}

Matrix<Rational> line_restriction_matrix(const RationalMap& map, std::span<const Rational, 3> p,
                                         std::span<const Rational, 3> q) {
    const int d = map.degree();
    Matrix<Rational> m(static_cast<std::size_t>(d + 1), 4, Rational(0));
    for (std::size_t a = 0; a < 4; ++a) {
        const Poly r = restrict_to_line(map.component(a), p, q);
        for (const auto& [mono, c] : r.terms()) m(mono.exponent(1), a) = c;
    }
    return m;
}

bool is_planarization(const RationalMap& map, std::uint64_t seed) {
    if (map.degree() <= 2) return true;
    Rng rng(seed ^ 0x706c616eULL);
    for (int i = 0; i < kPrefilterLines; ++i) {
        const std::array<Rational, 3> p = {rng.rational(), rng.rational(), rng.rational()};
        const std::array<Rational, 3> q = {rng.rational(), rng.rational(), rng.rational()};
        if (!determinant(line_restriction_matrix(map, p, q)).is_zero()) return false;
    }
    return determinant(line_restriction_matrix(map)).is_zero();
}

std::vector<std::vector<Rational>> linear_relations(std::span<const Poly> forms) {
    const int d = common_degree(forms);
    if (d < 0) {
        std::vector<std::vector<Rational>> all;
        for (std::size_t i = 0; i < forms.size(); ++i) {
            std::vector<Rational> e(forms.size(), Rational(0));
            e[i] = 1;
            all.push_back(std::move(e));
        }
        return all;
    }
    const auto monomials = monomials_of_degree(forms.front().ring().size(), static_cast<unsigned>(d));
    return kernel_basis(coefficient_matrix(forms, monomials));
}

bool is_trivial(const RationalMap& map) { return !linear_relations(map.components()).empty(); }

RationalMap DualMap::as_map() const {
    std::array<Poly, 4> c = {components[0].relabel(Ring::xyz()), components[1].relabel(Ring::xyz()),
                             components[2].relabel(Ring::xyz()), components[3].relabel(Ring::xyz())};
    return RationalMap::normalize(std::move(c));
}

DualMap dual_map(const RationalMap& map, std::uint64_t seed) {
    if (!is_planarization(map, seed)) throw MathError(ErrorKind::NotAPlanarization, map.str());
    if (is_trivial(map)) throw MathError(ErrorKind::DegenerateKernel, "a trivial map has a constant dual");
    const int d = map.degree();
    const Ring& lines = Ring::lines();
    const auto rows = monomials_of_degree(3, static_cast<unsigned>(d));
    const auto mcols = monomials_of_degree(3, static_cast<unsigned>(d - 1));
    Matrix<Poly> sys(rows.size(), 4 + mcols.size(), Poly(lines));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t a = 0; a < 4; ++a)
            sys(i, a) = Poly::constant(lines, map.component(a).coefficient(rows[i]));
        for (std::size_t k = 0; k < mcols.size(); ++k)
            for (std::size_t v = 0; v < 3; ++v)
                if (mcols[k] * Monomial::variable(v) == rows[i]) sys(i, 4 + k) -= Poly::variable(lines, v);
    }
    std::vector<Poly> kernel;
    try {
        kernel = symbolic_kernel_vector(sys, seed);
    } catch (const MathError& e) {
        if (e.kind() == ErrorKind::DegenerateKernel)
            throw MathError(ErrorKind::ImageSpansLine, "generic lines of " + map.str() + " map into lines");
        if (e.kind() == ErrorKind::NoKernel) throw MathError(ErrorKind::Internal, "planarization without dual");
        throw;
    }
    DualMap out{{kernel[0], kernel[1], kernel[2], kernel[3]}, 0};
    const Poly g = gcd(std::span<const Poly>(out.components));
    for (auto& c : out.components) c = *divide_exact(c, g);
    normalize_tuple(out.components);
    out.degree = common_degree(out.components);

    // sum c_alpha(l) phi_alpha(x) must be divisible by l.x.
    const Ring& r6 = dual_check_ring();
    std::vector<Poly> lvars, xvars;
    for (std::size_t i = 0; i < 3; ++i) {
        lvars.push_back(Poly::variable(r6, i));
        xvars.push_back(Poly::variable(r6, 3 + i));
    }
    Poly sum(r6);
    for (std::size_t a = 0; a < 4; ++a)
        sum += out.components[a].compose<Rational>(lvars) * map.component(a).compose<Rational>(xvars);
    const Poly incidence = lvars[0] * xvars[0] + lvars[1] * xvars[1] + lvars[2] * xvars[2];
    if (!divide_exact(sum, incidence)) throw MathError(ErrorKind::Internal, "dual map fails the incidence identity");
    return out;
}

Cotriviality cotriviality(const RationalMap& map, std::uint64_t seed) {
    Cotriviality out;
    if (is_trivial(map)) {
        out.cotrivial = out.trivial = true;
        return out;
    }
    std::optional<DualMap> dual;
    try {
        dual = dual_map(map, seed);
    } catch (const MathError& e) {
        if (e.kind() != ErrorKind::ImageSpansLine) throw;
        out.cotrivial = out.image_spans_line = true;
        return out;
    }
    const auto rel = linear_relations(dual->components);
    if (rel.empty()) return out;
    out.cotrivial = true;
    if (rel.size() == 1) out.center = ProjPoint::rational(rel.front());
    return out;
}

bool is_cotrivial(const RationalMap& map, std::uint64_t seed) { return cotriviality(map, seed).cotrivial; }

LineAnalysis plane_of_line(const RationalMap& map, std::span<const Rational, 3> line) {
    if (line[0].is_zero() && line[1].is_zero() && line[2].is_zero())
        throw MathError(ErrorKind::ZeroInput, "the zero covector is not a line");
    LineAnalysis out{{line[0], line[1], line[2]}, false, std::nullopt, std::nullopt};
    Matrix<Rational> covector(1, 3, Rational(0));
    for (std::size_t i = 0; i < 3; ++i) covector(0, i) = line[i];
    const auto span = kernel_basis(covector);
    const std::array<Rational, 3> p = {span[0][0], span[0][1], span[0][2]};
    const std::array<Rational, 3> q = {span[1][0], span[1][1], span[1][2]};
    const Matrix<Rational> restricted = line_restriction_matrix(map, p, q);
    if (rank(restricted) <= 2) {
        out.special = true;
        return out;
    }
    const auto planes = kernel_basis(restricted);
    if (planes.size() != 1) throw MathError(ErrorKind::NotAPlanarization, "a line is not mapped into a plane");
    out.plane = planes.front();
    if (map.degree() == 3) {
        Poly l(Ring::xyz());
        for (std::size_t i = 0; i < 3; ++i) l.add_term(Monomial::variable(i), line[i]);
        auto q2 = divide_exact(map.web_member(*out.plane), l);
        if (!q2) throw MathError(ErrorKind::Internal, "kappa_P is not divisible by the line");
        out.residual_conic = canonical(*q2);
    }
    return out;
}

SurfaceModel implicitize(const RationalMap& map, unsigned dmax, std::uint64_t seed) {
    const int d = map.degree();
    // Powers phi_alpha^k, alpha in target order (t, u, v, w).
    std::array<std::vector<Poly>, 4> powers;
    for (std::size_t v = 0; v < 4; ++v) {
        std::size_t alpha = 0;
        while (target_var_of_component(alpha) != v) ++alpha;
        powers[v].push_back(Poly::constant(Ring::xyz(), Rational(1)));
        for (unsigned k = 1; k <= dmax; ++k) powers[v].push_back(powers[v].back() * map.component(alpha));
    }
    for (unsigned D = 1; D <= dmax; ++D) {
        const auto targets = monomials_of_degree(4, D);
        const auto rows = monomials_of_degree(3, D * static_cast<unsigned>(d));
        std::vector<Poly> images;
        images.reserve(targets.size());
        for (const auto& t : targets) {
            Poly img = powers[0][t.exponent(0)];
            for (std::size_t v = 1; v < 4; ++v)
                if (t.exponent(v) > 0) img = img * powers[v][t.exponent(v)];
            images.push_back(std::move(img));
        }
        const auto kernel = kernel_basis(coefficient_matrix(images, rows));
        if (kernel.empty()) continue;
        SurfaceModel out;
        out.degree = static_cast<int>(D);
        for (const auto& v : kernel) {
            Poly f(Ring::tuvw());
            for (std::size_t j = 0; j < targets.size(); ++j) f.add_term(targets[j], v[j]);
            f = canonical(f);
            // Re-check F(phi) == 0.
            Poly check(Ring::xyz());
            for (std::size_t j = 0; j < targets.size(); ++j)
                if (!v[j].is_zero()) check += images[j] * v[j];
            if (!check.is_zero()) throw MathError(ErrorKind::Internal, "implicit equation does not annihilate");
            out.equations.push_back(std::move(f));
        }
        const bool curve_like = kernel.size() > 1 || jacobian_degeneracy(map, seed).generic_rank <= 2;
        out.image_dimension = curve_like ? 1 : 2;
        return out;
    }
    throw MathError(ErrorKind::DegreeBoundExceeded, "no annihilating form of degree <= " + std::to_string(dmax));
}

DegreeFormula degree_formula_check(const RationalMap& map, std::uint64_t seed, unsigned dmax) {
    const BaseLocus base = base_locus(map, seed);
    if (!base.complete) throw MathError(ErrorKind::IncompleteCheck, "base locus of " + map.str() + " is incomplete");
    const SurfaceModel surface = implicitize(map, dmax, seed);
    if (surface.image_dimension != 2) throw MathError(ErrorKind::NotASurfaceImage, map.str());
    const TopologicalDegree k = topological_degree(map, seed);
    if (!k.samples_complete || k.sampled == 0)
        throw MathError(ErrorKind::IncompleteCheck, "fibre samples of " + map.str() + " are incomplete");
    DegreeFormula out;
    out.map_degree_squared = map.degree() * map.degree();
    out.surface_degree = surface.degree;
    out.topological_degree = static_cast<int>(k.sampled);
    out.base_weight = static_cast<int>(base.weight);
    out.holds = out.map_degree_squared == out.surface_degree * out.topological_degree + out.base_weight;
    return out;
}

bool double_dual_check(const RationalMap& map, std::uint64_t seed) {
    const RationalMap dual = dual_map(map, seed).as_map();
    if (is_trivial(dual)) throw MathError(ErrorKind::DegenerateKernel, "co-trivial map: the dual is trivial");
    const RationalMap twice = dual_map(dual, seed).as_map();
    return proportional_tuples(map.components(), twice.components());
}

}  // namespace planarize
