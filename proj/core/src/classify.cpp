#include "planarize/classify.hpp"

#include "planarize/parser.hpp"
#include "planarize/planarity.hpp"

namespace planarize {

namespace {

using QMatrix = Matrix<QuadExt>;

QMatrix to_quad(const Matrix<Rational>& m) {
    QMatrix out(m.rows(), m.cols(), QuadExt(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
    return out;
}

std::array<QuadExt, 3> cross(std::span<const QuadExt> a, std::span<const QuadExt> b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// mu with phi = mu . images, or nullopt.
std::optional<QMatrix> target_change(const RationalMap& phi, const std::array<QPoly, 4>& images) {
    const auto monomials = monomials_of_degree(3, static_cast<unsigned>(phi.degree()));
    QMatrix a(monomials.size(), 4, QuadExt(0));
    for (std::size_t i = 0; i < monomials.size(); ++i)
        for (std::size_t b = 0; b < 4; ++b) a(i, b) = images[b].coefficient(monomials[i]);
    QMatrix mu(4, 4, QuadExt(0));
    for (std::size_t alpha = 0; alpha < 4; ++alpha) {
        std::vector<QuadExt> rhs;
        for (const auto& m : monomials) rhs.emplace_back(phi.component(alpha).coefficient(m));
        const auto row = solve(a, std::span<const QuadExt>(rhs));
        if (!row) return std::nullopt;
        for (std::size_t b = 0; b < 4; ++b) mu(alpha, b) = (*row)[b];
    }
    return mu;
}

std::optional<EquivalenceWitness> complete_witness(const RationalMap& phi, QuadricClass label, QMatrix eta) {
    EquivalenceWitness w{std::move(eta), identity<QuadExt>(4)};
    const auto mu = target_change(phi, apply_witness(quadric_normal_form(label), w));
    if (!mu) throw MathError(ErrorKind::Internal, "normal form does not span the web of " + phi.str());
    w.mu = *mu;
    return w;
}

// Symmetric matrix of a quadric in (t, u, v, w), indexed by component.
Matrix<Rational> quadric_matrix(const Poly& f) {
    Matrix<Rational> m(4, 4, Rational(0));
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = a; b < 4; ++b) {
            const std::size_t va = target_var_of_component(a), vb = target_var_of_component(b);
            const Rational c = f.coefficient(Monomial::variable(va) * Monomial::variable(vb));
            if (a == b) {
                m(a, a) = c;
            } else {
                m(a, b) = c / Rational(2);
                m(b, a) = m(a, b);
            }
        }
    return m;
}

std::optional<EquivalenceWitness> smooth_witness(const RationalMap& phi, QuadricClass label, const ProjPoint& a,
                                                 const ProjPoint& b) {
    const auto line = cross(a.coords(), b.coords());
    std::size_t j = 0;
    while (line[j].is_zero()) ++j;
    std::vector<QuadExt> c(3, QuadExt(0));
    c[j] = 1;
    QMatrix inv(3, 3, QuadExt(0));
    for (std::size_t i = 0; i < 3; ++i) {
        inv(i, 0) = c[i];
        if (label == QuadricClass::Phi1b) {
            // a = r + sqrt(D) s with D < 0; send r to e1 and sqrt(-D) s to e2.
            const Integer d = -a.field_disc();
            inv(i, 1) = a[i].a();
            if (d == 1 || a[i].b().is_zero())
                inv(i, 2) = a[i].b();
            else
                inv(i, 2) = QuadExt(Rational(0), a[i].b(), d);
        } else {
            inv(i, 1) = a[i];
            inv(i, 2) = b[i];
        }
    }
    const auto eta = inverse(inv);
    if (!eta) throw MathError(ErrorKind::Internal, "base points and auxiliary point are collinear");
    return complete_witness(phi, label, *eta);
}

QuadricClassification classify_smooth(const RationalMap& map, FieldMode mode, std::uint64_t seed) {
    const BaseLocus base = base_locus(map, seed);
    if (base.points.size() != 2 || !base.complete)
        throw MathError(ErrorKind::Internal, "a smooth quadric image needs exactly two base points");
    const ProjPoint& a = base.points[0].point;
    const ProjPoint& b = base.points[1].point;
    QuadricClassification out;
    out.quadric_rank = 4;
    if (mode == FieldMode::Complex)
        out.label = QuadricClass::Phi1;
    else
        out.label = a.field_disc() < 0 ? QuadricClass::Phi1b : QuadricClass::Phi1a;
    try {
        out.witness = smooth_witness(map, out.label, a, b);
    } catch (const MathError& e) {
        if (e.kind() != ErrorKind::IncompatibleDisc) throw;
    }
    return out;
}

QuadricClassification classify_cone(const RationalMap& map, const Matrix<Rational>& q) {
    QuadricClassification out;
    out.quadric_rank = 3;
    const auto vertex = kernel_basis(q).front();

    // Web members through the vertex span Sym^2 of a pencil <psi0, psi1>.
    Matrix<Rational> through(1, 4, Rational(0));
    for (std::size_t a = 0; a < 4; ++a) through(0, a) = vertex[a];
    Matrix<Rational> grads(9, 3, Rational(0));
    std::size_t row = 0;
    for (const auto& l : kernel_basis(through)) {
        const Poly g = map.web_member(l);
        for (std::size_t v = 0; v < 3; ++v, ++row) {
            const Poly dg = g.derivative(v);
            for (std::size_t i = 0; i < 3; ++i) grads(row, i) = dg.coefficient(Monomial::variable(i));
        }
    }
    const auto [pencil, pivots] = reduced_row_echelon(grads);
    if (pivots.size() != 2) throw MathError(ErrorKind::Internal, "cone web is not a square of a pencil");
    Matrix<Rational> t(3, 3, Rational(0));
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 3; ++j) t(i, j) = pencil(i, j);
    std::size_t free = 0;
    while (free == pivots[0] || free == pivots[1]) ++free;
    t(2, free) = 1;

    // phi3: any member not through the vertex, written in y = T x.
    std::size_t alpha = 0;
    while (vertex[alpha].is_zero()) ++alpha;
    const Matrix<Rational> tinv = *inverse(t);
    std::vector<Poly> images;
    for (std::size_t i = 0; i < 3; ++i) {
        Poly e(Ring::xyz());
        for (std::size_t j = 0; j < 3; ++j) e.add_term(Monomial::variable(j), tinv(i, j));
        images.push_back(std::move(e));
    }
    const Poly phi3 = map.component(alpha).compose<Rational>(images);
    const Rational a0 = phi3.coefficient(Monomial::variable(0) * Monomial::variable(2));
    const Rational a1 = phi3.coefficient(Monomial::variable(1) * Monomial::variable(2));
    const Rational a2 = phi3.coefficient(Monomial::variable(2, 2));

    QMatrix s = identity<QuadExt>(3);
    if (a2.is_zero()) {
        out.label = QuadricClass::Phi2;
        if (a0.is_zero() && a1.is_zero()) throw MathError(ErrorKind::Internal, "phi3 lies in the pencil square");
        if (!a0.is_zero()) {
            s(0, 0) = a0;
            s(0, 1) = a1;
        } else {
            s(0, 0) = 0;
            s(0, 1) = a1;
            s(1, 0) = 1;
            s(1, 1) = 0;
        }
    } else {
        out.label = QuadricClass::Phi3;
        const QuadExt r = sqrt_in_field(a2.sign() < 0 ? -a2 : a2);
        const Rational c0 = -a0 / (Rational(2) * a2), c1 = -a1 / (Rational(2) * a2);
        s(2, 0) = -r * QuadExt(c0);
        s(2, 1) = -r * QuadExt(c1);
        s(2, 2) = r;
    }
    out.witness = complete_witness(map, out.label, multiply(s, to_quad(t)));
    return out;
}

}  // namespace

EquivalenceWitness identity_witness() { return {identity<QuadExt>(3), identity<QuadExt>(4)}; }

std::array<QPoly, 4> apply_witness(const RationalMap& phi_prime, const EquivalenceWitness& w) {
    if (w.eta.rows() != 3 || w.eta.cols() != 3 || w.mu.rows() != 4 || w.mu.cols() != 4)
        throw MathError(ErrorKind::InvalidWitness, "witness needs a 3x3 eta and a 4x4 mu");
    std::vector<QPoly> images;
    for (std::size_t i = 0; i < 3; ++i) {
        QPoly e(Ring::xyz());
        for (std::size_t j = 0; j < 3; ++j) e.add_term(Monomial::variable(j), w.eta(i, j));
        images.push_back(std::move(e));
    }
    std::array<QPoly, 4> moved = {QPoly(Ring::xyz()), QPoly(Ring::xyz()), QPoly(Ring::xyz()), QPoly(Ring::xyz())};
    for (std::size_t b = 0; b < 4; ++b)
        moved[b] = phi_prime.component(b).compose<QuadExt>(std::span<const QPoly>(images));
    std::array<QPoly, 4> out = {QPoly(Ring::xyz()), QPoly(Ring::xyz()), QPoly(Ring::xyz()), QPoly(Ring::xyz())};
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b)
            if (!w.mu(a, b).is_zero()) out[a] += moved[b] * w.mu(a, b);
    return out;
}

bool verify_equivalence(const RationalMap& phi, const RationalMap& phi_prime, const EquivalenceWitness& w) {
    if (w.eta.rows() != 3 || w.eta.cols() != 3 || w.mu.rows() != 4 || w.mu.cols() != 4)
        throw MathError(ErrorKind::InvalidWitness, "witness needs a 3x3 eta and a 4x4 mu");
    if (determinant(w.eta).is_zero()) throw MathError(ErrorKind::InvalidWitness, "eta is singular");
    if (determinant(w.mu).is_zero()) throw MathError(ErrorKind::InvalidWitness, "mu is singular");
    const auto moved = apply_witness(phi_prime, w);
    std::optional<QuadExt> ratio;
    for (std::size_t a = 0; a < 4; ++a) {
        const QPoly target = phi.component(a).convert<QuadExt>();
        if (target.is_zero() != moved[a].is_zero()) return false;
        if (target.is_zero()) continue;
        if (!ratio) ratio = moved[a].leading_coefficient() / target.leading_coefficient();
        if (!(target * *ratio == moved[a])) return false;
    }
    return ratio.has_value();
}

std::string to_string(QuadricClass c) {
    switch (c) {
        case QuadricClass::Phi1: return "Phi1";
        case QuadricClass::Phi1a: return "Phi1a";
        case QuadricClass::Phi1b: return "Phi1b";
        case QuadricClass::Phi2: return "Phi2";
        case QuadricClass::Phi3: return "Phi3";
    }
    return "?";
}

RationalMap quadric_normal_form(QuadricClass c) {
    switch (c) {
        case QuadricClass::Phi1:
        case QuadricClass::Phi1a: return parse_rational_map("[x^2 : x*y : x*z : y*z]");
        case QuadricClass::Phi1b: return parse_rational_map("[x^2 : x*y : x*z : y^2+z^2]");
        case QuadricClass::Phi2: return parse_rational_map("[x^2 : x*y : y^2 : x*z]");
        case QuadricClass::Phi3: return parse_rational_map("[x^2 : x*y : y^2 : z^2]");
    }
    throw MathError(ErrorKind::Internal, "unknown quadric class");
}

QuadricClassification classify_quadric_image(const RationalMap& map, FieldMode mode, std::uint64_t seed) {
    if (map.degree() != 2) throw MathError(ErrorKind::NotAQuadricImageMap, "map degree is not 2");
    if (is_trivial(map)) throw MathError(ErrorKind::NotAQuadricImageMap, "image lies in a plane");
    SurfaceModel surface;
    try {
        surface = implicitize(map, 2, seed);
    } catch (const MathError& e) {
        if (e.kind() != ErrorKind::DegreeBoundExceeded) throw;
        throw MathError(ErrorKind::NotAQuadricImageMap, "image is not contained in a quadric");
    }
    if (surface.image_dimension != 2 || surface.degree != 2)
        throw MathError(ErrorKind::NotAQuadricImageMap, "image is not a quadric surface");
    const Matrix<Rational> q = quadric_matrix(surface.equations.front());
    const std::size_t r = rank(q);
    if (r == 4) return classify_smooth(map, mode, seed);
    if (r == 3) return classify_cone(map, q);
    throw MathError(ErrorKind::NotAQuadricImageMap, "image quadric is reducible");
}

}  // namespace planarize
