#include "planarize/poly.hpp"

#include <algorithm>
#include <numeric>

#include "planarize/linalg.hpp"
#include "planarize/upoly.hpp"

namespace planarize {

// ---- Monomial ------------------------------------------------------------

Monomial Monomial::variable(std::size_t var, unsigned exponent) {
    if (var >= kMaxVars) throw MathError(ErrorKind::DimensionMismatch, "too many variables");
    if (exponent > kMaxDegree) throw MathError(ErrorKind::UnsupportedDegree, "exponent too large");
    Monomial m;
    m.packed_ = static_cast<std::uint64_t>(exponent) << shift(var);
    m.degree_ = exponent;
    return m;
}

Monomial Monomial::from_exponents(std::span<const unsigned> exps) {
    if (exps.size() > kMaxVars) throw MathError(ErrorKind::DimensionMismatch, "too many variables");
    Monomial m;
    for (std::size_t i = 0; i < exps.size(); ++i) m = m * variable(i, exps[i]);
    return m;
}

Monomial Monomial::with_exponent(std::size_t var, unsigned exponent) const {
    Monomial m = *this;
    m.degree_ = m.degree_ - this->exponent(var) + exponent;
    if (m.degree_ > kMaxDegree) throw MathError(ErrorKind::UnsupportedDegree, "monomial degree too large");
    m.packed_ &= ~(std::uint64_t{0xff} << shift(var));
    m.packed_ |= static_cast<std::uint64_t>(exponent) << shift(var);
    return m;
}

bool Monomial::divides(const Monomial& other) const noexcept {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < kMaxVars; ++i)
        if (exponent(i) > other.exponent(i)) return false;
    return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
    Monomial m;
    m.packed_ = other.packed_ - packed_;
    m.degree_ = other.degree_ - degree_;
    return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.degree_ + b.degree_ > Monomial::kMaxDegree)
        throw MathError(ErrorKind::UnsupportedDegree, "monomial degree too large");
    Monomial m;
    m.packed_ = a.packed_ + b.packed_;
    m.degree_ = a.degree_ + b.degree_;
    return m;
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree) {
    std::vector<Monomial> out;
    if (nvars == 0) {
        if (degree == 0) out.emplace_back();
        return out;
    }
    std::vector<unsigned> exps(nvars, 0);
    // Enumerate compositions in descending lex order of the exponent vector.
    auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
        if (i + 1 == nvars) {
            exps[i] = left;
            out.push_back(Monomial::from_exponents(exps));
            return;
        }
        for (unsigned e = left + 1; e-- > 0;) {
            exps[i] = e;
            self(self, i + 1, left - e);
        }
    };
    rec(rec, 0, degree);
    return out;
}

// ---- Ring ----------------------------------------------------------------

Ring::Ring(std::vector<std::string> names) {
    if (names.size() > Monomial::kMaxVars)
        throw MathError(ErrorKind::DimensionMismatch, "at most eight variables are supported");
    vars_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < vars_->size(); ++i)
        if ((*vars_)[i] == name) return i;
    return std::nullopt;
}

std::size_t Ring::require(std::string_view name) const {
    auto i = index_of(name);
    if (!i) throw MathError(ErrorKind::VariableAbsent, "no variable " + std::string(name));
    return *i;
}

const Ring& Ring::xyz() {
    static const Ring r({"x", "y", "z"});
    return r;
}
const Ring& Ring::tuvw() {
    static const Ring r({"t", "u", "v", "w"});
    return r;
}
const Ring& Ring::lines() {
    static const Ring r({"l0", "l1", "l2"});
    return r;
}
const Ring& Ring::line_params() {
    static const Ring r({"s", "t", "p0", "p1", "p2", "q0", "q1", "q2"});
    return r;
}
const Ring& Ring::point_pairs() {
    static const Ring r({"p0", "p1", "p2", "q0", "q1", "q2"});
    return r;
}

std::size_t target_var_of_component(std::size_t alpha) {
    static constexpr std::size_t kIndex[4] = {1, 2, 3, 0};  // u, v, w, t
    return kIndex[alpha];
}

// ---- printing ------------------------------------------------------------

std::string to_string(const Monomial& m, const Ring& ring) {
    std::string out;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        const unsigned e = m.exponent(i);
        if (e == 0) continue;
        if (!out.empty()) out += '*';
        out += ring.name(i);
        if (e > 1) out += '^' + std::to_string(e);
    }
    return out;
}

namespace {

// Returns (negative, magnitude text, is_unit).
std::tuple<bool, std::string, bool> coefficient_text(const Rational& c) {
    const bool neg = c.sign() < 0;
    const Rational mag = c.abs();
    return {neg, mag.str(), mag.is_one()};
}

std::tuple<bool, std::string, bool> coefficient_text(const QuadExt& c) {
    if (c.is_rational()) return coefficient_text(c.a());
    if (c.a().is_zero()) {
        const bool neg = c.b().sign() < 0;
        return {neg, QuadExt(Rational(0), c.b().abs(), c.disc()).str(), false};
    }
    return {false, "(" + c.str() + ")", false};
}

}  // namespace

template <class K>
std::string to_string(const BasicPoly<K>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        auto [neg, mag, unit] = coefficient_text(c);
        if (first) {
            if (neg) out += '-';
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        const std::string mon = to_string(m, p.ring());
        if (mon.empty()) {
            out += mag;
        } else {
            if (!unit) out += mag + "*";
            out += mon;
        }
    }
    return out;
}

template std::string to_string(const BasicPoly<Rational>&);
template std::string to_string(const BasicPoly<QuadExt>&);

// ---- canonical form ------------------------------------------------------

Rational canonical_scale(const Poly& p) {
    if (p.is_zero()) return Rational(1);
    Integer den_lcm = 1;
    for (const auto& [m, c] : p.terms()) {
        const Integer d = c.denominator();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    Integer num_gcd = 0;
    for (const auto& [m, c] : p.terms()) {
        const Integer n = c.numerator() * (den_lcm / c.denominator());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
    Rational scale(num_gcd, den_lcm);
    if (p.leading_coefficient().sign() < 0) scale = -scale;
    return scale;
}

Poly canonical(const Poly& p) {
    if (p.is_zero()) return p;
    return p * canonical_scale(p).inverse();
}

// ---- division ------------------------------------------------------------

namespace {

template <class K>
std::optional<BasicPoly<K>> divide_exact_impl(const BasicPoly<K>& p, const BasicPoly<K>& q) {
    p.check_ring(q);
    if (q.is_zero()) throw MathError(ErrorKind::DivisionByZero, "polynomial division by zero");
    BasicPoly<K> quotient(p.ring());
    BasicPoly<K> rem = p;
    const Monomial& lm = q.leading_monomial();
    const K lc_inv = K(1) / q.leading_coefficient();
    while (!rem.is_zero()) {
        const Monomial& rm = rem.leading_monomial();
        if (!lm.divides(rm)) return std::nullopt;
        const Monomial qm = lm.quotient_of(rm);
        const K qc = rem.leading_coefficient() * lc_inv;
        quotient.add_term(qm, qc);
        for (const auto& [m, c] : q.terms()) rem.add_term(m * qm, -(c * qc));
    }
    return quotient;
}

std::optional<std::size_t> first_common_variable(const Poly& p, const Poly& q) {
    for (std::size_t v = 0; v < p.ring().size(); ++v)
        if (p.depends_on(v) || q.depends_on(v)) return v;
    return std::nullopt;
}

Poly content_in(const Poly& p, std::size_t var) {
    Poly g(p.ring());
    for (const auto& c : p.coefficients_in(var)) {
        if (c.is_zero()) continue;
        g = gcd(g, c);
        if (g.is_constant()) break;
    }
    return g;
}

Poly exact(const Poly& p, const Poly& q) {
    auto r = divide_exact(p, q);
    if (!r) throw MathError(ErrorKind::Internal, "expected exact division");
    return *std::move(r);
}

Poly primitive_part(const Poly& p, std::size_t var) {
    if (p.is_zero()) return p;
    return exact(p, content_in(p, var));
}

// True only when p and q certainly share no factor involving var: their
// images under a substitution of the other variables that keeps both
// leading coefficients alive are coprime. A false answer proves nothing.
bool coprime_in(const Poly& p, const Poly& q, std::size_t var) {
    const auto pc = p.coefficients_in(var);
    const auto qc = q.coefficients_in(var);
    std::vector<Rational> point(p.ring().size());
    for (long trial = 0; trial < 3; ++trial) {
        for (std::size_t i = 0; i < point.size(); ++i)
            point[i] = Rational(static_cast<long>((7 * i + 5 * trial + 3) % 13) - 6);
        auto image = [&](const std::vector<Poly>& cs) {
            std::vector<Rational> out;
            for (const auto& c : cs) out.push_back(c.evaluate<Rational>(point));
            return UPoly<Rational>(std::move(out));
        };
        const UPoly<Rational> a = image(pc), b = image(qc);
        if (a.degree() != static_cast<int>(pc.size()) - 1 || b.degree() != static_cast<int>(qc.size()) - 1) continue;
        return gcd(a, b).degree() == 0;
    }
    return false;
}

Poly pseudo_remainder(Poly a, const Poly& b, std::size_t var) {
    const int db = b.degree_in(var);
    const auto bcoeffs = b.coefficients_in(var);
    const Poly& lb = bcoeffs.back();
    while (!a.is_zero() && a.degree_in(var) >= db) {
        const int da = a.degree_in(var);
        const Poly la = a.coefficients_in(var).back();
        const Monomial shift = Monomial::variable(var, static_cast<unsigned>(da - db));
        a = lb * a - (la * b).mul_monomial(shift);
    }
    return a;
}

}  // namespace

std::optional<Poly> divide_exact(const Poly& p, const Poly& q) { return divide_exact_impl(p, q); }
std::optional<QPoly> divide_exact(const QPoly& p, const QPoly& q) { return divide_exact_impl(p, q); }

// ---- gcd -----------------------------------------------------------------

Poly gcd(const Poly& p, const Poly& q) {
    p.check_ring(q);
    if (p.is_zero()) return canonical(q);
    if (q.is_zero()) return canonical(p);
    const auto var = first_common_variable(p, q);
    if (!var) return Poly::constant(p.ring(), Rational(1));
    const std::size_t v = *var;
    if (!p.depends_on(v)) return gcd(p, content_in(q, v));
    if (!q.depends_on(v)) return gcd(content_in(p, v), q);

    const Poly cp = content_in(p, v);
    const Poly cq = content_in(q, v);
    const Poly c = gcd(cp, cq);
    if (coprime_in(p, q, v)) return c;
    Poly a = exact(p, cp);
    Poly b = exact(q, cq);
    if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
    while (true) {
        Poly r = pseudo_remainder(a, b, v);
        if (r.is_zero()) return canonical(c * primitive_part(b, v));
        if (!r.depends_on(v)) return canonical(c);
        a = std::move(b);
        b = primitive_part(r, v);
    }
}

Poly gcd(std::span<const Poly> ps) {
    if (ps.empty()) throw MathError(ErrorKind::ZeroInput, "gcd of empty list");
    Poly g(ps.front().ring());
    for (const auto& p : ps) {
        g = gcd(g, p);
        if (g.is_constant() && !g.is_zero()) break;
    }
    return g;
}

// ---- resultant -----------------------------------------------------------

Poly resultant(const Poly& p, const Poly& q, std::size_t var) {
    p.check_ring(q);
    const int m = p.degree_in(var);
    const int n = q.degree_in(var);
    if (m < 1 || n < 1)
        throw MathError(ErrorKind::VariableAbsent, "resultant needs both inputs to involve " + p.ring().name(var));
    const auto pc = p.coefficients_in(var);
    const auto qc = q.coefficients_in(var);
    const std::size_t size = static_cast<std::size_t>(m + n);
    Matrix<Poly> syl(size, size, Poly(p.ring()));
    // Row i holds the coefficients of x^(n-1-i) * p, highest power first.
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= m; ++k) syl(static_cast<std::size_t>(i), static_cast<std::size_t>(i + k)) = pc[static_cast<std::size_t>(m - k)];
    for (int i = 0; i < m; ++i)
        for (int k = 0; k <= n; ++k)
            syl(static_cast<std::size_t>(n + i), static_cast<std::size_t>(i + k)) = qc[static_cast<std::size_t>(n - k)];
    return determinant(syl);
}

// ---- substitution --------------------------------------------------------

Poly substitute_linear(const Poly& p, const std::vector<std::vector<Rational>>& L, const Ring& target) {
    if (!p.is_homogeneous()) throw MathError(ErrorKind::NonHomogeneous, "substitute_linear needs a form");
    if (L.size() != p.ring().size())
        throw MathError(ErrorKind::DimensionMismatch, "substitution matrix has wrong row count");
    std::vector<Poly> images;
    images.reserve(L.size());
    for (const auto& row : L) {
        if (row.size() != target.size())
            throw MathError(ErrorKind::DimensionMismatch, "substitution matrix has wrong column count");
        Poly img(target);
        for (std::size_t j = 0; j < row.size(); ++j) img.add_term(Monomial::variable(j), row[j]);
        images.push_back(std::move(img));
    }
    return p.compose<Rational>(images);
}

Poly restrict_to_line(const Poly& p) {
    if (!p.is_homogeneous()) throw MathError(ErrorKind::NonHomogeneous, "restrict_to_line needs a form");
    if (p.ring().size() != 3) throw MathError(ErrorKind::DimensionMismatch, "restrict_to_line needs three variables");
    const Ring& r = Ring::line_params();
    std::vector<Poly> images;
    for (std::size_t i = 0; i < 3; ++i)
        images.push_back(Poly::variable(r, 0) * Poly::variable(r, 2 + i) +
                         Poly::variable(r, 1) * Poly::variable(r, 5 + i));
    return p.compose<Rational>(images);
}

Poly restrict_to_line(const Poly& p, std::span<const Rational, 3> pt, std::span<const Rational, 3> qt) {
    if (!p.is_homogeneous()) throw MathError(ErrorKind::NonHomogeneous, "restrict_to_line needs a form");
    if (p.ring().size() != 3) throw MathError(ErrorKind::DimensionMismatch, "restrict_to_line needs three variables");
    static const Ring st({"s", "t"});
    std::vector<Poly> images;
    for (std::size_t i = 0; i < 3; ++i) {
        Poly img(st);
        img.add_term(Monomial::variable(0), pt[i]);
        img.add_term(Monomial::variable(1), qt[i]);
        images.push_back(std::move(img));
    }
    return p.compose<Rational>(images);
}

// ---- proportionality -----------------------------------------------------

namespace {

template <class K>
bool proportional_impl(const BasicPoly<K>& a, const BasicPoly<K>& b) {
    if (!(a.ring() == b.ring())) return false;
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    if (a.size() != b.size() || !(a.leading_monomial() == b.leading_monomial())) return false;
    const K ratio = a.leading_coefficient() / b.leading_coefficient();
    return a == b * ratio;
}

}  // namespace

bool proportional(const Poly& a, const Poly& b) { return proportional_impl(a, b); }
bool proportional(const QPoly& a, const QPoly& b) { return proportional_impl(a, b); }

// ---- quadratic forms -----------------------------------------------------

namespace {

Matrix<Rational> quadratic_form_matrix(const Poly& q) {
    const std::size_t n = q.ring().size();
    Matrix<Rational> a(n, n, Rational(0));
    for (const auto& [m, c] : q.terms()) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            for (unsigned e = 0; e < m.exponent(i); ++e) idx.push_back(i);
        if (idx[0] == idx[1]) {
            a(idx[0], idx[0]) = c;
        } else {
            a(idx[0], idx[1]) = c / Rational(2);
            a(idx[1], idx[0]) = c / Rational(2);
        }
    }
    return a;
}

QPoly linear_form(const Ring& ring, std::span<const QuadExt> coeffs) {
    QPoly p(ring);
    for (std::size_t i = 0; i < coeffs.size(); ++i) p.add_term(Monomial::variable(i), coeffs[i]);
    return p;
}

// Factorisation assuming some diagonal entry is non-zero.
std::optional<LinearFactors> factor_with_diagonal(const Poly& q, const Matrix<Rational>& a) {
    const std::size_t n = a.rows();
    std::size_t i = 0;
    while (i < n && a(i, i).is_zero()) ++i;
    const Rational lead = a(i, i);
    // lead * q = L^2 - R with L = sum_j a(i,j) x_j.
    std::vector<QuadExt> lcoef(n);
    for (std::size_t j = 0; j < n; ++j) lcoef[j] = QuadExt(a(i, j));
    Poly l(q.ring());
    Poly rest_lin(q.ring());
    for (std::size_t j = 0; j < n; ++j) {
        l.add_term(Monomial::variable(j), a(i, j));
        if (j != i) rest_lin.add_term(Monomial::variable(j), a(i, j));
    }
    const Poly r = l * l - q * lead;
    std::vector<QuadExt> mcoef(n, QuadExt(0));
    QuadExt root(0);
    if (!r.is_zero()) {
        const Matrix<Rational> b = quadratic_form_matrix(r);
        std::size_t k = 0;
        while (k < n && b(k, k).is_zero()) ++k;
        if (k == n || rank(b) != 1) return std::nullopt;
        // r = (1/b_kk) * (sum_j b_kj x_j)^2
        root = sqrt_in_field(b(k, k).inverse());
        for (std::size_t j = 0; j < n; ++j) mcoef[j] = QuadExt(b(k, j)) * root;
    }
    std::vector<QuadExt> c1(n), c2(n);
    for (std::size_t j = 0; j < n; ++j) {
        c1[j] = lcoef[j] - mcoef[j];
        c2[j] = lcoef[j] + mcoef[j];
    }
    return LinearFactors{linear_form(q.ring(), c1), linear_form(q.ring(), c2), lead.inverse()};
}

QPoly shear_back(const QPoly& f, std::size_t i, std::size_t j) {
    // Undo x_i -> x_i + x_j by substituting x_i -> x_i - x_j.
    const Ring& ring = f.ring();
    std::vector<QPoly> images;
    for (std::size_t v = 0; v < ring.size(); ++v) {
        QPoly img = QPoly::variable(ring, v);
        if (v == i) img -= QPoly::variable(ring, j);
        images.push_back(std::move(img));
    }
    return f.compose<QuadExt>(images);
}

}  // namespace

std::optional<LinearFactors> factor_into_linear(const Poly& q) {
    if (q.is_zero()) throw MathError(ErrorKind::ZeroInput, "factor_into_linear of zero");
    if (!q.is_homogeneous() || q.total_degree() != 2)
        throw MathError(ErrorKind::NonHomogeneous, "factor_into_linear needs a quadratic form");
    const Matrix<Rational> a = quadratic_form_matrix(q);
    if (rank(a) > 2) return std::nullopt;
    const std::size_t n = a.rows();
    std::optional<LinearFactors> out;
    bool has_diag = false;
    for (std::size_t i = 0; i < n; ++i) has_diag = has_diag || !a(i, i).is_zero();
    if (has_diag) {
        out = factor_with_diagonal(q, a);
    } else {
        std::size_t i = 0, j = 1;
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = r + 1; c < n; ++c)
                if (!a(r, c).is_zero()) {
                    i = r;
                    j = c;
                }
        std::vector<Poly> images;
        for (std::size_t v = 0; v < n; ++v) {
            Poly img = Poly::variable(q.ring(), v);
            if (v == i) img += Poly::variable(q.ring(), j);
            images.push_back(std::move(img));
        }
        const Poly sheared = q.compose<Rational>(images);
        out = factor_with_diagonal(sheared, quadratic_form_matrix(sheared));
        if (out) {
            out->first = shear_back(out->first, i, j);
            out->second = shear_back(out->second, i, j);
        }
    }
    if (!out) return out;
    // Make each factor monic in its leading term; the leading coefficients
    // are conjugate (or rational), so their product is rational.
    const QuadExt l1 = out->first.leading_coefficient();
    const QuadExt l2 = out->second.leading_coefficient();
    out->first = out->first * l1.inverse();
    out->second = out->second * l2.inverse();
    out->scale = out->scale * (l1 * l2).to_rational();
    if (to_string(out->second) < to_string(out->first)) std::swap(out->first, out->second);
    return out;
}

}  // namespace planarize
