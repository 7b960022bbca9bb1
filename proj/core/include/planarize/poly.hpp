#ifndef PLANARIZE_POLY_HPP
#define PLANARIZE_POLY_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "planarize/error.hpp"
#include "planarize/scalar.hpp"

namespace planarize {

/// Exponent vector of up to eight variables packed one byte per variable,
/// variable 0 in the most significant byte. Comparing (degree, packed)
/// is exactly graded lexicographic order.
class Monomial {
   public:
    static constexpr std::size_t kMaxVars = 8;
    static constexpr unsigned kMaxDegree = 255;

    Monomial() = default;

    static Monomial variable(std::size_t var, unsigned exponent = 1);
    static Monomial from_exponents(std::span<const unsigned> exps);

    unsigned exponent(std::size_t var) const noexcept {
        return static_cast<unsigned>((packed_ >> shift(var)) & 0xffU);
    }
    unsigned degree() const noexcept { return degree_; }
    bool is_one() const noexcept { return degree_ == 0; }

    Monomial with_exponent(std::size_t var, unsigned exponent) const;
    bool divides(const Monomial& other) const noexcept;
    /// Requires divides(other).
    Monomial quotient_of(const Monomial& other) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial& a, const Monomial& b) {
        if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
        return a.packed_ <=> b.packed_;
    }

   private:
    static constexpr unsigned shift(std::size_t var) noexcept {
        return static_cast<unsigned>(56 - 8 * var);
    }

    std::uint64_t packed_ = 0;
    unsigned degree_ = 0;
};

/// Ordered list of variable names shared by polynomials of one ring.
class Ring {
   public:
    explicit Ring(std::vector<std::string> names);

    std::size_t size() const noexcept { return vars_->size(); }
    const std::string& name(std::size_t i) const { return (*vars_)[i]; }
    const std::vector<std::string>& names() const noexcept { return *vars_; }
    std::optional<std::size_t> index_of(std::string_view name) const;
    std::size_t require(std::string_view name) const;

    friend bool operator==(const Ring& a, const Ring& b) {
        return a.vars_ == b.vars_ || *a.vars_ == *b.vars_;
    }

    /// (x, y, z): source plane.
    static const Ring& xyz();
    /// (t, u, v, w): target space, printed in this order; component alpha
    /// of a map is the coordinate named u, v, w, t for alpha = 0..3.
    static const Ring& tuvw();
    /// (l0, l1, l2): line coordinates.
    static const Ring& lines();
    /// (s, t, p0, p1, p2, q0, q1, q2): symbolic line restriction.
    static const Ring& line_params();
    /// (p0, p1, p2, q0, q1, q2).
    static const Ring& point_pairs();

   private:
    std::shared_ptr<const std::vector<std::string>> vars_;
};

/// Index into Ring::tuvw() of the coordinate receiving map component alpha.
std::size_t target_var_of_component(std::size_t alpha);

/// Sparse multivariate polynomial with coefficients in a field K
/// (Rational or QuadExt). Terms are kept in descending graded-lex order
/// and no zero coefficient is ever stored.
template <class K>
class BasicPoly {
   public:
    using Terms = std::map<Monomial, K, std::greater<>>;

    explicit BasicPoly(Ring ring) : ring_(std::move(ring)) {}

    static BasicPoly constant(const Ring& ring, K c) {
        BasicPoly p(ring);
        p.add_term(Monomial(), std::move(c));
        return p;
    }
    static BasicPoly variable(const Ring& ring, std::size_t var) {
        BasicPoly p(ring);
        p.add_term(Monomial::variable(var), K(1));
        return p;
    }
    static BasicPoly variable(const Ring& ring, std::string_view name) {
        return variable(ring, ring.require(name));
    }
    static BasicPoly term(const Ring& ring, const Monomial& m, K c) {
        BasicPoly p(ring);
        p.add_term(m, std::move(c));
        return p;
    }

    const Ring& ring() const noexcept { return ring_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_constant() const noexcept {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }

    /// -1 for the zero polynomial.
    int total_degree() const noexcept {
        return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.degree());
    }
    bool is_homogeneous() const noexcept {
        if (terms_.empty()) return true;
        const unsigned d = terms_.begin()->first.degree();
        for (const auto& [m, c] : terms_)
            if (m.degree() != d) return false;
        return true;
    }
    /// -1 for the zero polynomial.
    int degree_in(std::size_t var) const noexcept {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.exponent(var)));
        return d;
    }
    bool depends_on(std::size_t var) const noexcept { return degree_in(var) > 0; }

    const Monomial& leading_monomial() const { return terms_.begin()->first; }
    const K& leading_coefficient() const { return terms_.begin()->second; }

    K coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? K(0) : it->second;
    }
    K constant_term() const { return coefficient(Monomial()); }

    void add_term(const Monomial& m, K c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, std::move(c));
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    BasicPoly operator-() const {
        BasicPoly r(ring_);
        for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, -c);
        return r;
    }
    BasicPoly& operator+=(const BasicPoly& o) {
        check_ring(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    BasicPoly& operator-=(const BasicPoly& o) {
        check_ring(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    BasicPoly& operator*=(const K& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }
    BasicPoly& operator*=(const BasicPoly& o) { return *this = *this * o; }

    friend BasicPoly operator+(BasicPoly a, const BasicPoly& b) { return a += b; }
    friend BasicPoly operator-(BasicPoly a, const BasicPoly& b) { return a -= b; }
    friend BasicPoly operator*(BasicPoly a, const K& s) { return a *= s; }
    friend BasicPoly operator*(const K& s, BasicPoly a) { return a *= s; }
    friend BasicPoly operator*(const BasicPoly& a, const BasicPoly& b) {
        a.check_ring(b);
        BasicPoly r(a.ring_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    friend bool operator==(const BasicPoly& a, const BasicPoly& b) {
        return a.ring_ == b.ring_ && a.terms_ == b.terms_;
    }

    BasicPoly pow(unsigned e) const {
        BasicPoly result = constant(ring_, K(1));
        BasicPoly base = *this;
        while (e > 0) {
            if (e & 1U) result = result * base;
            e >>= 1U;
            if (e > 0) base = base * base;
        }
        return result;
    }

    BasicPoly mul_monomial(const Monomial& m) const {
        BasicPoly r(ring_);
        for (const auto& [mm, c] : terms_) r.terms_.emplace(mm * m, c);
        return r;
    }

    BasicPoly derivative(std::size_t var) const {
        BasicPoly r(ring_);
        for (const auto& [m, c] : terms_) {
            const unsigned e = m.exponent(var);
            if (e == 0) continue;
            r.add_term(m.with_exponent(var, e - 1), c * K(static_cast<long>(e)));
        }
        return r;
    }

    /// Evaluates at a point whose coordinates live in T (T must accept K).
    template <class T>
    T evaluate(std::span<const T> point) const {
        if (point.size() != ring_.size())
            throw MathError(ErrorKind::DimensionMismatch, "evaluation point has wrong arity");
        T sum(0);
        std::vector<std::vector<T>> powers(point.size());
        for (const auto& [m, c] : terms_) {
            T term(c);
            for (std::size_t i = 0; i < point.size(); ++i) {
                const unsigned e = m.exponent(i);
                if (e == 0) continue;
                auto& cache = powers[i];
                if (cache.empty()) cache.push_back(T(1));
                while (cache.size() <= e) cache.push_back(cache.back() * point[i]);
                term *= cache[e];
            }
            sum += term;
        }
        return sum;
    }

    /// Substitutes images[i] for variable i; the result lives in the ring of
    /// the images.
    template <class T>
    BasicPoly<T> compose(std::span<const BasicPoly<T>> images) const {
        if (images.size() != ring_.size())
            throw MathError(ErrorKind::DimensionMismatch, "composition needs one image per variable");
        if (images.empty()) throw MathError(ErrorKind::DimensionMismatch, "empty substitution");
        const Ring& target = images.front().ring();
        BasicPoly<T> sum(target);
        std::vector<std::vector<BasicPoly<T>>> powers(images.size());
        for (const auto& [m, c] : terms_) {
            BasicPoly<T> term = BasicPoly<T>::constant(target, T(c));
            for (std::size_t i = 0; i < images.size(); ++i) {
                const unsigned e = m.exponent(i);
                if (e == 0) continue;
                auto& cache = powers[i];
                if (cache.empty()) cache.push_back(BasicPoly<T>::constant(target, T(1)));
                while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
                term = term * cache[e];
            }
            sum += term;
        }
        return sum;
    }

    /// Same terms, different ring of equal size (e.g. l0,l1,l2 -> x,y,z).
    BasicPoly relabel(const Ring& ring) const {
        if (ring.size() != ring_.size())
            throw MathError(ErrorKind::RingMismatch, "relabel needs a ring of the same size");
        BasicPoly r(ring);
        r.terms_ = terms_;
        return r;
    }

    template <class T>
    BasicPoly<T> convert() const {
        BasicPoly<T> r(ring_);
        for (const auto& [m, c] : terms_) r.add_term(m, T(c));
        return r;
    }

    /// Coefficients of var^0, var^1, ..., as polynomials not involving var.
    std::vector<BasicPoly> coefficients_in(std::size_t var) const {
        std::vector<BasicPoly> out(static_cast<std::size_t>(std::max(degree_in(var), 0)) + 1,
                                   BasicPoly(ring_));
        for (const auto& [m, c] : terms_) out[m.exponent(var)].add_term(m.with_exponent(var, 0), c);
        return out;
    }

    /// Homogeneous component of one total degree.
    BasicPoly homogeneous_part(unsigned degree) const {
        BasicPoly r(ring_);
        for (const auto& [m, c] : terms_)
            if (m.degree() == degree) r.terms_.emplace(m, c);
        return r;
    }

    void check_ring(const BasicPoly& o) const {
        if (!(ring_ == o.ring_)) throw MathError(ErrorKind::RingMismatch, "polynomials from different rings");
    }

   private:
    Ring ring_;
    Terms terms_;
};

using Poly = BasicPoly<Rational>;
using QPoly = BasicPoly<QuadExt>;

/// All monomials of one total degree over n variables, descending grlex.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree);

/// Canonical text: descending grlex, explicit `*`, `^` exponents.
template <class K>
std::string to_string(const BasicPoly<K>& p);

std::string to_string(const Monomial& m, const Ring& ring);

// ---- Rational-only algorithms -------------------------------------------

/// Clears denominators, divides by the integer content and makes the
/// leading coefficient positive. Zero stays zero.
Poly canonical(const Poly& p);

/// Scalar s with p = s * canonical(p).
Rational canonical_scale(const Poly& p);

/// Exact quotient p / q, or nullopt when q does not divide p.
std::optional<Poly> divide_exact(const Poly& p, const Poly& q);
std::optional<QPoly> divide_exact(const QPoly& p, const QPoly& q);

/// GCD in canonical integer form; gcd(p, 0) = canonical(p).
Poly gcd(const Poly& p, const Poly& q);
Poly gcd(std::span<const Poly> ps);

/// Sylvester resultant with respect to var.
Poly resultant(const Poly& p, const Poly& q, std::size_t var);

/// p(L x) where L is n x m (n = variables of p, m = variables of target).
Poly substitute_linear(const Poly& p, const std::vector<std::vector<Rational>>& L, const Ring& target);

/// Symbolic restriction of a form in (x,y,z) to the line s*p + t*q.
Poly restrict_to_line(const Poly& p);
/// Binary form in (s, t) for a concrete line through p and q.
Poly restrict_to_line(const Poly& p, std::span<const Rational, 3> pt, std::span<const Rational, 3> qt);

/// True when a and b agree up to one non-zero scalar.
bool proportional(const Poly& a, const Poly& b);
bool proportional(const QPoly& a, const QPoly& b);

/// Factorisation of a quadratic form into two linear forms over Q or
/// Q(sqrt(D)): q = scale * first * second.
struct LinearFactors {
    QPoly first;
    QPoly second;
    Rational scale;
};
/// nullopt when the quadratic form has rank 3 (irreducible).
std::optional<LinearFactors> factor_into_linear(const Poly& q);

}  // namespace planarize

#endif
