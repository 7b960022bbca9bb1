#ifndef PLANARIZE_UPOLY_HPP
#define PLANARIZE_UPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "planarize/error.hpp"
#include "planarize/scalar.hpp"

namespace planarize {

/// Dense univariate polynomial over a field; coeffs()[i] multiplies X^i.
/// The coefficient vector never has a trailing zero.
template <class K>
class UPoly {
   public:
    UPoly() = default;
    explicit UPoly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UPoly monomial(std::size_t degree, K coeff) {
        std::vector<K> c(degree + 1, K(0));
        c[degree] = std::move(coeff);
        return UPoly(std::move(c));
    }

    const std::vector<K>& coeffs() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    /// -1 for zero.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const K& lead() const { return c_.back(); }
    K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : K(0); }

    template <class T>
    T evaluate(const T& x) const {
        T acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + T(*it);
        return acc;
    }

    UPoly derivative() const {
        std::vector<K> d;
        for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * K(static_cast<long>(i)));
        return UPoly(std::move(d));
    }

    UPoly monic() const {
        if (is_zero()) return *this;
        const K inv = K(1) / lead();
        UPoly r = *this;
        for (auto& x : r.c_) x *= inv;
        return r;
    }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        std::vector<K> c(std::max(a.c_.size(), b.c_.size()), K(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return UPoly(std::move(c));
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) {
        std::vector<K> c(std::max(a.c_.size(), b.c_.size()), K(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
        return UPoly(std::move(c));
    }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return UPoly();
        std::vector<K> c(a.c_.size() + b.c_.size() - 1, K(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return UPoly(std::move(c));
    }
    friend bool operator==(const UPoly&, const UPoly&) = default;

    /// (quotient, remainder).
    friend std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
        if (b.is_zero()) throw MathError(ErrorKind::DivisionByZero, "univariate division by zero");
        std::vector<K> rem = a.c_;
        if (a.degree() < b.degree()) return {UPoly(), a};
        std::vector<K> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, K(0));
        const K inv = K(1) / b.lead();
        for (int i = a.degree() - b.degree(); i >= 0; --i) {
            const auto top = static_cast<std::size_t>(i + b.degree());
            const K f = rem[top] * inv;
            q[static_cast<std::size_t>(i)] = f;
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) rem[static_cast<std::size_t>(i) + j] -= f * b.c_[j];
        }
        return {UPoly(std::move(q)), UPoly(std::move(rem))};
    }

   private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<K> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
template <class K>
UPoly<K> gcd(UPoly<K> a, UPoly<K> b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

template <class K>
UPoly<K> squarefree_part(const UPoly<K>& p) {
    if (p.degree() <= 0) return p.monic();
    const UPoly<K> g = gcd(p, p.derivative());
    return divmod(p, g).first.monic();
}

/// Factors of a square-free rational polynomial of degree at most two over
/// Q, plus whatever could not be split further.
struct RationalFactors {
    std::vector<UPoly<Rational>> linear;     // monic
    std::vector<UPoly<Rational>> quadratic;  // monic, irreducible over Q
    std::vector<UPoly<Rational>> higher;     // monic, degree >= 3, not split
};

/// Splits off every linear and quadratic factor over Q. Candidate factors
/// are proposed from high-precision numerical roots and accepted only after
/// exact division, so a reported factor is always correct. Requires p to be
/// square-free.
RationalFactors factor_low_degree(const UPoly<Rational>& p);

/// The two roots of a monic irreducible rational quadratic in Q(sqrt(D)).
std::pair<QuadExt, QuadExt> quadratic_roots(const UPoly<Rational>& q);

std::string to_string(const UPoly<Rational>& p, const std::string& var = "X");

}  // namespace planarize

#endif
