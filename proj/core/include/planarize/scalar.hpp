#ifndef PLANARIZE_SCALAR_HPP
#define PLANARIZE_SCALAR_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "planarize/error.hpp"

namespace planarize {

using Integer = mpz_class;

/// Exact rational number, always stored in lowest terms with a positive
/// denominator.
class Rational {
   public:
    Rational() = default;
    Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(int v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& num, const Integer& den);
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    /// Parses `p` or `p/q`.
    static Rational parse(std::string_view text);

    const mpq_class& value() const noexcept { return v_; }
    Integer numerator() const { return v_.get_num(); }
    Integer denominator() const { return v_.get_den(); }

    bool is_zero() const noexcept { return sgn(v_) == 0; }
    bool is_one() const noexcept { return v_ == 1; }
    bool is_integer() const noexcept { return v_.get_den() == 1; }
    int sign() const noexcept { return sgn(v_); }

    Rational inverse() const;
    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) {
        v_ += o.v_;
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        v_ -= o.v_;
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        v_ *= o.v_;
        return *this;
    }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// `p/q`, or `p` when the denominator is one.
    std::string str() const;

   private:
    mpq_class v_;
};

/// Writes |n| = s^2 * f with f square-free; the sign of n goes to f.
/// Trial division is bounded, so enormous inputs with large repeated prime
/// factors raise UnsupportedScalar rather than returning a wrong answer.
std::pair<Integer, Integer> squarefree_decompose(const Integer& n);

bool is_squarefree(const Integer& n);

/// a + b*sqrt(disc). The disc is square-free and not 0 or 1 whenever b != 0;
/// values with b = 0 are demoted to plain rationals (disc reported as 0).
/// Rationals therefore mix freely with any single extension field.
class QuadExt {
   public:
    QuadExt() = default;
    QuadExt(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
    QuadExt(int v) : a_(v) {}  // NOLINT(google-explicit-constructor)
    QuadExt(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
    QuadExt(Rational a, Rational b, Integer disc);

    const Rational& a() const noexcept { return a_; }
    const Rational& b() const noexcept { return b_; }
    /// 0 for rational values.
    const Integer& disc() const noexcept { return disc_; }

    bool is_rational() const noexcept { return b_.is_zero(); }
    bool is_zero() const noexcept { return a_.is_zero() && b_.is_zero(); }
    bool is_one() const noexcept { return b_.is_zero() && a_.is_one(); }
    Rational to_rational() const;

    QuadExt conjugate() const;
    /// a^2 - b^2 * disc.
    Rational norm() const;
    QuadExt inverse() const;

    QuadExt operator-() const;
    QuadExt& operator+=(const QuadExt& o);
    QuadExt& operator-=(const QuadExt& o);
    QuadExt& operator*=(const QuadExt& o);
    QuadExt& operator/=(const QuadExt& o) { return *this *= o.inverse(); }

    friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
    friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
    friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
    friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.disc_ == y.disc_;
    }

    /// Sign of a real value (disc > 0 or rational). Throws for disc < 0.
    int real_sign() const;

    /// `p/q`, `p/q + r/s*sqrt(D)`, `r/s*sqrt(D)`.
    std::string str() const;

   private:
    static Integer common_disc(const Integer& d1, const Integer& d2);
    void demote();

    Rational a_;
    Rational b_;
    Integer disc_ = 0;
};

/// Square root of a rational inside Q or Q(sqrt(D)): the positive rational
/// root for perfect squares, else (0, s, D) with s > 0 and D square-free.
QuadExt sqrt_in_field(const Rational& r);

/// Shared non-zero disc of two scalars, 0 if both are rational.
/// Throws IncompatibleDisc when they live in different extensions.
Integer merge_disc(const Integer& d1, const Integer& d2);

}  // namespace planarize

#endif
