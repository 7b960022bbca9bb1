#include "planarize/scalar.hpp"

#include <cctype>

namespace planarize {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::IncompatibleDisc: return "IncompatibleDisc";
        case ErrorKind::UnsupportedScalar: return "UnsupportedScalar";
        case ErrorKind::RingMismatch: return "RingMismatch";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::NonHomogeneous: return "NonHomogeneous";
        case ErrorKind::VariableAbsent: return "VariableAbsent";
        case ErrorKind::ZeroInput: return "ZeroInput";
        case ErrorKind::DegenerateKernel: return "DegenerateKernel";
        case ErrorKind::NoKernel: return "NoKernel";
        case ErrorKind::UnsupportedDegree: return "UnsupportedDegree";
        case ErrorKind::NotABasePoint: return "NotABasePoint";
        case ErrorKind::NotASurfaceImage: return "NotASurfaceImage";
        case ErrorKind::ImageSpansLine: return "ImageSpansLine";
        case ErrorKind::DegreeBoundExceeded: return "DegreeBoundExceeded";
        case ErrorKind::IncompleteCheck: return "IncompleteCheck";
        case ErrorKind::InvalidWitness: return "InvalidWitness";
        case ErrorKind::NotAQuadricImageMap: return "NotAQuadricImageMap";
        case ErrorKind::NotAPlanarization: return "NotAPlanarization";
        case ErrorKind::PositiveDimensional: return "PositiveDimensional";
        case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw MathError(ErrorKind::DivisionByZero, "zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    auto parse_int = [](std::string_view s) {
        if (s.empty()) throw std::invalid_argument("empty integer");
        for (std::size_t i = 0; i < s.size(); ++i) {
            const bool sign_ok = i == 0 && (s[i] == '-' || s[i] == '+') && s.size() > 1;
            if (!sign_ok && !std::isdigit(static_cast<unsigned char>(s[i])))
                throw std::invalid_argument("bad integer: " + std::string(s));
        }
        if (s[0] == '+') s.remove_prefix(1);
        return Integer(std::string(s));
    };
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Rational Rational::inverse() const {
    if (is_zero()) throw MathError(ErrorKind::DivisionByZero, "inverse of zero");
    return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw MathError(ErrorKind::DivisionByZero, "rational division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

namespace {

constexpr unsigned long kTrialBound = 1UL << 20;

}  // namespace

std::pair<Integer, Integer> squarefree_decompose(const Integer& n) {
    if (n == 0) return {Integer(0), Integer(0)};
    Integer rest = ::abs(n);
    Integer square = 1;
    Integer free = 1;
    auto strip = [&](unsigned long p) {
        unsigned count = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++count;
        }
        for (unsigned i = 0; i + 1 < count; i += 2) square *= p;
        if (count % 2 == 1) free *= p;
    };
    strip(2);
    for (unsigned long p = 3; p < kTrialBound; p += 2) {
        if (rest == 1) break;
        if (Integer(p) * p > rest) break;
        strip(p);
    }
    if (rest != 1) {
        // All remaining prime factors exceed the bound (or rest is prime).
        const Integer bound(kTrialBound);
        if (mpz_perfect_square_p(rest.get_mpz_t()) != 0) {
            square *= sqrt(rest);
        } else if (rest < bound * bound * bound) {
            // rest is p or p*q with distinct large primes: square-free.
            free *= rest;
        } else {
            throw MathError(ErrorKind::UnsupportedScalar,
                            "cannot certify square-free part of " + n.get_str());
        }
    }
    if (n < 0) free = -free;
    return {square, free};
}

bool is_squarefree(const Integer& n) {
    if (n == 0) return false;
    return squarefree_decompose(n).first == 1;
}

Integer merge_disc(const Integer& d1, const Integer& d2) {
    if (d1 == 0) return d2;
    if (d2 == 0 || d1 == d2) return d1;
    throw MathError(ErrorKind::IncompatibleDisc,
                    "sqrt(" + d1.get_str() + ") and sqrt(" + d2.get_str() + ")");
}

QuadExt::QuadExt(Rational a, Rational b, Integer disc)
    : a_(std::move(a)), b_(std::move(b)), disc_(std::move(disc)) {
    if (b_.is_zero()) {
        disc_ = 0;
        return;
    }
    if (disc_ == 0 || disc_ == 1 || !is_squarefree(disc_))
        throw MathError(ErrorKind::UnsupportedScalar,
                        "disc must be square-free and not 0 or 1, got " + disc_.get_str());
}

void QuadExt::demote() {
    if (b_.is_zero()) disc_ = 0;
}

Integer QuadExt::common_disc(const Integer& d1, const Integer& d2) { return merge_disc(d1, d2); }

Rational QuadExt::to_rational() const {
    if (!is_rational())
        throw MathError(ErrorKind::UnsupportedScalar, "irrational value " + str());
    return a_;
}

QuadExt QuadExt::conjugate() const {
    QuadExt r = *this;
    r.b_ = -r.b_;
    return r;
}

Rational QuadExt::norm() const { return a_ * a_ - b_ * b_ * Rational(disc_); }

QuadExt QuadExt::inverse() const {
    if (is_zero()) throw MathError(ErrorKind::DivisionByZero, "inverse of zero");
    if (is_rational()) return QuadExt(a_.inverse());
    const Rational n = norm();
    QuadExt r;
    r.a_ = a_ / n;
    r.b_ = -b_ / n;
    r.disc_ = disc_;
    return r;
}

QuadExt QuadExt::operator-() const {
    QuadExt r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
    const Integer d = common_disc(disc_, o.disc_);
    a_ += o.a_;
    b_ += o.b_;
    disc_ = d;
    demote();
    return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
    const Integer d = common_disc(disc_, o.disc_);
    a_ -= o.a_;
    b_ -= o.b_;
    disc_ = d;
    demote();
    return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
    if (o.is_rational()) {
        a_ *= o.a_;
        b_ *= o.a_;
        demote();
        return *this;
    }
    const Integer d = common_disc(disc_, o.disc_);
    Rational na = a_ * o.a_ + b_ * o.b_ * Rational(d);
    Rational nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    disc_ = d;
    demote();
    return *this;
}

int QuadExt::real_sign() const {
    if (is_rational()) return a_.sign();
    if (disc_ < 0) throw MathError(ErrorKind::UnsupportedScalar, "sign of non-real " + str());
    // sign(a + b sqrt(D)), D > 0.
    const int sa = a_.sign();
    const int sb = b_.sign();
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 with b^2 D.
    const Rational lhs = a_ * a_;
    const Rational rhs = b_ * b_ * Rational(disc_);
    if (lhs > rhs) return sa;
    return sb;
}

std::string QuadExt::str() const {
    if (is_rational()) return a_.str();
    std::string radical = "sqrt(" + disc_.get_str() + ")";
    std::string irr;
    const Rational mag = b_.abs();
    irr = mag.is_one() ? radical : mag.str() + "*" + radical;
    if (a_.is_zero()) return (b_.sign() < 0 ? "-" : "") + irr;
    return a_.str() + (b_.sign() < 0 ? " - " : " + ") + irr;
}

QuadExt sqrt_in_field(const Rational& r) {
    if (r.is_zero()) return QuadExt();
    // r = n/d = (n*d)/d^2
    const Integer nd = r.numerator() * r.denominator();
    auto [square, free] = squarefree_decompose(nd);
    const Rational coeff(square, r.denominator());
    if (free == 1) return QuadExt(coeff);
    return QuadExt(Rational(0), coeff, free);
}

}  // namespace planarize
