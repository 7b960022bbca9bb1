#include "planarize/upoly.hpp"

#include <mpfr.h>

#include <algorithm>
#include <boost/multiprecision/mpfr.hpp>
#include <optional>

namespace planarize {

namespace {

using boost::multiprecision::mpfr_float;

struct Cx {
    mpfr_float re;
    mpfr_float im;
};

Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
Cx operator*(const Cx& a, const Cx& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
Cx operator/(const Cx& a, const Cx& b) {
    const mpfr_float n = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}
mpfr_float abs(const Cx& a) { return sqrt(a.re * a.re + a.im * a.im); }

class PrecisionGuard {
   public:
    explicit PrecisionGuard(unsigned digits10) : saved_(mpfr_float::default_precision()) {
        mpfr_float::default_precision(digits10);
    }
    ~PrecisionGuard() { mpfr_float::default_precision(saved_); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

   private:
    unsigned saved_;
};

mpfr_float to_mpfr(const Integer& z) {
    mpfr_float x;
    mpfr_set_z(x.backend().data(), z.get_mpz_t(), MPFR_RNDN);
    return x;
}

Integer floor_to_integer(const mpfr_float& x) {
    Integer z;
    mpfr_get_z(z.get_mpz_t(), x.backend().data(), MPFR_RNDD);
    return z;
}

// Primitive integer coefficients with positive leading coefficient.
std::vector<Integer> integer_coefficients(const UPoly<Rational>& p) {
    Integer l = 1;
    for (const auto& c : p.coeffs()) {
        const Integer d = c.denominator();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    std::vector<Integer> out;
    Integer g = 0;
    for (const auto& c : p.coeffs()) {
        out.push_back(c.numerator() * (l / c.denominator()));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
    }
    const bool neg = sgn(out.back()) < 0;
    for (auto& c : out) {
        c /= g;
        if (neg) c = -c;
    }
    return out;
}

// Simultaneous approximation of all roots (Aberth-Ehrlich iteration).
std::vector<Cx> numeric_roots(const std::vector<Integer>& coeffs, unsigned bits) {
    const std::size_t n = coeffs.size() - 1;
    std::vector<mpfr_float> a;
    for (const auto& c : coeffs) a.push_back(to_mpfr(c));
    // Cauchy bound on the root moduli.
    mpfr_float bound = 0;
    for (std::size_t i = 0; i < n; ++i) bound = std::max<mpfr_float>(bound, abs(a[i] / a[n]));
    bound += 1;
    std::vector<Cx> z(n);
    mpfr_float pi;
    mpfr_const_pi(pi.backend().data(), MPFR_RNDN);
    for (std::size_t k = 0; k < n; ++k) {
        const mpfr_float angle = 2 * mpfr_float(pi) * mpfr_float(k) / mpfr_float(n) + mpfr_float(0.4);
        const mpfr_float r = bound * mpfr_float(0.5 + 0.5 * static_cast<double>(k + 1) / static_cast<double>(n));
        z[k] = {r * cos(angle), r * sin(angle)};
    }
    const mpfr_float tol = ldexp(mpfr_float(1), -static_cast<int>(bits) + 16);
    for (int iter = 0; iter < 2000; ++iter) {
        mpfr_float worst = 0;
        for (std::size_t k = 0; k < n; ++k) {
            Cx p{a[n], mpfr_float(0)};
            Cx dp{mpfr_float(0), mpfr_float(0)};
            for (std::size_t i = n; i-- > 0;) {
                dp = dp * z[k] + p;
                p = p * z[k] + Cx{a[i], mpfr_float(0)};
            }
            if (abs(p) == 0) continue;
            const Cx w = p / dp;
            Cx sum{mpfr_float(0), mpfr_float(0)};
            for (std::size_t j = 0; j < n; ++j)
                if (j != k) sum = sum + Cx{mpfr_float(1), mpfr_float(0)} / (z[k] - z[j]);
            const Cx step = w / (Cx{mpfr_float(1), mpfr_float(0)} - w * sum);
            z[k] = z[k] - step;
            const mpfr_float scale = std::max<mpfr_float>(mpfr_float(1), abs(z[k]));
            worst = std::max<mpfr_float>(worst, abs(step) / scale);
        }
        if (worst < tol) break;
    }
    return z;
}

// Last continued-fraction convergent of x with denominator <= bound.
Rational rationalize(const mpfr_float& x, const Integer& bound, unsigned bits) {
    Integer h1 = 1, h2 = 0, k1 = 0, k2 = 1;
    Rational best(floor_to_integer(x));
    mpfr_float y = x;
    const mpfr_float tiny = ldexp(mpfr_float(1), -static_cast<int>(bits / 2));
    for (int i = 0; i < 400; ++i) {
        const Integer a = floor_to_integer(y);
        const Integer h = a * h1 + h2;
        const Integer k = a * k1 + k2;
        if (k > bound) break;
        best = Rational(h, k);
        h2 = h1;
        h1 = h;
        k2 = k1;
        k1 = k;
        const mpfr_float frac = y - to_mpfr(a);
        if (abs(frac) < tiny) break;
        y = 1 / frac;
    }
    return best;
}

bool divides(const UPoly<Rational>& f, const UPoly<Rational>& p) { return divmod(p, f).second.is_zero(); }

void split_exact_quadratic(const UPoly<Rational>& q, RationalFactors& out) {
    // q monic of degree 2.
    const Rational b = q.coeff(1);
    const Rational c = q.coeff(0);
    const QuadExt r = sqrt_in_field(b * b - Rational(4) * c);
    if (r.is_rational()) {
        const Rational s = r.to_rational();
        out.linear.push_back(UPoly<Rational>({(b - s) / Rational(2), Rational(1)}));
        out.linear.push_back(UPoly<Rational>({(b + s) / Rational(2), Rational(1)}));
    } else {
        out.quadratic.push_back(q);
    }
}

}  // namespace

RationalFactors factor_low_degree(const UPoly<Rational>& input) {
    RationalFactors out;
    UPoly<Rational> p = input.monic();
    if (p.degree() <= 0) return out;
    if (p.degree() == 1) {
        out.linear.push_back(p);
        return out;
    }
    if (p.degree() == 2) {
        split_exact_quadratic(p, out);
        return out;
    }

    const std::vector<Integer> ints = integer_coefficients(p);
    std::size_t max_bits = 1;
    for (const auto& c : ints) max_bits = std::max(max_bits, mpz_sizeinbase(c.get_mpz_t(), 2));
    const unsigned bits = static_cast<unsigned>(256 + 4 * max_bits + 32 * ints.size());
    const PrecisionGuard guard(bits * 30103 / 100000 + 10);

    std::vector<Cx> roots = numeric_roots(ints, bits);
    const Integer lc = ::abs(ints.back());
    const mpfr_float real_tol = ldexp(mpfr_float(1), -static_cast<int>(bits / 4));

    std::vector<bool> used(roots.size(), false);
    for (std::size_t i = 0; i < roots.size() && p.degree() > 2; ++i) {
        if (abs(roots[i].im) > real_tol * std::max<mpfr_float>(mpfr_float(1), abs(roots[i]))) continue;
        const Rational r = rationalize(roots[i].re, lc, bits);
        const UPoly<Rational> f({-r, Rational(1)});
        if (divides(f, p)) {
            out.linear.push_back(f);
            p = divmod(p, f).first;
            used[i] = true;
        }
    }
    for (std::size_t i = 0; i < roots.size() && p.degree() > 2; ++i) {
        if (used[i]) continue;
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
            if (used[j]) continue;
            const Cx s = roots[i] + roots[j];
            const Cx m = roots[i] * roots[j];
            const mpfr_float scale = std::max<mpfr_float>(mpfr_float(1), abs(s) + abs(m));
            if (abs(s.im) > real_tol * scale || abs(m.im) > real_tol * scale) continue;
            const Rational rs = rationalize(s.re, lc, bits);
            const Rational rm = rationalize(m.re, lc, bits);
            const UPoly<Rational> q({rm, -rs, Rational(1)});
            if (!divides(q, p)) continue;
            p = divmod(p, q).first;
            split_exact_quadratic(q, out);
            used[i] = used[j] = true;
            break;
        }
    }
    if (p.degree() == 1) {
        out.linear.push_back(p.monic());
    } else if (p.degree() == 2) {
        split_exact_quadratic(p.monic(), out);
    } else if (p.degree() > 2) {
        out.higher.push_back(p.monic());
    }
    auto by_coeffs = [](const UPoly<Rational>& a, const UPoly<Rational>& b) {
        return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(),
                                            b.coeffs().end());
    };
    std::sort(out.linear.begin(), out.linear.end(), by_coeffs);
    std::sort(out.quadratic.begin(), out.quadratic.end(), by_coeffs);
    return out;
}

std::pair<QuadExt, QuadExt> quadratic_roots(const UPoly<Rational>& q) {
    if (q.degree() != 2) throw MathError(ErrorKind::DimensionMismatch, "quadratic_roots needs degree 2");
    const UPoly<Rational> m = q.monic();
    const Rational b = m.coeff(1);
    const Rational c = m.coeff(0);
    const QuadExt r = sqrt_in_field(b * b - Rational(4) * c);
    const QuadExt half(Rational(1, 2));
    return {(QuadExt(-b) + r) * half, (QuadExt(-b) - r) * half};
}

std::string to_string(const UPoly<Rational>& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        const Rational& c = p.coeffs()[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        const bool neg = c.sign() < 0;
        out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        const Rational mag = c.abs();
        if (i == 0) {
            out += mag.str();
            continue;
        }
        if (!mag.is_one()) out += mag.str() + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

}  // namespace planarize
