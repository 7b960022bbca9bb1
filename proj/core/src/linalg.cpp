#include "planarize/linalg.hpp"

#include "planarize/random.hpp"

namespace planarize {

namespace {

std::vector<Rational> canonical_vector(std::vector<Integer> v) {
    Integer g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    int sign = 0;
    for (const auto& x : v)
        if (sgn(x) != 0) {
            sign = sgn(x);
            break;
        }
    std::vector<Rational> out;
    out.reserve(v.size());
    for (auto& x : v) {
        if (g != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        out.emplace_back(sign < 0 ? Integer(-x) : x);
    }
    return out;
}

}  // namespace

std::vector<std::vector<Rational>> kernel_basis(const Matrix<Rational>& m) {
    // Scale every row to integers, then eliminate fraction-free over Z.
    Matrix<Integer> a(m.rows(), m.cols(), Integer(0));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Integer d = m(i, j).denominator();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        }
        for (std::size_t j = 0; j < m.cols(); ++j)
            a(i, j) = m(i, j).numerator() * (l / m(i, j).denominator());
    }
    const auto pivots = fraction_free_gauss_jordan(
        a, Integer(1), [](const Integer& x) { return sgn(x) == 0; },
        [](const Integer& x, const Integer& d) {
            Integer q;
            mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
            return q;
        });
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Integer> v(m.cols(), Integer(0));
        // All pivot entries share one value; take it from the last pivot row.
        v[f] = pivots.empty() ? Integer(1) : a(pivots.size() - 1, pivots.back());
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a(i, f);
        basis.push_back(canonical_vector(std::move(v)));
    }
    return basis;
}

namespace {

// Cofactor expansion along the first row; division-free, so it is faster
// than Bareiss for the 3 x 3 and 4 x 4 matrices that dominate here.
Poly cofactor_determinant(const Matrix<Poly>& m, std::vector<std::size_t>& cols, std::size_t row) {
    const std::size_t n = m.rows();
    if (row + 1 == n) {
        for (std::size_t c : cols)
            if (c != n) return m(row, c);
    }
    Poly sum(m(0, 0).ring());
    int sign = 1;
    for (std::size_t& c : cols) {
        if (c == n) continue;
        const std::size_t used = c;
        if (!m(row, used).is_zero()) {
            c = n;
            Poly minor = cofactor_determinant(m, cols, row + 1);
            c = used;
            if (!minor.is_zero()) {
                Poly term = m(row, used) * minor;
                if (sign < 0) sum -= term;
                else sum += term;
            }
        }
        sign = -sign;
    }
    return sum;
}

}  // namespace

Poly determinant(const Matrix<Poly>& input) {
    if (input.rows() != input.cols()) throw MathError(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
    const std::size_t n = input.rows();
    if (n == 0) throw MathError(ErrorKind::DimensionMismatch, "determinant of empty matrix");
    if (n <= 4) {
        std::vector<std::size_t> cols(n);
        for (std::size_t i = 0; i < n; ++i) cols[i] = i;
        return cofactor_determinant(input, cols, 0);
    }
    Matrix<Poly> m = input;
    const Ring& ring = m(0, 0).ring();
    Poly prev = Poly::constant(ring, Rational(1));
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t p = k;
        while (p < n && m(p, k).is_zero()) ++p;
        if (p == n) return Poly(ring);
        if (p != k) {
            m.swap_rows(p, k);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Poly num = m(k, k) * m(i, j) - m(i, k) * m(k, j);
                auto q = divide_exact(num, prev);
                if (!q) throw MathError(ErrorKind::Internal, "Bareiss step was not exact");
                m(i, j) = std::move(*q);
            }
            m(i, k) = Poly(ring);
        }
        prev = m(k, k);
    }
    Poly det = m(n - 1, n - 1);
    return negate ? -det : det;
}

Matrix<Rational> evaluate(const Matrix<Poly>& m, std::span<const Rational> point) {
    Matrix<Rational> out(m.rows(), m.cols(), Rational(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).evaluate<Rational>(point);
    return out;
}

std::vector<Poly> symbolic_kernel_vector(const Matrix<Poly>& m, std::uint64_t seed) {
    if (m.rows() == 0 || m.cols() == 0) throw MathError(ErrorKind::DimensionMismatch, "empty matrix");
    const Ring& ring = m(0, 0).ring();
    Rng rng(seed);
    std::vector<Rational> point(ring.size());
    for (auto& c : point) c = rng.nonzero_rational();
    const Matrix<Rational> spec = evaluate(m, point);
    const auto red = reduced_row_echelon(spec);
    const std::size_t nullity = m.cols() - red.pivots.size();
    if (nullity == 0) throw MathError(ErrorKind::NoKernel, "matrix is injective at a generic point");
    if (nullity >= 2) throw MathError(ErrorKind::DegenerateKernel, "kernel has dimension >= 2 at a generic point");

    // Rows of the specialisation that are linearly independent.
    std::vector<std::size_t> rows;
    {
        std::vector<std::vector<Rational>> chosen;
        for (std::size_t i = 0; i < m.rows() && rows.size() < red.pivots.size(); ++i) {
            chosen.emplace_back(spec.row(i).begin(), spec.row(i).end());
            if (rank(Matrix<Rational>(chosen)) == chosen.size()) {
                rows.push_back(i);
            } else {
                chosen.pop_back();
            }
        }
    }
    Matrix<Poly> sub = m.select_rows(rows);
    const std::size_t r = rows.size();
    const std::size_t n = m.cols();

    // v_j = (-1)^j det(sub with column j removed).
    std::vector<Poly> v;
    v.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (r == 0) {
            v.push_back(Poly::constant(ring, Rational(1)));
            continue;
        }
        Matrix<Poly> minor(r, r, Poly(ring));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t c = 0, cc = 0; c < n; ++c) {
                if (c == j) continue;
                minor(i, cc++) = sub(i, c);
            }
        Poly d = determinant(minor);
        v.push_back(j % 2 == 0 ? d : -d);
    }
    const Poly g = gcd(v);
    if (g.is_zero()) throw MathError(ErrorKind::Internal, "kernel minors vanish identically");
    for (auto& c : v) {
        auto q = divide_exact(c, g);
        if (!q) throw MathError(ErrorKind::Internal, "gcd does not divide a minor");
        c = std::move(*q);
    }
    // Fix the sign: leading coefficient of the first non-zero entry positive.
    for (const auto& c : v) {
        if (c.is_zero()) continue;
        if (c.leading_coefficient().sign() < 0)
            for (auto& e : v) e = -e;
        break;
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Poly s(ring);
        for (std::size_t j = 0; j < n; ++j) s += m(i, j) * v[j];
        if (!s.is_zero()) throw MathError(ErrorKind::Internal, "kernel vector does not annihilate the matrix");
    }
    return v;
}

}  // namespace planarize
