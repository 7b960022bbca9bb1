#ifndef PLANARIZE_LINALG_HPP
#define PLANARIZE_LINALG_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "planarize/error.hpp"
#include "planarize/poly.hpp"
#include "planarize/scalar.hpp"

namespace planarize {

/// Dense row-major matrix. Used with Integer, Rational, QuadExt and Poly
/// entries.
template <class T>
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    Matrix(std::vector<std::vector<T>> rows_data) {  // NOLINT(google-explicit-constructor)
        rows_ = rows_data.size();
        cols_ = rows_ == 0 ? 0 : rows_data.front().size();
        data_.reserve(rows_ * cols_);
        for (auto& r : rows_data) {
            if (r.size() != cols_) throw MathError(ErrorKind::DimensionMismatch, "ragged matrix");
            for (auto& v : r) data_.push_back(std::move(v));
        }
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    Matrix select_rows(std::span<const std::size_t> which) const {
        Matrix out;
        out.rows_ = which.size();
        out.cols_ = cols_;
        for (auto i : which)
            for (std::size_t j = 0; j < cols_; ++j) out.data_.push_back((*this)(i, j));
        return out;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

// ---- Field elimination (Rational, QuadExt) -------------------------------

template <class F>
struct Echelon {
    Matrix<F> reduced;
    std::vector<std::size_t> pivots;  // pivot column of each non-zero row
};

template <class F>
Echelon<F> reduced_row_echelon(Matrix<F> m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(p, r);
        const F inv = F(1) / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const F f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
    return reduced_row_echelon(m).pivots.size();
}

/// Right null space over a field; one basis vector per free column.
template <class F>
std::vector<std::vector<F>> nullspace(const Matrix<F>& m) {
    auto [red, pivots] = reduced_row_echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<F>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<F> v(m.cols(), F(0));
        v[f] = F(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -red(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class F>
F determinant(Matrix<F> m) {
    if (m.rows() != m.cols()) throw MathError(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
    F det(1);
    const std::size_t n = m.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c).is_zero()) ++p;
        if (p == n) return F(0);
        if (p != c) {
            m.swap_rows(p, c);
            det = -det;
        }
        det *= m(c, c);
        const F inv = F(1) / m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero()) continue;
            const F f = m(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw MathError(ErrorKind::DimensionMismatch, "inverse of non-square matrix");
    Matrix<F> aug(n, 2 * n, F(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = F(1);
    }
    auto [red, pivots] = reduced_row_echelon(std::move(aug));
    if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
    Matrix<F> inv(n, n, F(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = red(i, n + j);
    return inv;
}

template <class F>
Matrix<F> multiply(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.cols() != b.rows()) throw MathError(ErrorKind::DimensionMismatch, "matrix product");
    Matrix<F> c(a.rows(), b.cols(), F(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

template <class F>
Matrix<F> identity(std::size_t n) {
    Matrix<F> m(n, n, F(0));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
}

/// Some solution x of A x = b, or nullopt if the system is inconsistent.
template <class F>
std::optional<std::vector<F>> solve(const Matrix<F>& a, std::span<const F> b) {
    if (b.size() != a.rows()) throw MathError(ErrorKind::DimensionMismatch, "solve: rhs size");
    Matrix<F> aug(a.rows(), a.cols() + 1, F(0));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    auto [red, pivots] = reduced_row_echelon(std::move(aug));
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    std::vector<F> x(a.cols(), F(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = red(i, a.cols());
    return x;
}

// ---- Fraction-free elimination ------------------------------------------

/// Integer-preserving Gauss-Jordan elimination (Bareiss). After the call
/// every pivot row i has the common value `det` at pivots[i], zeros in all
/// other pivot columns, and entries that are (signed) minors of the input.
/// `div` must perform exact division in the coefficient domain.
template <class R, class IsZero, class ExactDiv>
std::vector<std::size_t> fraction_free_gauss_jordan(Matrix<R>& m, const R& one, IsZero is_zero,
                                                    ExactDiv div) {
    std::vector<std::size_t> pivots;
    R prev = one;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && is_zero(m(p, c))) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(p, r);
        const R piv = m(r, c);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r) continue;
            const R f = m(i, c);
            for (std::size_t j = 0; j < m.cols(); ++j) {
                if (j == c) continue;
                m(i, j) = div(piv * m(i, j) - f * m(r, j), prev);
            }
            m(i, c) = f - f;
        }
        prev = piv;
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

/// Basis of the right null space of a rational matrix, computed by
/// fraction-free elimination; each vector is in canonical integer form
/// (primitive, first non-zero entry positive). Empty iff M is injective.
std::vector<std::vector<Rational>> kernel_basis(const Matrix<Rational>& m);

/// Determinant of a polynomial matrix by Bareiss elimination.
Poly determinant(const Matrix<Poly>& m);

/// Evaluates every entry at a rational point of the entries' ring.
Matrix<Rational> evaluate(const Matrix<Poly>& m, std::span<const Rational> point);

/// Generator of the kernel of a polynomial matrix whose nullity over the
/// fraction field is one. Rows are selected at a seeded random
/// specialisation; the vector consists of signed maximal minors divided
/// by their common gcd, and M v == 0 is re-verified identically.
/// Throws DegenerateKernel (nullity >= 2) or NoKernel (nullity 0).
std::vector<Poly> symbolic_kernel_vector(const Matrix<Poly>& m, std::uint64_t seed = 0);

}  // namespace planarize

#endif
