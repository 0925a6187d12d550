#pragma once

#include "poly.hpp"
#include "rational.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace logjets {

struct SingularSystem : std::runtime_error {
    SingularSystem() : std::runtime_error("singular linear system") {}
};

template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t r, std::size_t c, T fill = T()) : rows_(r), cols_(c), data_(r * c, fill) {}

    T& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

private:
    std::size_t rows_, cols_;
    std::vector<T> data_;
};

// Fraction-free Bareiss elimination; exact over the rationals.
inline Rational bareiss_determinant(Matrix<Rational> m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Rational(1);
    int sign = 1;
    Rational prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t sw = k;
            for (std::size_t i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) { sw = i; break; }
            if (sw == k) return Rational(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(sw, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
            m.at(i, k) = Rational(0);
        }
        prev = m.at(k, k);
    }
    Rational det = m.at(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

// Gaussian elimination over the rationals with arbitrary module rhs entries
// (rational or polynomial). The solution is verified exactly before returning.
template <typename T>
std::vector<T> linear_solve_exact(Matrix<Rational> a, std::vector<T> b) {
    if (a.rows() != a.cols() || a.rows() != b.size())
        throw std::invalid_argument("linear_solve_exact shape mismatch");
    const std::size_t n = a.rows();
    const Matrix<Rational> a0 = a;
    const std::vector<T> b0 = b;

    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a.at(piv, c) == 0) ++piv;
        if (piv == n) throw SingularSystem();
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(c, j), a.at(piv, j));
            std::swap(b[c], b[piv]);
        }
        Rational inv = Rational(1) / a.at(c, c);
        for (std::size_t j = c; j < n; ++j) a.at(c, j) = a.at(c, j) * inv;
        b[c] = b[c] * inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c) continue;
            Rational f = a.at(r, c);
            if (f == 0) continue;
            for (std::size_t j = c; j < n; ++j) a.at(r, j) = a.at(r, j) - f * a.at(c, j);
            b[r] = b[r] - b[c] * f;
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        T acc = b0[i] * Rational(0);
        for (std::size_t j = 0; j < n; ++j) acc = acc + b[j] * a0.at(i, j);
        T resid = acc - b0[i];
        if (!(resid == b0[i] * Rational(0)))
            throw std::logic_error("linear_solve_exact residual check failed");
    }
    return b;
}

namespace detail {

inline MultiPoly minor_det(const Matrix<MultiPoly>& m, std::uint32_t colmask,
                           std::map<std::uint32_t, MultiPoly>& memo) {
    auto it = memo.find(colmask);
    if (it != memo.end()) return it->second;
    int row = 0;
    for (std::uint32_t t = colmask; t; t >>= 1) row += int(t & 1);
    MultiPoly det;
    int pos = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (colmask & (1u << c)) continue;
        if (!m.at(row, c).is_zero()) {
            MultiPoly sub = minor_det(m, colmask | (1u << c), memo);
            MultiPoly term = m.at(row, c) * sub;
            det = (pos % 2 == 0) ? det + term : det - term;
        }
        ++pos;
    }
    memo.emplace(colmask, det);
    return det;
}

} // namespace detail

// Determinant of a small polynomial matrix: direct expansion up to 3x3,
// memoized minor expansion beyond.
inline MultiPoly poly_determinant(const Matrix<MultiPoly>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return MultiPoly::constant(Rational(1));
    if (n == 1) return m.at(0, 0);
    if (n == 2) return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
    if (n == 3) {
        MultiPoly det = m.at(0, 0) * (m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1));
        det -= m.at(0, 1) * (m.at(1, 0) * m.at(2, 2) - m.at(1, 2) * m.at(2, 0));
        det += m.at(0, 2) * (m.at(1, 0) * m.at(2, 1) - m.at(1, 1) * m.at(2, 0));
        return det;
    }
    if (n > 20) throw std::invalid_argument("poly_determinant limited to n <= 20");
    std::map<std::uint32_t, MultiPoly> memo;
    memo.emplace((1u << n) - 1, MultiPoly::constant(Rational(1)));
    return detail::minor_det(m, 0, memo);
}

} // namespace logjets
