/*
   Copyright 2026 The jdr Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef JDR_DETERMINANT_HPP
#define JDR_DETERMINANT_HPP

/*
 * Exact determinants over integral domains with exact division
 * (K, K[x], K(x)[symbols]).
 *
 *   det_cofactor        Laplace expansion along the first row, O(n!)
 *   det_fraction_free   Bareiss elimination; every division is exact, so
 *                       intermediate entries are themselves minors
 *   signed_maximal_minors
 *                       for an (n-1) x n matrix M, t_c = (-1)^c det(M without
 *                       column c) (0-based c); then M t = 0
 */

#include <cstddef>
#include <utility>
#include <vector>

#include "error.hpp"

namespace jdr {

template <class R>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), d_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<R>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        for (const auto& r : rows) {
            if (r.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
            for (const auto& e : r) d_.push_back(e);
        }
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    R& operator()(std::size_t i, std::size_t j) { return d_[i * cols_ + j]; }
    const R& operator()(std::size_t i, std::size_t j) const { return d_[i * cols_ + j]; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    Matrix without_column(std::size_t c) const {
        Matrix m(rows_, cols_ - 1);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0, k = 0; j < cols_; ++j)
                if (j != c) m(i, k++) = (*this)(i, j);
        return m;
    }

    Matrix without(std::size_t r, std::size_t c) const {
        Matrix m(rows_ - 1, cols_ - 1);
        for (std::size_t i = 0, a = 0; i < rows_; ++i) {
            if (i == r) continue;
            for (std::size_t j = 0, b = 0; j < cols_; ++j)
                if (j != c) m(a, b++) = (*this)(i, j);
            ++a;
        }
        return m;
    }

    template <class V>
    std::vector<R> multiply(const std::vector<V>& v) const {
        if (v.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "matrix-vector size mismatch");
        std::vector<R> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
        return out;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<R> d_;
};

template <class R>
R det_cofactor(const Matrix<R>& m) {
    if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return R(1);
    if (n == 1) return m(0, 0);
    if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    R acc{};
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j).is_zero()) continue;
        R term = m(0, j) * det_cofactor(m.without(0, j));
        if (j % 2) acc -= term;
        else acc += term;
    }
    return acc;
}

inline constexpr std::size_t cofactor_cutoff = 4;

template <class R>
R det_fraction_free(Matrix<R> m) {
    if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n <= cofactor_cutoff) return det_cofactor(m);

    bool negate = false;
    R prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            std::size_t p = k + 1;
            while (p < n && m(p, k).is_zero()) ++p;
            if (p == n) return R{};
            m.swap_rows(k, p);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                R v = m(k, k) * m(i, j) - m(i, k) * m(k, j);
                m(i, j) = k == 0 ? std::move(v) : exact_divide(v, prev);
            }
        }
        prev = m(k, k);
    }
    R d = m(n - 1, n - 1);
    return negate ? -d : d;
}

template <class R>
std::vector<R> signed_maximal_minors(const Matrix<R>& m) {
    if (m.cols() != m.rows() + 1)
        throw Error(ErrorKind::DimensionMismatch, "maximal minors need exactly one more column than rows");
    std::vector<R> t;
    t.reserve(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
        R d = det_fraction_free(m.without_column(c));
        t.push_back(c % 2 ? -d : d);
    }
    return t;
}

} // namespace jdr

#endif // JDR_DETERMINANT_HPP
