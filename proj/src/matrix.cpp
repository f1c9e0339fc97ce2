/*
 * Copyright 2026 The hermcodec Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "hermcodec/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace hermcodec {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = kOne;
    return m;
}

std::vector<Elem> Matrix::column(std::size_t c) const {
    std::vector<Elem> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
    return out;
}

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Elem aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out.at(i, j) += f.mul(aik, b.at(k, j));
        }
    return out;
}

std::vector<Elem> multiply(const Field& f, const Matrix& a, std::span<const Elem> x) {
    if (a.cols() != x.size()) throw std::invalid_argument("matrix/vector shape mismatch");
    std::vector<Elem> out(a.rows(), kZero);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Elem acc = kZero;
        for (std::size_t k = 0; k < a.cols(); ++k) acc += f.mul(a.at(i, k), x[k]);
        out[i] = acc;
    }
    return out;
}

Matrix transpose(const Matrix& a) {
    Matrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.at(j, i) = a.at(i, j);
    return out;
}

Matrix select_columns(const Matrix& a, std::span<const std::size_t> cols) {
    Matrix out(a.rows(), cols.size());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) out.at(i, j) = a.at(i, cols[j]);
    return out;
}

namespace {

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(a, c), m.at(b, c));
}

// Eliminates in place over the first `limit` columns; returns pivot columns.
std::vector<std::size_t> eliminate(const Field& f, Matrix& m, std::size_t limit) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < limit && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m.at(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        swap_rows(m, r, p);
        const Elem inv = f.inv(m.at(r, c));
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(r, j) = f.mul(m.at(r, j), inv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r) continue;
            const Elem factor = m.at(i, c);
            if (factor.is_zero()) continue;
            for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) += f.mul(factor, m.at(r, j));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

RowEchelon row_reduce(const Field& f, Matrix a) {
    auto pivots = eliminate(f, a, a.cols());
    Matrix reduced(pivots.size(), a.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) reduced.at(i, j) = a.at(i, j);
    return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Field& f, const Matrix& a) { return row_reduce(f, a).pivots.size(); }

Elem determinant(const Field& f, Matrix a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = a.rows();
    Elem det = kOne;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a.at(p, c).is_zero()) ++p;
        if (p == n) return kZero;
        swap_rows(a, c, p);  // sign is irrelevant in characteristic 2
        det = f.mul(det, a.at(c, c));
        const Elem inv = f.inv(a.at(c, c));
        for (std::size_t i = c + 1; i < n; ++i) {
            const Elem factor = f.mul(a.at(i, c), inv);
            if (factor.is_zero()) continue;
            for (std::size_t j = c; j < n; ++j) a.at(i, j) += f.mul(factor, a.at(c, j));
        }
    }
    return det;
}

std::optional<Matrix> inverse(const Field& f, const Matrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = a.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n + i) = kOne;
    }
    if (eliminate(f, aug, n).size() != n) return std::nullopt;
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
    return out;
}

Matrix nullspace(const Field& f, const Matrix& a) {
    const auto ech = row_reduce(f, a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : ech.pivots) is_pivot[p] = true;
    Matrix basis(a.cols() - ech.pivots.size(), a.cols());
    std::size_t b = 0;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        basis.at(b, free) = kOne;
        for (std::size_t i = 0; i < ech.pivots.size(); ++i)
            basis.at(b, ech.pivots[i]) = ech.reduced.at(i, free);  // -x = x
        ++b;
    }
    return basis;
}

LinearSolution solve(const Field& f, const Matrix& a, std::span<const Elem> b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve: rhs length mismatch");
    const std::size_t n = a.cols();
    Matrix aug(a.rows(), n + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n) = b[i];
    }
    const auto pivots = eliminate(f, aug, n);
    for (std::size_t i = pivots.size(); i < aug.rows(); ++i)
        if (!aug.at(i, n).is_zero()) return {SolveStatus::inconsistent, {}};
    LinearSolution sol;
    sol.x.assign(n, kZero);
    for (std::size_t i = 0; i < pivots.size(); ++i) sol.x[pivots[i]] = aug.at(i, n);
    sol.status = pivots.size() == n ? SolveStatus::unique : SolveStatus::underdetermined;
    return sol;
}

}  // namespace hermcodec
