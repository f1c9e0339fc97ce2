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

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hermcodec/field.hpp"

namespace hermcodec {

/// Dense row-major matrix over GF(q^2).
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Elem& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Elem at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::vector<Elem> column(std::size_t c) const;

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Elem> data_;
};

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b);
std::vector<Elem> multiply(const Field& f, const Matrix& a, std::span<const Elem> x);
Matrix transpose(const Matrix& a);
/// Columns `cols` of `a`, in the given order.
Matrix select_columns(const Matrix& a, std::span<const std::size_t> cols);

struct RowEchelon {
    Matrix reduced;                  ///< reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivots; ///< pivot column of each row of `reduced`
};

/// Gauss-Jordan elimination.
RowEchelon row_reduce(const Field& f, Matrix a);
std::size_t rank(const Field& f, const Matrix& a);
Elem determinant(const Field& f, Matrix a);
/// std::nullopt if singular.
std::optional<Matrix> inverse(const Field& f, const Matrix& a);

/// Rows form a basis of { x : a x = 0 }.
Matrix nullspace(const Field& f, const Matrix& a);

enum class SolveStatus { unique, underdetermined, inconsistent };

struct LinearSolution {
    SolveStatus status = SolveStatus::inconsistent;
    /// A solution with every free variable set to zero (empty if inconsistent).
    std::vector<Elem> x;
};

/// Solves a x = b.
LinearSolution solve(const Field& f, const Matrix& a, std::span<const Elem> b);

}  // namespace hermcodec
