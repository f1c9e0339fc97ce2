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

#include <string>
#include <string_view>

#include "hermcodec/code.hpp"
#include "hermcodec/matrix.hpp"

namespace hermcodec {

/// Row for b in {0, 1, gamma, ..., gamma^(q-2)}: column 0 holds
/// 1 - (y0 + b)^(q-1), column j >= 1 holds (y0 + b)^(q-1-j).
/// Throws std::domain_error if the result is singular.
Matrix build_M(const Field& field, Elem y0);

/// First row (1, 0, ..., 0, -1); row for b in {1, gamma, ..., gamma^(q-2)} is
/// (0, -b^(q-2), ..., -b, -1). Throws std::domain_error if singular.
Matrix build_Mprime(const Field& field);

/// Which way the displayed matrices act on a column.
enum class Orientation {
    /// Hermitian column = M * auxiliary column (the matrices exactly as displayed).
    printed,
    /// Hermitian column = M^-1 * auxiliary column, i.e. the Vandermonde inverses
    /// carry the auxiliary word onto the code. Default: it is the orientation in
    /// which distinct single auxiliary errors never share a syndrome.
    vandermonde,
};

std::string_view to_string(Orientation o);
/// Accepts "printed" or "vandermonde"; throws std::invalid_argument otherwise.
Orientation parse_orientation(std::string_view name);

/// M, M' and their inverses plus the column assignment: M' on the last
/// column (alpha = 0), M everywhere else.
class MappingSet {
public:
    static MappingSet build(const HermitianCurve& curve, Orientation orientation = Orientation::vandermonde);

    const Matrix& M() const noexcept { return m_; }
    const Matrix& Mprime() const noexcept { return mprime_; }
    const Matrix& Minv() const noexcept { return minv_; }
    const Matrix& Mprime_inv() const noexcept { return mprime_inv_; }
    Orientation orientation() const noexcept { return orientation_; }
    int special_column() const noexcept { return special_column_; }
    bool uses_mprime(int col) const noexcept { return col == special_column_; }

    /// Matrix taking auxiliary column `col` to the Hermitian column.
    const Matrix& forward(int col) const;
    /// Matrix taking Hermitian column `col` back to the auxiliary column.
    const Matrix& backward(int col) const;

private:
    Matrix m_, mprime_, minv_, mprime_inv_;
    Orientation orientation_ = Orientation::vandermonde;
    int special_column_ = 0;
};

/// Column j of the result is forward(j) times column j of `aux`.
CodewordMatrix from_auxiliary(const Field& field, const MappingSet& ms, const CodewordMatrix& aux);
/// Column j of the result is backward(j) times column j of `r`.
CodewordMatrix to_auxiliary(const Field& field, const MappingSet& ms, const CodewordMatrix& r);

/// True iff every column with a nonzero entry is nonzero in all q rows.
bool is_column_error(const CodewordMatrix& e);

/// Matrix text format: one line per row, space-separated symbol tokens.
std::string format_matrix(const Field& field, const Matrix& m);
/// M, M', M^-1, M'^-1 with "# name rows cols" headers.
std::string dump_mapping(const Field& field, const MappingSet& ms);

}  // namespace hermcodec
