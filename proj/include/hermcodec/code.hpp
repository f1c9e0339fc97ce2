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

#include <memory>
#include <span>
#include <vector>

#include "hermcodec/curve.hpp"
#include "hermcodec/matrix.hpp"

namespace hermcodec {

struct CodeParams {
    int q = 0;
    int m = 0;
    int n = 0;          ///< q^3
    int dim_l = 0;      ///< dim L(m P_inf)
    int k = 0;          ///< n - dim_l
    int g = 0;          ///< q(q-1)/2
    int dstar = 0;      ///< m - 2g + 2
    int t_design = 0;   ///< floor((dstar - 1) / 2)
};

/// Throws std::invalid_argument unless q is in {2,4,8,16} and 2g - 2 < m < q^3.
CodeParams code_params(int q, int m);

/// q x q^2 array of symbols; rows follow beta, columns follow alpha.
class CodewordMatrix {
public:
    CodewordMatrix() = default;
    explicit CodewordMatrix(int q) : q_(q), data_(static_cast<std::size_t>(q * q * q)) {}
    CodewordMatrix(int q, std::vector<Elem> flat);

    int q() const noexcept { return q_; }
    int rows() const noexcept { return q_; }
    int columns() const noexcept { return q_ * q_; }
    std::size_t size() const noexcept { return data_.size(); }

    Elem& at(int row, int col) { return data_[index(row, col)]; }
    Elem at(int row, int col) const { return data_[index(row, col)]; }
    std::span<const Elem> flat() const noexcept { return data_; }
    std::span<Elem> flat() noexcept { return data_; }

    std::vector<Elem> column(int col) const;
    void set_column(int col, std::span<const Elem> values);

    bool is_zero() const noexcept;
    /// Number of nonzero symbols.
    int weight() const noexcept;
    /// Ascending indices of columns with any nonzero symbol.
    std::vector<int> nonzero_columns() const;

    bool operator==(const CodewordMatrix&) const = default;
    friend CodewordMatrix operator+(CodewordMatrix a, const CodewordMatrix& b);

private:
    std::size_t index(int row, int col) const noexcept {
        return static_cast<std::size_t>(row * q_ * q_ + col);
    }
    int q_ = 0;
    std::vector<Elem> data_;
};

int hamming_distance(const CodewordMatrix& a, const CodewordMatrix& b);

/// Row (a,b), column P holds x^a y^b at P; rows in basis_monomials order,
/// columns in codeword order.
Matrix build_parity_check(const HermitianCurve& curve, int m);

/// k x n generator whose rows span the null space of H. Throws
/// std::invalid_argument if H does not have full row rank.
Matrix build_generator(const Field& field, const Matrix& parity_check);

/// The one-point Hermitian code C(m): words orthogonal to every evaluation of L(m P_inf).
class HermitianCode {
public:
    static HermitianCode build(int q, int m);

    const CodeParams& params() const noexcept { return params_; }
    const Field& field() const noexcept { return curve_.field(); }
    const HermitianCurve& curve() const noexcept { return curve_; }
    const std::vector<Monomial>& basis() const noexcept { return basis_; }
    const Matrix& parity_check() const noexcept { return parity_; }
    const Matrix& generator() const noexcept { return generator_; }
    int q() const noexcept { return params_.q; }

    /// msg (length k) times G, laid out as a q x q^2 matrix.
    CodewordMatrix encode(std::span<const Elem> msg) const;
    bool is_codeword(const CodewordMatrix& c) const;

private:
    HermitianCode(CodeParams params, HermitianCurve curve);

    CodeParams params_;
    HermitianCurve curve_;
    std::vector<Monomial> basis_;
    Matrix parity_;
    Matrix generator_;
};

}  // namespace hermcodec
