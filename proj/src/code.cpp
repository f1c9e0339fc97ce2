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

#include "hermcodec/code.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hermcodec {

CodeParams code_params(int q, int m) {
    exponent_for_q(q);
    CodeParams p;
    p.q = q;
    p.m = m;
    p.n = q * q * q;
    p.g = genus(q);
    if (m <= 2 * p.g - 2 || m >= p.n)
        throw std::invalid_argument("m must satisfy 2g-2 < m < q^3 (" + std::to_string(2 * p.g - 2) +
                                    " < m < " + std::to_string(p.n) + "), got " + std::to_string(m));
    p.dim_l = static_cast<int>(basis_monomials(q, m).size());
    p.k = p.n - p.dim_l;
    p.dstar = m - 2 * p.g + 2;
    p.t_design = p.dstar >= 1 ? (p.dstar - 1) / 2 : 0;
    return p;
}

CodewordMatrix::CodewordMatrix(int q, std::vector<Elem> flat) : q_(q), data_(std::move(flat)) {
    if (data_.size() != static_cast<std::size_t>(q * q * q))
        throw std::invalid_argument("codeword matrix needs q^3 symbols");
}

std::vector<Elem> CodewordMatrix::column(int col) const {
    std::vector<Elem> out(static_cast<std::size_t>(q_));
    for (int r = 0; r < q_; ++r) out[static_cast<std::size_t>(r)] = at(r, col);
    return out;
}

void CodewordMatrix::set_column(int col, std::span<const Elem> values) {
    if (values.size() != static_cast<std::size_t>(q_)) throw std::invalid_argument("column length");
    for (int r = 0; r < q_; ++r) at(r, col) = values[static_cast<std::size_t>(r)];
}

bool CodewordMatrix::is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](Elem e) { return e.is_zero(); });
}

int CodewordMatrix::weight() const noexcept {
    return static_cast<int>(std::count_if(data_.begin(), data_.end(), [](Elem e) { return !e.is_zero(); }));
}

std::vector<int> CodewordMatrix::nonzero_columns() const {
    std::vector<int> out;
    for (int c = 0; c < columns(); ++c)
        for (int r = 0; r < q_; ++r)
            if (!at(r, c).is_zero()) {
                out.push_back(c);
                break;
            }
    return out;
}

CodewordMatrix operator+(CodewordMatrix a, const CodewordMatrix& b) {
    if (a.q_ != b.q_) throw std::invalid_argument("codeword size mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
}

int hamming_distance(const CodewordMatrix& a, const CodewordMatrix& b) {
    if (a.size() != b.size()) throw std::invalid_argument("codeword size mismatch");
    int d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a.flat()[i] != b.flat()[i];
    return d;
}

Matrix build_parity_check(const HermitianCurve& curve, int m) {
    const auto basis = basis_monomials(curve.q(), m);
    const auto& pts = curve.points();
    Matrix h(basis.size(), pts.size());
    for (std::size_t r = 0; r < basis.size(); ++r)
        for (std::size_t c = 0; c < pts.size(); ++c) h.at(r, c) = curve.evaluate(basis[r], pts[c]);
    return h;
}

Matrix build_generator(const Field& field, const Matrix& parity_check) {
    if (rank(field, parity_check) != parity_check.rows())
        throw std::invalid_argument("parity-check matrix is rank deficient");
    return nullspace(field, parity_check);
}

HermitianCode::HermitianCode(CodeParams params, HermitianCurve curve)
    : params_(params), curve_(std::move(curve)), basis_(basis_monomials(params.q, params.m)),
      parity_(build_parity_check(curve_, params.m)), generator_(build_generator(curve_.field(), parity_)) {
    if (static_cast<int>(generator_.rows()) != params_.k)
        throw std::logic_error("generator dimension disagrees with k");
}

HermitianCode HermitianCode::build(int q, int m) {
    const auto params = code_params(q, m);
    auto field = std::make_shared<const Field>(Field::build(exponent_for_q(q)));
    return HermitianCode(params, HermitianCurve(std::move(field)));
}

CodewordMatrix HermitianCode::encode(std::span<const Elem> msg) const {
    if (msg.size() != static_cast<std::size_t>(params_.k))
        throw std::invalid_argument("message length must be k = " + std::to_string(params_.k));
    std::vector<Elem> flat(static_cast<std::size_t>(params_.n), kZero);
    const Field& f = field();
    for (std::size_t i = 0; i < msg.size(); ++i) {
        if (msg[i].is_zero()) continue;
        const auto row = generator_.row(i);
        for (std::size_t j = 0; j < flat.size(); ++j) flat[j] += f.mul(msg[i], row[j]);
    }
    return CodewordMatrix(params_.q, std::move(flat));
}

bool HermitianCode::is_codeword(const CodewordMatrix& c) const {
    if (c.q() != params_.q) return false;
    const auto s = multiply(field(), parity_, c.flat());
    return std::all_of(s.begin(), s.end(), [](Elem e) { return e.is_zero(); });
}

}  // namespace hermcodec
