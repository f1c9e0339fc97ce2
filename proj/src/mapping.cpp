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

#include "hermcodec/mapping.hpp"

#include <sstream>
#include <stdexcept>

namespace hermcodec {

Matrix build_M(const Field& field, Elem y0) {
    const int q = field.q();
    const auto betas = field.subfield_elements();
    Matrix m(static_cast<std::size_t>(q), static_cast<std::size_t>(q));
    for (int r = 0; r < q; ++r) {
        const Elem z = y0 + betas[static_cast<std::size_t>(r)];
        m.at(r, 0) = kOne - field.pow(z, q - 1);
        for (int j = 1; j < q; ++j) m.at(r, j) = field.pow(z, q - 1 - j);
    }
    if (determinant(field, m).is_zero()) throw std::domain_error("mapping matrix M is singular");
    return m;
}

Matrix build_Mprime(const Field& field) {
    const int q = field.q();
    const auto betas = field.subfield_elements();
    Matrix m(static_cast<std::size_t>(q), static_cast<std::size_t>(q));
    m.at(0, 0) = kOne;
    m.at(0, q - 1) = -kOne;
    for (int r = 1; r < q; ++r) {
        const Elem b = betas[static_cast<std::size_t>(r)];
        for (int j = 1; j < q; ++j) m.at(r, j) = -field.pow(b, q - 1 - j);
    }
    if (determinant(field, m).is_zero()) throw std::domain_error("mapping matrix M' is singular");
    return m;
}

std::string_view to_string(Orientation o) {
    return o == Orientation::printed ? "printed" : "vandermonde";
}

Orientation parse_orientation(std::string_view name) {
    if (name == "printed") return Orientation::printed;
    if (name == "vandermonde") return Orientation::vandermonde;
    throw std::invalid_argument("orientation must be 'printed' or 'vandermonde'");
}

MappingSet MappingSet::build(const HermitianCurve& curve, Orientation orientation) {
    const Field& f = curve.field();
    MappingSet ms;
    ms.m_ = build_M(f, curve.y0());
    ms.mprime_ = build_Mprime(f);
    ms.minv_ = *inverse(f, ms.m_);
    ms.mprime_inv_ = *inverse(f, ms.mprime_);
    ms.orientation_ = orientation;
    ms.special_column_ = curve.columns() - 1;
    return ms;
}

const Matrix& MappingSet::forward(int col) const {
    const bool special = uses_mprime(col);
    if (orientation_ == Orientation::printed) return special ? mprime_ : m_;
    return special ? mprime_inv_ : minv_;
}

const Matrix& MappingSet::backward(int col) const {
    const bool special = uses_mprime(col);
    if (orientation_ == Orientation::printed) return special ? mprime_inv_ : minv_;
    return special ? mprime_ : m_;
}

namespace {

template <typename Pick>
CodewordMatrix map_columns(const Field& field, const CodewordMatrix& in, Pick pick) {
    CodewordMatrix out(in.q());
    for (int c = 0; c < in.columns(); ++c) {
        const auto col = in.column(c);
        out.set_column(c, multiply(field, pick(c), col));
    }
    return out;
}

}  // namespace

CodewordMatrix from_auxiliary(const Field& field, const MappingSet& ms, const CodewordMatrix& aux) {
    return map_columns(field, aux, [&](int c) -> const Matrix& { return ms.forward(c); });
}

CodewordMatrix to_auxiliary(const Field& field, const MappingSet& ms, const CodewordMatrix& r) {
    return map_columns(field, r, [&](int c) -> const Matrix& { return ms.backward(c); });
}

bool is_column_error(const CodewordMatrix& e) {
    for (int c = 0; c < e.columns(); ++c) {
        int nonzero = 0;
        for (int r = 0; r < e.rows(); ++r) nonzero += !e.at(r, c).is_zero();
        if (nonzero != 0 && nonzero != e.rows()) return false;
    }
    return true;
}

std::string format_matrix(const Field& field, const Matrix& m) {
    std::ostringstream os;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << to_token(field, m.at(r, c));
        os << '\n';
    }
    return os.str();
}

std::string dump_mapping(const Field& field, const MappingSet& ms) {
    std::ostringstream os;
    auto section = [&](const char* name, const Matrix& m) {
        os << "# " << name << ' ' << m.rows() << ' ' << m.cols() << '\n' << format_matrix(field, m);
    };
    section("M", ms.M());
    section("Mprime", ms.Mprime());
    section("Minv", ms.Minv());
    section("Mprime_inv", ms.Mprime_inv());
    return os.str();
}

}  // namespace hermcodec
