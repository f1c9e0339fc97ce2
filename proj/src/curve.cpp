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

#include "hermcodec/curve.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hermcodec {

std::vector<Monomial> basis_monomials(int q, int m) {
    std::vector<Monomial> out;
    if (m < 0) return out;
    for (int b = 0; b < q; ++b)
        for (int a = 0; pole_order({a, b}, q) <= m; ++a) out.push_back({a, b});
    std::sort(out.begin(), out.end(), [q](Monomial l, Monomial r) {
        const int pl = pole_order(l, q), pr = pole_order(r, q);
        return pl != pr ? pl < pr : l.b < r.b;
    });
    return out;
}

Elem solve_y0(const Field& field) {
    // Scan in log order so the first hit has the smallest log index.
    for (int i = 0; i < field.group_order(); ++i) {
        const Elem z = field.exp(i);
        if (z + field.pow(z, field.q()) == kOne) return z;
    }
    throw std::logic_error("y0 + y0^q = 1 has no solution");  // unreachable for GF(q^2)
}

CurvePoint point_from_labels(const Field& field, Elem y0, Elem alpha, Elem beta) {
    if (!field.in_subfield(beta)) throw std::invalid_argument("beta must lie in GF(q)");
    const int q = field.q();
    const Elem norm = field.pow(alpha, q + 1);
    Elem y = field.mul(norm, y0 + beta);
    if (alpha.is_zero()) y += beta;
    CurvePoint p{alpha, beta, y};
    if (norm != field.pow(y, q) + y) throw std::logic_error("point is not on the curve");
    return p;
}

std::vector<CurvePoint> enumerate_points(const Field& field, Elem y0) {
    const int q = field.q(), cols = field.size();
    const auto betas = field.subfield_elements();
    std::vector<CurvePoint> out;
    out.reserve(static_cast<std::size_t>(q * cols));
    for (int j = 0; j < q; ++j)
        for (int i = 0; i < cols; ++i) {
            const Elem alpha = i < cols - 1 ? field.exp(i) : kZero;
            out.push_back(point_from_labels(field, y0, alpha, betas[static_cast<std::size_t>(j)]));
        }
    return out;
}

HermitianCurve::HermitianCurve(std::shared_ptr<const Field> field)
    : field_(std::move(field)), y0_(solve_y0(*field_)), points_(enumerate_points(*field_, y0_)) {}

Elem HermitianCurve::column_alpha(int col) const {
    if (col < 0 || col >= columns()) throw std::out_of_range("column index");
    return col < columns() - 1 ? field_->exp(col) : kZero;
}

Elem HermitianCurve::row_beta(int row) const {
    if (row < 0 || row >= rows()) throw std::out_of_range("row index");
    return row == 0 ? kZero : field_->pow(field_->gamma(), row - 1);
}

int HermitianCurve::column_of(Elem alpha) const {
    if (!field_->contains(alpha)) throw std::invalid_argument("alpha outside the field");
    return alpha.is_zero() ? columns() - 1 : field_->log(alpha);
}

int HermitianCurve::row_of(Elem beta) const {
    if (!field_->in_subfield(beta)) throw std::invalid_argument("beta must lie in GF(q)");
    if (beta.is_zero()) return 0;
    // log(gamma^k) = k(q+1)
    return field_->log(beta) / (q() + 1) + 1;
}

Elem HermitianCurve::evaluate(Monomial mon, const CurvePoint& p) const {
    return field_->mul(field_->pow(p.alpha, mon.a), field_->pow(p.y, mon.b));
}

std::string HermitianCurve::dump_points() const {
    std::ostringstream os;
    for (int j = 0; j < rows(); ++j)
        for (int i = 0; i < columns(); ++i) {
            const auto& p = point(j, i);
            os << i << ' ' << j << ' ' << to_token(*field_, p.alpha) << ' '
               << to_token(*field_, p.beta) << ' ' << to_token(*field_, p.y) << '\n';
        }
    return os.str();
}

}  // namespace hermcodec
