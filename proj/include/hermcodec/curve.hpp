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

#include <compare>
#include <memory>
#include <string>
#include <vector>

#include "hermcodec/field.hpp"

namespace hermcodec {

/// Affine point of x^(q+1) = y^q + y labelled by alpha in GF(q^2) and beta in GF(q).
struct CurvePoint {
    Elem alpha;
    Elem beta;
    Elem y;

    auto operator<=>(const CurvePoint&) const = default;
};

/// x^a y^b with 0 <= b < q.
struct Monomial {
    int a = 0;
    int b = 0;

    auto operator<=>(const Monomial&) const = default;
};

constexpr int pole_order(Monomial mon, int q) noexcept { return mon.a * q + mon.b * (q + 1); }
constexpr int genus(int q) noexcept { return q * (q - 1) / 2; }

/// Monomials x^a y^b with aq + b(q+1) <= m and b < q, by increasing pole order.
std::vector<Monomial> basis_monomials(int q, int m);

/// Solution of y0 + y0^q = 1 with the smallest log index.
Elem solve_y0(const Field& field);

/// P = (alpha, alpha^(q+1)(y0 + beta) + delta(alpha) beta). Throws
/// std::invalid_argument if beta is outside GF(q).
CurvePoint point_from_labels(const Field& field, Elem y0, Elem alpha, Elem beta);

/// All q^3 points in codeword order: index row * q^2 + col, where row j carries
/// beta = 0 (j = 0) or gamma^(j-1), and column i carries alpha = epsilon^i
/// (i < q^2 - 1) or alpha = 0 (i = q^2 - 1).
std::vector<CurvePoint> enumerate_points(const Field& field, Elem y0);

/// The curve together with its fixed point layout.
class HermitianCurve {
public:
    explicit HermitianCurve(std::shared_ptr<const Field> field);

    const Field& field() const noexcept { return *field_; }
    const std::shared_ptr<const Field>& field_ptr() const noexcept { return field_; }
    int q() const noexcept { return field_->q(); }
    int rows() const noexcept { return field_->q(); }
    int columns() const noexcept { return field_->size(); }
    int num_points() const noexcept { return rows() * columns(); }
    Elem y0() const noexcept { return y0_; }

    const std::vector<CurvePoint>& points() const noexcept { return points_; }
    const CurvePoint& point(int row, int col) const {
        return points_[static_cast<std::size_t>(row * columns() + col)];
    }

    Elem column_alpha(int col) const;
    Elem row_beta(int row) const;
    /// Inverse of column_alpha.
    int column_of(Elem alpha) const;
    /// Inverse of row_beta; throws std::invalid_argument outside GF(q).
    int row_of(Elem beta) const;

    /// x^a y^b at `p`.
    Elem evaluate(Monomial mon, const CurvePoint& p) const;

    /// One line per point: "i j alpha_log beta_log y_log".
    std::string dump_points() const;

private:
    std::shared_ptr<const Field> field_;
    Elem y0_;
    std::vector<CurvePoint> points_;
};

}  // namespace hermcodec
