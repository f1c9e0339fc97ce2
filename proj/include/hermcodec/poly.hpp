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

#include <span>
#include <utility>
#include <vector>

#include "hermcodec/field.hpp"

namespace hermcodec {

/// Univariate polynomial over GF(q^2), coefficients lowest degree first.
/// Canonical form has no trailing zeros; the zero polynomial is empty.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Elem> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    static Poly constant(Elem c) { return Poly({c}); }
    static Poly monomial(Elem c, std::size_t degree);
    /// x - root (== x + root).
    static Poly linear(Elem root) { return Poly({root, kOne}); }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    Elem coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : kZero; }
    Elem leading() const noexcept { return coeffs_.empty() ? kZero : coeffs_.back(); }
    const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }

    bool operator==(const Poly&) const = default;

private:
    void normalize();
    std::vector<Elem> coeffs_;
};

/// Horner evaluation; each multiplication is tallied in `counter`.
Elem poly_eval(const Field& f, const Poly& p, Elem x, OpCounter* counter = nullptr);

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_scale(const Field& f, const Poly& p, Elem c);
Poly poly_mul(const Field& f, const Poly& a, const Poly& b);

/// Formal derivative. In characteristic 2 the coefficient of x^(i-1) is c_i
/// for odd i and 0 for even i, so no field arithmetic is needed.
Poly poly_formal_derivative(const Poly& p);

/// Quotient and remainder. Throws std::domain_error on a zero divisor.
std::pair<Poly, Poly> poly_divmod(const Field& f, const Poly& num, const Poly& den);

/// Monic gcd; gcd(0, 0) = 0.
Poly poly_gcd(const Field& f, Poly a, Poly b);

/// prod (x - r) over `roots`.
Poly poly_from_roots(const Field& f, std::span<const Elem> roots);

/// p(x)^n by repeated squaring.
Poly poly_pow(const Field& f, const Poly& p, unsigned n);

}  // namespace hermcodec
