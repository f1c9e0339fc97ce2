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

#include "hermcodec/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace hermcodec {

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::monomial(Elem c, std::size_t degree) {
    std::vector<Elem> v(degree + 1, kZero);
    v[degree] = c;
    return Poly(std::move(v));
}

Elem poly_eval(const Field& f, const Poly& p, Elem x, OpCounter* counter) {
    const auto& c = p.coeffs();
    if (c.empty()) return kZero;
    Elem acc = c.back();
    for (auto it = c.rbegin() + 1; it != c.rend(); ++it) acc = f.mul(acc, x, counter) + *it;
    return acc;
}

Poly poly_add(const Poly& a, const Poly& b) {
    std::vector<Elem> out(std::max(a.coeffs().size(), b.coeffs().size()), kZero);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
    return Poly(std::move(out));
}

Poly poly_scale(const Field& f, const Poly& p, Elem c) {
    std::vector<Elem> out(p.coeffs().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.mul(p.coeffs()[i], c);
    return Poly(std::move(out));
}

Poly poly_mul(const Field& f, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Elem> out(a.coeffs().size() + b.coeffs().size() - 1, kZero);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            out[i + j] += f.mul(a.coeffs()[i], b.coeffs()[j]);
    }
    return Poly(std::move(out));
}

Poly poly_formal_derivative(const Poly& p) {
    if (p.degree() < 1) return {};
    std::vector<Elem> out(static_cast<std::size_t>(p.degree()), kZero);
    for (std::size_t i = 1; i < p.coeffs().size(); i += 2) out[i - 1] = p.coeffs()[i];
    return Poly(std::move(out));
}

std::pair<Poly, Poly> poly_divmod(const Field& f, const Poly& num, const Poly& den) {
    if (den.is_zero()) throw std::domain_error("polynomial division by zero");
    if (num.degree() < den.degree()) return {Poly{}, num};
    std::vector<Elem> rem = num.coeffs();
    std::vector<Elem> quot(static_cast<std::size_t>(num.degree() - den.degree() + 1), kZero);
    const Elem lead_inv = f.inv(den.leading());
    const auto dd = static_cast<std::size_t>(den.degree());
    for (std::size_t k = quot.size(); k-- > 0;) {
        const Elem c = f.mul(rem[k + dd], lead_inv);
        quot[k] = c;
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j <= dd; ++j) rem[k + j] += f.mul(c, den.coeffs()[j]);
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly poly_gcd(const Field& f, Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_divmod(f, a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return poly_scale(f, a, f.inv(a.leading()));
}

Poly poly_from_roots(const Field& f, std::span<const Elem> roots) {
    Poly out = Poly::constant(kOne);
    for (Elem r : roots) out = poly_mul(f, out, Poly::linear(r));
    return out;
}

Poly poly_pow(const Field& f, const Poly& p, unsigned n) {
    Poly result = Poly::constant(kOne);
    Poly base = p;
    while (n) {
        if (n & 1u) result = poly_mul(f, result, base);
        n >>= 1u;
        if (n) base = poly_mul(f, base, base);
    }
    return result;
}

}  // namespace hermcodec
