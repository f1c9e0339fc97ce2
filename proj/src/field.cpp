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

#include "hermcodec/field.hpp"

#include <charconv>
#include <stdexcept>

namespace hermcodec {

FieldSpec canonical_spec(int exponent) {
    switch (exponent) {
    case 1: return {1, 0x7};      // t^2 + t + 1
    case 2: return {2, 0x13};     // t^4 + t + 1
    case 3: return {3, 0x43};     // t^6 + t + 1
    case 4: return {4, 0x11d};    // t^8 + t^4 + t^3 + t^2 + 1
    default:
        throw std::invalid_argument("field exponent must be in 1..4, got " +
                                    std::to_string(exponent));
    }
}

int exponent_for_q(int q) {
    switch (q) {
    case 2: return 1;
    case 4: return 2;
    case 8: return 3;
    case 16: return 4;
    default:
        if (q % 2 != 0)
            throw std::invalid_argument("q = " + std::to_string(q) +
                                        " rejected: odd characteristic is not supported, q must be in {2,4,8,16}");
        throw std::invalid_argument("q must be a power of two in {2,4,8,16}, got " +
                                    std::to_string(q));
    }
}

Field Field::build(int exponent) { return Field(canonical_spec(exponent)); }

Field Field::from_spec(const FieldSpec& spec) { return Field(spec); }

Field::Field(const FieldSpec& spec) : spec_(spec) {
    if (spec.exponent < 1 || spec.exponent > 4)
        throw std::invalid_argument("field exponent must be in 1..4");
    const int degree = 2 * spec.exponent;
    if ((spec.modulus >> degree) != 1u)
        throw std::invalid_argument("modulus must have degree " + std::to_string(degree));

    q_ = 1 << spec.exponent;
    size_ = 1 << degree;
    const int order = size_ - 1;
    exp_.assign(static_cast<std::size_t>(2 * order), kZero);
    log_.assign(static_cast<std::size_t>(size_), -1);

    // Primitivity self-check: the powers of t must visit every nonzero residue
    // before returning to 1.
    std::uint32_t x = 1;
    for (int i = 0; i < order; ++i) {
        if (log_[x] != -1)
            throw std::invalid_argument("modulus is not primitive: t has order " +
                                        std::to_string(i));
        log_[x] = i;
        exp_[static_cast<std::size_t>(i)] = Elem{static_cast<std::uint16_t>(x)};
        x <<= 1;
        if (x & static_cast<std::uint32_t>(size_)) x ^= spec.modulus;
    }
    if (x != 1) throw std::invalid_argument("modulus is not primitive");
    for (int i = order; i < 2 * order; ++i)
        exp_[static_cast<std::size_t>(i)] = exp_[static_cast<std::size_t>(i - order)];
}

Elem Field::inv(Elem a) const {
    if (a.is_zero()) throw std::domain_error("inverse of zero");
    return exp_[static_cast<std::size_t>((group_order() - log_[a.value]) % group_order())];
}

Elem Field::div(Elem a, Elem b) const {
    if (b.is_zero()) throw std::domain_error("division by zero");
    return mul(a, inv(b));
}

Elem Field::pow(Elem a, long long n) const {
    if (n == 0) return kOne;
    if (a.is_zero()) {
        if (n < 0) throw std::domain_error("negative power of zero");
        return kZero;
    }
    return exp(static_cast<long long>(log_[a.value]) * n);
}

int Field::log(Elem a) const {
    if (a.is_zero()) throw std::domain_error("log of zero");
    return log_[a.value];
}

bool Field::in_subfield(Elem a) const { return pow(a, q_) == a; }

std::vector<Elem> Field::elements() const {
    std::vector<Elem> out;
    out.reserve(static_cast<std::size_t>(size_));
    out.push_back(kZero);
    for (int i = 0; i < group_order(); ++i) out.push_back(exp(i));
    return out;
}

std::vector<Elem> Field::subfield_elements() const {
    std::vector<Elem> out;
    out.reserve(static_cast<std::size_t>(q_));
    out.push_back(kZero);
    for (int j = 0; j < q_ - 1; ++j) out.push_back(pow(gamma(), j));
    return out;
}

std::string to_token(const Field& field, Elem a) {
    if (a.is_zero()) return "-";
    return std::to_string(field.log(a));
}

Elem parse_token(const Field& field, const std::string& token) {
    if (token == "-") return kZero;
    int value = -1;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || value < 0 ||
        value >= field.group_order())
        throw std::invalid_argument("bad field token '" + token + "'");
    return field.exp(value);
}

}  // namespace hermcodec
