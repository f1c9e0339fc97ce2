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
#include <cstdint>
#include <string>
#include <vector>

namespace hermcodec {

/// Element of GF(2^k) in polynomial basis over GF(2). Bit i is the
/// coefficient of t^i in the residue modulo the field modulus.
struct Elem {
    std::uint16_t value = 0;

    constexpr bool is_zero() const noexcept { return value == 0; }
    constexpr auto operator<=>(const Elem&) const = default;
};

inline constexpr Elem kZero{0};
inline constexpr Elem kOne{1};

// Characteristic 2: addition and subtraction are both XOR and need no tables.
constexpr Elem operator+(Elem a, Elem b) noexcept {
    return Elem{static_cast<std::uint16_t>(a.value ^ b.value)};
}
constexpr Elem operator-(Elem a, Elem b) noexcept { return a + b; }
constexpr Elem operator-(Elem a) noexcept { return a; }
constexpr Elem& operator+=(Elem& a, Elem b) noexcept { return a = a + b; }

/// Per-call operation tally. Never shared between concurrent calls.
struct OpCounter {
    std::uint64_t field_mults = 0;
    std::uint64_t evaluations = 0;
};

struct FieldSpec {
    int exponent = 0;            ///< q = 2^exponent
    std::uint32_t modulus = 0;   ///< degree 2*exponent polynomial over GF(2), bit i = coeff of t^i
};

/// The fixed primitive modulus for GF(q^2), q = 2^exponent, 1 <= exponent <= 4.
FieldSpec canonical_spec(int exponent);

/// Maps q to its exponent; throws std::invalid_argument unless q is 2, 4, 8 or 16.
int exponent_for_q(int q);

/// GF(q^2) for q = 2^m with exp/log tables, its primitive element epsilon, and
/// the subfield GF(q) generated by gamma = epsilon^(q+1). Immutable after
/// construction.
class Field {
public:
    /// Builds the field over the canonical modulus for `exponent`.
    static Field build(int exponent);
    /// Builds over an arbitrary modulus. Throws std::invalid_argument if the
    /// modulus has the wrong degree or its root does not generate the
    /// multiplicative group.
    static Field from_spec(const FieldSpec& spec);

    const FieldSpec& spec() const noexcept { return spec_; }
    int exponent() const noexcept { return spec_.exponent; }
    int q() const noexcept { return q_; }
    /// q^2, the number of elements.
    int size() const noexcept { return size_; }
    /// q^2 - 1, the multiplicative order of epsilon.
    int group_order() const noexcept { return size_ - 1; }

    Elem epsilon() const noexcept { return exp(1); }
    Elem gamma() const noexcept { return exp(q_ + 1); }

    Elem add(Elem a, Elem b) const noexcept { return a + b; }
    Elem mul(Elem a, Elem b) const noexcept {
        if (a.is_zero() || b.is_zero()) return kZero;
        return exp_[log_[a.value] + log_[b.value]];
    }
    Elem mul(Elem a, Elem b, OpCounter* counter) const noexcept {
        if (counter) ++counter->field_mults;
        return mul(a, b);
    }
    /// Throws std::domain_error on zero.
    Elem inv(Elem a) const;
    /// Throws std::domain_error on a zero divisor.
    Elem div(Elem a, Elem b) const;
    /// a^n for any integer n; 0^0 = 1, 0^n = 0 for n > 0, negative n needs a != 0.
    Elem pow(Elem a, long long n) const;

    /// epsilon^i, any integer i.
    Elem exp(long long i) const noexcept {
        long long r = i % group_order();
        if (r < 0) r += group_order();
        return exp_[static_cast<std::size_t>(r)];
    }
    /// Discrete log base epsilon in [0, q^2 - 2]. Throws std::domain_error on zero.
    int log(Elem a) const;

    bool contains(Elem a) const noexcept { return a.value < size_; }
    /// True iff a lies in GF(q), i.e. a^q = a.
    bool in_subfield(Elem a) const;

    /// All q^2 elements, zero first then epsilon^0, epsilon^1, ...
    std::vector<Elem> elements() const;
    /// The q elements of GF(q) in row order: 0, gamma^0, ..., gamma^(q-2).
    std::vector<Elem> subfield_elements() const;

private:
    explicit Field(const FieldSpec& spec);

    FieldSpec spec_;
    int q_ = 0;
    int size_ = 0;
    std::vector<Elem> exp_;        // length 2*(size-1) so log sums need no reduction
    std::vector<int> log_;
};

/// Canonical token: decimal log index, or "-" for zero.
std::string to_token(const Field& field, Elem a);
/// Inverse of to_token. Throws std::invalid_argument on malformed input.
Elem parse_token(const Field& field, const std::string& token);

}  // namespace hermcodec
