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

// Slow reference arithmetic shared by the tests. Written from the field and
// code definitions only: shift-and-add multiplication, pointwise sums.

#include <cstdint>
#include <vector>

#include "hermcodec/code.hpp"
#include "hermcodec/field.hpp"

namespace testsupport {

using hermcodec::Elem;

// Carry-less product reduced modulo `modulus` of degree `degree`.
inline std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b, std::uint32_t modulus, int degree) {
    std::uint32_t acc = 0;
    for (int i = 0; i < 16; ++i)
        if (b & (1u << i)) acc ^= a << i;
    for (int bit = 31; bit >= degree; --bit)
        if (acc & (1u << bit)) acc ^= modulus << (bit - degree);
    return acc;
}

inline Elem mul(const hermcodec::Field& f, Elem a, Elem b) {
    return Elem{static_cast<std::uint16_t>(slow_mul(a.value, b.value, f.spec().modulus, 2 * f.exponent()))};
}

inline Elem pow(const hermcodec::Field& f, Elem a, int n) {
    Elem acc = hermcodec::kOne;
    for (int i = 0; i < n; ++i) acc = mul(f, acc, a);
    return acc;
}

// sum_P y_P * x^a y^b (P), straight from the definition.
inline std::vector<Elem> syndromes(const hermcodec::HermitianCode& code, const hermcodec::CodewordMatrix& y) {
    const auto& f = code.field();
    std::vector<Elem> out;
    for (auto mon : code.basis()) {
        Elem s = hermcodec::kZero;
        for (int r = 0; r < y.rows(); ++r)
            for (int c = 0; c < y.columns(); ++c) {
                const auto& p = code.curve().point(r, c);
                s += mul(f, y.at(r, c), mul(f, pow(f, p.alpha, mon.a), pow(f, p.y, mon.b)));
            }
        out.push_back(s);
    }
    return out;
}

}  // namespace testsupport
