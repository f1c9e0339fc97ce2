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

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "hermcodec/field.hpp"

namespace hermcodec {

/// splitmix64 finaliser; gives every trial its own stream so results do not
/// depend on how trials are scheduled.
inline std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (trial + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// mt19937_64 with a fixed reduction. std::uniform_int_distribution differs
/// between standard libraries, which would make reports platform dependent.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, bound).
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t v;
        do v = engine_();
        while (v >= limit);
        return v % bound;
    }

    Elem element(const Field& f) { return Elem{static_cast<std::uint16_t>(below(static_cast<std::uint64_t>(f.size())))}; }
    Elem nonzero(const Field& f) {
        return Elem{static_cast<std::uint16_t>(1 + below(static_cast<std::uint64_t>(f.size() - 1)))};
    }

    /// k distinct values from [0, n), in draw order.
    std::vector<std::size_t> sample(std::size_t n, std::size_t k) {
        std::vector<std::size_t> pool(n);
        std::iota(pool.begin(), pool.end(), std::size_t{0});
        for (std::size_t i = 0; i < k; ++i) std::swap(pool[i], pool[i + below(n - i)]);
        pool.resize(k);
        return pool;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace hermcodec
