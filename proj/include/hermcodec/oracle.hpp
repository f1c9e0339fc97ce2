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
#include <span>
#include <string>
#include <vector>

#include "hermcodec/decoder.hpp"
#include "hermcodec/rng.hpp"

namespace hermcodec {

// ---------------------------------------------------------------------------
// Ground-truth oracles. These work from raw definitions (codebook scan,
// pointwise evaluation) and do not call into the decoder.
// ---------------------------------------------------------------------------

/// Every codeword, by scanning all q^(2k) messages. Throws std::length_error
/// when the codebook would exceed `max_words`.
std::vector<CodewordMatrix> enumerate_codebook(const HermitianCode& code, std::size_t max_words = 1u << 20);

/// to_auxiliary applied to every word of `codebook`.
std::vector<CodewordMatrix> auxiliary_codebook(const Field& field, const MappingSet& ms,
                                               std::span<const CodewordMatrix> codebook);

struct OracleResult {
    std::vector<std::size_t> nearest;  ///< indices into the codebook
    int distance = -1;
    bool unique = false;
};

OracleResult brute_force_decode(std::span<const CodewordMatrix> codebook, const CodewordMatrix& y);

struct PointRoots {
    std::vector<CurvePoint> roots;
    std::uint64_t count = 0;  ///< always q^3
};

/// sigma evaluated term by term at all q^3 points.
PointRoots bivariate_exhaustive_roots(const HermitianCurve& curve, const BivariateLocator& sigma);

// ---------------------------------------------------------------------------
// Channel and trials
// ---------------------------------------------------------------------------

CodewordMatrix random_codeword(const HermitianCode& code, Rng& rng);
/// `weight` distinct cells with uniformly random nonzero values.
CodewordMatrix random_error(const Field& field, int weight, Rng& rng);

enum class Outcome { recovered, undecodable, miscorrected };
std::string_view to_string(Outcome o);

struct TrialRecord {
    DecodeReport report;
    Outcome outcome = Outcome::undecodable;
    std::string line() const;  ///< report line plus outcome
};

struct TrialConfig {
    int t = 1;                 ///< auxiliary error weight
    long long trials = 100;
    std::uint64_t seed = 1;
    /// Every weight-t pattern (t <= 1 only) instead of random draws.
    bool exhaustive = false;
    int parallel = 1;
    DecodeOptions options;
};

/// codeword -> to_auxiliary -> inject -> decode -> compare. Records are in
/// trial order whatever `parallel` is.
std::vector<TrialRecord> run_trials(const HermitianCode& code, const MappingSet& ms, const TrialConfig& config);

struct RadiusRow {
    int t = 0;
    long long trials = 0, recovered = 0, undecodable = 0, miscorrected = 0;
    double rate = 0.0;
    bool exhaustive = false;
    std::string line() const;
};

struct RadiusConfig {
    int t_max = 0;  ///< <= 0 means q^2
    long long trials = 200;
    std::uint64_t seed = 1;
    /// t = 1 runs every single-cell pattern.
    bool exhaustive_single = true;
    int parallel = 1;
    DecodeOptions options;
};

/// Empirical exact-recovery rate for t = 0..t_max.
std::vector<RadiusRow> measure_radius(const HermitianCode& code, const MappingSet& ms, const RadiusConfig& config);

// ---------------------------------------------------------------------------
// Property suite
// ---------------------------------------------------------------------------

struct PropertyLine {
    std::string name;
    bool asserted = true;  ///< false: measured and reported, never fails the run
    long long trials = 0;
    long long failures = 0;
    std::string counterexample;
    bool holds() const noexcept { return failures == 0; }
    std::string line() const;
};

struct SuiteConfig {
    std::uint64_t seed = 1;
    long long trials = 500;
    /// Exhaustive supports and codebook checks; only feasible for q = 2.
    bool exhaustive = false;
    int parallel = 1;
};

std::vector<PropertyLine> verify_property_suite(const HermitianCode& code, const MappingSet& ms,
                                               const SuiteConfig& config);

/// True iff every asserted property holds.
bool suite_passes(std::span<const PropertyLine> lines);
/// True iff every reported (edge-case) property also holds.
bool edge_cases_hold(std::span<const PropertyLine> lines);

}  // namespace hermcodec
