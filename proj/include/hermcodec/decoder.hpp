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
#include <string_view>
#include <vector>

#include "hermcodec/code.hpp"
#include "hermcodec/mapping.hpp"
#include "hermcodec/poly.hpp"

namespace hermcodec {

// ---------------------------------------------------------------------------
// Syndromes
// ---------------------------------------------------------------------------

/// Rewrites x^a y^b (any b >= 0) over the basis {x^a y^b : b < q} using
/// y^q = x^(q+1) + y. All coefficients are 1; terms that cancel mod 2 are dropped.
std::vector<Monomial> reduce_monomial(Monomial mon, int q);

/// s[a,b] = sum over points of y_P * x^a y^b (P) for every basis monomial of L(m P_inf).
class SyndromeTable {
public:
    SyndromeTable(int q, int m, std::vector<Monomial> basis, std::vector<Elem> values);

    int q() const noexcept { return q_; }
    int m() const noexcept { return m_; }
    const std::vector<Monomial>& basis() const noexcept { return basis_; }
    const std::vector<Elem>& values() const noexcept { return values_; }
    bool is_zero() const noexcept;

    bool available(Monomial mon) const noexcept { return pole_order(mon, q_) <= m_; }
    /// Syndrome of any monomial with pole order <= m, reducing y^b for b >= q.
    /// Throws std::out_of_range if the pole order exceeds m.
    Elem at(Monomial mon) const;

private:
    Elem at_basis(Monomial mon) const;

    int q_, m_;
    std::vector<Monomial> basis_;
    std::vector<Elem> values_;
    std::vector<int> index_;  // (a, b) -> position in basis_, -1 if absent
    int max_a_ = 0;
};

SyndromeTable compute_syndromes(const HermitianCode& code, const CodewordMatrix& y);

// ---------------------------------------------------------------------------
// Locators
// ---------------------------------------------------------------------------

struct LocatorTerm {
    Monomial mon;
    Elem coeff;
    bool operator==(const LocatorTerm&) const = default;
};

/// sigma(x, y) over monomials x^a y^b with b < q.
class BivariateLocator {
public:
    BivariateLocator() = default;
    explicit BivariateLocator(std::vector<LocatorTerm> terms);

    static BivariateLocator one() { return BivariateLocator({{{0, 0}, kOne}}); }
    /// prod (x - root), a y-free locator.
    static BivariateLocator from_x_roots(const Field& field, std::span<const Elem> roots);

    const std::vector<LocatorTerm>& terms() const noexcept { return terms_; }
    /// Largest pole order among the terms, -1 for the zero function.
    int pole_order(int q) const noexcept;
    bool y_free() const noexcept;
    /// coefficient * x^a * y^b per term; two multiplications tallied per term.
    Elem evaluate(const Field& field, Elem x, Elem y, OpCounter* counter = nullptr) const;

    bool operator==(const BivariateLocator&) const = default;

private:
    std::vector<LocatorTerm> terms_;  // ascending monomials, nonzero coefficients
};

enum class LocatorFamily {
    /// sigma = x^t + ... + c_0, the minimal locator of t fully corrupted columns.
    column,
    /// leading monomial plus every basis monomial of smaller pole order.
    bivariate,
};

enum class LocatorStatus { found, ambiguous, not_found };

struct LocatorResult {
    LocatorStatus status = LocatorStatus::not_found;
    /// For `ambiguous`, the solution with all free coefficients zero.
    BivariateLocator sigma;
    /// Pole order of the leading monomial tried last.
    int leading_pole = -1;
};

/// Peterson-style kernel: the leading monomial is raised in pole order until
/// sum_nu c_nu s[nu * phi] = 0 is consistent for every phi in L(m - pole).
LocatorResult find_locator(const HermitianCode& code, const SyndromeTable& synd,
                           LocatorFamily family = LocatorFamily::column);

/// Minimal-pole-order function vanishing on `support` (elimination on the
/// evaluation matrix; free coefficients are set to zero).
BivariateLocator locator_from_support(const HermitianCurve& curve, std::span<const CurvePoint> support);

/// psi_j(x) together with the row it was specialised to.
struct UnivariateLocator {
    Poly psi;
    Elem beta;
};

/// Substitutes y = x^(q+1)(y0 + beta). The alpha = 0 point of the row is not
/// represented in psi; chien_search evaluates sigma(0, beta) directly for it.
UnivariateLocator specialize_locator(const Field& field, const BivariateLocator& sigma, Elem y0, Elem beta);

struct ChienResult {
    std::vector<Elem> roots;      ///< alpha values, in column order
    std::uint64_t evaluations = 0;
};

/// q^2 - 1 evaluations of psi at epsilon^i plus one direct sigma(0, beta):
/// exactly q^2 evaluations.
ChienResult chien_search(const Field& field, const UnivariateLocator& psi, const BivariateLocator& sigma,
                         OpCounter* counter = nullptr);

/// Baseline without the semi-erasure shortcut: sigma at every one of the q^3
/// affine points.
ChienResult bivariate_search(const HermitianCurve& curve, const BivariateLocator& sigma,
                             OpCounter* counter = nullptr);

// ---------------------------------------------------------------------------
// Evaluator and Forney
// ---------------------------------------------------------------------------

struct ErrorTerm {
    CurvePoint point;
    Elem value;
};

/// 1 + sum_{i<q} y^(q-1-i) yk^i, the expansion of (y^q + y - yk^q - yk)/(y - yk).
Elem h_bracket(const Field& field, Elem y, Elem yk);
/// h_k = (y^q + y - yk^q - yk) / ((x - xk)(y - yk)) at a point with x != xk, y != yk.
Elem h_exact(const Field& field, Elem x, Elem y, Elem xk, Elem yk);

/// y(x) = x^(q+1)(y0 + beta) + beta (1 + x^(q^2-1)), exact on all of GF(q^2):
/// the delta term is 1 at x = 0 and 0 elsewhere.
Poly row_ordinate(const Field& field, Elem y0, Elem beta);

struct SeriesTerm {
    Elem value;   ///< e_k
    Elem xk;
    Elem yk;
    Poly g;       ///< bracket with y replaced by row_ordinate(beta); g(xk) = 1
};

/// S_e restricted to row beta: sum_k e_k g(x, xk) / (x - xk).
struct SyndromeSeries {
    Elem beta;
    std::vector<SeriesTerm> terms;
};

/// Keeps the nonzero errors lying in row `beta`. Throws std::invalid_argument
/// on coincident xk and std::logic_error if some g(xk) != 1.
SyndromeSeries build_syndrome_series(const HermitianCurve& curve, std::span<const ErrorTerm> errors, Elem beta);

struct Evaluator {
    Poly omega;     ///< polynomial part of psi * S_e, denominators cancelled exactly
    Poly reduced;   ///< omega mod psi; same values on the roots of psi, deg < deg psi
    Elem beta;
};

/// Omega = sum_k e_k g_k(x) psi(x) / (x - xk). Throws std::domain_error if some
/// xk is not a root of psi.
Evaluator build_evaluator(const Field& field, const UnivariateLocator& psi, const SyndromeSeries& series);

/// Omega(xk) / psi'(xk). Throws std::invalid_argument if psi(xk) != 0 and
/// std::domain_error if psi'(xk) = 0.
Elem forney(const Field& field, const Evaluator& omega, const UnivariateLocator& psi, Elem xk);

// ---------------------------------------------------------------------------
// Error values
// ---------------------------------------------------------------------------

struct CellValue {
    int row;
    int col;
    Elem value;
    bool operator==(const CellValue&) const = default;
};

struct ValueSolution {
    SolveStatus status = SolveStatus::inconsistent;
    std::vector<CellValue> cells;  ///< every cell of the requested columns (unique case)
};

/// Solves sum e_{beta,alpha} x^a y^b = s[a,b] over all cells of `columns`.
ValueSolution solve_error_values(const HermitianCode& code, const SyndromeTable& synd, std::span<const int> columns);

enum class SearchStatus { unique, ambiguous, none };

struct AuxiliarySolution {
    SearchStatus status = SearchStatus::none;
    std::vector<CellValue> cells;  ///< nonzero auxiliary cells of the minimal solution
    int weight = 0;
};

// ---------------------------------------------------------------------------
// Pipeline
// ---------------------------------------------------------------------------

struct DecodeOptions {
    LocatorFamily family = LocatorFamily::column;
    /// Decoding radius: the largest auxiliary weight accepted on either path; <= 0 means max(1, t_design).
    int search_radius = 0;
    /// Row used to cross-check the locator roots found on row 0.
    int cross_check_row = 1;
    /// Disable to exercise the locator path alone.
    bool allow_column_search = true;
    /// Also run bivariate_search on the final locator and record its count.
    bool bivariate_baseline = false;
};

struct DecodeCounters {
    std::uint64_t psi_evals = 0;          ///< Chien evaluations on row 0
    std::uint64_t cross_check_evals = 0;  ///< Chien evaluations on the cross-check row
    std::uint64_t bivariate_evals = 0;    ///< filled when DecodeOptions::bivariate_baseline is set
    std::uint64_t field_mults = 0;
};

enum class DecodeStatus { clean, corrected, undecodable };

std::string_view to_string(DecodeStatus s);

struct DecodeReport {
    DecodeStatus status = DecodeStatus::undecodable;
    std::string stage = "ok";   ///< failing stage when undecodable
    std::string path = "none";  ///< "locator", "column-search" or "none"
    CodewordMatrix corrected;   ///< auxiliary domain
    CodewordMatrix aux_error;
    CodewordMatrix error;       ///< Hermitian domain
    std::vector<int> support_columns;
    int aux_weight = 0;
    DecodeCounters counters;
    std::uint64_t seed = 0;
    long long trial = -1;

    bool success() const noexcept { return status != DecodeStatus::undecodable; }
    /// Single-line key=value record.
    std::string to_line() const;
};

/// Decoder bound to one code and one mapping. Stateless across calls; safe to
/// share between threads.
class SemiErasureDecoder {
public:
    SemiErasureDecoder(const HermitianCode& code, const MappingSet& mapping);

    const HermitianCode& code() const noexcept { return code_; }
    const MappingSet& mapping() const noexcept { return mapping_; }
    /// Parity check of the auxiliary code: H times the block-diagonal forward map.
    const Matrix& aux_parity_check() const noexcept { return aux_parity_; }

    /// Minimum-weight auxiliary error inside `columns` (each column nonzero)
    /// reproducing the syndromes; weights above `max_weight` are not tried.
    AuxiliarySolution solve_auxiliary_values(const SyndromeTable& synd, std::span<const int> columns,
                                             int max_weight) const;
    /// Minimum-weight auxiliary error of weight <= radius over all columns.
    AuxiliarySolution column_search(const SyndromeTable& synd, int radius) const;

    DecodeReport decode(const CodewordMatrix& aux_received, const DecodeOptions& options = {}) const;

private:
    const HermitianCode& code_;
    const MappingSet& mapping_;
    Matrix aux_parity_;
};

DecodeReport decode(const HermitianCode& code, const MappingSet& mapping, const CodewordMatrix& aux_received,
                    const DecodeOptions& options = {});

}  // namespace hermcodec
