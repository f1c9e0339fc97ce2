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

#include "hermcodec/decoder.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace hermcodec {

// ---------------------------------------------------------------------------
// Syndromes
// ---------------------------------------------------------------------------

namespace {

void reduce_into(Monomial mon, int q, std::map<Monomial, int>& acc) {
    if (mon.b < q) {
        acc[mon] ^= 1;
        return;
    }
    // y^q = x^(q+1) + y
    reduce_into({mon.a + q + 1, mon.b - q}, q, acc);
    reduce_into({mon.a, mon.b - q + 1}, q, acc);
}

}  // namespace

std::vector<Monomial> reduce_monomial(Monomial mon, int q) {
    std::map<Monomial, int> acc;
    reduce_into(mon, q, acc);
    std::vector<Monomial> out;
    for (const auto& [m, parity] : acc)
        if (parity) out.push_back(m);
    return out;
}

SyndromeTable::SyndromeTable(int q, int m, std::vector<Monomial> basis, std::vector<Elem> values)
    : q_(q), m_(m), basis_(std::move(basis)), values_(std::move(values)) {
    if (basis_.size() != values_.size()) throw std::invalid_argument("syndrome table size mismatch");
    for (auto mon : basis_) max_a_ = std::max(max_a_, mon.a);
    index_.assign(static_cast<std::size_t>((max_a_ + 1) * q_), -1);
    for (std::size_t i = 0; i < basis_.size(); ++i)
        index_[static_cast<std::size_t>(basis_[i].a * q_ + basis_[i].b)] = static_cast<int>(i);
}

bool SyndromeTable::is_zero() const noexcept {
    return std::all_of(values_.begin(), values_.end(), [](Elem e) { return e.is_zero(); });
}

Elem SyndromeTable::at_basis(Monomial mon) const {
    if (mon.a > max_a_) throw std::out_of_range("syndrome not in table");
    const int i = index_[static_cast<std::size_t>(mon.a * q_ + mon.b)];
    if (i < 0) throw std::out_of_range("syndrome not in table");
    return values_[static_cast<std::size_t>(i)];
}

Elem SyndromeTable::at(Monomial mon) const {
    if (!available(mon)) throw std::out_of_range("syndrome pole order exceeds m");
    if (mon.b < q_) return at_basis(mon);
    Elem acc = kZero;
    for (auto r : reduce_monomial(mon, q_)) acc += at_basis(r);
    return acc;
}

SyndromeTable compute_syndromes(const HermitianCode& code, const CodewordMatrix& y) {
    return SyndromeTable(code.q(), code.params().m, code.basis(),
                         multiply(code.field(), code.parity_check(), y.flat()));
}

// ---------------------------------------------------------------------------
// Locators
// ---------------------------------------------------------------------------

BivariateLocator::BivariateLocator(std::vector<LocatorTerm> terms) {
    std::map<Monomial, Elem> acc;
    for (const auto& t : terms) acc[t.mon] += t.coeff;
    for (const auto& [mon, c] : acc)
        if (!c.is_zero()) terms_.push_back({mon, c});
}

BivariateLocator BivariateLocator::from_x_roots(const Field& field, std::span<const Elem> roots) {
    const Poly p = poly_from_roots(field, roots);
    std::vector<LocatorTerm> terms;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) terms.push_back({{static_cast<int>(i), 0}, p.coeffs()[i]});
    return BivariateLocator(std::move(terms));
}

int BivariateLocator::pole_order(int q) const noexcept {
    int best = -1;
    for (const auto& t : terms_) best = std::max(best, hermcodec::pole_order(t.mon, q));
    return best;
}

bool BivariateLocator::y_free() const noexcept {
    return std::all_of(terms_.begin(), terms_.end(), [](const LocatorTerm& t) { return t.mon.b == 0; });
}

Elem BivariateLocator::evaluate(const Field& field, Elem x, Elem y, OpCounter* counter) const {
    Elem acc = kZero;
    for (const auto& t : terms_) {
        const Elem xy = field.mul(field.pow(x, t.mon.a), field.pow(y, t.mon.b), counter);
        acc += field.mul(t.coeff, xy, counter);
    }
    return acc;
}

namespace {

LocatorResult column_locator(const HermitianCode& code, const SyndromeTable& synd) {
    const int q = code.q(), m = code.params().m;
    const Field& f = code.field();
    LocatorResult out;
    for (int t = 1; t * q <= m; ++t) {
        std::vector<Monomial> tests;
        for (auto phi : code.basis())
            if (t * q + pole_order(phi, q) <= m) tests.push_back(phi);
        if (tests.empty()) break;
        Matrix a(tests.size(), static_cast<std::size_t>(t));
        std::vector<Elem> rhs(tests.size());
        for (std::size_t r = 0; r < tests.size(); ++r) {
            const auto [pa, pb] = tests[r];
            for (int l = 0; l < t; ++l) a.at(r, static_cast<std::size_t>(l)) = synd.at({pa + l, pb});
            rhs[r] = synd.at({pa + t, pb});
        }
        out.leading_pole = t * q;
        const auto sol = solve(f, a, rhs);
        if (sol.status == SolveStatus::inconsistent) continue;
        std::vector<LocatorTerm> terms{{{t, 0}, kOne}};
        for (int l = 0; l < t; ++l) terms.push_back({{l, 0}, sol.x[static_cast<std::size_t>(l)]});
        out.sigma = BivariateLocator(std::move(terms));
        out.status = sol.status == SolveStatus::unique ? LocatorStatus::found : LocatorStatus::ambiguous;
        return out;
    }
    out.status = LocatorStatus::not_found;
    return out;
}

LocatorResult bivariate_locator(const HermitianCode& code, const SyndromeTable& synd) {
    const int q = code.q(), m = code.params().m;
    const Field& f = code.field();
    const auto& monos = code.basis();
    LocatorResult out;
    for (std::size_t i = 1; i < monos.size(); ++i) {
        const Monomial lead = monos[i];
        const int p = pole_order(lead, q);
        std::vector<Monomial> tests;
        for (auto phi : monos)
            if (p + pole_order(phi, q) <= m) tests.push_back(phi);
        if (tests.empty()) break;
        Matrix a(tests.size(), i);
        std::vector<Elem> rhs(tests.size());
        for (std::size_t r = 0; r < tests.size(); ++r) {
            const auto phi = tests[r];
            for (std::size_t u = 0; u < i; ++u) a.at(r, u) = synd.at({monos[u].a + phi.a, monos[u].b + phi.b});
            rhs[r] = synd.at({lead.a + phi.a, lead.b + phi.b});
        }
        out.leading_pole = p;
        const auto sol = solve(f, a, rhs);
        if (sol.status == SolveStatus::inconsistent) continue;
        std::vector<LocatorTerm> terms{{lead, kOne}};
        for (std::size_t u = 0; u < i; ++u) terms.push_back({monos[u], sol.x[u]});
        out.sigma = BivariateLocator(std::move(terms));
        out.status = sol.status == SolveStatus::unique ? LocatorStatus::found : LocatorStatus::ambiguous;
        return out;
    }
    out.status = LocatorStatus::not_found;
    return out;
}

}  // namespace

LocatorResult find_locator(const HermitianCode& code, const SyndromeTable& synd, LocatorFamily family) {
    if (synd.is_zero()) return {LocatorStatus::found, BivariateLocator::one(), 0};
    return family == LocatorFamily::column ? column_locator(code, synd) : bivariate_locator(code, synd);
}

BivariateLocator locator_from_support(const HermitianCurve& curve, std::span<const CurvePoint> support) {
    if (support.empty()) return BivariateLocator::one();
    const int q = curve.q();
    const Field& f = curve.field();
    // |support| + 1 functions are dependent on |support| points, so the scan
    // stops within the first |support| + 1 monomials.
    const auto monos = basis_monomials(q, q * q * q + q * q);
    for (std::size_t i = 0; i < monos.size(); ++i) {
        Matrix a(support.size(), i);
        std::vector<Elem> rhs(support.size());
        for (std::size_t r = 0; r < support.size(); ++r) {
            for (std::size_t u = 0; u < i; ++u) a.at(r, u) = curve.evaluate(monos[u], support[r]);
            rhs[r] = curve.evaluate(monos[i], support[r]);
        }
        const auto sol = i == 0 ? LinearSolution{std::all_of(rhs.begin(), rhs.end(), [](Elem e) { return e.is_zero(); })
                                                     ? SolveStatus::unique
                                                     : SolveStatus::inconsistent,
                                                 {}}
                                : solve(f, a, rhs);
        if (sol.status == SolveStatus::inconsistent) continue;
        std::vector<LocatorTerm> terms{{monos[i], kOne}};
        for (std::size_t u = 0; u < i; ++u) terms.push_back({monos[u], sol.x[u]});
        return BivariateLocator(std::move(terms));
    }
    throw std::logic_error("no vanishing function found for support");
}

UnivariateLocator specialize_locator(const Field& field, const BivariateLocator& sigma, Elem y0, Elem beta) {
    const int q = field.q();
    const Elem z = y0 + beta;
    std::vector<Elem> coeffs;
    for (const auto& t : sigma.terms()) {
        const auto deg = static_cast<std::size_t>(t.mon.a + t.mon.b * (q + 1));
        if (coeffs.size() <= deg) coeffs.resize(deg + 1, kZero);
        coeffs[deg] += field.mul(t.coeff, field.pow(z, t.mon.b));
    }
    return {Poly(std::move(coeffs)), beta};
}

ChienResult chien_search(const Field& field, const UnivariateLocator& psi, const BivariateLocator& sigma,
                         OpCounter* counter) {
    ChienResult out;
    for (int i = 0; i < field.group_order(); ++i) {
        const Elem alpha = field.exp(i);
        ++out.evaluations;
        if (poly_eval(field, psi.psi, alpha, counter).is_zero()) out.roots.push_back(alpha);
    }
    // alpha = 0 sits on the delta branch: the point is (0, beta).
    ++out.evaluations;
    if (sigma.evaluate(field, kZero, psi.beta, counter).is_zero()) out.roots.push_back(kZero);
    if (counter) counter->evaluations += out.evaluations;
    return out;
}

ChienResult bivariate_search(const HermitianCurve& curve, const BivariateLocator& sigma, OpCounter* counter) {
    ChienResult out;
    for (const auto& p : curve.points()) {
        ++out.evaluations;
        if (sigma.evaluate(curve.field(), p.alpha, p.y, counter).is_zero()) out.roots.push_back(p.alpha);
    }
    if (counter) counter->evaluations += out.evaluations;
    return out;
}

// ---------------------------------------------------------------------------
// Evaluator and Forney
// ---------------------------------------------------------------------------

Elem h_bracket(const Field& field, Elem y, Elem yk) {
    const int q = field.q();
    Elem acc = kOne;
    for (int i = 0; i < q; ++i) acc += field.mul(field.pow(y, q - 1 - i), field.pow(yk, i));
    return acc;
}

Elem h_exact(const Field& field, Elem x, Elem y, Elem xk, Elem yk) {
    const int q = field.q();
    const Elem num = field.pow(y, q) + y - field.pow(yk, q) - yk;
    return field.div(num, field.mul(x - xk, y - yk));
}

Poly row_ordinate(const Field& field, Elem y0, Elem beta) {
    const int q = field.q();
    Poly y = Poly::monomial(y0 + beta, static_cast<std::size_t>(q + 1));
    y = poly_add(y, Poly::constant(beta));
    return poly_add(y, Poly::monomial(beta, static_cast<std::size_t>(field.group_order())));
}

SyndromeSeries build_syndrome_series(const HermitianCurve& curve, std::span<const ErrorTerm> errors, Elem beta) {
    const Field& f = curve.field();
    const int q = curve.q();
    SyndromeSeries series{beta, {}};
    const Poly y = row_ordinate(f, curve.y0(), beta);
    std::vector<Poly> ypow{Poly::constant(kOne)};
    for (int i = 1; i < q; ++i) ypow.push_back(poly_mul(f, ypow.back(), y));

    for (const auto& e : errors) {
        if (e.point.beta != beta || e.value.is_zero()) continue;
        for (const auto& t : series.terms)
            if (t.xk == e.point.alpha) throw std::invalid_argument("two errors share x_k within one row");
        const Elem yk = e.point.y;
        Poly g = Poly::constant(kOne);
        for (int i = 0; i < q; ++i)
            g = poly_add(g, poly_scale(f, ypow[static_cast<std::size_t>(q - 1 - i)], f.pow(yk, i)));
        if (poly_eval(f, g, e.point.alpha) != kOne) throw std::logic_error("g(x_k, x_k) != 1");
        series.terms.push_back({e.value, e.point.alpha, yk, std::move(g)});
    }
    return series;
}

Evaluator build_evaluator(const Field& field, const UnivariateLocator& psi, const SyndromeSeries& series) {
    Poly omega;
    for (const auto& t : series.terms) {
        auto [quot, rem] = poly_divmod(field, psi.psi, Poly::linear(t.xk));
        if (!rem.is_zero()) throw std::domain_error("evaluator: x_k is not a root of psi");
        omega = poly_add(omega, poly_scale(field, poly_mul(field, t.g, quot), t.value));
    }
    Poly reduced = psi.psi.degree() >= 1 ? poly_divmod(field, omega, psi.psi).second : Poly{};
    return {std::move(omega), std::move(reduced), series.beta};
}

Elem forney(const Field& field, const Evaluator& omega, const UnivariateLocator& psi, Elem xk) {
    if (!poly_eval(field, psi.psi, xk).is_zero()) throw std::invalid_argument("forney: x_k is not a root of psi");
    const Elem d = poly_eval(field, poly_formal_derivative(psi.psi), xk);
    if (d.is_zero()) throw std::domain_error("forney: psi'(x_k) = 0 at an error location");
    return field.div(poly_eval(field, omega.omega, xk), d);
}

// ---------------------------------------------------------------------------
// Error values
// ---------------------------------------------------------------------------

namespace {

std::vector<std::size_t> column_cells(int q, std::span<const int> columns) {
    std::vector<std::size_t> cells;
    for (int c : columns)
        for (int r = 0; r < q; ++r) cells.push_back(static_cast<std::size_t>(r * q * q + c));
    return cells;
}

CellValue cell_of(int q, std::size_t flat, Elem v) {
    const int cols = q * q;
    return {static_cast<int>(flat) / cols, static_cast<int>(flat) % cols, v};
}

}  // namespace

ValueSolution solve_error_values(const HermitianCode& code, const SyndromeTable& synd, std::span<const int> columns) {
    ValueSolution out;
    if (columns.empty()) {
        out.status = synd.is_zero() ? SolveStatus::unique : SolveStatus::inconsistent;
        return out;
    }
    const auto cells = column_cells(code.q(), columns);
    const auto sol = solve(code.field(), select_columns(code.parity_check(), cells), synd.values());
    out.status = sol.status;
    if (sol.status == SolveStatus::inconsistent) return out;
    for (std::size_t i = 0; i < cells.size(); ++i) out.cells.push_back(cell_of(code.q(), cells[i], sol.x[i]));
    return out;
}

// ---------------------------------------------------------------------------
// Pipeline
// ---------------------------------------------------------------------------

std::string_view to_string(DecodeStatus s) {
    switch (s) {
    case DecodeStatus::clean: return "clean";
    case DecodeStatus::corrected: return "corrected";
    case DecodeStatus::undecodable: return "undecodable";
    }
    return "?";
}

std::string DecodeReport::to_line() const {
    std::ostringstream os;
    os << "status=" << to_string(status) << " stage=" << stage << " path=" << path
       << " t=" << support_columns.size() << " aux_weight=" << aux_weight << " support=";
    if (support_columns.empty()) os << '-';
    for (std::size_t i = 0; i < support_columns.size(); ++i) os << (i ? "," : "") << support_columns[i];
    os << " psi_evals=" << counters.psi_evals << " cross_check_evals=" << counters.cross_check_evals
       << " bivariate_evals=" << counters.bivariate_evals << " field_mults=" << counters.field_mults;
    if (trial >= 0) os << " trial=" << trial << " seed=" << seed;
    return os.str();
}

SemiErasureDecoder::SemiErasureDecoder(const HermitianCode& code, const MappingSet& mapping)
    : code_(code), mapping_(mapping) {
    const Field& f = code.field();
    const Matrix& h = code.parity_check();
    const int q = code.q(), cols = q * q;
    aux_parity_ = Matrix(h.rows(), h.cols());
    for (int c = 0; c < cols; ++c) {
        const Matrix& fwd = mapping.forward(c);
        for (int r = 0; r < q; ++r) {
            const auto aux_cell = static_cast<std::size_t>(r * cols + c);
            for (std::size_t s = 0; s < h.rows(); ++s) {
                Elem acc = kZero;
                for (int rr = 0; rr < q; ++rr)
                    acc += f.mul(h.at(s, static_cast<std::size_t>(rr * cols + c)), fwd.at(rr, r));
                aux_parity_.at(s, aux_cell) = acc;
            }
        }
    }
}

namespace {

// Tries one auxiliary support; true if it reproduces the syndromes uniquely
// with every value nonzero.
bool try_support(const Field& f, const Matrix& aux_parity, const SyndromeTable& synd,
                 const std::vector<std::size_t>& cells, std::vector<Elem>& values) {
    const auto sol = solve(f, select_columns(aux_parity, cells), synd.values());
    if (sol.status != SolveStatus::unique) return false;
    if (std::any_of(sol.x.begin(), sol.x.end(), [](Elem e) { return e.is_zero(); })) return false;
    values = sol.x;
    return true;
}

AuxiliarySolution pick(int q, const std::vector<std::pair<std::vector<std::size_t>, std::vector<Elem>>>& found,
                       int weight) {
    AuxiliarySolution out;
    if (found.empty()) return out;
    out.status = found.size() == 1 ? SearchStatus::unique : SearchStatus::ambiguous;
    out.weight = weight;
    for (std::size_t i = 0; i < found[0].first.size(); ++i)
        out.cells.push_back(cell_of(q, found[0].first[i], found[0].second[i]));
    return out;
}

}  // namespace

AuxiliarySolution SemiErasureDecoder::solve_auxiliary_values(const SyndromeTable& synd, std::span<const int> columns,
                                                             int max_weight) const {
    const int q = code_.q(), cols = q * q;
    const int limit = std::min({max_weight, static_cast<int>(columns.size()) * q,
                                static_cast<int>(aux_parity_.rows())});
    const Field& f = code_.field();
    const unsigned full = (1u << q) - 1u;

    for (int w = static_cast<int>(columns.size()); w <= limit; ++w) {
        std::vector<std::pair<std::vector<std::size_t>, std::vector<Elem>>> found;
        std::vector<unsigned> masks(columns.size(), 0);
        std::function<void(std::size_t, int)> rec = [&](std::size_t ci, int remaining) {
            if (ci == columns.size()) {
                if (remaining != 0) return;
                std::vector<std::size_t> cells;
                for (std::size_t k = 0; k < columns.size(); ++k)
                    for (int r = 0; r < q; ++r)
                        if (masks[k] & (1u << r)) cells.push_back(static_cast<std::size_t>(r * cols + columns[k]));
                std::sort(cells.begin(), cells.end());
                std::vector<Elem> values;
                if (try_support(f, aux_parity_, synd, cells, values)) found.emplace_back(cells, values);
                return;
            }
            const int later = static_cast<int>(columns.size() - ci - 1);
            for (unsigned mask = 1; mask <= full; ++mask) {
                const int pc = std::popcount(mask);
                if (pc > remaining - later) continue;
                masks[ci] = mask;
                rec(ci + 1, remaining - pc);
            }
        };
        rec(0, w);
        if (!found.empty()) return pick(q, found, w);
    }
    return {};
}

AuxiliarySolution SemiErasureDecoder::column_search(const SyndromeTable& synd, int radius) const {
    const int q = code_.q();
    const std::size_t n = aux_parity_.cols();
    const Field& f = code_.field();
    for (int w = 1; w <= radius && w <= static_cast<int>(aux_parity_.rows()); ++w) {
        std::vector<std::pair<std::vector<std::size_t>, std::vector<Elem>>> found;
        std::vector<std::size_t> cells(static_cast<std::size_t>(w));
        std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t depth, std::size_t start) {
            if (depth == cells.size()) {
                std::vector<Elem> values;
                if (try_support(f, aux_parity_, synd, cells, values)) found.emplace_back(cells, values);
                return;
            }
            for (std::size_t c = start; c + (cells.size() - depth) <= n; ++c) {
                cells[depth] = c;
                rec(depth + 1, c + 1);
            }
        };
        rec(0, 0);
        if (!found.empty()) return pick(q, found, w);
    }
    return {};
}

namespace {

struct Candidate {
    CodewordMatrix aux_error;
    std::vector<int> columns;
};

CodewordMatrix aux_from_cells(int q, const std::vector<CellValue>& cells) {
    CodewordMatrix e(q);
    for (const auto& c : cells) e.at(c.row, c.col) = c.value;
    return e;
}

}  // namespace

DecodeReport SemiErasureDecoder::decode(const CodewordMatrix& aux_received, const DecodeOptions& options) const {
    const Field& f = code_.field();
    const HermitianCurve& curve = code_.curve();
    const int q = code_.q();
    if (aux_received.q() != q) throw std::invalid_argument("received word has the wrong shape");

    DecodeReport rep;
    rep.corrected = aux_received;
    rep.aux_error = CodewordMatrix(q);
    rep.error = CodewordMatrix(q);
    OpCounter ops;

    const CodewordMatrix y = from_auxiliary(f, mapping_, aux_received);
    const SyndromeTable synd = compute_syndromes(code_, y);
    if (synd.is_zero()) {
        rep.status = DecodeStatus::clean;
        return rep;
    }

    const int cross_row = std::clamp(options.cross_check_row, 0, q - 1);
    const Elem beta0 = curve.row_beta(0);
    const Elem beta_x = curve.row_beta(cross_row);

    // Row-0 Chien search plus the cross-check row; returns false if the rows disagree.
    auto search_rows = [&](const BivariateLocator& sigma, std::vector<Elem>& roots) {
        OpCounter row0, row1;
        const auto r0 = chien_search(f, specialize_locator(f, sigma, curve.y0(), beta0), sigma, &row0);
        const auto r1 = chien_search(f, specialize_locator(f, sigma, curve.y0(), beta_x), sigma, &row1);
        rep.counters.psi_evals = r0.evaluations;
        rep.counters.cross_check_evals = r1.evaluations;
        ops.field_mults += row0.field_mults + row1.field_mults;
        roots = r0.roots;
        return r0.roots == r1.roots;
    };

    std::optional<Candidate> cand;
    std::string failure = "locator";

    const int radius = options.search_radius > 0 ? options.search_radius : std::max(1, code_.params().t_design);
    const auto loc = find_locator(code_, synd, options.family);
    if (loc.status == LocatorStatus::found) {
        std::vector<Elem> roots;
        const bool rows_agree = search_rows(loc.sigma, roots);
        const bool degree_ok = !loc.sigma.y_free() || static_cast<int>(roots.size()) == loc.sigma.pole_order(q) / q;
        if (!rows_agree || !degree_ok || roots.empty()) {
            failure = "chien";
        } else {
            std::vector<int> columns;
            for (Elem a : roots) columns.push_back(curve.column_of(a));
            std::sort(columns.begin(), columns.end());

            const auto hv = solve_error_values(code_, synd, columns);
            if (hv.status == SolveStatus::unique) {
                CodewordMatrix e(q);
                for (const auto& c : hv.cells) e.at(c.row, c.col) = c.value;
                CodewordMatrix ea = to_auxiliary(f, mapping_, e);
                if (ea.nonzero_columns() == columns && ea.weight() <= radius) cand = Candidate{std::move(ea), columns};
            } else if (hv.status == SolveStatus::underdetermined) {
                const auto av = solve_auxiliary_values(synd, columns, radius);
                if (av.status == SearchStatus::unique) cand = Candidate{aux_from_cells(q, av.cells), columns};
            }
            if (cand) rep.path = "locator";
            else failure = "values";
        }
    }

    if (!cand && options.allow_column_search) {
        const auto av = column_search(synd, radius);
        if (av.status == SearchStatus::unique) {
            CodewordMatrix ea = aux_from_cells(q, av.cells);
            auto columns = ea.nonzero_columns();
            std::vector<Elem> alphas;
            for (int c : columns) alphas.push_back(curve.column_alpha(c));
            std::vector<Elem> roots;
            const auto sigma = BivariateLocator::from_x_roots(f, alphas);
            if (search_rows(sigma, roots)) {
                cand = Candidate{std::move(ea), std::move(columns)};
                rep.path = "column-search";
            } else {
                failure = "chien";
            }
        } else {
            failure = av.status == SearchStatus::ambiguous ? "ambiguous" : "search";
        }
    }

    if (!cand) {
        rep.stage = failure;
        rep.counters.field_mults = ops.field_mults;
        return rep;
    }

    // Consistency: recovered Hermitian error reproduces the syndromes and
    // Forney's formula returns every value on every row.
    const CodewordMatrix e = from_auxiliary(f, mapping_, cand->aux_error);
    if (compute_syndromes(code_, e).values() != synd.values()) {
        rep.stage = "syndrome";
        return rep;
    }
    std::vector<Elem> alphas;
    for (int c : cand->columns) alphas.push_back(curve.column_alpha(c));
    const auto sigma = BivariateLocator::from_x_roots(f, alphas);
    try {
        for (int r = 0; r < q; ++r) {
            const Elem beta = curve.row_beta(r);
            std::vector<ErrorTerm> terms;
            for (int c : cand->columns)
                if (!e.at(r, c).is_zero()) terms.push_back({curve.point(r, c), e.at(r, c)});
            const auto psi = specialize_locator(f, sigma, curve.y0(), beta);
            const auto omega = build_evaluator(f, psi, build_syndrome_series(curve, terms, beta));
            for (int c : cand->columns)
                if (forney(f, omega, psi, curve.column_alpha(c)) != e.at(r, c)) {
                    rep.stage = "forney";
                    return rep;
                }
        }
    } catch (const std::exception&) {
        rep.stage = "forney";
        return rep;
    }

    if (options.bivariate_baseline) {
        OpCounter base;
        rep.counters.bivariate_evals = bivariate_search(curve, sigma, &base).evaluations;
    }

    CodewordMatrix corrected = aux_received + cand->aux_error;
    if (!code_.is_codeword(from_auxiliary(f, mapping_, corrected))) {
        rep.stage = "verify";
        return rep;
    }
    rep.status = DecodeStatus::corrected;
    rep.corrected = std::move(corrected);
    rep.aux_weight = cand->aux_error.weight();
    rep.aux_error = std::move(cand->aux_error);
    rep.error = e;
    rep.support_columns = std::move(cand->columns);
    rep.counters.field_mults = ops.field_mults;
    return rep;
}

DecodeReport decode(const HermitianCode& code, const MappingSet& mapping, const CodewordMatrix& aux_received,
                    const DecodeOptions& options) {
    return SemiErasureDecoder(code, mapping).decode(aux_received, options);
}

}  // namespace hermcodec
