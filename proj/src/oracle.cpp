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

#include "hermcodec/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "hermcodec/text_io.hpp"

namespace hermcodec {

namespace {

template <typename Fn>
void for_each_index(std::size_t count, int threads, Fn fn) {
    if (threads <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    std::vector<std::thread> pool;
    const auto workers = std::min<std::size_t>(static_cast<std::size_t>(threads), count);
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(error_mu);
                    if (!error) error = std::current_exception();
                    next = count;
                }
            }
        });
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

std::string join_ints(const std::vector<int>& v) {
    if (v.empty()) return "-";
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

// x^n by repeated multiplication, no log tables.
Elem naive_pow(const Field& f, Elem x, int n) {
    Elem acc = kOne;
    for (int i = 0; i < n; ++i) acc = f.mul(acc, x);
    return acc;
}

}  // namespace

// ---------------------------------------------------------------------------
// Oracles
// ---------------------------------------------------------------------------

std::vector<CodewordMatrix> enumerate_codebook(const HermitianCode& code, std::size_t max_words) {
    const int k = code.params().k;
    const auto symbols = static_cast<std::size_t>(code.field().size());
    std::size_t total = 1;
    for (int i = 0; i < k; ++i) {
        if (total > max_words / symbols) throw std::length_error("codebook too large to enumerate");
        total *= symbols;
    }
    std::vector<CodewordMatrix> words;
    words.reserve(total);
    std::vector<Elem> msg(static_cast<std::size_t>(k), kZero);
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t v = idx;
        for (int i = 0; i < k; ++i) {
            msg[static_cast<std::size_t>(i)] = Elem{static_cast<std::uint16_t>(v % symbols)};
            v /= symbols;
        }
        words.push_back(code.encode(msg));
    }
    return words;
}

std::vector<CodewordMatrix> auxiliary_codebook(const Field& field, const MappingSet& ms,
                                               std::span<const CodewordMatrix> codebook) {
    std::vector<CodewordMatrix> out;
    out.reserve(codebook.size());
    for (const auto& c : codebook) out.push_back(to_auxiliary(field, ms, c));
    return out;
}

OracleResult brute_force_decode(std::span<const CodewordMatrix> codebook, const CodewordMatrix& y) {
    OracleResult out;
    for (std::size_t i = 0; i < codebook.size(); ++i) {
        const int d = hamming_distance(codebook[i], y);
        if (out.distance < 0 || d < out.distance) {
            out.distance = d;
            out.nearest.assign(1, i);
        } else if (d == out.distance) {
            out.nearest.push_back(i);
        }
    }
    out.unique = out.nearest.size() == 1;
    return out;
}

PointRoots bivariate_exhaustive_roots(const HermitianCurve& curve, const BivariateLocator& sigma) {
    const Field& f = curve.field();
    PointRoots out;
    for (const auto& p : curve.points()) {
        ++out.count;
        Elem v = kZero;
        for (const auto& t : sigma.terms())
            v += f.mul(t.coeff, f.mul(naive_pow(f, p.alpha, t.mon.a), naive_pow(f, p.y, t.mon.b)));
        if (v.is_zero()) out.roots.push_back(p);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Trials
// ---------------------------------------------------------------------------

CodewordMatrix random_codeword(const HermitianCode& code, Rng& rng) {
    std::vector<Elem> msg(static_cast<std::size_t>(code.params().k));
    for (auto& s : msg) s = rng.element(code.field());
    return code.encode(msg);
}

CodewordMatrix random_error(const Field& field, int weight, Rng& rng) {
    CodewordMatrix e(field.q());
    for (auto cell : rng.sample(e.size(), static_cast<std::size_t>(weight)))
        e.at(static_cast<int>(cell) / e.columns(), static_cast<int>(cell) % e.columns()) = rng.nonzero(field);
    return e;
}

std::string_view to_string(Outcome o) {
    switch (o) {
    case Outcome::recovered: return "recovered";
    case Outcome::undecodable: return "undecodable";
    case Outcome::miscorrected: return "miscorrected";
    }
    return "?";
}

std::string TrialRecord::line() const {
    return report.to_line() + " outcome=" + std::string(to_string(outcome));
}

std::vector<TrialRecord> run_trials(const HermitianCode& code, const MappingSet& ms, const TrialConfig& config) {
    const Field& f = code.field();
    const int n = code.params().n;
    const bool exhaustive = config.exhaustive && config.t == 1;
    const auto count = exhaustive ? static_cast<std::size_t>(n * (f.size() - 1))
                                  : static_cast<std::size_t>(std::max(0LL, config.trials));
    const SemiErasureDecoder dec(code, ms);
    std::vector<TrialRecord> records(count);
    for_each_index(count, config.parallel, [&](std::size_t i) {
        Rng rng(trial_seed(config.seed, i));
        const CodewordMatrix sent = to_auxiliary(f, ms, random_codeword(code, rng));
        CodewordMatrix e(f.q());
        if (exhaustive) {
            const int cell = static_cast<int>(i) / (f.size() - 1);
            e.at(cell / e.columns(), cell % e.columns()) = Elem{static_cast<std::uint16_t>(1 + i % (f.size() - 1))};
        } else {
            e = random_error(f, config.t, rng);
        }
        TrialRecord rec;
        rec.report = dec.decode(sent + e, config.options);
        rec.report.trial = static_cast<long long>(i);
        rec.report.seed = config.seed;
        if (!rec.report.success()) rec.outcome = Outcome::undecodable;
        else rec.outcome = rec.report.corrected == sent ? Outcome::recovered : Outcome::miscorrected;
        records[i] = std::move(rec);
    });
    return records;
}

std::string RadiusRow::line() const {
    std::ostringstream os;
    os << "t=" << t << " trials=" << trials << " recovered=" << recovered << " undecodable=" << undecodable
       << " miscorrected=" << miscorrected << " rate=" << std::fixed << std::setprecision(6) << rate
       << " mode=" << (exhaustive ? "exhaustive" : "sampled") << " source=measured";
    return os.str();
}

std::vector<RadiusRow> measure_radius(const HermitianCode& code, const MappingSet& ms, const RadiusConfig& config) {
    const int q = code.q();
    const int t_max = config.t_max > 0 ? config.t_max : q * q;
    std::vector<RadiusRow> rows;
    for (int t = 0; t <= t_max; ++t) {
        TrialConfig tc;
        tc.t = t;
        tc.trials = config.trials;
        tc.seed = trial_seed(config.seed, static_cast<std::uint64_t>(t) << 32);
        tc.exhaustive = t == 1 && config.exhaustive_single;
        tc.parallel = config.parallel;
        tc.options = config.options;
        RadiusRow row;
        row.t = t;
        row.exhaustive = tc.exhaustive;
        for (const auto& r : run_trials(code, ms, tc)) {
            ++row.trials;
            row.recovered += r.outcome == Outcome::recovered;
            row.undecodable += r.outcome == Outcome::undecodable;
            row.miscorrected += r.outcome == Outcome::miscorrected;
        }
        row.rate = row.trials ? static_cast<double>(row.recovered) / static_cast<double>(row.trials) : 1.0;
        rows.push_back(row);
    }
    return rows;
}

// ---------------------------------------------------------------------------
// Property suite
// ---------------------------------------------------------------------------

std::string PropertyLine::line() const {
    std::ostringstream os;
    os << "property=" << name << " kind=" << (asserted ? "asserted" : "reported") << " trials=" << trials
       << " failures=" << failures << " status=" << (holds() ? "pass" : (asserted ? "FAIL" : "edge-case"))
       << " counterexample=" << (counterexample.empty() ? "-" : counterexample);
    return os.str();
}

bool suite_passes(std::span<const PropertyLine> lines) {
    return std::all_of(lines.begin(), lines.end(), [](const auto& l) { return !l.asserted || l.holds(); });
}

bool edge_cases_hold(std::span<const PropertyLine> lines) {
    return std::all_of(lines.begin(), lines.end(), [](const auto& l) { return l.asserted || l.holds(); });
}

namespace {

class Tally {
public:
    Tally(std::string name, bool asserted = true) { line_.name = std::move(name), line_.asserted = asserted; }
    void check(bool ok, const std::function<std::string()>& describe) {
        ++line_.trials;
        if (ok) return;
        if (line_.failures++ == 0) line_.counterexample = describe();
    }
    PropertyLine done() const { return line_; }

private:
    PropertyLine line_;
};

std::vector<std::vector<int>> column_supports(int q, bool exhaustive, long long trials, Rng& rng) {
    const int cols = q * q;
    std::vector<std::vector<int>> out;
    if (exhaustive) {
        for (int a = 0; a < cols; ++a) {
            out.push_back({a});
            for (int b = a + 1; b < cols; ++b) out.push_back({a, b});
        }
        return out;
    }
    for (long long i = 0; i < trials; ++i) {
        const auto size = 1 + rng.below(static_cast<std::uint64_t>(q));
        std::vector<int> s;
        for (auto c : rng.sample(static_cast<std::size_t>(cols), size)) s.push_back(static_cast<int>(c));
        std::sort(s.begin(), s.end());
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<int> columns_of(const HermitianCurve& curve, const std::vector<Elem>& alphas) {
    std::vector<int> out;
    for (Elem a : alphas) out.push_back(curve.column_of(a));
    return out;
}

// Forney patterns: Hermitian-domain errors on a few columns.
std::vector<CodewordMatrix> forney_patterns(const Field& f, bool exhaustive, long long trials, Rng& rng) {
    const int q = f.q(), cols = q * q;
    std::vector<CodewordMatrix> out;
    if (exhaustive) {
        for (int cell = 0; cell < q * cols; ++cell)
            for (int v = 1; v < f.size(); ++v) {
                CodewordMatrix e(q);
                e.at(cell / cols, cell % cols) = Elem{static_cast<std::uint16_t>(v)};
                out.push_back(std::move(e));
            }
    }
    const long long random = exhaustive ? std::max(100LL, trials) : trials;
    for (long long i = 0; i < random; ++i) {
        const auto width = exhaustive ? 2 : 1 + rng.below(static_cast<std::uint64_t>(q));
        CodewordMatrix e(q);
        for (auto c : rng.sample(static_cast<std::size_t>(cols), width)) {
            // at least one nonzero cell per chosen column
            const auto keep = rng.below(static_cast<std::uint64_t>(q));
            for (int r = 0; r < q; ++r)
                e.at(r, static_cast<int>(c)) = static_cast<std::uint64_t>(r) == keep ? rng.nonzero(f) : rng.element(f);
        }
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace

std::vector<PropertyLine> verify_property_suite(const HermitianCode& code, const MappingSet& ms,
                                               const SuiteConfig& config) {
    const Field& f = code.field();
    const HermitianCurve& curve = code.curve();
    const int q = code.q(), cols = q * q;
    const auto q3 = static_cast<std::uint64_t>(q * q * q);
    Rng rng(config.seed);
    std::vector<PropertyLine> out;
    auto inline_cw = [&](const CodewordMatrix& c) { return "[" + format_codeword_inline(f, c) + "]"; };

    // Mapping module.
    {
        Tally t("mapping_roundtrip");
        auto check = [&](const CodewordMatrix& x) {
            t.check(to_auxiliary(f, ms, from_auxiliary(f, ms, x)) == x && from_auxiliary(f, ms, to_auxiliary(f, ms, x)) == x,
                    [&] { return inline_cw(x); });
        };
        for (long long i = 0; i < config.trials; ++i) {
            CodewordMatrix x(q);
            for (int r = 0; r < q; ++r)
                for (int c = 0; c < cols; ++c) x.at(r, c) = rng.element(f);
            check(x);
        }
        if (config.exhaustive)
            for (const auto& c : enumerate_codebook(code)) check(c);
        out.push_back(t.done());
    }
    {
        Tally tm("column_forcing_M"), tp("column_forcing_Mprime", false);
        for (int c = 0; c < cols; ++c)
            for (int r = 0; r < q; ++r)
                for (int v = 1; v < f.size(); ++v) {
                    CodewordMatrix e(q);
                    e.at(r, c) = Elem{static_cast<std::uint16_t>(v)};
                    const auto h = from_auxiliary(f, ms, e);
                    const auto col = h.column(c);
                    const bool full = std::none_of(col.begin(), col.end(), [](Elem x) { return x.is_zero(); });
                    (ms.uses_mprime(c) ? tp : tm).check(full, [&] {
                        return "aux=" + inline_cw(e) + "->hermitian=" + inline_cw(h);
                    });
                }
        out.push_back(tm.done());
        out.push_back(tp.done());
    }
    {
        Tally t("column_support_preserved");
        for (long long i = 0; i < config.trials; ++i) {
            const auto e = random_error(f, 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(2 * q))), rng);
            const auto h = from_auxiliary(f, ms, e);
            t.check(h.nonzero_columns() == e.nonzero_columns(), [&] { return inline_cw(e); });
        }
        out.push_back(t.done());
    }

    // Locator properties over column supports and arbitrary point sets.
    Tally roots_eq("root_equivalence"), spec("bivariate_specialisation"),
        simple("derivative_nonzero_at_roots"), norep("no_repeated_roots"), counts("chien_q2_bivariate_q3_counts");
    for (const auto& support : column_supports(q, config.exhaustive, config.trials, rng)) {
        std::vector<CurvePoint> pts;
        std::vector<Elem> alphas;
        for (int c : support) {
            alphas.push_back(curve.column_alpha(c));
            for (int r = 0; r < q; ++r) pts.push_back(curve.point(r, c));
        }
        const auto sigma = locator_from_support(curve, pts);
        const auto oracle = bivariate_exhaustive_roots(curve, sigma);
        counts.check(oracle.count == q3, [&] { return "bivariate_count=" + std::to_string(oracle.count); });
        for (int r = 0; r < q; ++r) {
            const Elem beta = curve.row_beta(r);
            const auto ch = chien_search(f, specialize_locator(f, sigma, curve.y0(), beta), sigma);
            counts.check(ch.evaluations == static_cast<std::uint64_t>(cols),
                         [&] { return "chien_count=" + std::to_string(ch.evaluations); });
            std::vector<Elem> row_roots;
            for (const auto& p : oracle.roots)
                if (p.beta == beta) row_roots.push_back(p.alpha);
            roots_eq.check(ch.roots == row_roots && row_roots == alphas, [&] {
                return "support=" + join_ints(support) + " row=" + std::to_string(r) +
                       " chien=" + join_ints(columns_of(curve, ch.roots)) +
                       " oracle=" + join_ints(columns_of(curve, row_roots));
            });
        }
        const Poly psi = poly_from_roots(f, alphas);
        const Poly dpsi = poly_formal_derivative(psi);
        const Poly gcd = poly_gcd(f, psi, dpsi);
        for (Elem a : alphas) {
            simple.check(!poly_eval(f, dpsi, a).is_zero(),
                         [&] { return "support=" + join_ints(support) + " root=" + to_token(f, a); });
            norep.check(!poly_eval(f, gcd, a).is_zero(),
                        [&] { return "support=" + join_ints(support) + " root=" + to_token(f, a); });
        }
    }
    {
        const long long point_sets = config.exhaustive ? std::max<long long>(config.trials, 100) : config.trials;
        for (long long i = 0; i < point_sets; ++i) {
            const auto size = 1 + rng.below(static_cast<std::uint64_t>(q + 1));
            std::vector<CurvePoint> pts;
            for (auto idx : rng.sample(curve.points().size(), size)) pts.push_back(curve.points()[idx]);
            const auto sigma = locator_from_support(curve, pts);
            const auto oracle = bivariate_exhaustive_roots(curve, sigma);
            for (int r = 0; r < q; ++r) {
                const Elem beta = curve.row_beta(r);
                const auto ch = chien_search(f, specialize_locator(f, sigma, curve.y0(), beta), sigma);
                std::vector<Elem> row_roots;
                for (const auto& p : oracle.roots)
                    if (p.beta == beta) row_roots.push_back(p.alpha);
                bool covers = true;
                for (const auto& p : pts)
                    if (p.beta == beta) covers &= std::find(row_roots.begin(), row_roots.end(), p.alpha) != row_roots.end();
                spec.check(ch.roots == row_roots && covers, [&] {
                    return "points=" + std::to_string(pts.size()) + " row=" + std::to_string(r) +
                           " chien=" + join_ints(columns_of(curve, ch.roots)) +
                           " oracle=" + join_ints(columns_of(curve, row_roots));
                });
            }
        }
    }

    // Evaluator properties on ground-truth patterns.
    Tally bracket("bracket_factor_is_one"), forney_id("forney_identity");
    for (const auto& e : forney_patterns(f, config.exhaustive, config.trials, rng)) {
        std::vector<Elem> alphas;
        const auto support = e.nonzero_columns();
        for (int c : support) alphas.push_back(curve.column_alpha(c));
        const auto sigma = BivariateLocator::from_x_roots(f, alphas);
        const Poly truth = poly_from_roots(f, alphas);
        const Poly dpsi = poly_formal_derivative(truth);
        for (Elem a : alphas)
            simple.check(!poly_eval(f, dpsi, a).is_zero(), [&] { return inline_cw(e); });
        for (int r = 0; r < q; ++r) {
            const Elem beta = curve.row_beta(r);
            std::vector<ErrorTerm> terms;
            for (int c : support)
                if (!e.at(r, c).is_zero()) terms.push_back({curve.point(r, c), e.at(r, c)});
            const auto psi = specialize_locator(f, sigma, curve.y0(), beta);
            SyndromeSeries series;
            try {
                series = build_syndrome_series(curve, terms, beta);
            } catch (const std::logic_error&) {
                bracket.check(false, [&] { return inline_cw(e) + " row=" + std::to_string(r); });
                continue;
            }
            for (const auto& t : series.terms)
                bracket.check(poly_eval(f, t.g, t.xk) == kOne && h_bracket(f, t.yk, t.yk) == kOne,
                           [&] { return inline_cw(e) + " row=" + std::to_string(r); });
            const auto omega = build_evaluator(f, psi, series);
            for (int c : support) {
                const Elem got = forney(f, omega, psi, curve.column_alpha(c));
                forney_id.check(got == e.at(r, c), [&] {
                    return inline_cw(e) + " row=" + std::to_string(r) + " col=" + std::to_string(c) +
                           " forney=" + to_token(f, got);
                });
            }
        }
    }
    for (auto* t : {&roots_eq, &spec, &simple, &norep, &bracket, &forney_id, &counts}) out.push_back(t->done());

    // Decoder end to end.
    {
        const SemiErasureDecoder dec(code, ms);
        Tally onsuccess("decode_success_is_codeword");
        const int top = std::max(1, code.params().t_design) + 1;
        for (long long i = 0; i < config.trials; ++i) {
            const auto e = random_error(f, 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(top))), rng);
            const auto sent = to_auxiliary(f, ms, random_codeword(code, rng));
            const auto rep = dec.decode(sent + e);
            onsuccess.check(!rep.success() || code.is_codeword(from_auxiliary(f, ms, rep.corrected)),
                            [&] { return inline_cw(sent + e); });
        }
        out.push_back(onsuccess.done());

        if (config.exhaustive) {
            Tally agree("oracle_agreement");
            const auto book = enumerate_codebook(code, 1u << 16);
            const auto aux_book = auxiliary_codebook(f, ms, book);
            auto check = [&](const CodewordMatrix& received) {
                const auto rep = dec.decode(received);
                if (!rep.success()) return;
                const auto truth = brute_force_decode(aux_book, received);
                agree.check(truth.unique && aux_book[truth.nearest[0]] == rep.corrected,
                            [&] { return inline_cw(received); });
            };
            const int t_design = std::max(1, code.params().t_design);
            for (int cell = 0; cell < q * cols; ++cell)
                for (int v = 1; v < f.size(); ++v) {
                    CodewordMatrix e(q);
                    e.at(cell / cols, cell % cols) = Elem{static_cast<std::uint16_t>(v)};
                    check(aux_book[rng.below(aux_book.size())] + e);
                }
            for (long long i = 0; i < config.trials; ++i) {
                const auto e = random_error(f, 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(t_design))), rng);
                check(aux_book[rng.below(aux_book.size())] + e);
            }
            out.push_back(agree.done());
        }
    }
    return out;
}

}  // namespace hermcodec
