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

#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "hermcodec/decoder.hpp"
#include "hermcodec/oracle.hpp"
#include "hermcodec/rng.hpp"
#include "support.hpp"

using namespace hermcodec;

namespace {

CodewordMatrix full_column_error(const Field& f, int col, Rng& rng) {
    CodewordMatrix e(f.q());
    for (int r = 0; r < f.q(); ++r) e.at(r, col) = rng.nonzero(f);
    return e;
}

Elem direct_syndrome(const HermitianCode& code, const CodewordMatrix& y, Monomial mon) {
    const auto& f = code.field();
    Elem s = kZero;
    for (int r = 0; r < y.rows(); ++r)
        for (int c = 0; c < y.columns(); ++c) {
            const auto& p = code.curve().point(r, c);
            s += testsupport::mul(f, y.at(r, c),
                                  testsupport::mul(f, testsupport::pow(f, p.alpha, mon.a), testsupport::pow(f, p.y, mon.b)));
        }
    return s;
}

}  // namespace

TEST_CASE("monomial reduction by the curve equation") {
    CHECK(reduce_monomial({0, 1}, 2) == std::vector<Monomial>{{0, 1}});
    CHECK(reduce_monomial({0, 2}, 2) == std::vector<Monomial>{{0, 1}, {3, 0}});
    CHECK(reduce_monomial({0, 3}, 2) == std::vector<Monomial>{{0, 1}, {3, 0}, {3, 1}});
    CHECK(reduce_monomial({1, 4}, 4) == std::vector<Monomial>{{1, 1}, {6, 0}});
}

TEST_CASE("syndrome table agrees with pointwise sums, including reduced y powers") {
    for (auto [q, m] : {std::pair{2, 4}, std::pair{2, 7}, std::pair{4, 16}, std::pair{4, 25}}) {
        const auto code = HermitianCode::build(q, m);
        Rng rng(static_cast<std::uint64_t>(m));
        CodewordMatrix y(q);
        for (int r = 0; r < q; ++r)
            for (int c = 0; c < q * q; ++c) y.at(r, c) = rng.element(code.field());
        const auto s = compute_syndromes(code, y);
        for (int a = 0; a <= m; ++a)
            for (int b = 0; b <= m; ++b) {
                const Monomial mon{a, b};
                if (!s.available(mon)) continue;
                REQUIRE(s.at(mon) == direct_syndrome(code, y, mon));
            }
        CHECK_THROWS_AS(s.at({m, 1}), std::out_of_range);
    }
}

TEST_CASE("column locator for one corrupted column is x - alpha") {
    const auto code = HermitianCode::build(4, 16);
    const auto& f = code.field();
    Rng rng(2);
    for (int c = 0; c < 16; ++c) {
        const auto e = full_column_error(f, c, rng);
        const auto loc = find_locator(code, compute_syndromes(code, e));
        REQUIRE(loc.status == LocatorStatus::found);
        const auto expected = BivariateLocator::from_x_roots(f, std::vector<Elem>{code.curve().column_alpha(c)});
        CHECK(loc.sigma == expected);
        CHECK(loc.leading_pole == 4);
    }
    const auto zero = find_locator(code, compute_syndromes(code, CodewordMatrix(4)));
    CHECK(zero.sigma == BivariateLocator::one());
}

TEST_CASE("two corrupted columns at q=4") {
    const auto code = HermitianCode::build(4, 16);
    const auto& f = code.field();
    Rng rng(4);
    for (int i = 0; i < 50; ++i) {
        const auto cols = rng.sample(16, 2);
        const auto e = full_column_error(f, static_cast<int>(cols[0]), rng) +
                       full_column_error(f, static_cast<int>(cols[1]), rng);
        const auto loc = find_locator(code, compute_syndromes(code, e));
        REQUIRE(loc.status == LocatorStatus::found);
        REQUIRE(loc.sigma.y_free());
        for (auto c : cols) CHECK(loc.sigma.evaluate(f, code.curve().column_alpha(static_cast<int>(c)), kZero).is_zero());
    }
}

TEST_CASE("bivariate family locates a single point") {
    const auto code = HermitianCode::build(4, 16);
    const auto& f = code.field();
    Rng rng(6);
    for (int i = 0; i < 30; ++i) {
        CodewordMatrix e(4);
        const int cell = static_cast<int>(rng.below(64));
        e.at(cell / 16, cell % 16) = rng.nonzero(f);
        const auto loc = find_locator(code, compute_syndromes(code, e), LocatorFamily::bivariate);
        REQUIRE(loc.status == LocatorStatus::found);
        const auto& p = code.curve().point(cell / 16, cell % 16);
        CHECK(loc.sigma.evaluate(f, p.alpha, p.y).is_zero());
    }
}

TEST_CASE("locator_from_support") {
    const auto code = HermitianCode::build(2, 4);
    const auto& curve = code.curve();
    const auto& f = code.field();
    const std::vector<CurvePoint> one{curve.point(1, 2)};
    const auto s1 = locator_from_support(curve, one);
    CHECK(s1 == BivariateLocator::from_x_roots(f, std::vector<Elem>{curve.column_alpha(2)}));
    CHECK(locator_from_support(curve, {}) == BivariateLocator::one());

    Rng rng(12);
    for (int i = 0; i < 100; ++i) {
        std::vector<CurvePoint> pts;
        for (auto k : rng.sample(8, 1 + rng.below(4))) pts.push_back(curve.points()[k]);
        const auto sigma = locator_from_support(curve, pts);
        for (const auto& p : pts) REQUIRE(sigma.evaluate(f, p.alpha, p.y).is_zero());
    }
}

TEST_CASE("specialisation and Chien search") {
    const auto code = HermitianCode::build(2, 4);
    const auto& f = code.field();
    const Elem y0 = code.curve().y0();
    const BivariateLocator y({{{0, 1}, kOne}});
    const auto psi = specialize_locator(f, y, y0, kZero);
    CHECK(psi.psi == Poly::monomial(Elem{2}, 3));  // omega x^3

    const std::vector<Elem> roots{f.exp(2), kZero};
    const auto sigma = BivariateLocator::from_x_roots(f, roots);
    for (int r = 0; r < 2; ++r) {
        OpCounter ops;
        const auto ch = chien_search(f, specialize_locator(f, sigma, y0, code.curve().row_beta(r)), sigma, &ops);
        CHECK(ch.evaluations == 4);
        CHECK(ops.evaluations == 4);
        CHECK(ch.roots == roots);
    }
    const auto base = bivariate_search(code.curve(), sigma);
    CHECK(base.evaluations == 8);
    CHECK(base.roots.size() == 4);

    const auto c4 = HermitianCode::build(4, 16);
    const auto s4 = BivariateLocator::from_x_roots(c4.field(), std::vector<Elem>{c4.field().exp(9)});
    CHECK(chien_search(c4.field(), specialize_locator(c4.field(), s4, c4.curve().y0(), kZero), s4).evaluations == 16);
    CHECK(bivariate_search(c4.curve(), s4).evaluations == 64);
}

TEST_CASE("row ordinate reproduces y on every point") {
    for (int q : {2, 4, 8}) {
        const auto code = HermitianCode::build(q, 2 * genus(q));
        const auto& curve = code.curve();
        for (int r = 0; r < q; ++r) {
            const Poly yr = row_ordinate(code.field(), curve.y0(), curve.row_beta(r));
            for (int c = 0; c < q * q; ++c)
                REQUIRE(poly_eval(code.field(), yr, curve.column_alpha(c)) == curve.point(r, c).y);
        }
    }
}

TEST_CASE("bracket expansion") {
    const auto code = HermitianCode::build(4, 16);
    const auto& f = code.field();
    const auto& pts = code.curve().points();
    Rng rng(13);
    for (int i = 0; i < 500; ++i) {
        const auto& a = pts[rng.below(64)];
        const auto& b = pts[rng.below(64)];
        if (a.alpha == b.alpha || a.y == b.y) continue;
        REQUIRE(f.mul(h_exact(f, a.alpha, a.y, b.alpha, b.y), a.alpha - b.alpha) == h_bracket(f, a.y, b.y));
    }
    for (const auto& p : pts) CHECK(h_bracket(f, p.y, p.y) == kOne);
}

TEST_CASE("series, evaluator, Forney") {
    const auto code = HermitianCode::build(2, 4);
    const auto& f = code.field();
    const auto& curve = code.curve();
    SUBCASE("every single error at q=2") {
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 4; ++c)
                for (int v = 1; v < 4; ++v) {
                    const std::vector<ErrorTerm> terms{{curve.point(r, c), Elem{static_cast<std::uint16_t>(v)}}};
                    const Elem beta = curve.row_beta(r);
                    const auto series = build_syndrome_series(curve, terms, beta);
                    REQUIRE(series.terms.size() == 1);
                    CHECK(poly_eval(f, series.terms[0].g, curve.column_alpha(c)) == kOne);
                    const auto sigma = BivariateLocator::from_x_roots(f, std::vector<Elem>{curve.column_alpha(c)});
                    const auto psi = specialize_locator(f, sigma, curve.y0(), beta);
                    const auto omega = build_evaluator(f, psi, series);
                    CHECK(omega.reduced.degree() < psi.psi.degree());
                    CHECK(forney(f, omega, psi, curve.column_alpha(c)) == Elem{static_cast<std::uint16_t>(v)});
                    // the other row carries no error
                    CHECK(build_syndrome_series(curve, terms, curve.row_beta(1 - r)).terms.empty());
                }
    }
    SUBCASE("failure modes") {
        const std::vector<ErrorTerm> twice{{curve.point(0, 1), kOne}, {curve.point(0, 1), kOne}};
        CHECK_THROWS_AS(build_syndrome_series(curve, twice, kZero), std::invalid_argument);
        const std::vector<ErrorTerm> one{{curve.point(0, 1), kOne}};
        const auto series = build_syndrome_series(curve, one, kZero);
        const auto wrong = BivariateLocator::from_x_roots(f, std::vector<Elem>{curve.column_alpha(2)});
        const auto psi_wrong = specialize_locator(f, wrong, curve.y0(), kZero);
        CHECK_THROWS_AS(build_evaluator(f, psi_wrong, series), std::domain_error);
        const auto sigma = BivariateLocator::from_x_roots(f, std::vector<Elem>{curve.column_alpha(1)});
        const auto psi = specialize_locator(f, sigma, curve.y0(), kZero);
        const auto omega = build_evaluator(f, psi, series);
        CHECK_THROWS_AS(forney(f, omega, psi, curve.column_alpha(2)), std::invalid_argument);
        const UnivariateLocator doubled{poly_pow(f, Poly::linear(curve.column_alpha(1)), 2), kZero};
        CHECK_THROWS_AS(forney(f, omega, doubled, curve.column_alpha(1)), std::domain_error);
    }
}

TEST_CASE("Forney on random multi-column patterns at q=4") {
    const auto code = HermitianCode::build(4, 16);
    const auto& f = code.field();
    const auto& curve = code.curve();
    Rng rng(14);
    for (int i = 0; i < 200; ++i) {
        const auto cols = rng.sample(16, 1 + rng.below(4));
        std::vector<Elem> alphas;
        for (auto c : cols) alphas.push_back(curve.column_alpha(static_cast<int>(c)));
        const auto sigma = BivariateLocator::from_x_roots(f, alphas);
        for (int r = 0; r < 4; ++r) {
            std::vector<ErrorTerm> terms;
            for (auto c : cols) terms.push_back({curve.point(r, static_cast<int>(c)), rng.nonzero(f)});
            const auto psi = specialize_locator(f, sigma, curve.y0(), curve.row_beta(r));
            const auto omega = build_evaluator(f, psi, build_syndrome_series(curve, terms, curve.row_beta(r)));
            for (const auto& t : terms) REQUIRE(forney(f, omega, psi, t.point.alpha) == t.value);
        }
    }
}

TEST_CASE("error values from a known support") {
    const auto code = HermitianCode::build(2, 4);
    const auto& f = code.field();
    Rng rng(15);
    for (int c = 0; c < 4; ++c) {
        const auto e = full_column_error(f, c, rng);
        const auto s = compute_syndromes(code, e);
        const std::vector<int> cols{c};
        const auto sol = solve_error_values(code, s, cols);
        REQUIRE(sol.status == SolveStatus::unique);
        for (const auto& cell : sol.cells) CHECK(cell.value == e.at(cell.row, cell.col));
        // a one-cell error is not explained by any single other column
        CodewordMatrix single(2);
        single.at(0, c) = kOne;
        const std::vector<int> other{(c + 1) % 4};
        CHECK(solve_error_values(code, compute_syndromes(code, single), other).status == SolveStatus::inconsistent);
    }
    CHECK(solve_error_values(code, compute_syndromes(code, CodewordMatrix(2)), {}).status == SolveStatus::unique);
}

TEST_CASE("decode: every single auxiliary error at q=2") {
    const auto code = HermitianCode::build(2, 4);
    const auto& f = code.field();
    const auto ms = MappingSet::build(code.curve());
    const SemiErasureDecoder dec(code, ms);
    Rng rng(16);
    int recovered = 0;
    for (int cell = 0; cell < 8; ++cell)
        for (int v = 1; v < 4; ++v) {
            const auto sent = to_auxiliary(f, ms, random_codeword(code, rng));
            CodewordMatrix e(2);
            e.at(cell / 4, cell % 4) = Elem{static_cast<std::uint16_t>(v)};
            const auto rep = dec.decode(sent + e);
            REQUIRE(rep.status == DecodeStatus::corrected);
            CHECK(rep.aux_error == e);
            CHECK(rep.aux_weight == 1);
            CHECK(rep.support_columns == std::vector<int>{cell % 4});
            CHECK(rep.counters.psi_evals == 4);
            CHECK(rep.counters.cross_check_evals == 4);
            recovered += rep.corrected == sent;
        }
    CHECK(recovered == 24);
}

TEST_CASE("decode: clean word short-circuits") {
    const auto code = HermitianCode::build(4, 16);
    const auto ms = MappingSet::build(code.curve());
    Rng rng(17);
    const auto sent = to_auxiliary(code.field(), ms, random_codeword(code, rng));
    DecodeOptions o;
    o.bivariate_baseline = true;
    const auto rep = decode(code, ms, sent, o);
    CHECK(rep.status == DecodeStatus::clean);
    CHECK(rep.corrected == sent);
    CHECK(rep.counters.psi_evals == 0);
    CHECK(rep.counters.bivariate_evals == 0);
    CHECK(rep.to_line() ==
          "status=clean stage=ok path=none t=0 aux_weight=0 support=- psi_evals=0 cross_check_evals=0 "
          "bivariate_evals=0 field_mults=0");
}

TEST_CASE("decode: baseline counts and two errors at q=4") {
    const auto code = HermitianCode::build(4, 16);
    const auto& f = code.field();
    const auto ms = MappingSet::build(code.curve());
    const SemiErasureDecoder dec(code, ms);
    DecodeOptions o;
    o.bivariate_baseline = true;
    Rng rng(18);
    for (int i = 0; i < 100; ++i) {
        const auto sent = to_auxiliary(f, ms, random_codeword(code, rng));
        const auto rep = dec.decode(sent + random_error(f, 2, rng), o);
        REQUIRE(rep.status == DecodeStatus::corrected);
        CHECK(rep.corrected == sent);
        CHECK(rep.counters.psi_evals == 16);
        CHECK(rep.counters.bivariate_evals == 64);
    }
}

TEST_CASE("decode never claims success on a non-codeword") {
    for (auto [q, m] : {std::pair{2, 4}, std::pair{4, 16}}) {
        const auto code = HermitianCode::build(q, m);
        const auto& f = code.field();
        const auto ms = MappingSet::build(code.curve());
        const SemiErasureDecoder dec(code, ms);
        Rng rng(19);
        for (int i = 0; i < 200; ++i) {
            const auto sent = to_auxiliary(f, ms, random_codeword(code, rng));
            const auto rep = dec.decode(sent + random_error(f, 1 + static_cast<int>(rng.below(5)), rng));
            if (rep.success()) REQUIRE(code.is_codeword(from_auxiliary(f, ms, rep.corrected)));
            else CHECK(rep.stage != "ok");
        }
    }
}

TEST_CASE("locator path alone, without the fallback search") {
    const auto code = HermitianCode::build(4, 16);
    const auto& f = code.field();
    const auto ms = MappingSet::build(code.curve());
    DecodeOptions o;
    o.allow_column_search = false;
    Rng rng(20);
    int corrected = 0;
    for (int i = 0; i < 200; ++i) {
        const auto sent = to_auxiliary(f, ms, random_codeword(code, rng));
        CodewordMatrix e(4);
        // avoid the M' column
        const int col = static_cast<int>(rng.below(15));
        e.at(static_cast<int>(rng.below(4)), col) = rng.nonzero(f);
        const auto rep = decode(code, ms, sent + e, o);
        corrected += rep.status == DecodeStatus::corrected && rep.path == "locator" && rep.corrected == sent;
    }
    CHECK(corrected == 200);
}

TEST_CASE("trial records do not depend on the worker count") {
    const auto code = HermitianCode::build(4, 16);
    const auto ms = MappingSet::build(code.curve());
    TrialConfig tc;
    tc.t = 2;
    tc.trials = 60;
    tc.seed = 7;
    auto lines = [&](int threads) {
        tc.parallel = threads;
        std::vector<std::string> out;
        for (const auto& r : run_trials(code, ms, tc)) out.push_back(r.line());
        return out;
    };
    CHECK(lines(1) == lines(3));
}
