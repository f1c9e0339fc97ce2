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
#include <sstream>
#include <stdexcept>

#include "hermcodec/oracle.hpp"
#include "hermcodec/text_io.hpp"

using namespace hermcodec;

TEST_CASE("codebook enumeration") {
    const auto code = HermitianCode::build(2, 4);
    const auto book = enumerate_codebook(code);
    REQUIRE(book.size() == 256);
    for (const auto& c : book) REQUIRE(code.is_codeword(c));
    CHECK(book[0].is_zero());
    const auto big = HermitianCode::build(4, 16);
    CHECK_THROWS_AS(enumerate_codebook(big), std::length_error);
}

TEST_CASE("brute-force nearest codeword") {
    const auto code = HermitianCode::build(2, 4);
    const auto& f = code.field();
    const auto ms = MappingSet::build(code.curve());
    const auto book = auxiliary_codebook(f, ms, enumerate_codebook(code));

    const auto exact = brute_force_decode(book, book[77]);
    CHECK(exact.distance == 0);
    CHECK(exact.unique);
    CHECK(exact.nearest == std::vector<std::size_t>{77});

    CodewordMatrix e(2);
    e.at(1, 2) = Elem{3};
    const auto near = brute_force_decode(book, book[77] + e);
    CHECK(near.distance == 1);
    CHECK(near.unique);

    // halfway between 0 and a weight-4 Hermitian codeword is a tie
    const auto herm = enumerate_codebook(code);
    std::size_t w4 = 0;
    for (std::size_t i = 1; i < herm.size(); ++i)
        if (herm[i].weight() == 4) {
            w4 = i;
            break;
        }
    REQUIRE(w4 != 0);
    CodewordMatrix half(2);
    int kept = 0;
    for (std::size_t k = 0; k < half.size() && kept < 2; ++k)
        if (!herm[w4].flat()[k].is_zero()) {
            half.at(static_cast<int>(k) / 4, static_cast<int>(k) % 4) = herm[w4].flat()[k];
            ++kept;
        }
    const auto tie = brute_force_decode(herm, half);
    CHECK(tie.distance == 2);
    CHECK_FALSE(tie.unique);
}

TEST_CASE("bivariate exhaustive roots") {
    const auto code = HermitianCode::build(2, 4);
    const auto& curve = code.curve();
    const auto none = bivariate_exhaustive_roots(curve, BivariateLocator::one());
    CHECK(none.roots.empty());
    CHECK(none.count == 8);
    const std::vector<CurvePoint> s{curve.point(0, 1), curve.point(1, 3)};
    const auto sigma = locator_from_support(curve, s);
    const auto got = bivariate_exhaustive_roots(curve, sigma);
    for (const auto& p : s)
        CHECK(std::find(got.roots.begin(), got.roots.end(), p) != got.roots.end());
    CHECK(bivariate_exhaustive_roots(HermitianCode::build(4, 16).curve(), BivariateLocator::one()).count == 64);
}

TEST_CASE("radius table") {
    const auto code = HermitianCode::build(2, 4);
    const auto ms = MappingSet::build(code.curve());
    RadiusConfig rc;
    rc.t_max = 3;
    rc.trials = 100;
    rc.seed = 5;
    const auto rows = measure_radius(code, ms, rc);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].rate == 1.0);
    CHECK(rows[1].trials == 24);
    CHECK(rows[1].rate == 1.0);
    CHECK(rows[1].exhaustive);
    CHECK(rows[3].rate < 1.0);
    const auto again = measure_radius(code, ms, rc);
    for (std::size_t i = 0; i < rows.size(); ++i) CHECK(rows[i].line() == again[i].line());
    CHECK(rows[1].line() ==
          "t=1 trials=24 recovered=24 undecodable=0 miscorrected=0 rate=1.000000 mode=exhaustive source=measured");
}

TEST_CASE("property suite") {
    const auto code = HermitianCode::build(2, 4);
    const auto ms = MappingSet::build(code.curve());
    SuiteConfig sc;
    sc.exhaustive = true;
    sc.trials = 50;
    const auto lines = verify_property_suite(code, ms, sc);
    CHECK(suite_passes(lines));
    CHECK_FALSE(edge_cases_hold(lines));
    for (const auto& l : lines) {
        INFO(l.line());
        CHECK(l.trials > 0);
        if (l.name == "column_forcing_Mprime") {
            CHECK_FALSE(l.asserted);
            CHECK(l.failures == 3);
        }
    }
    CHECK(std::any_of(lines.begin(), lines.end(), [](const auto& l) { return l.name == "oracle_agreement"; }));
}

TEST_CASE("codeword text format") {
    const auto f = Field::build(1);
    const std::string text = "# received\n1 - 0 2\n\n- - 1 0\n";
    const auto c = parse_codeword(f, text);
    CHECK(c.at(0, 0) == Elem{2});
    CHECK(c.at(0, 1) == kZero);
    CHECK(c.at(1, 3) == kOne);
    CHECK(format_codeword(f, c) == "1 - 0 2\n- - 1 0\n");
    CHECK(format_codeword_inline(f, c) == "1 - 0 2/- - 1 0");
    CHECK(parse_codeword(f, format_codeword(f, c)) == c);
    CHECK_THROWS_AS(parse_codeword(f, std::string("1 - 0\n- - 1 0\n")), std::invalid_argument);
    CHECK_THROWS_AS(parse_codeword(f, std::string("1 - 0 2\n")), std::invalid_argument);
    CHECK_THROWS_AS(parse_codeword(f, std::string("1 - 0 7\n- - 1 0\n")), std::invalid_argument);
}
