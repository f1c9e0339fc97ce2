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
#include <memory>
#include <set>
#include <stdexcept>

#include "hermcodec/code.hpp"
#include "hermcodec/rng.hpp"
#include "support.hpp"

using namespace hermcodec;

namespace {

HermitianCurve make_curve(int q) {
    return HermitianCurve(std::make_shared<const Field>(Field::build(exponent_for_q(q))));
}

}  // namespace

TEST_CASE("y0 is the smallest-log solution of y + y^q = 1") {
    for (int q : {2, 4, 8, 16}) {
        const auto f = Field::build(exponent_for_q(q));
        const Elem y0 = solve_y0(f);
        CHECK(y0 + f.pow(y0, q) == kOne);
        for (int i = 0; i < f.log(y0); ++i) CHECK(f.exp(i) + f.pow(f.exp(i), q) != kOne);
    }
    CHECK(solve_y0(Field::build(1)) == Elem{2});  // omega
}

TEST_CASE("points: count, curve equation, unique labels") {
    for (int q : {2, 4}) {
        const auto curve = make_curve(q);
        const auto& f = curve.field();
        REQUIRE(curve.points().size() == static_cast<std::size_t>(q * q * q));
        std::set<std::pair<int, int>> labels, coords;
        for (const auto& p : curve.points()) {
            CHECK(f.pow(p.alpha, q + 1) == f.pow(p.y, q) + p.y);
            CHECK(f.in_subfield(p.beta));
            labels.insert({p.alpha.value, p.beta.value});
            coords.insert({p.alpha.value, p.y.value});
        }
        CHECK(labels.size() == curve.points().size());
        CHECK(coords.size() == curve.points().size());
        CHECK(curve.column_alpha(q * q - 1) == kZero);
        CHECK(curve.row_beta(0) == kZero);
        for (int c = 0; c < q * q; ++c) CHECK(curve.column_of(curve.column_alpha(c)) == c);
        for (int r = 0; r < q; ++r) CHECK(curve.row_of(curve.row_beta(r)) == r);
    }
}

TEST_CASE("q=2 point table") {
    const auto curve = make_curve(2);
    CHECK(curve.dump_points() ==
          "0 0 0 - 1\n1 0 1 - 1\n2 0 2 - 1\n3 0 - - -\n"
          "0 1 0 0 2\n1 1 1 0 2\n2 1 2 0 2\n3 1 - 0 0\n");
}

TEST_CASE("point_from_labels validation") {
    const auto f = Field::build(2);
    const Elem y0 = solve_y0(f);
    CHECK_THROWS_AS(point_from_labels(f, y0, kOne, f.exp(1)), std::invalid_argument);
    const auto p = point_from_labels(f, y0, f.exp(3), f.gamma());
    CHECK(f.pow(p.alpha, 5) == f.pow(p.y, 4) + p.y);
}

TEST_CASE("basis monomials and pole orders") {
    const auto b = basis_monomials(2, 4);
    REQUIRE(b.size() == 4);
    CHECK(b[0] == Monomial{0, 0});
    CHECK(b[1] == Monomial{1, 0});
    CHECK(b[2] == Monomial{0, 1});
    CHECK(b[3] == Monomial{2, 0});
    CHECK(pole_order(b[2], 2) == 3);
    for (int q : {2, 4, 8}) {
        const int m = q * q * q - 1;
        std::set<int> poles;
        const auto basis = basis_monomials(q, m);
        for (auto mon : basis) {
            CHECK(mon.b < q);
            poles.insert(pole_order(mon, q));
        }
        CHECK(poles.size() == basis.size());
    }
    CHECK(basis_monomials(4, 16).size() == 11);
}

TEST_CASE("code parameters") {
    const auto a = code_params(2, 4);
    CHECK(a.n == 8);
    CHECK(a.k == 4);
    CHECK(a.g == 1);
    CHECK(a.dstar == 4);
    CHECK(a.t_design == 1);
    const auto b = code_params(4, 16);
    CHECK(b.n == 64);
    CHECK(b.dim_l == 11);
    CHECK(b.k == 53);
    CHECK(b.g == 6);
    CHECK(b.dstar == 6);
    CHECK(b.t_design == 2);
    CHECK(genus(8) == 28);
    CHECK_THROWS_AS(code_params(2, 8), std::invalid_argument);
    CHECK_THROWS_AS(code_params(4, 10), std::invalid_argument);
    CHECK_THROWS_AS(code_params(3, 4), std::invalid_argument);
    CHECK_NOTHROW(code_params(2, 1));
}

TEST_CASE("parity check and generator") {
    for (auto [q, m] : {std::pair{2, 4}, std::pair{4, 16}, std::pair{4, 30}}) {
        const auto code = HermitianCode::build(q, m);
        const auto& f = code.field();
        CHECK(rank(f, code.parity_check()) == code.parity_check().rows());
        const auto gh = multiply(f, code.generator(), transpose(code.parity_check()));
        bool zero = true;
        for (std::size_t r = 0; r < gh.rows(); ++r)
            for (std::size_t c = 0; c < gh.cols(); ++c) zero &= gh.at(r, c).is_zero();
        CHECK(zero);
        CHECK(static_cast<int>(code.generator().rows()) == code.params().k);
    }
    CHECK_THROWS_AS(build_generator(Field::build(1), Matrix(2, 4)), std::invalid_argument);
}

TEST_CASE("syndrome definition matches parity check") {
    const auto code = HermitianCode::build(2, 4);
    Rng rng(3);
    for (int i = 0; i < 50; ++i) {
        CodewordMatrix y(2);
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 4; ++c) y.at(r, c) = rng.element(code.field());
        CHECK(multiply(code.field(), code.parity_check(), y.flat()) == testsupport::syndromes(code, y));
    }
}

TEST_CASE("q=2, m=4: exhaustive codebook minimum weight") {
    const auto code = HermitianCode::build(2, 4);
    const auto& f = code.field();
    int min_weight = 1 << 30, words = 0;
    for (int idx = 1; idx < 256; ++idx) {
        std::vector<Elem> msg;
        for (int i = 0; i < 4; ++i) msg.push_back(Elem{static_cast<std::uint16_t>((idx >> (2 * i)) & 3)});
        const auto c = code.encode(msg);
        REQUIRE(code.is_codeword(c));
        REQUIRE(testsupport::syndromes(code, c) == std::vector<Elem>(4, kZero));
        min_weight = std::min(min_weight, c.weight());
        ++words;
    }
    CHECK(words == 255);
    CHECK(min_weight >= code.params().dstar);
    CHECK(min_weight == 4);
    CHECK(f.q() == 2);
}

TEST_CASE("encoding is linear") {
    const auto code = HermitianCode::build(4, 16);
    const auto& f = code.field();
    Rng rng(5);
    for (int i = 0; i < 20; ++i) {
        std::vector<Elem> a(53), b(53), ab(53);
        for (std::size_t j = 0; j < 53; ++j) {
            a[j] = rng.element(f), b[j] = rng.element(f);
            ab[j] = a[j] + b[j];
        }
        CHECK(code.encode(a) + code.encode(b) == code.encode(ab));
    }
    CHECK_THROWS_AS(code.encode(std::vector<Elem>(3)), std::invalid_argument);
}

TEST_CASE("codeword matrix") {
    CodewordMatrix c(2);
    CHECK(c.is_zero());
    c.at(1, 3) = kOne;
    c.at(0, 3) = Elem{2};
    c.at(0, 0) = Elem{3};
    CHECK(c.weight() == 3);
    CHECK(c.nonzero_columns() == std::vector<int>{0, 3});
    CHECK(c.flat()[7] == kOne);
    CHECK(c.column(3) == std::vector<Elem>{Elem{2}, kOne});
    CHECK(hamming_distance(c, CodewordMatrix(2)) == 3);
    CHECK_THROWS_AS(CodewordMatrix(2, std::vector<Elem>(7)), std::invalid_argument);
    CHECK_THROWS_AS(c + CodewordMatrix(4), std::invalid_argument);
}
