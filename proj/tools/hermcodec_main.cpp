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

// hermcodec command-line tool: codes, mapping dumps, round trips, the
// property suite and count benchmarks.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>

#include "hermcodec/oracle.hpp"
#include "hermcodec/text_io.hpp"

namespace hc = hermcodec;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitProperty = 2;

struct Config {
    int q = 2;
    int m = 4;
    int t = 1;
    int t_max = 0;
    long long trials = 100;
    std::uint64_t seed = 1;
    bool exhaustive = false;
    int parallel = 1;
    std::string out;
    std::string in;
    bool fail_on_edge = false;
    std::string orientation = "vandermonde";
    int radius = 0;
    bool hermitian = false;
};

struct Context {
    hc::HermitianCode code;
    hc::MappingSet ms;
};

Context make_context(const Config& c) {
    auto code = hc::HermitianCode::build(c.q, c.m);
    auto ms = hc::MappingSet::build(code.curve(), hc::parse_orientation(c.orientation));
    return {std::move(code), std::move(ms)};
}

// Writes to --out when given, stdout otherwise.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (path.empty()) return;
        file_ = std::make_unique<std::ofstream>(path);
        if (!*file_) throw std::runtime_error("cannot open " + path + " for writing");
    }
    std::ostream& os() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

hc::CodewordMatrix read_matrix(const hc::Field& f, const std::string& path) {
    if (path.empty() || path == "-") return hc::parse_codeword(f, std::cin);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return hc::parse_codeword(f, in);
}

int cmd_params(const Config& c) {
    const auto p = hc::code_params(c.q, c.m);
    std::cout << "q=" << p.q << " m=" << p.m << " n=" << p.n << " k=" << p.k << " dim_l=" << p.dim_l
              << " g=" << p.g << " dstar=" << p.dstar << " t_design=" << p.t_design << '\n';
    std::cout << "basis";
    for (auto mon : hc::basis_monomials(c.q, c.m))
        std::cout << " x^" << mon.a << "y^" << mon.b << ":" << hc::pole_order(mon, c.q);
    std::cout << '\n';
    return kExitOk;
}

hc::DecodeOptions decode_options(const Config& c) {
    hc::DecodeOptions o;
    o.search_radius = c.radius;
    return o;
}

int cmd_roundtrip(const Config& c) {
    const auto ctx = make_context(c);
    hc::TrialConfig tc;
    tc.t = c.t;
    tc.trials = c.trials;
    tc.seed = c.seed;
    tc.exhaustive = c.exhaustive;
    tc.parallel = c.parallel;
    tc.options = decode_options(c);
    if (c.t < 0 || c.t > ctx.code.params().n) throw std::invalid_argument("--t out of range");
    if (c.exhaustive && c.t > 1) throw std::invalid_argument("--exhaustive supports --t 0 or 1");
    const auto records = hc::run_trials(ctx.code, ctx.ms, tc);
    long long rec = 0, und = 0, mis = 0;
    Sink sink(c.out);
    for (const auto& r : records) {
        sink.os() << r.line() << '\n';
        rec += r.outcome == hc::Outcome::recovered;
        und += r.outcome == hc::Outcome::undecodable;
        mis += r.outcome == hc::Outcome::miscorrected;
    }
    std::cout << "summary q=" << c.q << " m=" << c.m << " t=" << c.t << " trials=" << records.size()
              << " recovered=" << rec << " undecodable=" << und << " miscorrected=" << mis << '\n';
    return mis == 0 ? kExitOk : kExitProperty;
}

int cmd_verify(const Config& c) {
    const auto ctx = make_context(c);
    hc::SuiteConfig sc;
    sc.seed = c.seed;
    sc.trials = c.trials;
    sc.exhaustive = c.exhaustive;
    sc.parallel = c.parallel;
    const auto lines = hc::verify_property_suite(ctx.code, ctx.ms, sc);
    Sink sink(c.out);
    for (const auto& l : lines) sink.os() << l.line() << '\n';
    const bool asserted = hc::suite_passes(lines);
    const bool edges = hc::edge_cases_hold(lines);
    std::cout << "suite asserted=" << (asserted ? "pass" : "FAIL") << " edge_cases=" << (edges ? "hold" : "reported")
              << '\n';
    if (!asserted) return kExitProperty;
    if (c.fail_on_edge && !edges) return kExitProperty;
    return kExitOk;
}

int cmd_bench(const Config& c) {
    const auto ctx = make_context(c);
    const hc::Field& f = ctx.code.field();
    const hc::SemiErasureDecoder dec(ctx.code, ctx.ms);
    hc::DecodeOptions o = decode_options(c);
    o.bivariate_baseline = true;
    Sink sink(c.out);
    long long decoded = 0;
    std::uint64_t psi = 0, base = 0;
    for (long long i = 0; i < c.trials; ++i) {
        hc::Rng rng(hc::trial_seed(c.seed, static_cast<std::uint64_t>(i)));
        const auto sent = hc::to_auxiliary(f, ctx.ms, hc::random_codeword(ctx.code, rng));
        auto rep = dec.decode(sent + hc::random_error(f, c.t, rng), o);
        rep.trial = i;
        rep.seed = c.seed;
        sink.os() << rep.to_line() << '\n';
        if (rep.status == hc::DecodeStatus::corrected) {
            ++decoded;
            psi += rep.counters.psi_evals;
            base += rep.counters.bivariate_evals;
        }
    }
    std::cout << "bench q=" << c.q << " m=" << c.m << " t=" << c.t << " decodes=" << decoded;
    if (decoded) {
        std::cout << " psi_evals_per_decode=" << psi / static_cast<std::uint64_t>(decoded)
                  << " bivariate_evals_per_decode=" << base / static_cast<std::uint64_t>(decoded)
                  << " ratio=" << (psi ? static_cast<double>(base) / static_cast<double>(psi) : 0.0);
    }
    std::cout << '\n';
    return kExitOk;
}

int cmd_radius(const Config& c) {
    const auto ctx = make_context(c);
    hc::RadiusConfig rc;
    rc.t_max = c.t_max;
    rc.trials = c.trials;
    rc.seed = c.seed;
    rc.exhaustive_single = c.exhaustive;
    rc.parallel = c.parallel;
    rc.options = decode_options(c);
    Sink sink(c.out);
    sink.os() << "# q=" << c.q << " m=" << c.m << " seed=" << c.seed << " orientation=" << c.orientation << '\n';
    for (const auto& row : hc::measure_radius(ctx.code, ctx.ms, rc)) sink.os() << row.line() << '\n';
    return kExitOk;
}

int cmd_dump_mapping(const Config& c) {
    auto field = std::make_shared<const hc::Field>(hc::Field::build(hc::exponent_for_q(c.q)));
    const hc::HermitianCurve curve(field);
    Sink sink(c.out);
    sink.os() << hc::dump_mapping(*field, hc::MappingSet::build(curve, hc::parse_orientation(c.orientation)));
    return kExitOk;
}

int cmd_dump_points(const Config& c) {
    auto field = std::make_shared<const hc::Field>(hc::Field::build(hc::exponent_for_q(c.q)));
    Sink sink(c.out);
    sink.os() << hc::HermitianCurve(field).dump_points();
    return kExitOk;
}

int cmd_encode(const Config& c) {
    const auto ctx = make_context(c);
    hc::Rng rng(c.seed);
    const auto cw = hc::random_codeword(ctx.code, rng);
    Sink sink(c.out);
    sink.os() << hc::format_codeword(ctx.code.field(), c.hermitian ? cw : hc::to_auxiliary(ctx.code.field(), ctx.ms, cw));
    return kExitOk;
}

int cmd_corrupt(const Config& c) {
    auto field = std::make_shared<const hc::Field>(hc::Field::build(hc::exponent_for_q(c.q)));
    const auto word = read_matrix(*field, c.in);
    if (c.t < 0 || static_cast<std::size_t>(c.t) > word.size()) throw std::invalid_argument("--t out of range");
    hc::Rng rng(c.seed);
    Sink sink(c.out);
    sink.os() << hc::format_codeword(*field, word + hc::random_error(*field, c.t, rng));
    return kExitOk;
}

int cmd_decode(const Config& c) {
    const auto ctx = make_context(c);
    const auto word = read_matrix(ctx.code.field(), c.in);
    const auto rep = hc::decode(ctx.code, ctx.ms, word, decode_options(c));
    std::cout << rep.to_line() << '\n';
    Sink sink(c.out);
    if (rep.success()) sink.os() << hc::format_codeword(ctx.code.field(), rep.corrected);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Semi-erasure decoding of one-point Hermitian codes"};
    app.require_subcommand(1);
    Config c;

    auto add_code = [&](CLI::App* s) {
        s->add_option("--q", c.q, "field parameter q (2, 4, 8 or 16)");
        s->add_option("--m", c.m, "pole-order bound m");
    };
    auto add_orientation = [&](CLI::App* s) {
        s->add_option("--orientation", c.orientation, "mapping orientation: vandermonde or printed");
    };
    auto add_run = [&](CLI::App* s, int& t, const char* t_help) {
        s->add_option("--t", t, t_help);
        s->add_option("--trials", c.trials, "number of trials");
        s->add_option("--seed", c.seed, "random seed");
        s->add_flag("--exhaustive", c.exhaustive, "enumerate every pattern where feasible");
        s->add_option("--parallel", c.parallel, "worker threads");
        s->add_option("--radius", c.radius, "decoding radius (0: max(1, t_design))");
    };
    auto add_out = [&](CLI::App* s) { s->add_option("--out", c.out, "write the report to FILE"); };

    std::function<int()> run;
    auto sub = [&](const char* name, const char* help, int (*fn)(const Config&)) {
        auto* s = app.add_subcommand(name, help);
        s->callback([&run, fn, &c] { run = [fn, &c] { return fn(c); }; });
        return s;
    };

    auto* params = sub("params", "print code parameters and basis monomials", cmd_params);
    add_code(params);

    auto* roundtrip = sub("roundtrip", "encode, corrupt in the auxiliary domain, decode and compare", cmd_roundtrip);
    add_code(roundtrip), add_run(roundtrip, c.t, "auxiliary error weight"), add_out(roundtrip), add_orientation(roundtrip);

    auto* verify = sub("verify", "run the property suite and print the ledger", cmd_verify);
    add_code(verify), add_out(verify), add_orientation(verify);
    verify->add_option("--trials", c.trials, "sampled trials per property");
    verify->add_option("--seed", c.seed, "random seed");
    verify->add_flag("--exhaustive", c.exhaustive, "exhaustive supports and codebook checks");
    verify->add_option("--parallel", c.parallel, "worker threads");
    verify->add_flag("--fail-on-edge", c.fail_on_edge, "exit 2 if a reported edge case does not hold");

    auto* bench = sub("bench", "operation counts: semi-erasure Chien search against the bivariate baseline", cmd_bench);
    add_code(bench), add_run(bench, c.t, "auxiliary error weight"), add_out(bench), add_orientation(bench);

    auto* radius = sub("radius", "empirical exact-recovery rate per auxiliary error weight", cmd_radius);
    add_code(radius), add_run(radius, c.t_max, "largest weight measured (0: q^2)"), add_out(radius), add_orientation(radius);

    auto* dmap = sub("dump-mapping", "print M, M', and their inverses", cmd_dump_mapping);
    dmap->add_option("--q", c.q, "field parameter q");
    add_out(dmap), add_orientation(dmap);

    auto* dpts = sub("dump-points", "print the affine points in layout order", cmd_dump_points);
    dpts->add_option("--q", c.q, "field parameter q");
    add_out(dpts);

    auto* enc = sub("encode", "encode a random message and print the auxiliary codeword", cmd_encode);
    add_code(enc), add_out(enc), add_orientation(enc);
    enc->add_option("--seed", c.seed, "random seed for the message");
    enc->add_flag("--hermitian", c.hermitian, "print the Hermitian codeword instead");

    auto* cor = sub("corrupt", "add random symbol errors to a matrix file", cmd_corrupt);
    cor->add_option("--q", c.q, "field parameter q");
    cor->add_option("--in", c.in, "input matrix file (default stdin)");
    cor->add_option("--t", c.t, "number of symbol errors");
    cor->add_option("--seed", c.seed, "random seed");
    add_out(cor);

    auto* dec = sub("decode", "decode an auxiliary received word", cmd_decode);
    add_code(dec), add_out(dec), add_orientation(dec);
    dec->add_option("--in", c.in, "input matrix file (default stdin)");
    dec->add_option("--radius", c.radius, "decoding radius (0: max(1, t_design))");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitValidation;
    }
    try {
        return run();
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    }
}
