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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <string>
#include <vector>

#include "hermcodec/oracle.hpp"
#include "hermcodec/text_io.hpp"

namespace py = pybind11;
namespace hc = hermcodec;

namespace {

using Rows = std::vector<std::vector<int>>;

// Code and mapping kept together so the mapping never outlives the curve.
class Session {
public:
    Session(int q, int m, const std::string& orientation)
        : code_(std::make_unique<hc::HermitianCode>(hc::HermitianCode::build(q, m))),
          ms_(hc::MappingSet::build(code_->curve(), hc::parse_orientation(orientation))),
          dec_(*code_, ms_) {}

    const hc::HermitianCode& code() const { return *code_; }
    const hc::MappingSet& ms() const { return ms_; }
    const hc::SemiErasureDecoder& decoder() const { return dec_; }

    hc::CodewordMatrix to_matrix(const Rows& rows) const {
        const int q = code_->q();
        if (rows.size() != static_cast<std::size_t>(q)) throw py::value_error("expected q rows");
        hc::CodewordMatrix c(q);
        for (int r = 0; r < q; ++r) {
            if (rows[r].size() != static_cast<std::size_t>(q * q)) throw py::value_error("expected q^2 columns");
            for (int j = 0; j < q * q; ++j) {
                const int v = rows[r][j];
                if (v < 0 || v >= code_->field().size()) throw py::value_error("symbol out of range");
                c.at(r, j) = hc::Elem{static_cast<std::uint16_t>(v)};
            }
        }
        return c;
    }

    static Rows to_rows(const hc::CodewordMatrix& c) {
        Rows out(static_cast<std::size_t>(c.rows()));
        for (int r = 0; r < c.rows(); ++r)
            for (int j = 0; j < c.columns(); ++j) out[r].push_back(c.at(r, j).value);
        return out;
    }

private:
    std::unique_ptr<hc::HermitianCode> code_;
    hc::MappingSet ms_;
    hc::SemiErasureDecoder dec_;
};

py::dict params_dict(const hc::CodeParams& p) {
    py::dict d;
    d["q"] = p.q, d["m"] = p.m, d["n"] = p.n, d["k"] = p.k, d["dim_l"] = p.dim_l;
    d["g"] = p.g, d["dstar"] = p.dstar, d["t_design"] = p.t_design;
    return d;
}

py::dict report_dict(const hc::DecodeReport& r) {
    py::dict d;
    d["status"] = std::string(hc::to_string(r.status));
    d["stage"] = r.stage;
    d["path"] = r.path;
    d["corrected"] = Session::to_rows(r.corrected);
    d["aux_error"] = Session::to_rows(r.aux_error);
    d["support_columns"] = r.support_columns;
    d["aux_weight"] = r.aux_weight;
    d["psi_evals"] = r.counters.psi_evals;
    d["cross_check_evals"] = r.counters.cross_check_evals;
    d["bivariate_evals"] = r.counters.bivariate_evals;
    d["field_mults"] = r.counters.field_mults;
    d["line"] = r.to_line();
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Semi-erasure decoding of one-point Hermitian codes over GF(q^2).";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const std::invalid_argument& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const std::domain_error& e) {
            PyErr_SetString(PyExc_ArithmeticError, e.what());
        }
    });

    m.def("code_params", [](int q, int m) { return params_dict(hc::code_params(q, m)); }, py::arg("q"), py::arg("m"));

    py::class_<Session>(m, "Hermitian")
        .def(py::init<int, int, const std::string&>(), py::arg("q"), py::arg("m"),
             py::arg("orientation") = "vandermonde")
        .def_property_readonly("params", [](const Session& s) { return params_dict(s.code().params()); })
        .def("basis", [](const Session& s) {
            std::vector<std::pair<int, int>> out;
            for (auto mon : s.code().basis()) out.emplace_back(mon.a, mon.b);
            return out;
        })
        .def("random_codeword", [](const Session& s, std::uint64_t seed) {
            hc::Rng rng(seed);
            return Session::to_rows(hc::random_codeword(s.code(), rng));
        }, py::arg("seed"))
        .def("encode", [](const Session& s, const std::vector<int>& msg) {
            std::vector<hc::Elem> v;
            for (int x : msg) {
                if (x < 0 || x >= s.code().field().size()) throw py::value_error("symbol out of range");
                v.push_back(hc::Elem{static_cast<std::uint16_t>(x)});
            }
            return Session::to_rows(s.code().encode(v));
        }, py::arg("message"))
        .def("is_codeword", [](const Session& s, const Rows& c) { return s.code().is_codeword(s.to_matrix(c)); })
        .def("to_auxiliary", [](const Session& s, const Rows& c) {
            return Session::to_rows(hc::to_auxiliary(s.code().field(), s.ms(), s.to_matrix(c)));
        })
        .def("from_auxiliary", [](const Session& s, const Rows& c) {
            return Session::to_rows(hc::from_auxiliary(s.code().field(), s.ms(), s.to_matrix(c)));
        })
        .def("decode", [](const Session& s, const Rows& received, int radius, bool baseline) {
            hc::DecodeOptions o;
            o.search_radius = radius;
            o.bivariate_baseline = baseline;
            return report_dict(s.decoder().decode(s.to_matrix(received), o));
        }, py::arg("received"), py::arg("radius") = 0, py::arg("bivariate_baseline") = false)
        .def("measure_radius", [](const Session& s, int t_max, long long trials, std::uint64_t seed, bool exhaustive) {
            hc::RadiusConfig rc;
            rc.t_max = t_max, rc.trials = trials, rc.seed = seed, rc.exhaustive_single = exhaustive;
            std::vector<std::string> out;
            for (const auto& row : hc::measure_radius(s.code(), s.ms(), rc)) out.push_back(row.line());
            return out;
        }, py::arg("t_max") = 0, py::arg("trials") = 200, py::arg("seed") = 1, py::arg("exhaustive") = true)
        .def("verify", [](const Session& s, long long trials, std::uint64_t seed, bool exhaustive) {
            hc::SuiteConfig sc;
            sc.trials = trials, sc.seed = seed, sc.exhaustive = exhaustive;
            py::list out;
            for (const auto& l : hc::verify_property_suite(s.code(), s.ms(), sc)) {
                py::dict d;
                d["name"] = l.name;
                d["asserted"] = l.asserted;
                d["trials"] = l.trials;
                d["failures"] = l.failures;
                d["line"] = l.line();
                out.append(d);
            }
            return out;
        }, py::arg("trials") = 100, py::arg("seed") = 1, py::arg("exhaustive") = false)
        .def("dump_mapping", [](const Session& s) { return hc::dump_mapping(s.code().field(), s.ms()); })
        .def("format", [](const Session& s, const Rows& c) {
            return hc::format_codeword(s.code().field(), s.to_matrix(c));
        })
        .def("parse", [](const Session& s, const std::string& text) {
            return Session::to_rows(hc::parse_codeword(s.code().field(), text));
        });
}
