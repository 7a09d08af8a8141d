/**************************************************************************
 * bindings.cpp
 *
 * Copyright 2026 The mseq Authors
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
 **************************************************************************/

// Results cross the boundary as JSON text in the same schema the CLI prints;
// the Python package decodes them.

#include "mseq/error.hpp"
#include "mseq/expsums.hpp"
#include "mseq/json_io.hpp"
#include "mseq/lfsr.hpp"
#include "mseq/niho.hpp"
#include "mseq/parallel.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace mseq;

namespace {

Method parse_method(const std::string& name) {
    if (name == "fast") return Method::Fast;
    if (name == "naive") return Method::Naive;
    throw Error(Errc::InvalidArgument, "method must be 'fast' or 'naive'");
}

std::string spectrum_json(unsigned p, unsigned n, u64 d, const std::string& method) {
    return to_json(spectrum(FieldCtx(p, n), d, parse_method(method))).dump();
}

std::string verify_json(const std::string& id, unsigned p, unsigned n, const std::map<std::string, i64>& params) {
    const FamilyDescriptor& f = find_family(id);
    const Prediction pr = predicted_spectrum(f, p, n, params);
    const SpectrumTable computed = spectrum(FieldCtx(p, n), pr.d);
    return verdict_json(f, params, verify_family(f, p, n, params, computed), computed).dump();
}

} // namespace

PYBIND11_MODULE(_mseq, m) {
    m.doc() = "Exact crosscorrelation spectra of decimated m-sequences";

    static py::exception<Error> exc(m, "MseqError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr ptr) {
        try {
            if (ptr) std::rethrow_exception(ptr);
        } catch (const Error& e) {
            py::set_error(exc, e.what());
        }
    });

    m.def("set_threads", &set_thread_count, py::arg("threads"));
    m.def("field_json", [](unsigned p, unsigned n) { return to_json(canonical_field_spec(p, n)).dump(); },
          py::arg("p"), py::arg("n"));
    m.def("trace_sequence", [](unsigned p, unsigned n) {
        const MSeq s = generate_trace(FieldCtx(p, n));
        return std::vector<unsigned>(s.symbols.begin(), s.symbols.end());
    }, py::arg("p"), py::arg("n"));
    m.def("resolve_fraction", &resolve_fraction, py::arg("d1"), py::arg("d2"), py::arg("modulus"));
    m.def("spectrum_json", &spectrum_json, py::arg("p"), py::arg("n"), py::arg("d"), py::arg("method") = "fast",
          py::call_guard<py::gil_scoped_release>());
    m.def("catalog_ids", [] {
        std::vector<std::string> ids;
        for (const auto& f : catalog()) ids.push_back(f.id);
        return ids;
    });
    m.def("verify_json", &verify_json, py::arg("family"), py::arg("p"), py::arg("n"),
          py::arg("params") = std::map<std::string, i64>{}, py::call_guard<py::gil_scoped_release>());
    m.def("weights_json", [](unsigned p, unsigned n, u64 d) {
        return to_json(weight_distribution_via_walsh(FieldCtx(p, n), d)).dump();
    }, py::arg("p"), py::arg("n"), py::arg("d"));
    m.def("niho_values", [](unsigned p, unsigned m_half, i64 s) {
        const NihoValueSet v = niho_value_set(FieldCtx(p, 2 * m_half), s);
        return std::vector<i64>(v.values.begin(), v.values.end());
    }, py::arg("p"), py::arg("m"), py::arg("s"));
    m.def("kloosterman", [](unsigned m_deg, std::uint32_t a) {
        const FieldCtx ctx(2, m_deg);
        if (a >= ctx.order()) throw Error(Errc::InvalidArgument, "a is not an element of the field");
        return kloosterman(ctx, ctx.from_packed(a)).as_integer().get_si();
    }, py::arg("m"), py::arg("a"));
    m.def("kloosterman_R", [](unsigned m_deg) { return kloosterman_R(m_deg).get_si(); }, py::arg("m"));
}
