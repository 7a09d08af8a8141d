/**************************************************************************
 * json_io.cpp
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

#include "mseq/json_io.hpp"

#include "mseq/error.hpp"

namespace mseq {

json to_json(const CycInt& v) {
    if (auto k = v.try_integer()) {
        if (k->fits_slong_p()) return json(k->get_si());
        return json(k->get_str());
    }
    json coords = json::array();
    for (const auto& c : v.coords()) coords.push_back(c.fits_slong_p() ? json(c.get_si()) : json(c.get_str()));
    return json{{"p", v.p()}, {"coords", coords}};
}

namespace {

mpz_class mpz_from_json(const json& j) {
    if (j.is_number_integer()) return mpz_class(j.get<long>());
    if (j.is_string()) return mpz_class(j.get<std::string>());
    throw Error(Errc::ParseError, "expected an integer, got " + j.dump());
}

} // namespace

CycInt cycint_from_json(unsigned p, const json& j) {
    if (j.is_object()) {
        std::vector<mpz_class> coords;
        for (const auto& c : j.at("coords")) coords.push_back(mpz_from_json(c));
        return CycInt::from_coords(j.value("p", p), std::move(coords));
    }
    return CycInt(p, mpz_from_json(j));
}

json to_json(const SpectrumTable& t) {
    json entries = json::array();
    for (const auto& [value, count] : t.entries) entries.push_back({{"value", to_json(value)}, {"count", count}});
    return json{{"p", t.p}, {"n", t.n}, {"d", t.d}, {"method", method_name(t.method)}, {"entries", entries}};
}

SpectrumTable spectrum_from_json(const json& j) {
    try {
        SpectrumTable t;
        t.p = j.at("p").get<unsigned>();
        t.n = j.at("n").get<unsigned>();
        t.d = j.at("d").get<u64>();
        const auto method = j.value("method", std::string("fast"));
        t.method = method == "naive" ? Method::Naive : method == "coset" ? Method::Coset : Method::Fast;
        for (const auto& e : j.at("entries")) t.entries[cycint_from_json(t.p, e.at("value"))] += e.at("count").get<u64>();
        return t;
    } catch (const json::exception& e) {
        throw Error(Errc::ParseError, e.what());
    }
}

json to_json(const WeightDistribution& w) {
    json weights = json::array();
    for (const auto& [weight, count] : w.counts) weights.push_back({{"w", weight}, {"count", count}});
    return json{{"p", w.p}, {"n", w.n}, {"d", w.d}, {"weights", weights}};
}

json to_json(const FieldSpec& spec) {
    return json{{"p", spec.p}, {"n", spec.n}, {"modulus_coeffs", spec.coeffs}, {"polynomial", spec.polynomial_string()}};
}

json verdict_json(const FamilyDescriptor& family, const Params& params, const Verdict& verdict,
                  const SpectrumTable& computed) {
    json params_j = json::object();
    for (const auto& [k, v] : params) params_j[k] = v;
    json predicted;
    if (verdict.predicted.table) {
        predicted = to_json(*verdict.predicted.table)["entries"];
    } else if (verdict.predicted.value_set) {
        json values = json::array();
        for (const auto& v : verdict.predicted.value_set->values)
            values.push_back(v.fits_slong_p() ? json(v.get_si()) : json(v.get_str()));
        predicted = json{{"at_most", verdict.predicted.value_set->k}, {"values", values}};
    }
    json out{{"family", family.id},
             {"params", params_j},
             {"d", verdict.predicted.d},
             {"status", status_name(family.status)},
             {"verdict", verdict.pass ? "pass" : "fail"},
             {"computed", to_json(computed)["entries"]},
             {"predicted", predicted}};
    if (!verdict.pass) out["diff"] = verdict.diff;
    return out;
}

} // namespace mseq
