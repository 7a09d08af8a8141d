/**************************************************************************
 * json_io.hpp
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

#pragma once

#include "mseq/codes.hpp"
#include "mseq/families.hpp"
#include "mseq/spectra.hpp"

#include "json.hpp"

namespace mseq {

using json = nlohmann::ordered_json;

/// Rational values serialize as a plain integer, the rest as {"p": p, "coords": [...]}.
json to_json(const CycInt& v);
CycInt cycint_from_json(unsigned p, const json& j);

/// {p, n, d, method, entries: [{value, count}]} with entries in canonical order.
json to_json(const SpectrumTable& t);
SpectrumTable spectrum_from_json(const json& j);

json to_json(const WeightDistribution& w);
json to_json(const FieldSpec& spec);

/// Verdict record {family, params, d, status, verdict, computed, predicted, diff}.
json verdict_json(const FamilyDescriptor& family, const Params& params, const Verdict& verdict,
                  const SpectrumTable& computed);

} // namespace mseq
