/**************************************************************************
 * families.hpp
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

#include "mseq/spectra.hpp"

#include <gmpxx.h>

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace mseq {

enum class FamilyStatus { ProvedDistribution, ProvedValuesOnly, AtMostK };

std::string_view status_name(FamilyStatus s) noexcept;

/// Named integer parameters of a family, e.g. {"k": 3}.
using Params = std::map<std::string, i64>;

std::string params_string(const Params& params);
/// Parses "k=3,r=1" (empty string gives no parameters).
Params parse_params(std::string_view text);

struct AtMostKValues {
    unsigned k = 0;
    std::set<mpz_class> values;
};

/// One predicted correlation value with its closed-form count before normalization.
struct PredictedRow {
    mpz_class value;
    mpq_class count;
};

struct Prediction {
    u64 d = 0;
    std::vector<PredictedRow> rows;         // exact distributions only, as printed
    std::optional<SpectrumTable> table;      // normalized, zero counts dropped
    std::optional<AtMostKValues> value_set;  // at-most-k families
};

struct FamilyDescriptor {
    std::string id;
    std::string source;          // the result it comes from
    std::string prime_constraint;
    std::string param_domain;
    std::vector<std::string> param_names;
    FamilyStatus status = FamilyStatus::ProvedDistribution;
    /// The printed table counts the a = 0 Walsh point (its counts sum to p^n).
    bool table_includes_zero_point = false;
    std::string note;

    /// Empty when (p, n, params) is admissible, otherwise the violated constraint.
    std::function<std::optional<std::string>(unsigned, unsigned, const Params&)> violation;
    std::function<u64(unsigned, unsigned, const Params&)> decimation;
    /// Rows of an exact distribution, or the admissible value set of an at-most-k family.
    std::function<std::vector<PredictedRow>(unsigned, unsigned, const Params&)> rows;
    std::function<AtMostKValues(unsigned, unsigned, const Params&)> value_set;
    /// Every admissible parameter point for (p, n), in a fixed order.
    std::function<std::vector<Params>(unsigned, unsigned)> admissible_params;
};

const std::vector<FamilyDescriptor>& catalog();

/// Throws Error(InvalidArgument) for an unknown id.
const FamilyDescriptor& find_family(std::string_view id);

/// Throws Error(OutOfDomain) naming the violated constraint, or Error(NotCoprime).
Prediction predicted_spectrum(const FamilyDescriptor& family, unsigned p, unsigned n, const Params& params);

struct Verdict {
    bool pass = false;
    std::string diff;
    Prediction predicted;
};

/// Exact multiset equality for distributions; containment and cardinality for at-most-k.
Verdict verify_family(const FamilyDescriptor& family, unsigned p, unsigned n, const Params& params,
                      const SpectrumTable& computed);

/// tau_1 = 1/2, tau_2 = -7/4, tau_{k+2} = tau_{k+1}/2 - tau_k. Requires m >= 1.
mpq_class tau(unsigned m);

/// Occurrences of (n_inf, n_0, n_1) over all shifts.
using CosetTriples = std::map<std::array<u64, 3>, u64>;

struct CosetResult {
    SpectrumTable table;
    u64 j = 0;   // d1 = d p^j
    u64 d1 = 0;
    std::vector<CycInt> class_sums; // S(alpha^r) for r < N, then S(0)
    CosetTriples triples;
};

/// Spectrum of C_d through the decomposition of one period into N cosets.
/// Needs N | p^n - 1 and (d p^j - 1) N = 0 mod p^n - 1 for some j < n (Error(MethodInapplicable) otherwise).
CosetResult coset_spectrum_method(const FieldCtx& ctx, u64 d, u64 N);

} // namespace mseq
