/**************************************************************************
 * codes.hpp
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

#include "mseq/gf.hpp"

#include <map>

namespace mseq {

/// Weight enumerator of the cyclic code {c_{a,b} : t -> Tr(a alpha^t + b alpha^{dt})} of length p^n - 1.
struct WeightDistribution {
    unsigned p = 2;
    unsigned n = 1;
    u64 d = 1;
    std::map<u64, u64> counts; // weight -> number of codewords, zero codeword included

    u64 total() const;
    friend bool operator==(const WeightDistribution& a, const WeightDistribution& b) { return a.counts == b.counts; }
};

/// Hamming weight of c_{a,b}, by direct evaluation at every nonzero x.
u64 codeword_weight(const FieldCtx& ctx, Elem a, Elem b, u64 d);

/// Weights (p-1)(p^n - W_d(c))/p read from the Walsh table. Requires d = 1 mod p-1
/// (Error(ConditionViolated) otherwise) and gcd(d, p^n - 1) = 1.
WeightDistribution weight_distribution_via_walsh(const FieldCtx& ctx, u64 d);

/// Enumerates all p^{2n} codewords.
WeightDistribution weight_distribution_brute_force(const FieldCtx& ctx, u64 d);

} // namespace mseq
