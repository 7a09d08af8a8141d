/**************************************************************************
 * niho.hpp
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
#include <optional>
#include <set>

namespace mseq {

/// d1 * d2^{-1} mod modulus; throws Error(NotInvertible) when gcd(d2, modulus) != 1.
u64 resolve_fraction(i64 d1, i64 d2, u64 modulus);

/// s(p^m - 1) + 1 reduced mod p^{2m} - 1, with s first reduced mod p^m + 1.
u64 niho_exponent(unsigned p, unsigned m, i64 s);

/// Number of roots of x^{2s-1} - a x^s - conj(a) x^{s-1} + 1 on the unit circle, conj(a) = a^{p^m}.
/// Throws Error(OddDegree) for odd n.
unsigned count_unit_roots(const FieldCtx& ctx, i64 s, Elem a);

struct NihoValueSet {
    unsigned m = 0;
    i64 s = 0;
    std::set<i64> values;                 // (N(a) - 1) p^m over nonzero a
    std::map<unsigned, u64> root_counts;  // N(a) -> number of nonzero a
};

NihoValueSet niho_value_set(const FieldCtx& ctx, i64 s);

struct NihoIdentityReport {
    u64 d = 0;
    u64 checked = 0;
    u64 mismatches = 0;
    std::optional<u64> first_mismatch_log;
    i64 sum_n_minus_one = 0; // over every a, zero included
    bool sum_ok = false;

    bool holds() const { return mismatches == 0 && checked > 0 && sum_ok; }
};

/// Compares W_d(alpha^k) from the fast transform with (N(alpha^k) - 1) p^m for every k.
NihoIdentityReport niho_identity_check(const FieldCtx& ctx, i64 s);

} // namespace mseq
