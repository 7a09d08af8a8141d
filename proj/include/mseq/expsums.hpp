/**************************************************************************
 * expsums.hpp
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

#include "mseq/cyclo.hpp"
#include "mseq/gf.hpp"

#include <vector>

namespace mseq {

/// K(a) = sum over all x of w^{Tr(x^{q-2} + a x)}, so 0 contributes through 0^{-1} = 0.
CycInt kloosterman(const FieldCtx& ctx, Elem a);

/// K(a) for every a, indexed by discrete log with the a = 0 value last.
std::vector<CycInt> kloosterman_table(const FieldCtx& ctx);

/// C(b, a) = sum over all x of w^{Tr(b x^3 + a x)}.
CycInt cubic_sum(const FieldCtx& ctx, Elem b, Elem a);

/// G(b, a) = sum over nonzero x of w^{Tr(b x^3 + a x^{-1})}.
CycInt g_sum(const FieldCtx& ctx, Elem b, Elem a);

/// R = sum over y in GF(2^m) minus GF(2) of (-1)^{Tr(1/y)} K(1/(y^3 + y)).
mpz_class kloosterman_R(unsigned m);

struct Op6Report {
    unsigned n = 0;
    unsigned k = 0;
    i64 first_lhs = 0;   // sum over nonzero x of (-1)^{Tr(x^{2^k+1} + x^{-1})}
    i64 first_rhs = 0;   // the same with x^3
    i64 second_lhs = 0;  // sum over nonzero x of (-1)^{Tr(x + x^{-1})}
    /// The v-parameterized sum over nonzero v whose denominator (v^{2^k} + v)^{2^k+1} is nonzero.
    i64 second_rhs_defined = 0;
    /// Number of v with a vanishing denominator (v in GF(2^gcd(k,n)) minus 0).
    u64 undefined_terms = 0;
    /// second_rhs_defined plus one term (-1)^{Tr(0)} = 1 per undefined v (quotient read as 0 via 0^{-1} = 0).
    i64 second_rhs_zero_convention = 0;

    bool first_equal() const { return first_lhs == first_rhs; }
    bool second_equal_excluding() const { return second_lhs == second_rhs_defined; }
    bool second_equal_zero_convention() const { return second_lhs == second_rhs_zero_convention; }
};

/// Evaluates both identities of the k-generalized sums over GF(2^n).
Op6Report op6_check(unsigned n, unsigned k);

} // namespace mseq
