/**************************************************************************
 * expsums.cpp
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

#include "mseq/expsums.hpp"

#include "mseq/error.hpp"
#include "mseq/parallel.hpp"

#include <mutex>

namespace mseq {

namespace {

// sum over the given x of w^{g(x)} where g returns a trace residue.
template <class Residue>
CycInt character_sum(const FieldCtx& ctx, bool include_zero, Residue&& g) {
    const unsigned p = ctx.p();
    std::vector<i64> counts(p, 0);
    if (include_zero) counts[g(FieldCtx::zero()) % p] += 1;
    for (u64 k = 0; k < ctx.group_order(); ++k) counts[g(ctx.alpha_pow(static_cast<i64>(k))) % p] += 1;
    return CycInt::from_counts(p, counts);
}

i64 as_i64(const CycInt& v) { return v.as_integer().get_si(); }

} // namespace

CycInt kloosterman(const FieldCtx& ctx, Elem a) {
    // x^{q-2}, which is 0 at x = 0 even when q = 2
    return character_sum(ctx, true, [&](Elem x) {
        const Elem inv = x.is_zero() ? FieldCtx::zero() : ctx.inv(x);
        return ctx.trace(ctx.add(inv, ctx.mul(a, x)));
    });
}

std::vector<CycInt> kloosterman_table(const FieldCtx& ctx) {
    const u64 period = ctx.group_order();
    std::vector<CycInt> out(period + 1, CycInt(ctx.p()));
    parallel_for(0, period + 1, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t k = lo; k < hi; ++k)
            out[k] = kloosterman(ctx, k == period ? FieldCtx::zero() : ctx.alpha_pow(static_cast<i64>(k)));
    }, 16);
    return out;
}

CycInt cubic_sum(const FieldCtx& ctx, Elem b, Elem a) {
    return character_sum(ctx, true, [&](Elem x) {
        return ctx.trace(ctx.add(ctx.mul(b, ctx.pow(x, 3)), ctx.mul(a, x)));
    });
}

CycInt g_sum(const FieldCtx& ctx, Elem b, Elem a) {
    return character_sum(ctx, false, [&](Elem x) {
        return ctx.trace(ctx.add(ctx.mul(b, ctx.pow(x, 3)), ctx.mul(a, ctx.inv(x))));
    });
}

mpz_class kloosterman_R(unsigned m) {
    const FieldCtx ctx(2, m);
    const auto K = kloosterman_table(ctx);
    mpz_class total = 0;
    for (u64 k = 1; k < ctx.group_order(); ++k) { // y = alpha^k, k = 0 is y = 1
        const Elem y = ctx.alpha_pow(static_cast<i64>(k));
        const Elem denom = ctx.add(ctx.pow(y, 3), y);
        const Elem arg = ctx.inv(denom);
        const mpz_class kv = K[arg.is_zero() ? ctx.group_order() : arg.log].as_integer();
        if (ctx.trace(ctx.inv(y)) == 0) total += kv;
        else total -= kv;
    }
    return total;
}

Op6Report op6_check(unsigned n, unsigned k) {
    const FieldCtx ctx(2, n);
    Op6Report r;
    r.n = n;
    r.k = k;
    const i64 e = static_cast<i64>(ipow(2, k) + 1);
    const Elem one = FieldCtx::one();
    r.first_lhs = as_i64(character_sum(ctx, false, [&](Elem x) { return ctx.trace(ctx.add(ctx.pow(x, e), ctx.inv(x))); }));
    r.first_rhs = as_i64(character_sum(ctx, false, [&](Elem x) { return ctx.trace(ctx.add(ctx.pow(x, 3), ctx.inv(x))); }));
    r.second_lhs = as_i64(character_sum(ctx, false, [&](Elem x) { return ctx.trace(ctx.add(x, ctx.inv(x))); }));
    for (u64 i = 0; i < ctx.group_order(); ++i) {
        const Elem v = ctx.alpha_pow(static_cast<i64>(i));
        const Elem vk = ctx.frobenius(v, k);
        const Elem denom = ctx.pow(ctx.add(vk, v), e);
        if (denom.is_zero()) {
            ++r.undefined_terms;
            continue;
        }
        const Elem num = ctx.mul(ctx.add(vk, one), vk);
        r.second_rhs_defined += ctx.trace(ctx.div(num, denom)) == 0 ? 1 : -1;
    }
    r.second_rhs_zero_convention = r.second_rhs_defined + static_cast<i64>(r.undefined_terms);
    return r;
}

} // namespace mseq
