/**************************************************************************
 * niho.cpp
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

#include "mseq/niho.hpp"

#include "mseq/error.hpp"
#include "mseq/parallel.hpp"
#include "mseq/spectra.hpp"

#include <atomic>
#include <mutex>

namespace mseq {

namespace {

unsigned half_degree(const FieldCtx& ctx) {
    if (ctx.n() % 2 != 0) throw Error(Errc::OddDegree, "n = " + std::to_string(ctx.n()) + " is odd");
    return ctx.n() / 2;
}

} // namespace

u64 resolve_fraction(i64 d1, i64 d2, u64 modulus) {
    if (modulus == 0) throw Error(Errc::InvalidArgument, "modulus must be positive");
    const u64 inv = inverse_mod(reduce_mod(d2, modulus), modulus);
    return mul_mod(reduce_mod(d1, modulus), inv, modulus);
}

u64 niho_exponent(unsigned p, unsigned m, i64 s) {
    const u64 pm = ipow(p, m);
    const u64 group = ipow(p, 2 * m) - 1;
    const u64 sr = reduce_mod(s, pm + 1);
    return (mul_mod(sr, pm - 1, group) + 1) % group;
}

unsigned count_unit_roots(const FieldCtx& ctx, i64 s, Elem a) {
    const unsigned m = half_degree(ctx);
    const u64 pm = ipow(ctx.p(), m);
    const i64 sr = static_cast<i64>(reduce_mod(s, pm + 1));
    const Elem abar = ctx.frobenius(a, m);
    const Elem one = FieldCtx::one();
    const u64 step = pm - 1;
    unsigned roots = 0;
    for (u64 k = 0; k <= pm; ++k) {
        const Elem x = ctx.alpha_pow(static_cast<i64>(mul_mod(step, k, ctx.group_order())));
        Elem v = ctx.pow(x, 2 * sr - 1);
        v = ctx.sub(v, ctx.mul(a, ctx.pow(x, sr)));
        v = ctx.sub(v, ctx.mul(abar, ctx.pow(x, sr - 1)));
        v = ctx.add(v, one);
        if (v.is_zero()) ++roots;
    }
    return roots;
}

NihoValueSet niho_value_set(const FieldCtx& ctx, i64 s) {
    const unsigned m = half_degree(ctx);
    const i64 pm = static_cast<i64>(ipow(ctx.p(), m));
    NihoValueSet out;
    out.m = m;
    out.s = s;
    std::mutex mu;
    parallel_for(0, ctx.group_order(), [&](std::size_t lo, std::size_t hi) {
        std::map<unsigned, u64> local;
        for (std::size_t k = lo; k < hi; ++k) local[count_unit_roots(ctx, s, ctx.alpha_pow(static_cast<i64>(k)))] += 1;
        std::lock_guard lock(mu);
        for (const auto& [r, c] : local) out.root_counts[r] += c;
    }, 256);
    for (const auto& [r, c] : out.root_counts) out.values.insert((static_cast<i64>(r) - 1) * pm);
    return out;
}

NihoIdentityReport niho_identity_check(const FieldCtx& ctx, i64 s) {
    const unsigned m = half_degree(ctx);
    const i64 pm = static_cast<i64>(ipow(ctx.p(), m));
    NihoIdentityReport r;
    r.d = niho_exponent(ctx.p(), m, s);
    const WalshTable w = walsh_power_transform(ctx, r.d);
    const std::size_t basis = w.basis();
    const u64 period = ctx.group_order();
    std::vector<unsigned> roots(period);
    parallel_for(0, period, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t k = lo; k < hi; ++k) roots[k] = count_unit_roots(ctx, s, ctx.alpha_pow(static_cast<i64>(k)));
    }, 256);
    for (u64 k = 0; k < period; ++k) {
        const std::int32_t* c = w.coords_at_log(k);
        bool ok = c[0] == (static_cast<i64>(roots[k]) - 1) * pm;
        for (std::size_t j = 1; j < basis; ++j) ok = ok && c[j] == 0;
        ++r.checked;
        if (!ok) {
            ++r.mismatches;
            if (!r.first_mismatch_log) r.first_mismatch_log = k;
        }
        r.sum_n_minus_one += static_cast<i64>(roots[k]) - 1;
    }
    r.sum_n_minus_one += static_cast<i64>(count_unit_roots(ctx, s, FieldCtx::zero())) - 1;
    r.sum_ok = r.sum_n_minus_one == pm;
    return r;
}

} // namespace mseq
