/**************************************************************************
 * codes.cpp
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

#include "mseq/codes.hpp"

#include "mseq/error.hpp"
#include "mseq/parallel.hpp"
#include "mseq/spectra.hpp"

#include <mutex>

namespace mseq {

u64 WeightDistribution::total() const {
    u64 s = 0;
    for (const auto& [w, c] : counts) s += c;
    return s;
}

u64 codeword_weight(const FieldCtx& ctx, Elem a, Elem b, u64 d) {
    u64 weight = 0;
    for (u64 i = 0; i < ctx.group_order(); ++i) {
        const Elem x = ctx.alpha_pow(static_cast<i64>(i));
        const Elem v = ctx.add(ctx.mul(a, x), ctx.mul(b, ctx.pow(x, static_cast<i64>(d % ctx.group_order()))));
        if (ctx.trace(v) != 0) ++weight;
    }
    return weight;
}

WeightDistribution weight_distribution_via_walsh(const FieldCtx& ctx, u64 d) {
    const unsigned p = ctx.p();
    if (p > 2 && d % (p - 1) != 1)
        throw Error(Errc::ConditionViolated, "d = " + std::to_string(d) + " is not 1 mod p-1");
    const WalshTable w = walsh_fast(ctx, d);
    const u64 q = ctx.order(), period = q - 1;
    WeightDistribution out;
    out.p = p;
    out.n = ctx.n();
    out.d = d;
    out.counts[0] = 1;
    // a = 0 or b = 0 (not both): a single nonzero trace term, balanced.
    out.counts[q / p * (p - 1)] += 2 * period;
    // a, b nonzero: c = -a / b^{1/d} runs over every nonzero c exactly q - 1 times.
    for (u64 k = 0; k < period; ++k) {
        const i64 wv = w.at_log(k).as_integer().get_si();
        const i64 num = static_cast<i64>(p - 1) * (static_cast<i64>(q) - wv);
        if (num % static_cast<i64>(p) != 0)
            throw Error(Errc::ConditionViolated, "non-integral weight from W = " + std::to_string(wv));
        out.counts[static_cast<u64>(num / static_cast<i64>(p))] += period;
    }
    return out;
}

WeightDistribution weight_distribution_brute_force(const FieldCtx& ctx, u64 d) {
    const unsigned p = ctx.p();
    const u64 q = ctx.order(), period = q - 1;
    const auto s = ctx.trace_sequence();
    WeightDistribution out;
    out.p = p;
    out.n = ctx.n();
    out.d = d;
    std::mutex mu;
    // b ranges over q values (index period means b = 0), a likewise.
    parallel_for(0, q, [&](std::size_t lo, std::size_t hi) {
        std::map<u64, u64> local;
        std::vector<std::uint8_t> fb(period);
        for (std::size_t bi = lo; bi < hi; ++bi) {
            for (u64 i = 0; i < period; ++i) {
                if (bi == period) {
                    fb[i] = 0;
                } else {
                    const u64 e = (bi + mul_mod(d % period, i, period)) % period;
                    fb[i] = s[e];
                }
            }
            for (u64 ai = 0; ai <= period; ++ai) {
                u64 weight = 0;
                for (u64 i = 0; i < period; ++i) {
                    const unsigned ta = ai == period ? 0u : s[(ai + i) % period];
                    if ((ta + fb[i]) % p != 0) ++weight;
                }
                local[weight] += 1;
            }
        }
        std::lock_guard lock(mu);
        for (const auto& [w, c] : local) out.counts[w] += c;
    }, 4);
    return out;
}

} // namespace mseq
