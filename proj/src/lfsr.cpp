/**************************************************************************
 * lfsr.cpp
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

#include "mseq/lfsr.hpp"

#include "mseq/cyclo.hpp"
#include "mseq/error.hpp"

#include <algorithm>
#include <array>

namespace mseq {

MSeq generate_trace(const FieldCtx& ctx) {
    MSeq out;
    out.p = ctx.p();
    out.n = ctx.n();
    const auto seq = ctx.trace_sequence();
    out.symbols.assign(seq.begin(), seq.end());
    out.origin = SequenceOrigin::Trace;
    out.generator = ctx.spec();
    out.trace_phase = 0;
    return out;
}

MSeq generate_recursion(const FieldSpec& spec, std::span<const unsigned> initial_state) {
    const unsigned p = spec.p, n = spec.n;
    if (initial_state.size() != n) throw Error(Errc::InvalidArgument, "initial state must have n symbols");
    if (std::all_of(initial_state.begin(), initial_state.end(), [](unsigned v) { return v == 0; }))
        throw Error(Errc::ZeroState, "the all-zero state generates the zero sequence");
    for (unsigned v : initial_state)
        if (v >= p) throw Error(Errc::InvalidArgument, "initial state symbol out of range");

    const FieldCtx ctx(spec);
    const u64 period = ctx.group_order();
    MSeq out;
    out.p = p;
    out.n = n;
    out.origin = SequenceOrigin::Recursion;
    out.generator = spec;
    out.initial_state.assign(initial_state.begin(), initial_state.end());
    out.symbols.resize(period);
    std::vector<unsigned> window(initial_state.begin(), initial_state.end());
    for (u64 t = 0; t < period; ++t) {
        out.symbols[t] = static_cast<std::uint8_t>(window[t % n]);
        // window holds s_t .. s_{t+n-1} in rotating slots
        unsigned acc = 0;
        for (unsigned i = 0; i < n; ++i) acc += spec.coeffs[i] * window[(t + i) % n];
        window[t % n] = (p - acc % p) % p;
    }
    out.trace_phase = cyclic_shift_between(out.symbols, ctx.trace_sequence());
    return out;
}

MSeq decimate(const MSeq& seq, u64 d) {
    const u64 period = seq.period();
    if (period == 0 || gcd_u64(d % period, period) != 1)
        throw Error(Errc::NotCoprime, "gcd(" + std::to_string(d) + ", " + std::to_string(period) + ") != 1");
    MSeq out = seq;
    out.origin = SequenceOrigin::Decimation;
    out.decimation = d % period;
    out.trace_phase.reset();
    u64 idx = 0;
    const u64 step = d % period;
    for (u64 t = 0; t < period; ++t) {
        out.symbols[t] = seq.symbols[idx];
        idx += step;
        if (idx >= period) idx -= period;
    }
    return out;
}

std::optional<u64> cyclic_shift_between(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
    const std::size_t len = a.size();
    if (len != b.size()) return std::nullopt;
    if (len == 0) return 0;
    // KMP search for a inside b.b
    std::vector<std::size_t> fail(len, 0);
    for (std::size_t i = 1, k = 0; i < len; ++i) {
        while (k && a[i] != a[k]) k = fail[k - 1];
        if (a[i] == a[k]) ++k;
        fail[i] = k;
    }
    for (std::size_t i = 0, k = 0; i < 2 * len - 1; ++i) {
        const std::uint8_t c = b[i % len];
        while (k && c != a[k]) k = fail[k - 1];
        if (c == a[k]) ++k;
        if (k == len) return static_cast<u64>(i + 1 - len);
    }
    return std::nullopt;
}

unsigned linear_complexity(std::span<const std::uint8_t> seq, unsigned p) {
    const std::size_t len = seq.size();
    std::vector<i64> c(len + 1, 0), b(len + 1, 0);
    c[0] = b[0] = 1;
    std::size_t complexity = 0, m = 1;
    i64 last = 1;
    const i64 pm = p;
    for (std::size_t i = 0; i < len; ++i) {
        i64 delta = seq[i];
        for (std::size_t j = 1; j <= complexity; ++j) delta += c[j] * seq[i - j];
        delta %= pm;
        if (delta == 0) {
            ++m;
            continue;
        }
        const i64 coef = static_cast<i64>(mul_mod(static_cast<u64>(delta), inverse_mod(static_cast<u64>(last), p), p));
        std::vector<i64> t = c;
        for (std::size_t j = 0; j + m <= len; ++j) c[j + m] = reduce_mod(c[j + m] - coef * b[j], p);
        if (2 * complexity <= i) {
            complexity = i + 1 - complexity;
            b = std::move(t);
            last = delta;
            m = 1;
        } else {
            ++m;
        }
    }
    return static_cast<unsigned>(complexity);
}

u64 RunHistogram::total() const {
    u64 s = 0;
    for (auto v : zeros) s += v;
    for (auto v : ones) s += v;
    return s;
}

RunHistogram binary_runs(std::span<const std::uint8_t> seq) {
    RunHistogram h;
    const std::size_t len = seq.size();
    h.zeros.assign(len + 1, 0);
    h.ones.assign(len + 1, 0);
    if (len == 0) return h;
    std::size_t start = 0;
    while (start < len && seq[start] == seq[(start + len - 1) % len]) ++start;
    if (start == len) {
        (seq[0] ? h.ones : h.zeros)[len] += 1;
        return h;
    }
    std::size_t run = 0;
    for (std::size_t k = 0; k < len; ++k) {
        const std::size_t i = (start + k) % len;
        ++run;
        if (seq[i] != seq[(i + 1) % len]) {
            (seq[i] ? h.ones : h.zeros)[run] += 1;
            run = 0;
        }
    }
    return h;
}

namespace {

bool span_property(std::span<const std::uint8_t> seq, unsigned p, unsigned n) {
    const u64 len = seq.size();
    u64 q = 1;
    for (unsigned i = 0; i < n; ++i) q *= p;
    if (len != q - 1) return false;
    std::vector<std::uint8_t> seen(q, 0);
    for (u64 t = 0; t < len; ++t) {
        u64 idx = 0;
        for (unsigned i = 0; i < n; ++i) idx = idx * p + seq[(t + i) % len];
        if (idx == 0 || seen[idx]) return false;
        seen[idx] = 1;
    }
    return true;
}

bool is_m_sequence(std::span<const std::uint8_t> seq, unsigned p, unsigned n) {
    return span_property(seq, p, n) && linear_complexity(seq, p) == n;
}

// C(tau) with tau = 0 .. len-1, each reduced to the residue counts of s_{t+tau} - s_t.
bool ideal_autocorrelation(std::span<const std::uint8_t> seq, unsigned p) {
    const std::size_t len = seq.size();
    std::vector<i64> counts(p);
    for (std::size_t tau = 0; tau < len; ++tau) {
        std::fill(counts.begin(), counts.end(), 0);
        if (p == 2) {
            i64 differ = 0;
            for (std::size_t t = 0; t + tau < len; ++t) differ += seq[t + tau] != seq[t];
            for (std::size_t t = len - tau; t < len; ++t) differ += seq[t + tau - len] != seq[t];
            counts[0] = static_cast<i64>(len) - differ;
            counts[1] = differ;
        } else {
            for (std::size_t t = 0; t < len; ++t) {
                const std::size_t u = t + tau < len ? t + tau : t + tau - len;
                counts[(seq[u] + p - seq[t]) % p] += 1;
            }
        }
        const CycInt value = CycInt::from_counts(p, counts);
        const CycInt expected(p, tau == 0 ? mpz_class(static_cast<long>(len)) : mpz_class(-1));
        if (!(value == expected)) return false;
    }
    return true;
}

std::vector<u64> sample_shifts(u64 len) {
    std::vector<u64> out;
    for (u64 tau : {u64{1}, u64{2}, u64{3}, len / 2, len / 3, len - 1})
        if (tau > 0 && tau < len && std::find(out.begin(), out.end(), tau) == out.end()) out.push_back(tau);
    return out;
}

std::vector<u64> sample_decimations(u64 len, unsigned p) {
    std::vector<u64> out;
    for (u64 d = 2; d < len && out.size() < 4; ++d) {
        if (gcd_u64(d, len) != 1) continue;
        u64 pw = 1;
        bool power = false;
        for (u64 i = 0; i < 64 && !power; ++i) {
            if (pw == d) power = true;
            pw = (pw * p) % len;
        }
        if (!power) out.push_back(d);
    }
    return out;
}

} // namespace

GolombReport check_golomb(std::span<const std::uint8_t> seq, unsigned p, unsigned n) {
    GolombReport r;
    const u64 len = seq.size();
    u64 q = 1;
    for (unsigned i = 0; i < n; ++i) q *= p;
    r.span = span_property(seq, p, n);

    if (len == q - 1) {
        std::vector<u64> counts(p, 0);
        for (auto s : seq) {
            if (s >= p) return r;
            counts[s] += 1;
        }
        r.balance = counts[0] == q / p - 1;
        for (unsigned j = 1; j < p; ++j) r.balance = r.balance && counts[j] == q / p;
    }

    if (r.span) {
        r.decimation = true;
        std::vector<std::uint8_t> dec(len);
        for (u64 d : sample_decimations(len, p)) {
            for (u64 t = 0; t < len; ++t) dec[t] = seq[mul_mod(d, t, len)];
            r.decimation = r.decimation && is_m_sequence(dec, p, n);
        }
        if (len > 1) r.decimation = r.decimation && linear_complexity(seq, p) == n;

        r.shift_and_subtract = true;
        std::vector<std::uint8_t> diff(len);
        for (u64 tau : sample_shifts(len)) {
            for (u64 t = 0; t < len; ++t) diff[t] = static_cast<std::uint8_t>((seq[(t + tau) % len] + p - seq[t]) % p);
            r.shift_and_subtract = r.shift_and_subtract && cyclic_shift_between(diff, seq).has_value();
        }
        r.ideal_autocorrelation = ideal_autocorrelation(seq, p);
    }

    if (p == 2) {
        r.runs = binary_runs(seq);
        bool ok = r.span;
        if (ok) {
            const auto& z = r.runs.zeros;
            const auto& o = r.runs.ones;
            for (unsigned k = 1; k <= len; ++k) {
                u64 ez = 0, eo = 0;
                if (k + 2 <= n) ez = eo = u64{1} << (n - k - 2);
                if (k + 1 == n) ez += 1;
                if (k == n) eo += 1;
                if (z[k] != ez || o[k] != eo) ok = false;
            }
        }
        r.run = ok;
    }
    return r;
}

} // namespace mseq
