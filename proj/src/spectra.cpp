/**************************************************************************
 * spectra.cpp
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

#include "mseq/spectra.hpp"

#include "mseq/error.hpp"
#include "mseq/parallel.hpp"

#include <atomic>
#include <mutex>
#include <random>

namespace mseq {

namespace {

std::size_t basis_of(unsigned p) { return p == 2 ? 1 : p - 1; }

using CoordKey = std::vector<std::int32_t>;
using CoordHistogram = std::map<CoordKey, u64>;

CycInt cyc_from_key(unsigned p, const CoordKey& key) {
    std::vector<mpz_class> coords(key.size());
    for (std::size_t i = 0; i < key.size(); ++i) coords[i] = static_cast<long>(key[i]);
    return CycInt::from_coords(p, std::move(coords));
}

// The window (s_k, ..., s_{k+n-1}) packed with s_k as the least significant digit.
std::uint32_t window_index(std::span<const std::uint8_t> s, unsigned p, unsigned n, u64 k) {
    const u64 period = s.size();
    std::uint32_t idx = 0;
    for (unsigned i = n; i-- > 0;) idx = idx * p + s[(k + i) % period];
    return idx;
}

SpectrumTable table_from_histogram(unsigned p, unsigned n, u64 d, Method method, const CoordHistogram& hist) {
    SpectrumTable t;
    t.p = p;
    t.n = n;
    t.d = d;
    t.method = method;
    for (const auto& [key, count] : hist) t.entries[cyc_from_key(p, key)] += count;
    return t;
}

void merge_into(CoordHistogram& dst, const CoordHistogram& src) {
    for (const auto& [k, v] : src) dst[k] += v;
}

} // namespace

std::string_view method_name(Method m) noexcept {
    switch (m) {
    case Method::Naive: return "naive";
    case Method::Fast: return "fast";
    case Method::Coset: return "coset";
    }
    return "fast";
}

u64 SpectrumTable::total() const {
    u64 s = 0;
    for (const auto& [v, c] : entries) s += c;
    return s;
}

CycInt SpectrumTable::weighted_sum() const {
    CycInt s(p);
    for (const auto& [v, c] : entries) s += v * CycInt(p, mpz_class(static_cast<unsigned long>(c)));
    return s;
}

u64 SpectrumTable::count_of(long value) const {
    const auto it = entries.find(CycInt(p, mpz_class(value)));
    return it == entries.end() ? 0 : it->second;
}

WalshTable::WalshTable(unsigned p, unsigned n, u64 d) : p_(p), n_(n), d_(d), basis_(basis_of(p)), zero_(basis_of(p), 0) {}

CycInt WalshTable::at_log(u64 k) const {
    const std::int32_t* c = coords_at_log(k);
    return cyc_from_key(p_, CoordKey(c, c + basis_));
}

CycInt WalshTable::at_zero() const { return cyc_from_key(p_, zero_); }

void require_coprime(const FieldCtx& ctx, u64 d) {
    const u64 g = ctx.group_order();
    if (gcd_u64(d % g, g) != 1)
        throw Error(Errc::NotCoprime, "gcd(" + std::to_string(d) + ", " + std::to_string(g) + ") != 1");
}

CycInt crosscorr_naive(const FieldCtx& ctx, u64 d, u64 tau) {
    require_coprime(ctx, d);
    const auto s = ctx.trace_sequence();
    const unsigned p = ctx.p();
    const u64 period = ctx.group_order();
    std::vector<i64> counts(p, 0);
    u64 dt = 0, shifted = tau % period;
    const u64 step = d % period;
    for (u64 t = 0; t < period; ++t) {
        counts[(s[shifted] + p - s[dt]) % p] += 1;
        dt += step;
        if (dt >= period) dt -= period;
        if (++shifted == period) shifted = 0;
    }
    return CycInt::from_counts(p, counts);
}

WalshTable walsh_naive(const FieldCtx& ctx, u64 d) {
    require_coprime(ctx, d);
    const auto s = ctx.trace_sequence();
    const unsigned p = ctx.p();
    const u64 period = ctx.group_order();
    WalshTable w(p, ctx.n(), d);
    const std::size_t basis = w.basis_;
    w.coords_.assign(period * basis, 0);

    std::vector<std::uint8_t> f(period);
    for (u64 i = 0, e = 0; i < period; ++i) {
        f[i] = s[e];
        e = (e + d % period) % period;
    }
    auto store = [&](std::int32_t* out, const std::vector<i64>& counts) {
        if (p == 2) {
            out[0] = static_cast<std::int32_t>(counts[0] - counts[1]);
        } else {
            for (std::size_t j = 0; j < basis; ++j) out[j] = static_cast<std::int32_t>(counts[j] - counts[p - 1]);
        }
    };
    {
        std::vector<i64> counts(p, 0);
        counts[0] = 1;
        for (u64 i = 0; i < period; ++i) counts[f[i]] += 1;
        store(w.zero_.data(), counts);
    }
    parallel_for(0, period, [&](std::size_t lo, std::size_t hi) {
        std::vector<i64> counts(p);
        for (std::size_t k = lo; k < hi; ++k) {
            std::fill(counts.begin(), counts.end(), 0);
            counts[0] = 1; // x = 0
            for (u64 i = 0, ki = k; i < period; ++i) {
                counts[(f[i] + p - s[ki]) % p] += 1;
                if (++ki == period) ki = 0;
            }
            store(&w.coords_[k * basis], counts);
        }
    }, 64);
    return w;
}

WalshTable walsh_fast(const FieldCtx& ctx, u64 d) {
    require_coprime(ctx, d);
    return walsh_power_transform(ctx, d);
}

WalshTable walsh_power_transform(const FieldCtx& ctx, u64 d) {
    if (d == 0) throw Error(Errc::InvalidArgument, "exponent must be positive");
    const u64 q = ctx.order();
    if (q > kMaxTableOrder) throw Error(Errc::MemoryBudget, "field too large for a Walsh table");
    const auto s = ctx.trace_sequence();
    const auto exp = ctx.exp_table();
    const unsigned p = ctx.p(), n = ctx.n();
    const u64 period = q - 1;
    const u64 step = d % period;
    WalshTable w(p, n, d);
    const std::size_t basis = w.basis_;
    w.coords_.assign(period * basis, 0);

    if (p == 2) {
        std::vector<std::int32_t> buf(q);
        buf[0] = 1;
        for (u64 i = 0, e = 0; i < period; ++i) {
            buf[exp[i]] = s[e] ? -1 : 1;
            e += step;
            if (e >= period) e -= period;
        }
        for (u64 h = 1; h < q; h <<= 1) {
            parallel_for(0, q / 2, [&, h](std::size_t lo, std::size_t hi) {
                for (std::size_t j = lo; j < hi; ++j) {
                    const std::size_t i = (j / h) * 2 * h + j % h;
                    const std::int32_t a = buf[i], b = buf[i + h];
                    buf[i] = a + b;
                    buf[i + h] = a - b;
                }
            });
        }
        w.zero_[0] = buf[0];
        parallel_for(0, period, [&](std::size_t lo, std::size_t hi) {
            std::uint32_t idx = window_index(s, 2, n, lo);
            for (std::size_t k = lo; k < hi; ++k) {
                w.coords_[k] = buf[idx];
                idx = (idx >> 1) | (static_cast<std::uint32_t>(s[(k + n) % period]) << (n - 1));
            }
        });
        return w;
    }

    // Group-ring butterflies: each point carries a count vector over Z/p; multiplying by w^r rotates it.
    std::vector<std::uint32_t> buf(q * p, 0);
    buf[0] = 1;
    for (u64 i = 0, e = 0; i < period; ++i) {
        buf[u64{exp[i]} * p + s[e]] = 1;
        e += step;
        if (e >= period) e -= period;
    }
    u64 h = 1;
    for (unsigned stage = 0; stage < n; ++stage, h *= p) {
        parallel_for(0, q / p, [&, h](std::size_t lo, std::size_t hi) {
            std::vector<std::uint32_t> in(p * p), out(p * p);
            for (std::size_t g = lo; g < hi; ++g) {
                const std::size_t base = (g / h) * h * p + g % h;
                for (unsigned j = 0; j < p; ++j)
                    std::copy_n(&buf[(base + j * h) * p], p, &in[j * p]);
                std::fill(out.begin(), out.end(), 0);
                for (unsigned k = 0; k < p; ++k) {
                    std::uint32_t* dst = &out[k * p];
                    for (unsigned j = 0; j < p; ++j) {
                        // term v_j * w^{-kj}: dst[c] += v_j[c + kj]
                        const unsigned r = (k * j) % p;
                        const std::uint32_t* src = &in[j * p];
                        for (unsigned c = 0; c < p; ++c) dst[c] += src[(c + r) % p];
                    }
                }
                for (unsigned k = 0; k < p; ++k) std::copy_n(&out[k * p], p, &buf[(base + k * h) * p]);
            }
        }, 1024);
    }
    auto store = [&](std::int32_t* dst, const std::uint32_t* counts) {
        for (std::size_t j = 0; j < basis; ++j)
            dst[j] = static_cast<std::int32_t>(counts[j]) - static_cast<std::int32_t>(counts[p - 1]);
    };
    store(w.zero_.data(), &buf[0]);
    parallel_for(0, period, [&](std::size_t lo, std::size_t hi) {
        const std::uint32_t top = static_cast<std::uint32_t>(ipow(p, n - 1));
        std::uint32_t idx = window_index(s, p, n, lo);
        for (std::size_t k = lo; k < hi; ++k) {
            store(&w.coords_[k * basis], &buf[u64{idx} * p]);
            idx = idx / p + s[(k + n) % period] * top;
        }
    });
    return w;
}

SpectrumTable spectrum_from_walsh(const WalshTable& w) {
    const u64 period = ipow(w.p(), w.n()) - 1;
    const std::size_t basis = w.basis();
    CoordHistogram total;
    std::mutex mu;
    parallel_for(0, period, [&](std::size_t lo, std::size_t hi) {
        CoordHistogram local;
        CoordKey key(basis);
        for (std::size_t k = lo; k < hi; ++k) {
            const std::int32_t* c = w.coords_at_log(k);
            std::copy_n(c, basis, key.begin());
            key[0] -= 1;
            local[key] += 1;
        }
        std::lock_guard lock(mu);
        merge_into(total, local);
    });
    return table_from_histogram(w.p(), w.n(), w.d(), Method::Fast, total);
}

SpectrumTable spectrum(const FieldCtx& ctx, u64 d, Method method) {
    require_coprime(ctx, d);
    if (method == Method::Fast) return spectrum_from_walsh(walsh_fast(ctx, d));

    const auto s = ctx.trace_sequence();
    const unsigned p = ctx.p();
    const u64 period = ctx.group_order();
    const std::size_t basis = basis_of(p);
    std::vector<std::uint8_t> dec(period);
    for (u64 t = 0, e = 0; t < period; ++t) {
        dec[t] = s[e];
        e = (e + d % period) % period;
    }
    CoordHistogram total;
    std::mutex mu;
    parallel_for(0, period, [&](std::size_t lo, std::size_t hi) {
        CoordHistogram local;
        std::vector<i64> counts(p);
        CoordKey key(basis);
        for (std::size_t tau = lo; tau < hi; ++tau) {
            std::fill(counts.begin(), counts.end(), 0);
            for (u64 t = 0, u = tau; t < period; ++t) {
                counts[(s[u] + p - dec[t]) % p] += 1;
                if (++u == period) u = 0;
            }
            if (p == 2) {
                key[0] = static_cast<std::int32_t>(counts[0] - counts[1]);
            } else {
                for (std::size_t j = 0; j < basis; ++j) key[j] = static_cast<std::int32_t>(counts[j] - counts[p - 1]);
            }
            local[key] += 1;
        }
        std::lock_guard lock(mu);
        merge_into(total, local);
    }, 16);
    return table_from_histogram(p, ctx.n(), d, Method::Naive, total);
}

CycInt moment(const WalshTable& w, unsigned l) {
    const u64 period = ipow(w.p(), w.n()) - 1;
    const std::size_t basis = w.basis();
    CoordHistogram hist;
    hist[w.zero_coords()] += 1;
    CoordKey key(basis);
    for (u64 k = 0; k < period; ++k) {
        const std::int32_t* c = w.coords_at_log(k);
        std::copy_n(c, basis, key.begin());
        hist[key] += 1;
    }
    CycInt acc(w.p());
    for (const auto& [k, count] : hist)
        acc += cyc_from_key(w.p(), k).pow(l) * CycInt(w.p(), mpz_class(static_cast<unsigned long>(count)));
    return acc;
}

CycInt moment(const SpectrumTable& table, unsigned l) {
    const CycInt one(table.p, mpz_class(1));
    CycInt acc(table.p, mpz_class(l == 0 ? 1 : 0));
    for (const auto& [v, count] : table.entries)
        acc += (v + one).pow(l) * CycInt(table.p, mpz_class(static_cast<unsigned long>(count)));
    return acc;
}

namespace {

std::vector<std::uint32_t> power_table(const FieldCtx& ctx, u64 d) {
    const u64 q = ctx.order();
    std::vector<std::uint32_t> pw(q);
    for (u64 x = 0; x < q; ++x) {
        const Elem e = ctx.from_packed(static_cast<std::uint32_t>(x));
        pw[x] = ctx.packed(ctx.pow(e, static_cast<i64>(d % ctx.group_order())));
    }
    return pw;
}

void check_budget(u64 q, unsigned free_vars) {
    long double cost = 1;
    for (unsigned i = 0; i < free_vars; ++i) cost *= static_cast<long double>(q);
    if (cost > 4294967296.0L) throw Error(Errc::Budget, "brute-force count exceeds 2^32 tuples");
}

// Counts completions of a partial tuple: free variables range over [first, q); the last
// variable is forced to -(sum) - shift and must lie in [first, q) as well.
u64 count_completions(const FieldCtx& ctx, const std::vector<std::uint32_t>& pw, unsigned free_vars,
                      std::uint32_t sum, std::uint32_t psum, std::uint32_t first) {
    const u64 q = ctx.order();
    if (free_vars == 0) {
        const std::uint32_t last = ctx.neg_packed(sum);
        if (last < first) return 0;
        return ctx.add_packed(psum, pw[last]) == 0 ? 1 : 0;
    }
    u64 total = 0;
    for (std::uint32_t x = first; x < q; ++x)
        total += count_completions(ctx, pw, free_vars - 1, ctx.add_packed(sum, x), ctx.add_packed(psum, pw[x]), first);
    return total;
}

u64 parallel_count(const FieldCtx& ctx, const std::vector<std::uint32_t>& pw, unsigned free_vars,
                   std::uint32_t sum0, std::uint32_t psum0, std::uint32_t first) {
    if (free_vars == 0) return count_completions(ctx, pw, 0, sum0, psum0, first);
    std::atomic<u64> total{0};
    parallel_for(first, ctx.order(), [&](std::size_t lo, std::size_t hi) {
        u64 local = 0;
        for (std::size_t x = lo; x < hi; ++x) {
            const auto xv = static_cast<std::uint32_t>(x);
            local += count_completions(ctx, pw, free_vars - 1, ctx.add_packed(sum0, xv), ctx.add_packed(psum0, pw[xv]), first);
        }
        total += local;
    }, 16);
    return total.load();
}

} // namespace

u64 solution_count_N(const FieldCtx& ctx, u64 d, unsigned l) {
    if (l == 0) throw Error(Errc::InvalidArgument, "l must be positive");
    check_budget(ctx.order(), l - 1);
    const auto pw = power_table(ctx, d);
    return parallel_count(ctx, pw, l - 1, 0, 0, 0);
}

u64 b_l_count(const FieldCtx& ctx, u64 d, unsigned l) {
    if (l < 2) throw Error(Errc::InvalidArgument, "l must be at least 2");
    check_budget(ctx.order(), l - 2);
    const auto pw = power_table(ctx, d);
    // x_1 + ... + x_{l-1} = -1 and x_1^d + ... + x_{l-1}^d = -1, all x_i nonzero.
    return parallel_count(ctx, pw, l - 2, 1, 1, 1);
}

u64 m_count(const FieldCtx& ctx, u64 d, Elem a) {
    const auto pw = power_table(ctx, d);
    const std::uint32_t target = ctx.packed(a);
    u64 count = 0;
    for (std::uint32_t x = 0; x < ctx.order(); ++x)
        if (ctx.add_packed(pw[ctx.add_packed(x, 1)], ctx.neg_packed(pw[x])) == target) ++count;
    return count;
}

mpz_class moment_from_solution_count(u64 q, unsigned l, u64 N) {
    mpz_class qq = static_cast<unsigned long>(q), ql;
    mpz_pow_ui(ql.get_mpz_t(), qq.get_mpz_t(), l);
    mpz_class num = qq * qq * mpz_class(static_cast<unsigned long>(N)) - ql;
    mpz_class out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), mpz_class(static_cast<unsigned long>(q - 1)).get_mpz_t());
    return out;
}

mpz_class power_sum_from_b(u64 q, unsigned l, u64 b) {
    mpz_class qq = static_cast<unsigned long>(q), qm1 = static_cast<unsigned long>(q - 1), pw;
    mpz_pow_ui(pw.get_mpz_t(), qm1.get_mpz_t(), l - 1);
    const long sign = (l % 2 == 1) ? 2 : -2;
    return qq * qq * mpz_class(static_cast<unsigned long>(b)) - pw + sign;
}

bool MomentReport::all() const {
    bool ok = sum_is_one && cube_sum_ok && !shift_products.empty();
    for (const auto& s : shift_products) ok = ok && s.ok;
    return ok;
}

MomentReport moment_identity_check(const FieldCtx& ctx, u64 d) {
    require_coprime(ctx, d);
    const unsigned p = ctx.p();
    const u64 q = ctx.order(), period = q - 1;
    const WalshTable w = walsh_fast(ctx, d);
    const SpectrumTable table = spectrum_from_walsh(w);
    MomentReport r;
    r.sum = table.weighted_sum();
    r.sum_is_one = r.sum == CycInt(p, mpz_class(1));

    const CycInt one(p, mpz_class(1));
    std::vector<CycInt> c;
    c.reserve(period);
    for (u64 k = 0; k < period; ++k) c.push_back(w.at_log(k) - one);

    std::vector<u64> shifts{0};
    if (period > 1) {
        std::mt19937_64 rng(0x5eed0000ull ^ (u64{p} << 40) ^ (u64{ctx.n()} << 32) ^ d);
        std::uniform_int_distribution<u64> dist(1, period - 1);
        for (int i = 0; i < 3; ++i) shifts.push_back(dist(rng));
    }
    const mpz_class qz = static_cast<unsigned long>(q);
    for (u64 t : shifts) {
        ShiftProduct sp;
        sp.t = t;
        sp.value = CycInt(p);
        for (u64 tau = 0; tau < period; ++tau) sp.value += c[(tau + period - t) % period] * c[tau];
        const mpz_class expected = t == 0 ? mpz_class(qz * qz - qz - 1) : mpz_class(-qz - 1);
        sp.ok = sp.value == CycInt(p, expected);
        r.shift_products.push_back(std::move(sp));
    }

    r.cube_sum = CycInt(p);
    for (const auto& [v, count] : table.entries)
        r.cube_sum += v.pow(3) * CycInt(p, mpz_class(static_cast<unsigned long>(count)));
    r.b3 = b_l_count(ctx, d, 3);
    r.cube_sum_ok = r.cube_sum == CycInt(p, power_sum_from_b(q, 3, r.b3));
    return r;
}

} // namespace mseq
