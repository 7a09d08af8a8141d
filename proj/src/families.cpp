/**************************************************************************
 * families.cpp
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

#include "mseq/families.hpp"

#include "mseq/error.hpp"
#include "mseq/parallel.hpp"

#include <charconv>
#include <mutex>
#include <sstream>

namespace mseq {

std::string_view status_name(FamilyStatus s) noexcept {
    switch (s) {
    case FamilyStatus::ProvedDistribution: return "proved-distribution";
    case FamilyStatus::ProvedValuesOnly: return "proved-values-only";
    case FamilyStatus::AtMostK: return "at-most-k";
    }
    return "proved-distribution";
}

std::string params_string(const Params& params) {
    std::string out;
    for (const auto& [k, v] : params) {
        if (!out.empty()) out += ',';
        out += k + "=" + std::to_string(v);
    }
    return out;
}

Params parse_params(std::string_view text) {
    Params out;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const std::string_view item = text.substr(0, comma);
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string_view::npos || eq == 0)
            throw Error(Errc::ParseError, "expected name=value in '" + std::string(item) + "'");
        std::string_view num = item.substr(eq + 1);
        if (!num.empty() && num.front() == '+') num.remove_prefix(1);
        i64 value = 0;
        const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), value);
        if (ec != std::errc{} || ptr != num.data() + num.size() || num.empty())
            throw Error(Errc::ParseError, "bad integer in '" + std::string(item) + "'");
        out[std::string(item.substr(0, eq))] = value;
    }
    return out;
}

mpq_class tau(unsigned m) {
    if (m == 0) throw Error(Errc::InvalidArgument, "tau is defined for m >= 1");
    mpq_class prev(1, 2), cur(-7, 4);
    if (m == 1) return prev;
    for (unsigned k = 2; k < m; ++k) {
        mpq_class next = cur / 2 - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

Prediction predicted_spectrum(const FamilyDescriptor& family, unsigned p, unsigned n, const Params& params) {
    for (const auto& name : family.param_names)
        if (!params.contains(name)) throw Error(Errc::OutOfDomain, family.id + ": missing parameter " + name);
    if (auto why = family.violation(p, n, params)) throw Error(Errc::OutOfDomain, family.id + ": " + *why);

    Prediction out;
    out.d = family.decimation(p, n, params);
    const u64 group = ipow(p, n) - 1;
    if (gcd_u64(out.d, group) != 1)
        throw Error(Errc::NotCoprime, family.id + ": d = " + std::to_string(out.d) + " is not coprime to " +
                                          std::to_string(group));

    if (family.value_set) out.value_set = family.value_set(p, n, params);
    if (!family.rows) return out;

    out.rows = family.rows(p, n, params);
    std::map<mpz_class, mpq_class> merged;
    for (const auto& row : out.rows) merged[row.value] += row.count;
    if (family.table_includes_zero_point) merged[mpz_class(-1)] -= 1;

    SpectrumTable t;
    t.p = p;
    t.n = n;
    t.d = out.d;
    t.method = Method::Fast;
    for (const auto& [value, count] : merged) {
        if (count.get_den() != 1 || count < 0)
            throw Error(Errc::ConditionViolated, family.id + ": count " + count.get_str() + " for value " +
                                                     value.get_str() + " is not a nonnegative integer");
        if (count == 0) continue;
        t.entries[CycInt(p, value)] = count.get_num().get_ui();
    }
    out.table = std::move(t);
    return out;
}

namespace {

std::string describe(const CycInt& v) { return v.to_string(); }

} // namespace

Verdict verify_family(const FamilyDescriptor& family, unsigned p, unsigned n, const Params& params,
                      const SpectrumTable& computed) {
    Verdict v;
    v.predicted = predicted_spectrum(family, p, n, params);
    std::ostringstream diff;
    if (v.predicted.table) {
        const auto& want = v.predicted.table->entries;
        const auto& got = computed.entries;
        for (const auto& [value, count] : want) {
            const auto it = got.find(value);
            const u64 have = it == got.end() ? 0 : it->second;
            if (have != count) diff << describe(value) << ": predicted " << count << ", computed " << have << "; ";
        }
        for (const auto& [value, count] : got)
            if (!want.contains(value)) diff << describe(value) << ": predicted 0, computed " << count << "; ";
    }
    if (v.predicted.value_set) {
        const auto& allowed = *v.predicted.value_set;
        for (const auto& [value, count] : computed.entries) {
            const auto integer = value.try_integer();
            if (!integer || !allowed.values.contains(*integer))
                diff << describe(value) << " (x" << count << ") outside the admissible set; ";
        }
        if (computed.value_count() > allowed.k)
            diff << computed.value_count() << " distinct values exceed k = " << allowed.k << "; ";
    }
    v.diff = diff.str();
    if (!v.diff.empty() && v.diff.back() == ' ') v.diff.resize(v.diff.size() - 2);
    v.pass = v.diff.empty();
    return v;
}

CosetResult coset_spectrum_method(const FieldCtx& ctx, u64 d, u64 N) {
    require_coprime(ctx, d);
    const unsigned p = ctx.p(), n = ctx.n();
    const u64 group = ctx.group_order();
    if (N == 0 || group % N != 0)
        throw Error(Errc::MethodInapplicable, "N = " + std::to_string(N) + " does not divide " + std::to_string(group));

    CosetResult res;
    bool found = false;
    u64 d1 = d % group;
    for (u64 j = 0; j < n; ++j) {
        if (mul_mod((d1 + group - 1) % group, N, group) == 0) {
            res.j = j;
            res.d1 = d1;
            found = true;
            break;
        }
        d1 = mul_mod(d1, p, group);
    }
    if (!found)
        throw Error(Errc::MethodInapplicable, "(d p^j - 1) N != 0 mod " + std::to_string(group) + " for every j < n");

    // S(alpha^r) = 1 + N * sum over t = r mod N of w^{s_t}; S(0) = q.
    const auto s = ctx.trace_sequence();
    std::vector<std::vector<i64>> class_counts(N, std::vector<i64>(p, 0));
    for (u64 t = 0; t < group; ++t) class_counts[t % N][s[t]] += 1;
    res.class_sums.reserve(N + 1);
    for (u64 r = 0; r < N; ++r) {
        std::vector<i64> counts(p, 0);
        counts[0] = 1;
        for (unsigned c = 0; c < p; ++c) counts[c] += static_cast<i64>(N) * class_counts[r][c];
        res.class_sums.push_back(CycInt::from_counts(p, counts));
    }
    res.class_sums.emplace_back(p, mpz_class(static_cast<unsigned long>(ctx.order())));

    // For each shift, the number of jj < N whose difference falls in each class (slot N is c = 0).
    using Key = std::vector<u64>;
    std::map<Key, u64> hist;
    std::mutex mu;
    parallel_for(0, group, [&](std::size_t lo, std::size_t hi) {
        std::map<Key, u64> local;
        Key key(N + 1);
        for (std::size_t tau = lo; tau < hi; ++tau) {
            std::fill(key.begin(), key.end(), 0);
            for (u64 jj = 0; jj < N; ++jj) {
                const Elem c = ctx.sub(ctx.alpha_pow(static_cast<i64>(tau + jj)),
                                       ctx.alpha_pow(static_cast<i64>(mul_mod(jj, res.d1, group))));
                key[c.is_zero() ? N : c.log % N] += 1;
            }
            local[key] += 1;
        }
        std::lock_guard lock(mu);
        for (const auto& [k, v] : local) hist[k] += v;
    }, 256);

    res.table.p = p;
    res.table.n = n;
    res.table.d = d;
    res.table.method = Method::Coset;
    const mpz_class big_n(static_cast<unsigned long>(N));
    for (const auto& [key, count] : hist) {
        CycInt acc(p);
        for (u64 r = 0; r <= N; ++r)
            if (key[r]) acc += CycInt(p, mpz_class(static_cast<unsigned long>(key[r]))) * res.class_sums[r];
        const CycInt value = acc.divexact(big_n) - CycInt(p, mpz_class(1));
        res.table.entries[value] += count;

        u64 n0 = key[0], n1 = 0;
        for (u64 r = 1; r < N; ++r) n1 += key[r];
        res.triples[{key[N], n0, n1}] += count;
    }
    return res;
}

} // namespace mseq
