/**************************************************************************
 * catalog.cpp
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
#include "mseq/expsums.hpp"
#include "mseq/niho.hpp"

#include <numeric>

namespace mseq {

namespace {

using Rows = std::vector<PredictedRow>;
using Why = std::optional<std::string>;

mpz_class zpow(u64 base, u64 e) {
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), base, e);
    return out;
}

// base^e for possibly negative e.
mpq_class qpow(u64 base, i64 e) {
    if (e >= 0) return mpq_class(zpow(base, static_cast<u64>(e)));
    mpq_class out(mpz_class(1), zpow(base, static_cast<u64>(-e)));
    out.canonicalize();
    return out;
}

mpq_class frac(const mpq_class& num, long den) { return num / mpq_class(den); }

mpq_class ratio(const mpz_class& num, const mpz_class& den) {
    mpq_class out(num, den);
    out.canonicalize();
    return out;
}

u64 reduce_exponent(const mpz_class& d, unsigned p, unsigned n) {
    const mpz_class group = zpow(p, n) - 1;
    mpz_class r = d % group;
    if (r < 0) r += group;
    return r.get_ui();
}

i64 param(const Params& params, const std::string& name) {
    const auto it = params.find(name);
    if (it == params.end()) throw Error(Errc::OutOfDomain, "missing parameter " + name);
    return it->second;
}

unsigned v2(u64 x) { return x == 0 ? 64 : two_adic_valuation(x); }

Why need(bool ok, const char* what) { return ok ? Why{} : Why{std::string(what)}; }

// -1 + 2^{(n+e)/2} etc. with e = gcd(n, k); the binary three-valued table.
Rows binary_three_valued(unsigned n, unsigned e) {
    const i64 half = (static_cast<i64>(n) - e - 2) / 2;
    const mpz_class spike = zpow(2, (n + e) / 2);
    return {
        {spike - 1, qpow(2, static_cast<i64>(n) - e - 1) + qpow(2, half)},
        {-spike - 1, qpow(2, static_cast<i64>(n) - e - 1) - qpow(2, half)},
        {-1, mpq_class(zpow(2, n) - zpow(2, n - e) - 1)},
    };
}

// The odd-characteristic three-valued table with e = gcd(n, k).
Rows odd_three_valued(unsigned p, unsigned n, unsigned e) {
    const mpz_class spike = zpow(p, (n + e) / 2);
    const mpz_class a = zpow(p, n - e), b = zpow(p, (n - e) / 2);
    return {
        {spike - 1, frac(a + b, 2)},
        {-spike - 1, frac(a - b, 2)},
        {-1, mpq_class(zpow(p, n) - a - 1)},
    };
}

Rows ternary_three_valued(unsigned n) {
    const unsigned m = (n - 1) / 2;
    return {
        {zpow(3, m + 1) - 1, frac(zpow(3, n - 1) + zpow(3, m), 2)},
        {-zpow(3, m + 1) - 1, frac(zpow(3, n - 1) - zpow(3, m), 2)},
        {-1, mpq_class(zpow(3, n) - zpow(3, n - 1) - 1)},
    };
}

// Binary Niho four-valued distribution; the counts include the a = 0 point.
Rows niho_four_valued(unsigned n, unsigned r1) {
    const unsigned m = n / 2;
    return {
        {-zpow(2, m) - 1, ratio(zpow(2, n + r1 - 1) - zpow(2, m + r1 - 1), zpow(2, r1) + 1)},
        {-1, mpq_class(zpow(2, n - r1) - zpow(2, m - r1))},
        {zpow(2, m) - 1, ratio(zpow(2, n + r1 - 1) - zpow(2, n) + zpow(2, m + r1 - 1), zpow(2, r1) - 1)},
        {zpow(2, r1 + m) - 1, ratio(zpow(2, n) - zpow(2, m), zpow(2, 3 * r1) - zpow(2, r1))},
    };
}

std::vector<Params> range_params(const std::string& name, i64 lo, i64 hi, const FamilyDescriptor* self, unsigned p,
                                 unsigned n) {
    std::vector<Params> out;
    for (i64 v = lo; v < hi; ++v) {
        Params params{{name, v}};
        if (!self->violation(p, n, params)) out.push_back(std::move(params));
    }
    return out;
}

std::vector<Params> single_point(const FamilyDescriptor* self, unsigned p, unsigned n) {
    if (self->violation(p, n, {})) return {};
    return {Params{}};
}

// Adds a descriptor and wires admissible_params to its own predicate.
FamilyDescriptor& add(std::vector<FamilyDescriptor>& cat, std::string id, std::string source, std::string prime,
                      std::string domain, std::vector<std::string> names, FamilyStatus status) {
    FamilyDescriptor f;
    f.id = std::move(id);
    f.source = std::move(source);
    f.prime_constraint = std::move(prime);
    f.param_domain = std::move(domain);
    f.param_names = std::move(names);
    f.status = status;
    cat.push_back(std::move(f));
    return cat.back();
}

std::vector<FamilyDescriptor> build_catalog() {
    std::vector<FamilyDescriptor> cat;
    cat.reserve(40);
    using S = FamilyStatus;

    // ---- three values, p = 2
    auto gold_like = [&](std::string id, std::string source, auto exponent) {
        auto& f = add(cat, std::move(id), std::move(source), "p = 2", "1 <= k < n, n/gcd(n,k) odd", {"k"},
                      S::ProvedDistribution);
        f.violation = [](unsigned p, unsigned n, const Params& ps) -> Why {
            if (p != 2) return "p = 2";
            const i64 k = param(ps, "k");
            if (k < 1 || k >= static_cast<i64>(n)) return "1 <= k < n";
            return need((n / std::gcd<u64>(n, static_cast<u64>(k))) % 2 == 1, "n/gcd(n,k) odd");
        };
        f.decimation = [exponent](unsigned p, unsigned n, const Params& ps) {
            return reduce_exponent(exponent(static_cast<u64>(param(ps, "k"))), p, n);
        };
        f.rows = [](unsigned, unsigned n, const Params& ps) {
            return binary_three_valued(n, static_cast<unsigned>(std::gcd<u64>(n, static_cast<u64>(param(ps, "k")))));
        };
    };
    gold_like("gold", "d = 2^k + 1", [](u64 k) -> mpz_class { return zpow(2, k) + 1; });
    gold_like("kasami-welch", "d = 2^{2k} - 2^k + 1", [](u64 k) -> mpz_class { return zpow(2, 2 * k) - zpow(2, k) + 1; });

    auto cusick = [&](std::string id, std::string source, auto exponent) {
        auto& f = add(cat, std::move(id), std::move(source), "p = 2", "n = 2m, m odd", {}, S::ProvedDistribution);
        f.violation = [](unsigned p, unsigned n, const Params&) -> Why {
            if (p != 2) return "p = 2";
            return need(n % 2 == 0 && (n / 2) % 2 == 1, "n = 2m with m odd");
        };
        f.decimation = [exponent](unsigned p, unsigned n, const Params&) { return reduce_exponent(exponent(n / 2), p, n); };
        f.rows = [](unsigned, unsigned n, const Params&) { return binary_three_valued(n, 2); };
    };
    cusick("cusick-dobbertin-a", "d = 2^m + 2^{(m+1)/2} + 1, n = 2m",
           [](u64 m) -> mpz_class { return zpow(2, m) + zpow(2, (m + 1) / 2) + 1; });
    cusick("cusick-dobbertin-b", "d = 2^{m+1} + 3, n = 2m", [](u64 m) -> mpz_class { return zpow(2, m + 1) + 3; });

    {
        auto& f = add(cat, "welch", "d = 2^m + 3, n = 2m + 1", "p = 2", "n odd, n >= 3", {}, S::ProvedDistribution);
        f.violation = [](unsigned p, unsigned n, const Params&) -> Why {
            if (p != 2) return "p = 2";
            return need(n % 2 == 1 && n >= 3, "n odd, n >= 3");
        };
        f.decimation = [](unsigned p, unsigned n, const Params&) { return reduce_exponent(zpow(2, (n - 1) / 2) + 3, p, n); };
        f.rows = [](unsigned, unsigned n, const Params&) { return binary_three_valued(n, 1); };
    }
    {
        auto& f = add(cat, "niho-3val", "d = 2^{(n-1)/2} + 2^j - 1, n odd", "p = 2",
                      "n odd, n >= 3; j = (n-1)/4 for n = 1 mod 4, j = (3n-1)/4 for n = 3 mod 4", {},
                      S::ProvedDistribution);
        f.note = "second exponent j fixed by exhaustive search over 2^{(n-1)/2} + 2^j - 1 (see search::niho_form_search)";
        f.violation = [](unsigned p, unsigned n, const Params&) -> Why {
            if (p != 2) return "p = 2";
            return need(n % 2 == 1 && n >= 3, "n odd, n >= 3");
        };
        f.decimation = [](unsigned p, unsigned n, const Params&) {
            const u64 j = n % 4 == 1 ? (n - 1) / 4 : (3 * n - 1) / 4;
            return reduce_exponent(zpow(2, (n - 1) / 2) + zpow(2, j) - 1, p, n);
        };
        f.rows = [](unsigned, unsigned n, const Params&) { return binary_three_valued(n, 1); };
    }

    // ---- three values, p = 3 and odd p
    {
        auto& f = add(cat, "ternary-welch", "d = 2*3^m + 1, n = 2m + 1", "p = 3", "n odd, n >= 3", {},
                      S::ProvedDistribution);
        f.violation = [](unsigned p, unsigned n, const Params&) -> Why {
            if (p != 3) return "p = 3";
            return need(n % 2 == 1 && n >= 3, "n odd, n >= 3");
        };
        f.decimation = [](unsigned p, unsigned n, const Params&) { return reduce_exponent(2 * zpow(3, (n - 1) / 2) + 1, p, n); };
        f.rows = [](unsigned, unsigned n, const Params&) { return ternary_three_valued(n); };
    }
    {
        auto& f = add(cat, "katz-langevin", "d = 3^k + 2, n = 2m + 1, n | 4k - 1", "p = 3", "n odd, 1 <= k < n, n | (4k - 1)",
                      {"k"}, S::ProvedDistribution);
        f.note = "equivalently d = 2*3^r + 1 with n | (4r + 1) and k = n - r: 3^r (3^k + 2) = 2*3^r + 1 mod 3^n - 1";
        f.violation = [](unsigned p, unsigned n, const Params& ps) -> Why {
            if (p != 3) return "p = 3";
            if (n % 2 == 0 || n < 3) return "n odd, n >= 3";
            const i64 k = param(ps, "k");
            if (k < 1 || k >= static_cast<i64>(n)) return "1 <= k < n";
            return need((4 * k - 1) % static_cast<i64>(n) == 0, "n | (4k - 1)");
        };
        f.decimation = [](unsigned p, unsigned n, const Params& ps) {
            return reduce_exponent(zpow(3, static_cast<u64>(param(ps, "k"))) + 2, p, n);
        };
        f.rows = [](unsigned, unsigned n, const Params&) { return ternary_three_valued(n); };
    }
    auto odd_three = [&](std::string id, std::string source, auto exponent) {
        auto& f = add(cat, std::move(id), std::move(source), "p odd", "1 <= k < n, n/gcd(n,k) odd", {"k"},
                      S::ProvedDistribution);
        f.violation = [](unsigned p, unsigned n, const Params& ps) -> Why {
            if (p == 2) return "p odd";
            const i64 k = param(ps, "k");
            if (k < 1 || k >= static_cast<i64>(n)) return "1 <= k < n";
            return need((n / std::gcd<u64>(n, static_cast<u64>(k))) % 2 == 1, "n/gcd(n,k) odd");
        };
        f.decimation = [exponent](unsigned p, unsigned n, const Params& ps) {
            return reduce_exponent(exponent(p, static_cast<u64>(param(ps, "k"))), p, n);
        };
        f.rows = [](unsigned p, unsigned n, const Params& ps) {
            return odd_three_valued(p, n, static_cast<unsigned>(std::gcd<u64>(n, static_cast<u64>(param(ps, "k")))));
        };
    };
    odd_three("trachtenberg-half", "d = (p^{2k} + 1)/2", [](u64 p, u64 k) -> mpz_class {
        return mpz_class((zpow(p, 2 * k) + 1) / 2);
    });
    odd_three("trachtenberg-kw", "d = p^{2k} - p^k + 1", [](u64 p, u64 k) -> mpz_class { return zpow(p, 2 * k) - zpow(p, k) + 1; });

    // ---- four values, p = 2 (Niho type); the printed distribution counts the a = 0 point
    auto niho_four = [&](std::string id, std::string source, std::string domain, std::vector<std::string> names,
                         auto check, auto exponent, auto r1) {
        auto& f = add(cat, std::move(id), std::move(source), "p = 2", std::move(domain), std::move(names),
                      S::ProvedDistribution);
        f.table_includes_zero_point = true;
        f.violation = [check](unsigned p, unsigned n, const Params& ps) -> Why {
            if (p != 2) return "p = 2";
            if (n % 2 != 0 || n < 2) return "n = 2m";
            return check(n / 2, ps);
        };
        f.decimation = [exponent](unsigned p, unsigned n, const Params& ps) { return reduce_exponent(exponent(n / 2, ps), p, n); };
        f.rows = [r1](unsigned, unsigned n, const Params& ps) { return niho_four_valued(n, r1(n / 2, ps)); };
        return &f;
    };
    niho_four(
        "niho-4val-1", "d = 2(2^m - 1) + 1, n = 2m", "m even", {},
        [](u64 m, const Params&) -> Why { return need(m % 2 == 0, "m even"); },
        [](u64 m, const Params&) -> mpz_class { return mpz_class(2 * (zpow(2, m) - 1) + 1); }, [](u64, const Params&) { return 1u; });
    niho_four(
        "niho-4val-2", "d = (2^{m/2} + 1)(2^m - 1) + 2, n = 2m", "m even", {},
        [](u64 m, const Params&) -> Why { return need(m % 2 == 0, "m even"); },
        [](u64 m, const Params&) -> mpz_class { return mpz_class((zpow(2, m / 2) + 1) * (zpow(2, m) - 1) + 2); },
        [](u64 m, const Params&) { return static_cast<unsigned>(m / 2); });
    {
        auto* f = niho_four(
            "dobbertin-4val", "d = (2^{(m+1)t} - 1)/(2^t - 1), n = 2m", "m even, 0 < t < m, gcd(t, n) = 1", {"t"},
            [](u64 m, const Params& ps) -> Why {
                if (m % 2 != 0) return "m even";
                const i64 t = param(ps, "t");
                if (t <= 0 || t >= static_cast<i64>(m)) return "0 < t < m";
                return need(std::gcd<u64>(static_cast<u64>(t), 2 * m) == 1, "gcd(t, n) = 1");
            },
            [](u64 m, const Params& ps) -> mpz_class {
                const u64 t = static_cast<u64>(param(ps, "t"));
                return mpz_class((zpow(2, (m + 1) * t) - 1) / (zpow(2, t) - 1));
            },
            [](u64, const Params&) { return 1u; });
        f->admissible_params = [f](unsigned p, unsigned n) { return range_params("t", 1, n / 2, f, p, n); };
    }
    {
        auto* f = niho_four(
            "helleseth-2005-4val", "d = ((2^m - 1)/(2^t - 1))(2^m - 1) + 2, n = 2m", "2t | m", {"t"},
            [](u64 m, const Params& ps) -> Why {
                const i64 t = param(ps, "t");
                if (t <= 0) return "t >= 1";
                return need(m % (2 * static_cast<u64>(t)) == 0, "2t | m");
            },
            [](u64 m, const Params& ps) -> mpz_class {
                const u64 t = static_cast<u64>(param(ps, "t"));
                return mpz_class((zpow(2, m) - 1) / (zpow(2, t) - 1) * (zpow(2, m) - 1) + 2);
            },
            [](u64, const Params& ps) { return static_cast<unsigned>(param(ps, "t")); });
        f->admissible_params = [f](unsigned p, unsigned n) { return range_params("t", 1, n / 4 + 1, f, p, n); };
    }
    {
        auto* f = niho_four(
            "niho-4val-unified", "d = s(2^m - 1) + 1, s = 2^r (2^r + sign)^{-1} mod 2^m + 1, n = 2m",
            "r >= 1, v2(r) < v2(m), sign = +1 or -1", {"r", "sign"},
            [](u64 m, const Params& ps) -> Why {
                const i64 r = param(ps, "r"), sign = param(ps, "sign");
                if (sign != 1 && sign != -1) return "sign = +1 or -1";
                if (r < 1 || r >= 62) return "1 <= r < 62";
                if (v2(static_cast<u64>(r)) >= v2(m)) return "v2(r) < v2(m)";
                const mpz_class mod = zpow(2, m) + 1, den = zpow(2, static_cast<u64>(r)) + sign;
                return need(gcd(mod, den) == 1, "2^r + sign invertible mod 2^m + 1");
            },
            [](u64 m, const Params& ps) -> mpz_class {
                const i64 r = param(ps, "r"), sign = param(ps, "sign");
                const mpz_class mod = zpow(2, m) + 1;
                mpz_class den = zpow(2, static_cast<u64>(r)) + sign, inv;
                mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
                const mpz_class s = zpow(2, static_cast<u64>(r)) * inv % mod;
                return mpz_class(s * (zpow(2, m) - 1) + 1);
            },
            [](u64 m, const Params& ps) { return static_cast<unsigned>(std::gcd<u64>(static_cast<u64>(param(ps, "r")), m)); });
        f->admissible_params = [f](unsigned p, unsigned n) {
            std::vector<Params> out;
            for (i64 r = 1; r < static_cast<i64>(n / 2); ++r)
                for (i64 sign : {1, -1}) {
                    Params ps{{"r", r}, {"sign", sign}};
                    if (!f->violation(p, n, ps)) out.push_back(ps);
                }
            return out;
        };
    }

    // ---- four values, odd p
    {
        auto& f = add(cat, "helleseth-2pm-1", "d = 2p^m - 1, n = 2m", "p odd", "n = 2m, p^m != 2 mod 3", {},
                      S::ProvedDistribution);
        f.violation = [](unsigned p, unsigned n, const Params&) -> Why {
            if (p == 2) return "p odd";
            if (n % 2 != 0) return "n = 2m";
            return need(ipow(p, n / 2) % 3 != 2, "p^m != 2 mod 3");
        };
        f.decimation = [](unsigned p, unsigned n, const Params&) { return reduce_exponent(2 * zpow(p, n / 2) - 1, p, n); };
        f.rows = [](unsigned p, unsigned n, const Params&) -> Rows {
            const mpz_class q = zpow(p, n), pm = zpow(p, n / 2);
            return {
                {-pm - 1, frac(q - pm, 3)},
                {-1, frac(q - pm - 2, 2)},
                {pm - 1, mpq_class(pm)},
                {2 * pm - 1, frac(q - pm, 6)},
            };
        };
    }
    auto ternary_n3k = [&](std::string id, std::string source, unsigned k_mult) {
        auto& f = add(cat, std::move(id), std::move(source), "p = 3", "n = 3k, k odd", {}, S::ProvedDistribution);
        f.note = "distribution exponent r read as k";
        f.violation = [](unsigned p, unsigned n, const Params&) -> Why {
            if (p != 3) return "p = 3";
            return need(n % 3 == 0 && (n / 3) % 2 == 1, "n = 3k with k odd");
        };
        f.decimation = [k_mult](unsigned p, unsigned n, const Params&) {
            return reduce_exponent(zpow(3, k_mult * (n / 3)) + 2, p, n);
        };
        f.rows = [](unsigned, unsigned n, const Params&) -> Rows {
            const u64 r = n / 3;
            const mpz_class side = zpow(3, (3 * r + 1) / 2);
            const mpq_class wing = frac(zpow(3, 3 * r - 1) - zpow(3, 2 * r - 1), 2);
            return {
                {-1, mpq_class(2 * zpow(3, 3 * r - 1) + zpow(3, 2 * r - 1) - zpow(3, r) - 1)},
                {zpow(3, 2 * r) - 1, mpq_class(zpow(3, r))},
                {side - 1, wing},
                {-side - 1, wing},
            };
        };
    };
    ternary_n3k("ternary-n3k-a", "d = 3^k + 2, n = 3k", 1);
    ternary_n3k("ternary-n3k-b", "d = 3^{2k} + 2, n = 3k", 2);

    // ---- five values
    {
        auto& f = add(cat, "helleseth-5val", "d = 2^m + 3, n = 2m", "p = 2", "n = 2m, m >= 2", {}, S::ProvedDistribution);
        f.violation = [](unsigned p, unsigned n, const Params&) -> Why {
            if (p != 2) return "p = 2";
            return need(n % 2 == 0 && n >= 4, "n = 2m with m >= 2");
        };
        f.decimation = [](unsigned p, unsigned n, const Params&) { return reduce_exponent(zpow(2, n / 2) + 3, p, n); };
        f.rows = [](unsigned, unsigned n, const Params&) -> Rows {
            const i64 m = n / 2;
            const mpz_class pm = zpow(2, static_cast<u64>(m));
            const mpz_class b3 = pm + (m % 2 == 1 ? 1 : -1) + 1;
            return {
                {-pm - 1, qpow(2, 2 * m - 1) - qpow(2, m - 3) * b3 - qpow(2, m - 1)},
                {-1, frac(pm * b3 + qpow(2, m - 1) - 3, 3)},
                {pm - 1, qpow(2, 2 * m - 1) - qpow(2, m - 2) * b3},
                {2 * pm - 1, qpow(2, m - 1)},
                {3 * pm - 1, frac(qpow(2, m - 3) * b3 - qpow(2, m - 1), 3)},
            };
        };
    }
    {
        auto& f = add(cat, "dobbertin-5val", "d = 2^{2r} + 2^r + 1, n = 4r", "p = 2", "n = 4r, r odd", {},
                      S::ProvedDistribution);
        f.table_includes_zero_point = true;
        f.violation = [](unsigned p, unsigned n, const Params&) -> Why {
            if (p != 2) return "p = 2";
            return need(n % 4 == 0 && (n / 4) % 2 == 1, "n = 4r with r odd");
        };
        f.decimation = [](unsigned p, unsigned n, const Params&) {
            const u64 r = n / 4;
            return reduce_exponent(zpow(2, 2 * r) + zpow(2, r) + 1, p, n);
        };
        f.rows = [](unsigned, unsigned n, const Params&) -> Rows {
            const i64 r = n / 4;
            const mpz_class a = zpow(2, static_cast<u64>(2 * r)), b = zpow(2, static_cast<u64>(2 * r + 1));
            const mpq_class mid = frac(qpow(2, 4 * r - 1) + qpow(2, 3 * r - 1), 3);
            const mpq_class outer = frac(qpow(2, 4 * r - 2) - qpow(2, 3 * r - 3), 3);
            return {
                {-1, qpow(2, 4 * r - 1) - qpow(2, 3 * r - 2)},
                {a - 1, mid},
                {-a - 1, mid},
                {b - 1, outer + qpow(2, 2 * r - 2)},
                {-b - 1, outer - qpow(2, 2 * r - 2)},
            };
        };
    }
    auto kasami_frac = [&](std::string id, u64 lt, u64 kt) {
        auto& f = add(cat, std::move(id),
                      "d = (2^l + 1)/(2^k + 1) mod 2^n - 1, (l, k) = (" + std::to_string(lt) + "t, " + std::to_string(kt) + "t)",
                      "p = 2", "n odd, 1 <= t < n", {"t"}, S::AtMostK);
        f.violation = [](unsigned p, unsigned n, const Params& ps) -> Why {
            if (p != 2) return "p = 2";
            if (n % 2 == 0) return "n odd";
            const i64 t = param(ps, "t");
            return need(t >= 1 && t < static_cast<i64>(n), "1 <= t < n");
        };
        f.decimation = [lt, kt](unsigned, unsigned n, const Params& ps) {
            const u64 t = static_cast<u64>(param(ps, "t"));
            const u64 g = ipow(2, n) - 1;
            return resolve_fraction(static_cast<i64>((pow_mod(2, lt * t, g) + 1) % g),
                                    static_cast<i64>((pow_mod(2, kt * t, g) + 1) % g), g);
        };
        f.value_set = [](unsigned, unsigned n, const Params& ps) {
            const u64 e = std::gcd<u64>(n, static_cast<u64>(param(ps, "t")));
            AtMostKValues v;
            v.k = 5;
            const mpz_class a = zpow(2, (n + e) / 2), b = zpow(2, (n + 3 * e) / 2);
            v.values = {mpz_class(-1), a - 1, -a - 1, b - 1, -b - 1};
            return v;
        };
    };
    kasami_frac("kasami-frac-2t-t", 2, 1);
    kasami_frac("kasami-frac-5t-t", 5, 1);
    kasami_frac("kasami-frac-5t-3t", 5, 3);
    {
        auto& f = add(cat, "dfhr-s3-even", "d = 3(2^m - 1) + 1, n = 2m, m even", "p = 2", "m even, m != 2 mod 4", {},
                      S::ProvedDistribution);
        f.violation = [](unsigned p, unsigned n, const Params&) -> Why {
            if (p != 2) return "p = 2";
            if (n % 2 != 0) return "n = 2m";
            const u64 m = n / 2;
            return need(m % 2 == 0 && m % 4 != 2, "m even, m != 2 mod 4");
        };
        f.decimation = [](unsigned p, unsigned n, const Params&) { return reduce_exponent(3 * (zpow(2, n / 2) - 1) + 1, p, n); };
        f.rows = [](unsigned, unsigned n, const Params&) -> Rows {
            const u64 m = n / 2;
            const mpz_class pm = zpow(2, m), q = pm * pm;
            const mpq_class t = mpq_class(pm) * tau(static_cast<unsigned>(m));
            return {
                {-pm - 1, frac(11 * q - t - 10 * pm + 1, 30)},
                {-1, frac(3 * q + t - 4 * pm - 9, 8)},
                {pm - 1, frac(q - t + 6 * pm + 1, 6)},
                {2 * pm - 1, frac(q + t - 2 * pm - 1, 12)},
                {4 * pm - 1, frac(q - t + 1, 120)},
            };
        };
    }
    {
        auto& f = add(cat, "hkl-s4", "d = 4(2^m - 1) + 1, n = 2m", "p = 2", "n = 2m; at most 5 values (m even), 6 (m odd)",
                      {}, S::AtMostK);
        f.violation = [](unsigned p, unsigned n, const Params&) -> Why {
            if (p != 2) return "p = 2";
            return need(n % 2 == 0 && n >= 2, "n = 2m");
        };
        f.decimation = [](unsigned p, unsigned n, const Params&) { return reduce_exponent(4 * (zpow(2, n / 2) - 1) + 1, p, n); };
        f.value_set = [](unsigned, unsigned n, const Params&) {
            const u64 m = n / 2;
            const mpz_class pm = zpow(2, m);
            AtMostKValues v;
            if (m % 2 == 0) {
                v.k = 5;
                for (long j : {-1, 0, 1, 2, 4}) v.values.insert(j * pm - 1);
            } else {
                v.k = 6;
                for (long j = -1; j <= 4; ++j) v.values.insert(j * pm - 1);
            }
            return v;
        };
    }
    {
        auto& f = add(cat, "xia-ternary-s3", "d = 3(3^m - 1) + 1, n = 2m", "p = 3", "m != 2 mod 4", {}, S::ProvedDistribution);
        f.violation = [](unsigned p, unsigned n, const Params&) -> Why {
            if (p != 3) return "p = 3";
            if (n % 2 != 0) return "n = 2m";
            return need((n / 2) % 4 != 2, "m != 2 mod 4");
        };
        f.decimation = [](unsigned p, unsigned n, const Params&) { return reduce_exponent(3 * (zpow(3, n / 2) - 1) + 1, p, n); };
        f.rows = [](unsigned, unsigned n, const Params&) -> Rows {
            const u64 m = n / 2;
            const mpz_class pm = zpow(3, m), q = pm * pm;
            const mpz_class e = m % 2 == 0 ? pm : mpz_class(-pm);
            return {
                {-pm - 1, frac(11 * q - 16 * pm - e + 6, 30)},
                {-1, frac(3 * q + 2 * pm + e - 14, 8)},
                {pm - 1, frac(q - e + 6, 6)},
                {2 * pm - 1, frac(q + 4 * pm + e - 6, 12)},
                {4 * pm - 1, frac(q - 6 * pm - e + 6, 120)},
            };
        };
    }
    {
        auto& f = add(cat, "helleseth-half", "d = (p^n - 1)/2 + p^i", "p odd", "n even (p^n = 1 mod 4), 0 <= i < n", {"i"},
                      S::ProvedDistribution);
        f.note = "the square-splitting step uses a non-square gamma directly";
        f.violation = [](unsigned p, unsigned n, const Params& ps) -> Why {
            if (p == 2) return "p odd";
            if (n % 2 != 0) return "n even";
            const i64 i = param(ps, "i");
            return need(i >= 0 && i < static_cast<i64>(n), "0 <= i < n");
        };
        f.decimation = [](unsigned p, unsigned n, const Params& ps) {
            return reduce_exponent((zpow(p, n) - 1) / 2 + zpow(p, static_cast<u64>(param(ps, "i"))), p, n);
        };
        f.rows = [](unsigned p, unsigned n, const Params&) -> Rows {
            const mpz_class q = zpow(p, n), h = zpow(p, n / 2);
            return {
                {-1, frac(q - 5, 2)},
                {h - 1, frac(q - 1, 4)},
                {-h - 1, frac(q - 1, 4)},
                {mpz_class((q + h) / 2) - 1, mpq_class(1)},
                {mpz_class((q - h) / 2) - 1, mpq_class(1)},
            };
        };
    }

    // ---- six values
    {
        auto& f = add(cat, "helleseth-1978", "d = 2^{2m} - 2^m + 1, n = 4m", "p = 2", "n = 4m, m even", {},
                      S::ProvedDistribution);
        f.note = "the value with (2^{4m} - 2^m)/3 occurrences is -1 + 2^{2m}";
        f.violation = [](unsigned p, unsigned n, const Params&) -> Why {
            if (p != 2) return "p = 2";
            return need(n % 4 == 0 && (n / 4) % 2 == 0, "n = 4m with m even");
        };
        f.decimation = [](unsigned p, unsigned n, const Params&) {
            const u64 m = n / 4;
            return reduce_exponent(zpow(2, 2 * m) - zpow(2, m) + 1, p, n);
        };
        f.rows = [](unsigned, unsigned n, const Params&) -> Rows {
            const u64 m = n / 4;
            const mpz_class a = zpow(2, m), b = zpow(2, 2 * m), c = zpow(2, 3 * m), q = zpow(2, 4 * m);
            return {
                {b - 1, frac(q - a, 3)},
                {-1, mpq_class(q / 2 - c / 2 + b / 2 - a / 2 - 2)},
                {-b - 1, mpq_class(c - b)},
                {-2 * b - 1, frac(q - 3 * c + 3 * b - a, 6)},
                {c - 1, mpq_class(1)},
                {b * (a - 1) - 1, mpq_class(a)},
            };
        };
    }
    auto dfhr_odd = [&](std::string id, std::string source, bool kloosterman_form) {
        auto& f = add(cat, std::move(id), std::move(source), "p = 2", "n = 2m, m odd", {}, S::ProvedDistribution);
        f.violation = [](unsigned p, unsigned n, const Params&) -> Why {
            if (p != 2) return "p = 2";
            return need(n % 2 == 0 && (n / 2) % 2 == 1, "n = 2m with m odd");
        };
        f.decimation = [](unsigned p, unsigned n, const Params&) { return reduce_exponent(3 * (zpow(2, n / 2) - 1) + 1, p, n); };
        if (kloosterman_form) {
            f.note = "R is the direct double sum of Kloosterman sums over GF(2^m) plus 2^{m+1}; the bare sum "
                     "alone gives non-integral counts";
            f.rows = [](unsigned, unsigned n, const Params&) -> Rows {
                const u64 m = n / 2;
                const mpz_class pm = zpow(2, m), q = pm * pm;
                const mpz_class R = kloosterman_R(static_cast<unsigned>(m)) + 2 * pm;
                return {
                    {-pm - 1, frac(11 * q - 24 * pm + R, 30)},
                    {-1, frac(9 * q + 22 * pm - 3 * R - 20, 24)},
                    {pm - 1, frac(q - 2 * pm + R - 4, 6)},
                    {2 * pm - 1, frac(q - R + 12, 12)},
                    {3 * pm - 1, frac(pm - 2, 3)},
                    {4 * pm - 1, frac(q - 14 * pm + R + 20, 120)},
                };
            };
        } else {
            f.rows = [](unsigned, unsigned n, const Params&) -> Rows {
                const u64 m = n / 2;
                const mpz_class pm = zpow(2, m), q = pm * pm;
                const mpq_class t = mpq_class(pm) * tau(static_cast<unsigned>(m));
                return {
                    {-pm - 1, frac(11 * q - t - 22 * pm + 1, 30)},
                    {-1, frac(9 * q + 3 * t + 16 * pm - 23, 24)},
                    {pm - 1, frac(q - t - 3, 6)},
                    {2 * pm - 1, frac(q + t - 2 * pm + 11, 12)},
                    {3 * pm - 1, frac(pm - 2, 3)},
                    {4 * pm - 1, frac(q - t - 12 * pm + 21, 120)},
                };
            };
        }
    };
    dfhr_odd("dfhr-s3-odd", "d = 3(2^m - 1) + 1, n = 2m, m odd (tau form)", false);
    dfhr_odd("dfhr-s3-odd-kloosterman", "d = 3(2^m - 1) + 1, n = 2m, m odd (Kloosterman form)", true);
    {
        auto& f = add(cat, "helleseth-third", "d = (p^n - 1)/3 + p^i, n = 2m", "p = 2 mod 3",
                      "n = 2m, 0 <= i < n, f = p^i (p^n - 1)/3 != 2 mod 3", {"i"}, S::ProvedDistribution);
        f.violation = [](unsigned p, unsigned n, const Params& ps) -> Why {
            if (p % 3 != 2) return "p = 2 mod 3";
            if (n % 2 != 0) return "n = 2m";
            const i64 i = param(ps, "i");
            if (i < 0 || i >= static_cast<i64>(n)) return "0 <= i < n";
            const mpz_class fv = (zpow(p, n) - 1) / 3 * zpow(p, static_cast<u64>(i));
            return need(mpz_class(fv % 3) != 2, "f != 2 mod 3");
        };
        f.decimation = [](unsigned p, unsigned n, const Params& ps) {
            return reduce_exponent((zpow(p, n) - 1) / 3 + zpow(p, static_cast<u64>(param(ps, "i"))), p, n);
        };
        f.rows = [](unsigned p, unsigned n, const Params& ps) -> Rows {
            const u64 m = n / 2;
            const mpz_class pm = zpow(p, m), q = pm * pm;
            const mpz_class s = m % 2 == 0 ? mpz_class(1) : mpz_class(-1); // (-1)^m
            const mpz_class fv = (q - 1) / 3 * zpow(p, static_cast<u64>(param(ps, "i")));
            if (mpz_class(fv % 3) == 0) {
                return {
                    {-1, frac(4 * q - 2 * s * pm - 29, 9)},
                    {-s * pm - 1, frac(2 * q + 2 * s * pm - 4, 9)},
                    {s * pm - 1, frac(8 * q + 2 * s * pm - 10, 27)},
                    {-2 * s * pm - 1, frac(q - 2 * s * pm + 1, 27)},
                    {mpz_class((q + 2 * s * pm) / 3) - 1, mpq_class(1)},
                    {mpz_class((q - s * pm) / 3) - 1, mpq_class(2)},
                };
            }
            return {
                {-1, frac(4 * q - 2 * s * pm - 20, 9)},
                {-s * pm - 1, frac(2 * q + 2 * s * pm - 4, 9)},
                {s * pm - 1, frac(8 * q + 2 * s * pm - 28, 27)},
                {-2 * s * pm - 1, frac(q - 2 * s * pm - 8, 27)},
                {mpz_class((q + 2 * s * pm) / 3) - 1, mpq_class(2)},
                {mpz_class((q - 4 * s * pm) / 3) - 1, mpq_class(1)},
            };
        };
    }
    {
        auto& f = add(cat, "helleseth-2003", "d = p^{2m} - p^m + 1, n = 4m", "any p", "n = 4m, p^m != 2 mod 3", {},
                      S::ProvedDistribution);
        f.violation = [](unsigned p, unsigned n, const Params&) -> Why {
            if (n % 4 != 0) return "n = 4m";
            return need(ipow(p, n / 4) % 3 != 2, "p^m != 2 mod 3");
        };
        f.decimation = [](unsigned p, unsigned n, const Params&) {
            const u64 m = n / 4;
            return reduce_exponent(zpow(p, 2 * m) - zpow(p, m) + 1, p, n);
        };
        f.rows = [](unsigned p, unsigned n, const Params&) -> Rows {
            const u64 m = n / 4;
            const mpz_class a = zpow(p, m), b = zpow(p, 2 * m), c = zpow(p, 3 * m), q = zpow(p, 4 * m);
            return {
                {-2 * b - 1, frac(q - 3 * c + 3 * b - a, 6)},
                {-b - 1, mpq_class(c - b)},
                {-1, frac(q - c + b - a - 4, 2)},
                {b - 1, frac(q - a, 3)},
                {c - b - 1, mpq_class(a)},
                {c - 1, mpq_class(1)},
            };
        };
    }

    for (auto& f : cat) {
        if (!f.admissible_params) {
            const FamilyDescriptor* self = &f;
            if (f.param_names.empty()) {
                f.admissible_params = [self](unsigned p, unsigned n) { return single_point(self, p, n); };
            } else {
                const std::string name = f.param_names.front();
                const i64 lo = name == "i" ? 0 : 1;
                f.admissible_params = [self, name, lo](unsigned p, unsigned n) {
                    return range_params(name, lo, static_cast<i64>(n), self, p, n);
                };
            }
        }
    }
    return cat;
}

} // namespace

const std::vector<FamilyDescriptor>& catalog() {
    static const std::vector<FamilyDescriptor> cat = build_catalog();
    return cat;
}

const FamilyDescriptor& find_family(std::string_view id) {
    for (const auto& f : catalog())
        if (f.id == id) return f;
    throw Error(Errc::InvalidArgument, "unknown family " + std::string(id));
}

} // namespace mseq
