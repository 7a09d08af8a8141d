/**************************************************************************
 * numtheory.cpp
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

#include "mseq/numtheory.hpp"

#include "mseq/error.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace mseq {

u64 gcd_u64(u64 a, u64 b) noexcept { return std::gcd(a, b); }

u64 mul_mod(u64 a, u64 b, u64 m) noexcept {
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m) noexcept {
    if (m == 1) return 0;
    u64 result = 1;
    base %= m;
    while (exp) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

u64 inverse_mod(u64 a, u64 m) {
    if (m == 1) return 0;
    i64 old_r = static_cast<i64>(a % m), r = static_cast<i64>(m);
    i64 old_s = 1, s = 0;
    while (r != 0) {
        const i64 q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_s -= q * s;
        std::swap(old_s, s);
    }
    if (old_r != 1)
        throw Error(Errc::NotInvertible,
                    std::to_string(a) + " has no inverse modulo " + std::to_string(m));
    return reduce_mod(old_s, m);
}

u64 ipow(u64 base, unsigned exp) {
    u64 result = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && result > std::numeric_limits<u64>::max() / base)
            throw Error(Errc::TooLarge, "integer power overflows 64 bits");
        result *= base;
    }
    return result;
}

bool is_prime_u64(u64 n) noexcept {
    if (n < 2) return false;
    for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

constexpr u64 kTrialLimit = 1'000'000;
constexpr unsigned kRhoIterations = 1u << 22;

// Brent's variant; deterministic because the seeds are fixed.
u64 pollard_rho(u64 n) {
    if (n % 2 == 0) return 2;
    for (u64 c = 1; c < 64; ++c) {
        u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
        u64 r = 1;
        unsigned iterations = 0;
        auto f = [&](u64 v) { return (mul_mod(v, v, n) + c) % n; };
        constexpr u64 m = 128;
        do {
            x = y;
            for (u64 i = 0; i < r; ++i) y = f(y);
            u64 k = 0;
            do {
                ys = y;
                for (u64 i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mul_mod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += m;
                iterations += static_cast<unsigned>(m);
            } while (k < r && g == 1);
            r <<= 1;
        } while (g == 1 && iterations < kRhoIterations);
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != 1 && g != n) return g;
    }
    throw Error(Errc::FactorizationFailure, "Pollard rho failed on " + std::to_string(n));
}

void factor_rec(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        out.push_back(n);
        return;
    }
    const u64 f = pollard_rho(n);
    factor_rec(f, out);
    factor_rec(n / f, out);
}

} // namespace

std::vector<PrimePower> factorize(u64 n) {
    std::vector<u64> primes;
    for (u64 p = 2; p <= kTrialLimit && p * p <= n; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) {
            primes.push_back(p);
            n /= p;
        }
    }
    if (n > 1) factor_rec(n, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<PrimePower> out;
    for (u64 p : primes) {
        if (!out.empty() && out.back().prime == p)
            ++out.back().exponent;
        else
            out.push_back({p, 1});
    }
    return out;
}

std::vector<u64> distinct_prime_factors(u64 n) {
    std::vector<u64> out;
    for (const auto& pp : factorize(n)) out.push_back(pp.prime);
    return out;
}

unsigned two_adic_valuation(u64 x) noexcept {
    unsigned v = 0;
    while (x && (x & 1) == 0) {
        x >>= 1;
        ++v;
    }
    return v;
}

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
    case Errc::CompositeP: return "CompositeP";
    case Errc::TooLarge: return "TooLarge";
    case Errc::FactorizationFailure: return "FactorizationFailure";
    case Errc::NotASubfield: return "NotASubfield";
    case Errc::OddDegree: return "OddDegree";
    case Errc::ZeroState: return "ZeroState";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::NotRational: return "NotRational";
    case Errc::MemoryBudget: return "MemoryBudget";
    case Errc::Budget: return "Budget";
    case Errc::OutOfDomain: return "OutOfDomain";
    case Errc::MethodInapplicable: return "MethodInapplicable";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::ConditionViolated: return "ConditionViolated";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

} // namespace mseq
