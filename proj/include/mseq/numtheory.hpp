/**************************************************************************
 * numtheory.hpp
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

#include <cstdint>
#include <vector>

namespace mseq {

using u64 = std::uint64_t;
using i64 = std::int64_t;

u64 gcd_u64(u64 a, u64 b) noexcept;
u64 mul_mod(u64 a, u64 b, u64 m) noexcept;
u64 pow_mod(u64 base, u64 exp, u64 m) noexcept;

/// Inverse of a modulo m; throws Error(NotInvertible) when gcd(a, m) != 1.
u64 inverse_mod(u64 a, u64 m);

/// Integer power with overflow check; throws Error(TooLarge).
u64 ipow(u64 base, unsigned exp);

/// Deterministic primality for 64-bit inputs (Miller-Rabin with fixed bases).
bool is_prime_u64(u64 n) noexcept;

struct PrimePower {
    u64 prime;
    unsigned exponent;
};

/// Trial division to 10^6, then Pollard rho with a fixed seed.
/// Throws Error(FactorizationFailure) when the rho budget is exhausted.
std::vector<PrimePower> factorize(u64 n);

std::vector<u64> distinct_prime_factors(u64 n);

/// Largest e with 2^e | x (x > 0).
unsigned two_adic_valuation(u64 x) noexcept;

/// x mod m for signed x, result in [0, m).
inline u64 reduce_mod(i64 x, u64 m) noexcept {
    const i64 r = x % static_cast<i64>(m);
    return static_cast<u64>(r < 0 ? r + static_cast<i64>(m) : r);
}

} // namespace mseq
