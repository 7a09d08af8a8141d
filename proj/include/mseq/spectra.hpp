/**************************************************************************
 * spectra.hpp
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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mseq {

enum class Method { Naive, Fast, Coset };

std::string_view method_name(Method m) noexcept;

/// Multiset {C_d(tau) : 0 <= tau < p^n - 1}.
struct SpectrumTable {
    unsigned p = 2;
    unsigned n = 1;
    u64 d = 1;
    Method method = Method::Fast;
    std::map<CycInt, u64> entries;

    u64 total() const;
    CycInt weighted_sum() const;
    std::size_t value_count() const { return entries.size(); }
    /// Count of an integer value, 0 when absent.
    u64 count_of(long value) const;

    /// Compares the value multisets only.
    bool same_distribution(const SpectrumTable& other) const { return entries == other.entries; }
};

/// W(a) = sum_x w^{Tr(x^d) - Tr(a x)} for every a, stored as reduced int32 coordinates.
class WalshTable {
public:
    WalshTable(unsigned p, unsigned n, u64 d);

    unsigned p() const noexcept { return p_; }
    unsigned n() const noexcept { return n_; }
    u64 d() const noexcept { return d_; }
    std::size_t basis() const noexcept { return basis_; }

    /// W(alpha^k).
    CycInt at_log(u64 k) const;
    CycInt at(Elem a) const { return a.is_zero() ? at_zero() : at_log(a.log); }
    CycInt at_zero() const;

    /// Raw coordinates of W(alpha^k); basis() entries.
    const std::int32_t* coords_at_log(u64 k) const noexcept { return &coords_[k * basis_]; }
    const std::vector<std::int32_t>& zero_coords() const noexcept { return zero_; }

private:
    friend WalshTable walsh_power_transform(const FieldCtx& ctx, u64 d);
    friend WalshTable walsh_naive(const FieldCtx& ctx, u64 d);

    unsigned p_, n_;
    u64 d_;
    std::size_t basis_;
    std::vector<std::int32_t> coords_; // (q - 1) * basis_
    std::vector<std::int32_t> zero_;
};

/// Throws Error(NotCoprime) unless gcd(d, p^n - 1) = 1.
void require_coprime(const FieldCtx& ctx, u64 d);

/// C_d(tau) by direct summation over one period.
CycInt crosscorr_naive(const FieldCtx& ctx, u64 d, u64 tau);

/// Per-point summation of the Walsh transform; O(q^2).
WalshTable walsh_naive(const FieldCtx& ctx, u64 d);

/// Fast transform over (Z_p)^n. Throws Error(MemoryBudget) when the field has no tables.
WalshTable walsh_fast(const FieldCtx& ctx, u64 d);

/// The same transform for any exponent d >= 1, coprime or not. Only coprime d relate it to C_d.
WalshTable walsh_power_transform(const FieldCtx& ctx, u64 d);

/// Spectrum of C_d, from the naive oracle or the fast transform.
SpectrumTable spectrum(const FieldCtx& ctx, u64 d, Method method = Method::Fast);

/// Spectrum read off a Walsh table via C_d(tau) = W(alpha^tau) - 1.
SpectrumTable spectrum_from_walsh(const WalshTable& w);

/// sum over every a of W(a)^l, a = 0 included.
CycInt moment(const WalshTable& w, unsigned l);
/// The same power moment from a spectrum, using W(0) = 0.
CycInt moment(const SpectrumTable& table, unsigned l);

/// Number of (x_1..x_l) in GF(q)^l with sum x_i = 0 and sum x_i^d = 0.
/// Throws Error(Budget) if q^(l-1) > 2^32.
u64 solution_count_N(const FieldCtx& ctx, u64 d, unsigned l);

/// Number of nonzero (x_1..x_{l-1}) with sum x_i + 1 = 0 and sum x_i^d + 1 = 0.
u64 b_l_count(const FieldCtx& ctx, u64 d, unsigned l);

/// #{x : (x+1)^d - x^d = a}.
u64 m_count(const FieldCtx& ctx, u64 d, Elem a);

/// (q^2 N - q^l) / (q - 1).
mpz_class moment_from_solution_count(u64 q, unsigned l, u64 N);

/// q^2 b_l - (q-1)^{l-1} + 2(-1)^{l-1}.
mpz_class power_sum_from_b(u64 q, unsigned l, u64 b);

struct ShiftProduct {
    u64 t = 0;
    CycInt value;
    bool ok = false;
};

struct MomentReport {
    bool sum_is_one = false;
    CycInt sum;
    std::vector<ShiftProduct> shift_products; // t = 0 first
    bool cube_sum_ok = false;
    CycInt cube_sum;
    u64 b3 = 0;

    bool all() const;
};

/// Checks sum C = 1, the shifted products at t = 0 and three seeded shifts, and the cube sum against b_3.
MomentReport moment_identity_check(const FieldCtx& ctx, u64 d);

} // namespace mseq
