/**************************************************************************
 * gf.hpp
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

#include "mseq/numtheory.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mseq {

/// Field orders up to this bound get full exp/log/Zech tables.
inline constexpr u64 kMaxTableOrder = u64{1} << 24;
/// Primitivity testing and polynomial search run table-free up to this order.
inline constexpr u64 kMaxArithmeticOrder = u64{1} << 40;

/// GF(p)[x]/(x^n + c_{n-1}x^{n-1} + ... + c_0) with the monic leading term implied.
struct FieldSpec {
    unsigned p = 2;
    unsigned n = 1;
    std::vector<unsigned> coeffs; // c_0 .. c_{n-1}

    std::string polynomial_string() const;
    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_small_prime(unsigned p) noexcept;

/// True iff x has multiplicative order p^n - 1 modulo the given monic polynomial.
bool is_primitive(unsigned p, unsigned n, std::span<const unsigned> coeffs);

/// Lexicographically least primitive (c_{n-1}, ..., c_1, c_0).
FieldSpec find_primitive_polynomial(unsigned p, unsigned n);

/// Reads "p n c_0 ... c_{n-1}" lines ('#' starts a comment) and registers them as
/// overrides for canonical_field_spec. Every entry is checked for primitivity.
void load_modulus_file(const std::string& path);
void clear_modulus_overrides();

/// The override for (p, n) when one is loaded, otherwise find_primitive_polynomial.
FieldSpec canonical_field_spec(unsigned p, unsigned n);

/// Field element in the discrete-log domain: alpha^log, or zero.
struct Elem {
    static constexpr std::uint32_t kZeroLog = 0xffffffffu;
    std::uint32_t log = kZeroLog;

    constexpr bool is_zero() const noexcept { return log == kZeroLog; }
    friend constexpr bool operator==(Elem, Elem) = default;
};

struct UnitCircle {
    unsigned m = 0;
    std::vector<Elem> elements;
};

/// A fully materialized GF(p^n). Immutable after construction.
class FieldCtx {
public:
    explicit FieldCtx(FieldSpec spec);
    /// Field over the canonical polynomial.
    FieldCtx(unsigned p, unsigned n);

    const FieldSpec& spec() const noexcept { return spec_; }
    unsigned p() const noexcept { return spec_.p; }
    unsigned n() const noexcept { return spec_.n; }
    u64 order() const noexcept { return q_; }
    u64 group_order() const noexcept { return q_ - 1; }

    static constexpr Elem zero() noexcept { return Elem{}; }
    static constexpr Elem one() noexcept { return Elem{0}; }
    Elem alpha_pow(i64 e) const noexcept {
        return Elem{static_cast<std::uint32_t>(reduce_mod(e, q_ - 1))};
    }
    Elem minus_one() const noexcept { return Elem{static_cast<std::uint32_t>(p() == 2 ? 0 : (q_ - 1) / 2)}; }
    /// Embeds an integer of GF(p).
    Elem from_int(i64 v) const;

    Elem mul(Elem a, Elem b) const noexcept {
        if (a.is_zero() || b.is_zero()) return zero();
        u64 s = u64{a.log} + b.log;
        if (s >= q_ - 1) s -= q_ - 1;
        return Elem{static_cast<std::uint32_t>(s)};
    }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const;
    /// a^e for any integer e; 0^e = 0 for e != 0 and 0^0 = 1.
    Elem pow(Elem a, i64 e) const noexcept;
    Elem add(Elem a, Elem b) const noexcept {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        u64 diff = b.log >= a.log ? b.log - a.log : b.log + (q_ - 1) - a.log;
        const std::uint32_t z = zech_[diff];
        if (z == Elem::kZeroLog) return zero();
        u64 s = u64{a.log} + z;
        if (s >= q_ - 1) s -= q_ - 1;
        return Elem{static_cast<std::uint32_t>(s)};
    }
    Elem neg(Elem a) const noexcept { return mul(a, minus_one()); }
    Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

    /// x^(p^k).
    Elem frobenius(Elem a, unsigned k) const noexcept;

    /// Absolute trace into {0, ..., p-1}.
    unsigned trace(Elem a) const noexcept { return a.is_zero() ? 0u : seq_[a.log]; }
    /// Tr_{p^n / p^m}(x) = x + x^{p^m} + ... + x^{p^{n-m}}; throws NotASubfield unless m | n.
    Elem relative_trace(Elem a, unsigned m) const;
    bool in_subfield(Elem a, unsigned m) const;

    /// Coefficient vector (c_0 + c_1 x + ...) packed as base-p digits.
    std::uint32_t packed(Elem a) const noexcept { return a.is_zero() ? 0u : exp_[a.log]; }
    Elem from_packed(std::uint32_t v) const noexcept { return Elem{log_[v]}; }
    std::uint32_t add_packed(std::uint32_t a, std::uint32_t b) const noexcept;
    std::uint32_t neg_packed(std::uint32_t a) const noexcept;
    unsigned trace_packed(std::uint32_t v) const noexcept;

    /// s_t = Tr(alpha^t) for t in [0, q-2].
    std::span<const std::uint8_t> trace_sequence() const noexcept { return seq_; }
    std::span<const std::uint32_t> exp_table() const noexcept { return exp_; }

    /// Elements x with x^(p^m + 1) = 1, n = 2m; throws OddDegree for odd n.
    UnitCircle unit_circle() const;

private:
    FieldSpec spec_;
    u64 q_ = 0;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> zech_;
    std::vector<std::uint8_t> seq_;
    std::vector<std::uint32_t> pow_p_; // p^i, i <= n
    std::vector<unsigned> trace_of_basis_;
    std::uint32_t trace_mask_ = 0; // p = 2 only
};

} // namespace mseq
