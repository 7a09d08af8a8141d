/**************************************************************************
 * test_expsums.cpp
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

#include "doctest.h"
#include "oracle.hpp"

#include "mseq/expsums.hpp"
#include "mseq/families.hpp"

#include <cmath>

using namespace mseq;

namespace {

// Binary sums over the polynomial-basis oracle field.
struct BinaryOracle {
    oracle::Field f;
    explicit BinaryOracle(unsigned m) : f{2, m, oracle::least_primitive(2, m)} {}

    oracle::Poly inv(const oracle::Poly& x) const { return f.pow(x, f.order() - 2); }
    int sign(const oracle::Poly& x) const { return f.trace(x) ? -1 : 1; }

    long kloosterman(const oracle::Poly& a) const {
        long s = 0;
        for (u64 v = 0; v < f.order(); ++v) {
            const auto x = f.from_index(v);
            s += sign(f.add(inv(x), f.mul(a, x)));
        }
        return s;
    }
    long R() const {
        long s = 0;
        for (u64 v = 2; v < f.order(); ++v) {
            const auto y = f.from_index(v);
            const auto arg = inv(f.add(f.pow(y, 3), y));
            s += sign(inv(y)) * kloosterman(arg);
        }
        return s;
    }
};

} // namespace

TEST_SUITE("expsums") {

TEST_CASE("kloosterman") {
    for (unsigned m = 2; m <= 6; ++m) {
        const FieldCtx ctx(2, m);
        const BinaryOracle o(m);
        CHECK(kloosterman(ctx, FieldCtx::zero()).as_integer() == 0);
        const auto table = kloosterman_table(ctx);
        for (u64 v = 0; v < ctx.order(); ++v) {
            const Elem a = ctx.from_packed(static_cast<std::uint32_t>(v));
            const long want = o.kloosterman(o.f.from_index(v));
            CHECK(kloosterman(ctx, a).as_integer() == want);
            CHECK(table[a.is_zero() ? ctx.group_order() : a.log].as_integer() == want);
        }
    }
    // the x = 0 term adds 1 to the sum over nonzero x, whose Weil bound is 2^{m/2+1}
    for (unsigned m = 2; m <= 12; ++m) {
        const FieldCtx ctx(2, m);
        const double weil = 2 * std::pow(2.0, m / 2.0) + 1;
        for (const CycInt& k : kloosterman_table(ctx)) {
            const long v = k.as_integer().get_si();
            CHECK(std::abs(static_cast<double>(v)) <= weil);
            CHECK(v % 4 == 0);
        }
    }
    CHECK(kloosterman(FieldCtx(2, 1), FieldCtx::one()).as_integer() == 2);
    for (unsigned m = 1; m <= 5; ++m) {
        const FieldCtx ctx(3, m);
        for (const CycInt& k : kloosterman_table(ctx)) {
            CHECK(k.is_real());
            // 3 divides every value in Z[w]
            for (const auto& c : k.coords()) CHECK(mpz_divisible_ui_p(c.get_mpz_t(), 3));
        }
    }
}

TEST_CASE("cubic and G sums") {
    const FieldCtx ctx(2, 5);
    const BinaryOracle o(5);
    for (u64 k = 0; k < 31; ++k) {
        const Elem a = ctx.alpha_pow(static_cast<i64>(k));
        CHECK(cubic_sum(ctx, FieldCtx::zero(), a).as_integer() == 0);
        CHECK(cubic_sum(ctx, a, FieldCtx::zero()).as_integer() == 0);
        CHECK(g_sum(ctx, FieldCtx::zero(), a).as_integer() == -1);
        CHECK(g_sum(ctx, a, FieldCtx::zero()).as_integer() == -1);
    }
    long c11 = 0, g11 = 0;
    const auto one = o.f.one();
    for (u64 v = 0; v < 32; ++v) {
        const auto x = o.f.from_index(v);
        c11 += o.sign(o.f.add(o.f.pow(x, 3), x));
        if (v) g11 += o.sign(o.f.add(o.f.pow(x, 3), o.inv(x)));
    }
    (void)one;
    CHECK(cubic_sum(ctx, FieldCtx::one(), FieldCtx::one()).as_integer() == c11);
    CHECK(g_sum(ctx, FieldCtx::one(), FieldCtx::one()).as_integer() == g11);
}

TEST_CASE("R by direct double sum") {
    CHECK(kloosterman_R(3) == BinaryOracle(3).R());
    CHECK(kloosterman_R(5) == BinaryOracle(5).R());
    CHECK(kloosterman_R(3) == 12);
    CHECK(kloosterman_R(5) == -60);
    CHECK(kloosterman_R(7) == 252);
    // the six-valued table needs -2^m tau_m + 2^{m+1} + 1, which exceeds the literal sum by 2^{m+1}
    for (unsigned m : {3u, 5u, 7u}) {
        const mpq_class link = -mpq_class(mpz_class(1) << m) * tau(m) + mpq_class(mpz_class(1) << (m + 1)) + 1;
        CHECK(link - kloosterman_R(m) == mpq_class(mpz_class(1) << (m + 1)));
    }
    CHECK((-mpq_class(8) * tau(3) + 17) == 28);
}

TEST_CASE("k-generalized sums") {
    for (auto [n, k] : std::vector<std::pair<unsigned, unsigned>>{{5, 2}, {7, 2}, {7, 3}, {9, 2}, {5, 1}}) {
        CAPTURE(n);
        CAPTURE(k);
        const Op6Report r = op6_check(n, k);
        CHECK(r.first_equal());
        CHECK(r.undefined_terms == 1);
        CHECK(r.second_equal_zero_convention());

        const BinaryOracle o(n);
        long lhs1 = 0, lhs2 = 0, rhs2 = 0;
        const u64 e = (u64{1} << k) + 1;
        for (u64 v = 1; v < o.f.order(); ++v) {
            const auto x = o.f.from_index(v);
            lhs1 += o.sign(o.f.add(o.f.pow(x, e), o.inv(x)));
            lhs2 += o.sign(o.f.add(x, o.inv(x)));
            const auto vk = o.f.pow(x, u64{1} << k);
            const auto den = o.f.pow(o.f.add(vk, x), e);
            const auto num = o.f.mul(o.f.add(vk, o.f.one()), vk);
            rhs2 += o.sign(o.f.mul(num, o.inv(den)));
        }
        CHECK(r.first_lhs == lhs1);
        CHECK(r.second_lhs == lhs2);
        CHECK(r.second_rhs_zero_convention == rhs2);
    }
}

}
