/**************************************************************************
 * test_families.cpp
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

#include "mseq/error.hpp"
#include "mseq/families.hpp"

#include <set>

using namespace mseq;

namespace {

std::map<long, u64> as_int_map(const SpectrumTable& t) {
    std::map<long, u64> out;
    for (const auto& [v, c] : t.entries) out[v.as_integer().get_si()] = c;
    return out;
}

std::map<long, u64> predicted_map(std::string_view id, unsigned p, unsigned n, const Params& params) {
    const Prediction pr = predicted_spectrum(find_family(id), p, n, params);
    REQUIRE(pr.table.has_value());
    return as_int_map(*pr.table);
}

Errc code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return Errc::InvalidArgument;
}

} // namespace

TEST_SUITE("families") {

TEST_CASE("catalog contents") {
    const auto& cat = catalog();
    CHECK(cat.size() >= 22);
    std::set<std::string> ids;
    for (const auto& f : cat) {
        CHECK(ids.insert(f.id).second);
        CHECK_FALSE(f.source.empty());
        CHECK(static_cast<bool>(f.violation));
        CHECK(static_cast<bool>(f.decimation));
        CHECK(static_cast<bool>(f.admissible_params));
        CHECK((static_cast<bool>(f.rows) || static_cast<bool>(f.value_set)));
    }
    for (const char* id : {"gold", "kasami-welch", "welch", "niho-4val-unified", "dfhr-s3-odd", "helleseth-half",
                           "helleseth-third", "helleseth-2003", "hkl-s4"})
        CHECK(ids.contains(id));

    const auto& gold = find_family("gold");
    CHECK(gold.prime_constraint == "p = 2");
    CHECK(gold.param_domain.find("n/gcd(n,k) odd") != std::string::npos);
    CHECK(find_family("dfhr-s3-odd").status == FamilyStatus::ProvedDistribution);
    CHECK(find_family("hkl-s4").status == FamilyStatus::AtMostK);
    CHECK(predicted_spectrum(find_family("hkl-s4"), 2, 4, {}).value_set->k == 5);
    CHECK(predicted_spectrum(find_family("hkl-s4"), 2, 6, {}).value_set->k == 6);
    CHECK(code_of([] { find_family("no-such-family"); }) == Errc::InvalidArgument);
}

TEST_CASE("predicted distributions") {
    CHECK(predicted_map("gold", 2, 5, {{"k", 1}}) == std::map<long, u64>{{-9, 6}, {-1, 15}, {7, 10}});
    CHECK(predicted_map("gold", 2, 5, {{"k", 1}}) == oracle::spectrum(2, 5, 3));

    const Prediction half = predicted_spectrum(find_family("helleseth-half"), 5, 2, {{"i", 0}});
    CHECK(half.d == 13);
    CHECK(as_int_map(*half.table) == std::map<long, u64>{{-6, 6}, {-1, 10}, {4, 6}, {9, 1}, {14, 1}});
    CHECK(as_int_map(*half.table) == oracle::spectrum(5, 2, 13));

    const Prediction xia = predicted_spectrum(find_family("dfhr-s3-odd"), 2, 6, {});
    CHECK(xia.d == 22);
    CHECK(as_int_map(*xia.table) == oracle::spectrum(2, 6, 22));
    CHECK(as_int_map(*predicted_spectrum(find_family("dfhr-s3-odd-kloosterman"), 2, 6, {}).table) ==
          oracle::spectrum(2, 6, 22));

    // the four-valued tables count the a = 0 point; the shift spectrum has one fewer -1
    const Prediction unified = predicted_spectrum(find_family("niho-4val-unified"), 2, 8, {{"r", 1}, {"sign", -1}});
    CHECK(unified.d == 31);
    mpq_class raw_minus_one = 0, raw_total = 0;
    for (const auto& row : unified.rows) {
        raw_total += row.count;
        if (row.value == -1) raw_minus_one += row.count;
    }
    CHECK(raw_total == 256);
    CHECK(raw_minus_one == 120);
    CHECK(unified.table->count_of(-1) == 119);
    CHECK(as_int_map(*unified.table) == oracle::spectrum(2, 8, 31));
}

TEST_CASE("tables are self-consistent") {
    const std::vector<std::pair<unsigned, unsigned>> grid{{2, 3}, {2, 4}, {2, 5}, {2, 6}, {2, 7}, {2, 8}, {2, 9},
                                                          {2, 10}, {2, 12}, {3, 2}, {3, 3}, {3, 4}, {3, 5}, {3, 6},
                                                          {5, 2}, {5, 3}, {5, 4}, {7, 2}, {11, 2}};
    std::size_t points = 0;
    for (const auto& f : catalog()) {
        for (auto [p, n] : grid) {
            for (const Params& params : f.admissible_params(p, n)) {
                CAPTURE(f.id);
                CAPTURE(p);
                CAPTURE(n);
                CAPTURE(params_string(params));
                const Prediction pr = predicted_spectrum(f, p, n, params);
                CHECK(std::gcd(pr.d, ipow(p, n) - 1) == 1);
                if (pr.table) {
                    CHECK(pr.table->total() == ipow(p, n) - 1);
                    CHECK(pr.table->weighted_sum() == CycInt(p, mpz_class(1)));
                }
                const SpectrumTable computed = spectrum(FieldCtx(p, n), pr.d);
                const Verdict v = verify_family(f, p, n, params, computed);
                CHECK_MESSAGE(v.pass, v.diff);
                ++points;
            }
        }
    }
    CHECK(points > 200);
}

TEST_CASE("verify examples") {
    const FamilyDescriptor& kw = find_family("kasami-welch");
    const SpectrumTable s57 = spectrum(FieldCtx(2, 9), 57);
    const Verdict v = verify_family(kw, 2, 9, {{"k", 3}}, s57);
    CHECK(v.pass);
    CHECK(v.predicted.d == 57);
    CHECK(as_int_map(s57) == std::map<long, u64>{{-65, 28}, {-1, 447}, {63, 36}});

    const SpectrumTable s31 = spectrum(FieldCtx(2, 8), 31);
    CHECK(verify_family(find_family("niho-4val-unified"), 2, 8, {{"r", 1}, {"sign", -1}}, s31).pass);
    CHECK(s31.count_of(-1) == 119);

    const FamilyDescriptor& hkl = find_family("hkl-s4");
    const Prediction pr = predicted_spectrum(hkl, 2, 4, {});
    CHECK(pr.d == 13);
    REQUIRE(pr.value_set.has_value());
    const std::set<mpz_class> want{-5, -1, 3, 7, 15};
    CHECK(pr.value_set->values == want);
    CHECK(verify_family(hkl, 2, 4, {}, spectrum(FieldCtx(2, 4), 13)).pass);

    // a wrong spectrum is reported with a diff
    const Verdict bad = verify_family(find_family("gold"), 2, 7, {{"k", 1}}, spectrum(FieldCtx(2, 7), 1));
    CHECK_FALSE(bad.pass);
    CHECK(bad.diff.find("predicted") != std::string::npos);
    SpectrumTable outside = spectrum(FieldCtx(2, 4), 13);
    outside.entries[CycInt(2, mpz_class(11))] = 1;
    const Verdict bad_set = verify_family(hkl, 2, 4, {}, outside);
    CHECK_FALSE(bad_set.pass);
    CHECK(bad_set.diff.find("outside") != std::string::npos);
}

TEST_CASE("domain errors") {
    CHECK(code_of([] { predicted_spectrum(find_family("gold"), 2, 4, {{"k", 2}}); }) == Errc::OutOfDomain);
    CHECK(code_of([] { predicted_spectrum(find_family("gold"), 2, 5, {}); }) == Errc::OutOfDomain);
    CHECK(code_of([] { predicted_spectrum(find_family("gold"), 3, 5, {{"k", 1}}); }) == Errc::OutOfDomain);
    CHECK(code_of([] { predicted_spectrum(find_family("welch"), 2, 6, {}); }) == Errc::OutOfDomain);
    try {
        predicted_spectrum(find_family("gold"), 2, 4, {{"k", 2}});
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("gold") != std::string::npos);
    }
}

TEST_CASE("tau") {
    CHECK(tau(1) == mpq_class(1, 2));
    CHECK(tau(2) == mpq_class(-7, 4));
    CHECK(tau(3) == mpq_class(-11, 8));
    mpq_class prev = tau(1), cur = tau(2);
    for (unsigned m = 3; m <= 64; ++m) {
        const mpq_class t = tau(m);
        CHECK(t == cur / 2 - prev);
        CHECK(abs(t) <= 2);
        // 2^m tau_m is an integer
        mpz_class scaled = t.get_num() * (mpz_class(1) << m);
        CHECK(mpz_divisible_p(scaled.get_mpz_t(), t.get_den().get_mpz_t()));
        prev = cur;
        cur = t;
    }
    CHECK_THROWS_AS(tau(0), Error);
}

TEST_CASE("coset method") {
    const FieldCtx f256(2, 8);
    const CosetResult r = coset_spectrum_method(f256, 13, 5);
    CHECK(r.table.method == Method::Coset);
    CHECK(r.table.same_distribution(spectrum(f256, 13)));
    CHECK(as_int_map(r.table) == oracle::spectrum(2, 8, 13));
    u64 shifts = 0;
    for (const auto& [key, count] : r.triples) {
        CHECK(key[0] + key[1] + key[2] == 5);
        shifts += count;
    }
    CHECK(shifts == 255);

    const FieldCtx f25(5, 2);
    CHECK(coset_spectrum_method(f25, 13, 3).table.same_distribution(spectrum(f25, 13)));

    CHECK(code_of([] { coset_spectrum_method(FieldCtx(2, 5), 3, 7); }) == Errc::MethodInapplicable);
    CHECK(code_of([] { coset_spectrum_method(FieldCtx(2, 6), 5, 9); }) == Errc::MethodInapplicable);
}

TEST_CASE("parameter parsing") {
    CHECK(parse_params("") == Params{});
    CHECK(parse_params("k=3,r=1") == Params{{"k", 3}, {"r", 1}});
    CHECK(parse_params("sign=-1") == Params{{"sign", -1}});
    CHECK(params_string({{"k", 3}, {"r", 1}}) == "k=3,r=1");
    CHECK(code_of([] { parse_params("k3"); }) == Errc::ParseError);
    CHECK(code_of([] { parse_params("k=x"); }) == Errc::ParseError);
    CHECK(code_of([] { parse_params("=3"); }) == Errc::ParseError);
}

}
