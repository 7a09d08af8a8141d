/**************************************************************************
 * mseq_cli.cpp
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

#include "mseq/codes.hpp"
#include "mseq/error.hpp"
#include "mseq/expsums.hpp"
#include "mseq/families.hpp"
#include "mseq/json_io.hpp"
#include "mseq/lfsr.hpp"
#include "mseq/niho.hpp"
#include "mseq/parallel.hpp"
#include "mseq/search.hpp"
#include "mseq/spectra.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <memory>

using namespace mseq;

namespace {

constexpr int kOk = 0;
constexpr int kFinding = 1;
constexpr int kUsage = 2;

struct Common {
    unsigned threads = 0;
    std::string modulus_file;
    std::string cache_dir;
};

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

// "13", "-3" or "9/5", reduced mod p^n - 1.
u64 parse_decimation(const std::string& text, const FieldCtx& ctx) {
    const u64 g = ctx.group_order();
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return reduce_mod(std::stoll(text), g);
        return resolve_fraction(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)), g);
    } catch (const std::logic_error&) {
        throw Error(Errc::ParseError, "cannot read decimation '" + text + "'");
    }
}

Elem parse_element(i64 packed, const FieldCtx& ctx) {
    if (packed < 0 || static_cast<u64>(packed) >= ctx.order())
        throw Error(Errc::InvalidArgument, "element index must lie in [0, p^n)");
    return ctx.from_packed(static_cast<std::uint32_t>(packed));
}

std::unique_ptr<SpectrumCache> open_cache(const Common& common, const FieldCtx& ctx) {
    std::filesystem::path dir;
    if (!common.cache_dir.empty()) dir = common.cache_dir;
    else if (auto env = default_cache_dir()) dir = *env;
    else return nullptr;
    return std::make_unique<SpectrumCache>(dir, ctx.spec());
}

json reps_json(const std::vector<u64>& reps) { return json(reps); }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact crosscorrelation spectra of decimated m-sequences"};
    app.require_subcommand(1);
    Common common;
    app.add_option("--threads", common.threads, "Worker threads (0 = hardware concurrency)");
    app.add_option("--modulus-file", common.modulus_file, "Lines 'p n c_0 ... c_{n-1}' overriding the canonical polynomials")
        ->check(CLI::ExistingFile);
    app.add_option("--cache-dir", common.cache_dir, "Spectrum cache directory (default: $MSEQ_CACHE_DIR)");

    unsigned p = 2, n = 1, m = 1;
    std::string d_text = "1", out = "json", method = "fast", format = "digits", family = "all", params_text, kind;
    std::string init_text;
    i64 s = 2, a_packed = 1, b_packed = 1;
    unsigned k = 1, max_n = 0;
    u64 coset_n = 0;
    bool check_identity = false, golomb = false, brute = false;

    auto* field = app.add_subcommand("field", "Canonical primitive polynomial and field parameters");
    field->add_option("--p", p)->required();
    field->add_option("--n", n)->required();

    auto* seq = app.add_subcommand("seq", "One period of the m-sequence");
    seq->add_option("--p", p)->required();
    seq->add_option("--n", n)->required();
    seq->add_option("--init", init_text, "Comma-separated initial state for the recursion (default: trace form)");
    seq->add_option("--d", d_text, "Decimation applied to the sequence");
    seq->add_option("--format", format)->check(CLI::IsMember({"digits", "raw"}));
    seq->add_flag("--golomb", golomb, "Print the Golomb property report instead of the symbols");

    auto* spec_cmd = app.add_subcommand("spectrum", "Crosscorrelation spectrum of s_t and s_{dt}");
    spec_cmd->add_option("--p", p)->required();
    spec_cmd->add_option("--n", n)->required();
    spec_cmd->add_option("--d", d_text, "Decimation, integer or d1/d2")->required();
    spec_cmd->add_option("--method", method)->check(CLI::IsMember({"naive", "fast", "coset"}));
    spec_cmd->add_option("--N", coset_n, "Coset count for --method coset");
    spec_cmd->add_option("--out", out)->check(CLI::IsMember({"json", "csv"}));

    auto* moments = app.add_subcommand("moments", "Moment identities of a decimation");
    moments->add_option("--p", p)->required();
    moments->add_option("--n", n)->required();
    moments->add_option("--d", d_text)->required();

    auto* verify = app.add_subcommand("verify", "Check catalog predictions against computed spectra");
    verify->add_option("--family", family, "Family id or 'all'");
    verify->add_option("--p", p)->required();
    verify->add_option("--n", n)->required();
    verify->add_option("--params", params_text, "Parameters as k=v,...; default: every admissible point");

    auto* niho = app.add_subcommand("niho", "Unit-circle root counts for d = s(p^m - 1) + 1");
    niho->add_option("--p", p)->required();
    niho->add_option("--m", m)->required();
    niho->add_option("--s", s)->required();
    niho->add_flag("--check-identity", check_identity, "Compare with the Walsh transform at every a != 0");

    auto* expsum = app.add_subcommand("expsum", "Kloosterman, cubic and mixed exponential sums");
    expsum->add_option("--kind", kind)->required()->check(CLI::IsMember({"kloosterman", "cubic", "g", "r", "op6"}));
    expsum->add_option("--p", p, "Characteristic (kloosterman only)");
    expsum->add_option("--n", n, "Extension degree (--m for r)");
    expsum->add_option("--m", m);
    expsum->add_option("--a", a_packed, "Element as base-p coefficient integer");
    expsum->add_option("--b", b_packed, "Element as base-p coefficient integer");
    expsum->add_option("--k", k);

    auto* weights = app.add_subcommand("code-weights", "Weight distribution of the two-nonzero cyclic code");
    weights->add_option("--p", p)->required();
    weights->add_option("--n", n)->required();
    weights->add_option("--d", d_text)->required();
    weights->add_flag("--brute-force", brute, "Enumerate all codewords instead of reading the Walsh table");

    auto* classify = app.add_subcommand("classify", "Decimation classes bucketed by number of values");
    classify->add_option("--p", p)->required();
    classify->add_option("--n", n, "Single degree");
    classify->add_option("--max-n", max_n, "Every degree 2..max-n");

    auto* conjecture = app.add_subcommand("conjecture", "Finite checks of the open problems");
    conjecture->add_option("--kind", kind)->required()->check(CLI::IsMember({"minus-one", "three-valued", "niho-form"}));
    conjecture->add_option("--p", p);
    conjecture->add_option("--n", n, "Single degree");
    conjecture->add_option("--max-n", max_n, "Every degree 2..max-n");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    }

    try {
        set_thread_count(common.threads);
        if (!common.modulus_file.empty()) load_modulus_file(common.modulus_file);
        auto degrees = [&](unsigned lo) {
            std::vector<unsigned> out_n;
            if (max_n) {
                for (unsigned v = lo; v <= max_n; ++v) out_n.push_back(v);
            } else {
                out_n.push_back(n);
            }
            return out_n;
        };

        if (*field) {
            const FieldCtx ctx(p, n);
            json j = to_json(ctx.spec());
            j["order"] = ctx.order();
            emit(j);
            return kOk;
        }

        if (*seq) {
            const FieldCtx ctx(p, n);
            MSeq sq;
            if (init_text.empty()) {
                sq = generate_trace(ctx);
            } else {
                std::vector<unsigned> state;
                for (const auto& item : CLI::detail::split(init_text, ',')) state.push_back(static_cast<unsigned>(std::stoul(item)));
                sq = generate_recursion(ctx.spec(), state);
            }
            const u64 d = parse_decimation(d_text, ctx);
            if (d != 1) sq = decimate(sq, d);
            if (golomb) {
                const GolombReport r = check_golomb(sq.symbols, p, n);
                json j{{"span", r.span},
                       {"decimation", r.decimation},
                       {"shift_and_subtract", r.shift_and_subtract},
                       {"balance", r.balance},
                       {"ideal_autocorrelation", r.ideal_autocorrelation}};
                if (r.run) j["run"] = *r.run;
                emit(j);
                return kOk;
            }
            if (format == "raw") {
                std::cout.write(reinterpret_cast<const char*>(sq.symbols.data()), static_cast<std::streamsize>(sq.symbols.size()));
            } else {
                std::string line(sq.symbols.size(), '0');
                for (std::size_t t = 0; t < line.size(); ++t) line[t] = "0123456789abc"[sq.symbols[t]];
                std::cout << line << '\n';
            }
            return kOk;
        }

        if (*spec_cmd) {
            const FieldCtx ctx(p, n);
            const u64 d = parse_decimation(d_text, ctx);
            require_coprime(ctx, d);
            if (method == "coset" && coset_n == 0) throw Error(Errc::InvalidArgument, "--method coset needs --N");
            SpectrumTable table;
            if (method == "coset") {
                table = coset_spectrum_method(ctx, d, coset_n).table;
            } else if (method == "naive") {
                table = spectrum(ctx, d, Method::Naive);
            } else {
                auto cache = open_cache(common, ctx);
                if (auto hit = cache ? cache->get(d) : std::nullopt) {
                    table = std::move(*hit);
                } else {
                    table = spectrum(ctx, d, Method::Fast);
                    if (cache) cache->put(table);
                }
            }
            if (out == "csv") {
                std::cout << "value,count\n";
                for (const auto& [value, count] : table.entries) std::cout << value.to_string() << ',' << count << '\n';
            } else {
                emit(to_json(table));
            }
            return kOk;
        }

        if (*moments) {
            const FieldCtx ctx(p, n);
            const u64 d = parse_decimation(d_text, ctx);
            require_coprime(ctx, d);
            const MomentReport r = moment_identity_check(ctx, d);
            const WalshTable w = walsh_fast(ctx, d);
            json shifts = json::array();
            for (const auto& sp : r.shift_products) shifts.push_back({{"t", sp.t}, {"value", to_json(sp.value)}, {"ok", sp.ok}});
            json power = json::array();
            bool ok = r.all();
            for (unsigned l = 1; l <= 4; ++l) {
                json row{{"l", l}, {"P", to_json(moment(w, l))}};
                try {
                    const u64 cnt = solution_count_N(ctx, d, l);
                    const CycInt expected(p, moment_from_solution_count(ctx.order(), l, cnt));
                    row["N"] = cnt;
                    row["ok"] = expected == moment(w, l);
                    ok = ok && expected == moment(w, l);
                } catch (const Error& e) {
                    if (e.code() != Errc::Budget) throw;
                    row["N"] = nullptr;
                }
                power.push_back(row);
            }
            emit(json{{"p", p},
                      {"n", n},
                      {"d", d},
                      {"sum_is_one", r.sum_is_one},
                      {"shift_products", shifts},
                      {"cube_sum", to_json(r.cube_sum)},
                      {"b3", r.b3},
                      {"cube_sum_ok", r.cube_sum_ok},
                      {"power_moments", power}});
            return ok ? kOk : kFinding;
        }

        if (*verify) {
            std::vector<const FamilyDescriptor*> families;
            if (family == "all") {
                for (const auto& f : catalog()) families.push_back(&f);
            } else {
                families.push_back(&find_family(family));
            }
            if (!params_text.empty() && family == "all")
                throw Error(Errc::InvalidArgument, "--params needs a single --family");
            const FieldCtx ctx(p, n);
            json verdicts = json::array();
            bool all_pass = true;
            for (const auto* f : families) {
                std::vector<Params> points;
                if (!params_text.empty()) points.push_back(parse_params(params_text));
                else points = f->admissible_params(p, n);
                for (const auto& ps : points) {
                    const Prediction pred = predicted_spectrum(*f, p, n, ps);
                    const SpectrumTable computed = spectrum(ctx, pred.d, Method::Fast);
                    const Verdict v = verify_family(*f, p, n, ps, computed);
                    all_pass = all_pass && v.pass;
                    verdicts.push_back(verdict_json(*f, ps, v, computed));
                }
            }
            emit(verdicts);
            return all_pass ? kOk : kFinding;
        }

        if (*niho) {
            const FieldCtx ctx(p, 2 * m);
            const NihoValueSet vs = niho_value_set(ctx, s);
            json hist = json::object();
            for (const auto& [roots, count] : vs.root_counts) hist[std::to_string(roots)] = count;
            json j{{"p", p}, {"m", m}, {"s", vs.s}, {"d", niho_exponent(p, m, s)}, {"value_set", vs.values}, {"root_histogram", hist}};
            int rc = kOk;
            if (check_identity) {
                const NihoIdentityReport r = niho_identity_check(ctx, s);
                j["identity"] = {{"checked", r.checked}, {"mismatches", r.mismatches}, {"sum_ok", r.sum_ok}, {"holds", r.holds()}};
                if (!r.holds()) rc = kFinding;
            }
            emit(j);
            return rc;
        }

        if (*expsum) {
            if (kind == "r") {
                emit(json{{"m", m}, {"R", kloosterman_R(m).get_str()}});
                return kOk;
            }
            if (kind == "op6") {
                const Op6Report r = op6_check(n, k);
                emit(json{{"n", n},
                          {"k", k},
                          {"first", {{"lhs", r.first_lhs}, {"rhs", r.first_rhs}, {"equal", r.first_equal()}}},
                          {"second",
                           {{"lhs", r.second_lhs},
                            {"rhs_excluding_undefined", r.second_rhs_defined},
                            {"rhs_zero_convention", r.second_rhs_zero_convention},
                            {"undefined_terms", r.undefined_terms},
                            {"equal_excluding", r.second_equal_excluding()},
                            {"equal_zero_convention", r.second_equal_zero_convention()}}}});
                const bool ok = r.first_equal() && (r.second_equal_excluding() || r.second_equal_zero_convention());
                return ok ? kOk : kFinding;
            }
            const FieldCtx ctx(kind == "kloosterman" ? p : 2, n);
            const Elem a = parse_element(a_packed, ctx);
            json j{{"kind", kind}, {"p", ctx.p()}, {"n", n}, {"a", a_packed}};
            if (kind == "kloosterman") {
                j["value"] = to_json(kloosterman(ctx, a));
            } else {
                const Elem b = parse_element(b_packed, ctx);
                j["b"] = b_packed;
                j["value"] = to_json(kind == "cubic" ? cubic_sum(ctx, b, a) : g_sum(ctx, b, a));
            }
            emit(j);
            return kOk;
        }

        if (*weights) {
            const FieldCtx ctx(p, n);
            const u64 d = parse_decimation(d_text, ctx);
            require_coprime(ctx, d);
            emit(to_json(brute ? weight_distribution_brute_force(ctx, d) : weight_distribution_via_walsh(ctx, d)));
            return kOk;
        }

        if (*classify) {
            json all = json::array();
            for (unsigned deg : degrees(2)) {
                const FieldCtx ctx(p, deg);
                auto cache = open_cache(common, ctx);
                const auto classes = canonical_classes(ctx, cache.get());
                json buckets = json::object();
                for (const auto& [t, reps] : classify_by_value_count(classes)) buckets[std::to_string(t)] = reps_json(reps);
                all.push_back({{"p", p}, {"n", deg}, {"classes", classes.size()}, {"by_value_count", buckets}});
            }
            emit(all);
            return kOk;
        }

        if (*conjecture) {
            json all = json::array();
            bool holds = true;
            for (unsigned deg : degrees(kind == "niho-form" ? 3 : 2)) {
                if (kind == "niho-form") {
                    if (deg % 2 == 0) continue;
                    const FieldCtx ctx(2, deg);
                    json js = json::object();
                    for (const auto& [j, t] : niho_form_search(ctx)) js[std::to_string(j)] = t;
                    all.push_back({{"n", deg}, {"value_count_by_j", js}});
                    continue;
                }
                const FieldCtx ctx(p, deg);
                auto cache = open_cache(common, ctx);
                const auto classes = canonical_classes(ctx, cache.get());
                if (kind == "minus-one") {
                    const MinusOneReport r = check_minus_one(ctx, classes);
                    holds = holds && r.holds();
                    all.push_back({{"p", p},
                                   {"n", deg},
                                   {"classes_checked", r.classes_checked},
                                   {"decimations_covered", r.decimations_covered},
                                   {"counterexamples", reps_json(r.counterexamples)},
                                   {"holds", r.holds()}});
                } else {
                    const ThreeValuedReport r = three_valued_completeness(ctx, classes);
                    holds = holds && r.exact_match();
                    all.push_back({{"p", p},
                                   {"n", deg},
                                   {"found", reps_json(r.found)},
                                   {"predicted", reps_json(r.predicted)},
                                   {"unexplained", reps_json(r.unexplained)},
                                   {"missing", reps_json(r.missing)},
                                   {"exact_match", r.exact_match()}});
                }
            }
            emit(all);
            return holds ? kOk : kFinding;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kOk;
}
