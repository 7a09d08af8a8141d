/**************************************************************************
 * search.cpp
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

#include "mseq/search.hpp"

#include "mseq/error.hpp"
#include "mseq/families.hpp"
#include "mseq/json_io.hpp"
#include "mseq/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>

namespace mseq {

namespace fs = std::filesystem;

SpectrumCache::SpectrumCache(fs::path dir, const FieldSpec& spec) {
    std::string name = "p" + std::to_string(spec.p) + "_n" + std::to_string(spec.n) + "_c";
    for (unsigned c : spec.coeffs) name += std::to_string(c) + (spec.p > 9 ? "." : "");
    fs::create_directories(dir);
    file_ = dir / (name + ".jsonl");
    std::ifstream in(file_);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            SpectrumTable t = spectrum_from_json(json::parse(line));
            if (t.p == spec.p && t.n == spec.n) tables_[t.d] = std::move(t);
        } catch (const std::exception&) {
            // a torn trailing line from an interrupted run; the entry is recomputed
        }
    }
}

std::optional<SpectrumTable> SpectrumCache::get(u64 d) const {
    std::lock_guard lock(mu_);
    const auto it = tables_.find(d);
    if (it == tables_.end()) return std::nullopt;
    return it->second;
}

void SpectrumCache::put(const SpectrumTable& table) {
    std::lock_guard lock(mu_);
    if (!tables_.emplace(table.d, table).second) return;
    std::ofstream out(file_, std::ios::app);
    out << to_json(table).dump() << '\n';
}

std::size_t SpectrumCache::size() const {
    std::lock_guard lock(mu_);
    return tables_.size();
}

std::optional<fs::path> default_cache_dir() {
    const char* env = std::getenv("MSEQ_CACHE_DIR");
    if (env == nullptr || *env == '\0') return std::nullopt;
    return fs::path(env);
}

namespace {

std::vector<u64> class_members(unsigned p, unsigned n, u64 d) {
    const u64 g = ipow(p, n) - 1;
    std::set<u64> out;
    u64 a = d % g, b = inverse_mod(d % g, g);
    for (unsigned j = 0; j < n; ++j) {
        out.insert(a);
        out.insert(b);
        a = mul_mod(a, p, g);
        b = mul_mod(b, p, g);
    }
    return {out.begin(), out.end()};
}

} // namespace

u64 class_representative(unsigned p, unsigned n, u64 d) { return class_members(p, n, d).front(); }

bool is_degenerate(unsigned p, unsigned n, u64 d) {
    const u64 g = ipow(p, n) - 1;
    u64 pw = 1 % g;
    for (unsigned j = 0; j < n; ++j) {
        if (pw == d % g) return true;
        pw = mul_mod(pw, p, g);
    }
    return false;
}

std::vector<DecimationClass> canonical_classes(const FieldCtx& ctx, SpectrumCache* cache) {
    const unsigned p = ctx.p(), n = ctx.n();
    const u64 g = ctx.group_order();
    std::vector<DecimationClass> classes;
    std::vector<std::uint8_t> seen(g, 0);
    for (u64 d = 1; d < g; ++d) {
        if (seen[d] || gcd_u64(d, g) != 1) continue;
        auto members = class_members(p, n, d);
        for (u64 m : members) seen[m] = 1;
        if (is_degenerate(p, n, d)) continue;
        DecimationClass c;
        c.representative = d;
        c.members = std::move(members);
        classes.push_back(std::move(c));
    }
    parallel_for(0, classes.size(), [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            auto& c = classes[i];
            if (cache) {
                if (auto hit = cache->get(c.representative)) {
                    c.spectrum = std::move(*hit);
                    continue;
                }
            }
            c.spectrum = spectrum(ctx, c.representative, Method::Fast);
            if (cache) cache->put(c.spectrum);
        }
    }, 1);
    return classes;
}

std::map<std::size_t, std::vector<u64>> classify_by_value_count(const std::vector<DecimationClass>& classes) {
    std::map<std::size_t, std::vector<u64>> out;
    for (const auto& c : classes) out[c.value_count()].push_back(c.representative);
    return out;
}

MinusOneReport check_minus_one(const FieldCtx& ctx, const std::vector<DecimationClass>& classes) {
    MinusOneReport r;
    r.p = ctx.p();
    r.n = ctx.n();
    const CycInt minus_one(ctx.p(), mpz_class(-1));
    const u64 pm1 = ctx.p() - 1;
    for (const auto& c : classes) {
        if (c.representative % pm1 != 1 % pm1) continue;
        ++r.classes_checked;
        r.decimations_covered += c.members.size();
        if (!c.spectrum.entries.contains(minus_one)) r.counterexamples.push_back(c.representative);
    }
    // degenerate decimations: C = -1 at every nonzero shift
    r.decimations_covered += class_members(ctx.p(), ctx.n(), 1).size();
    return r;
}

ThreeValuedReport three_valued_completeness(const FieldCtx& ctx, const std::vector<DecimationClass>& classes) {
    ThreeValuedReport r;
    const unsigned p = ctx.p(), n = ctx.n();
    r.p = p;
    r.n = n;
    std::set<u64> found, predicted;
    for (const auto& c : classes)
        if (c.value_count() == 3) found.insert(c.representative);
    for (const auto& family : catalog()) {
        if (!family.rows || family.status != FamilyStatus::ProvedDistribution) continue;
        for (const auto& params : family.admissible_params(p, n)) {
            try {
                const Prediction pred = predicted_spectrum(family, p, n, params);
                if (pred.table && pred.table->value_count() == 3 && !is_degenerate(p, n, pred.d))
                    predicted.insert(class_representative(p, n, pred.d));
            } catch (const Error&) {
                // parameter point excluded by coprimality or a non-integral count
            }
        }
    }
    r.found.assign(found.begin(), found.end());
    r.predicted.assign(predicted.begin(), predicted.end());
    std::set_difference(found.begin(), found.end(), predicted.begin(), predicted.end(), std::back_inserter(r.unexplained));
    std::set_difference(predicted.begin(), predicted.end(), found.begin(), found.end(), std::back_inserter(r.missing));
    return r;
}

std::map<unsigned, std::size_t> niho_form_search(const FieldCtx& ctx) {
    const unsigned p = ctx.p(), n = ctx.n();
    if (p != 2 || n % 2 == 0) throw Error(Errc::OutOfDomain, "the Niho form search needs p = 2 and n odd");
    const u64 g = ctx.group_order();
    std::map<unsigned, std::size_t> out;
    for (unsigned j = 1; j < n; ++j) {
        const u64 d = ((u64{1} << ((n - 1) / 2)) + (u64{1} << j) - 1) % g;
        if (gcd_u64(d, g) != 1 || is_degenerate(p, n, d)) continue;
        out[j] = spectrum(ctx, d, Method::Fast).value_count();
    }
    return out;
}

} // namespace mseq
