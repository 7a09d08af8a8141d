/**************************************************************************
 * search.hpp
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

#include "mseq/spectra.hpp"

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

namespace mseq {

/// On-disk spectrum store: one JSON-lines file per (p, n, modulus), one SpectrumTable per line.
class SpectrumCache {
public:
    SpectrumCache(std::filesystem::path dir, const FieldSpec& spec);

    std::optional<SpectrumTable> get(u64 d) const;
    /// Records the table in memory and appends it to the file.
    void put(const SpectrumTable& table);
    const std::filesystem::path& file() const noexcept { return file_; }
    std::size_t size() const;

private:
    std::filesystem::path file_;
    mutable std::mutex mu_;
    std::map<u64, SpectrumTable> tables_;
};

/// Directory named by MSEQ_CACHE_DIR, if set and nonempty.
std::optional<std::filesystem::path> default_cache_dir();

struct DecimationClass {
    u64 representative = 0;
    std::vector<u64> members; // sorted
    SpectrumTable spectrum;
    std::size_t value_count() const { return spectrum.value_count(); }
};

/// min over {d p^j} and {d^{-1} p^j} mod p^n - 1.
u64 class_representative(unsigned p, unsigned n, u64 d);

/// True when d is congruent to a power of p mod p^n - 1.
bool is_degenerate(unsigned p, unsigned n, u64 d);

/// Partitions the coprime nondegenerate d into classes, one spectrum per class, ordered by representative.
std::vector<DecimationClass> canonical_classes(const FieldCtx& ctx, SpectrumCache* cache = nullptr);

/// value count -> class representatives.
std::map<std::size_t, std::vector<u64>> classify_by_value_count(const std::vector<DecimationClass>& classes);

struct MinusOneReport {
    unsigned p = 2, n = 1;
    u64 classes_checked = 0;
    u64 decimations_covered = 0;   // members of checked classes plus the degenerate ones
    std::vector<u64> counterexamples; // class representatives without the value -1
    bool holds() const { return counterexamples.empty(); }
};

/// Every coprime d = 1 mod p-1 must have W_d(a) = 0 for some a != 0.
MinusOneReport check_minus_one(const FieldCtx& ctx, const std::vector<DecimationClass>& classes);

struct ThreeValuedReport {
    unsigned p = 2, n = 1;
    std::vector<u64> found;       // representatives of three-valued classes
    std::vector<u64> predicted;   // representatives of catalog decimations with a three-valued distribution
    std::vector<u64> unexplained; // found, not predicted
    std::vector<u64> missing;     // predicted, not found
    bool exact_match() const { return unexplained.empty() && missing.empty(); }
};

ThreeValuedReport three_valued_completeness(const FieldCtx& ctx, const std::vector<DecimationClass>& classes);

/// For odd n: j -> number of spectrum values of 2^{(n-1)/2} + 2^j - 1 (coprime, nondegenerate j only).
std::map<unsigned, std::size_t> niho_form_search(const FieldCtx& ctx);

} // namespace mseq
