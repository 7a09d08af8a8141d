/**************************************************************************
 * lfsr.hpp
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

#include "mseq/gf.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace mseq {

enum class SequenceOrigin { Trace, Recursion, Decimation };

/// One period of a p-ary m-sequence.
struct MSeq {
    unsigned p = 2;
    unsigned n = 1;
    std::vector<std::uint8_t> symbols;
    SequenceOrigin origin = SequenceOrigin::Trace;
    FieldSpec generator;                  // characteristic polynomial of the source
    std::vector<unsigned> initial_state;  // recursion only
    u64 decimation = 1;                   // decimation only
    /// tau with symbols[t] = Tr(alpha^{t + tau}) for the generator's trace form, when known.
    std::optional<u64> trace_phase;

    u64 period() const noexcept { return symbols.size(); }
};

/// s_t = Tr(alpha^t).
MSeq generate_trace(const FieldCtx& ctx);

/// Runs s_{t+n} = -(c_{n-1}s_{t+n-1} + ... + c_0 s_t) from (s_0, ..., s_{n-1}).
/// Throws Error(ZeroState) for the all-zero state. The result's trace_phase aligns it
/// to the trace form of the same polynomial.
MSeq generate_recursion(const FieldSpec& spec, std::span<const unsigned> initial_state);

/// symbols'[t] = symbols[d t mod period]; throws Error(NotCoprime) unless gcd(d, period) = 1.
MSeq decimate(const MSeq& seq, u64 d);

/// Smallest shift tau with a[t] = b[t + tau] for all t, if any.
std::optional<u64> cyclic_shift_between(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);

/// Shortest LFSR length generating the (finite) sequence, by Berlekamp-Massey over GF(p).
unsigned linear_complexity(std::span<const std::uint8_t> seq, unsigned p);

struct RunHistogram {
    std::vector<u64> zeros; // zeros[k] = runs of 0s with length k
    std::vector<u64> ones;
    u64 total() const;
};

struct GolombReport {
    bool span = false;
    bool decimation = false;
    bool shift_and_subtract = false;
    bool balance = false;
    bool ideal_autocorrelation = false;
    std::optional<bool> run; // binary sequences only
    RunHistogram runs;

    bool all() const { return span && decimation && shift_and_subtract && balance && ideal_autocorrelation && run.value_or(true); }
};

/// Checks the six classical m-sequence properties on one period of a sequence over GF(p)
/// assumed to come from a degree-n recursion.
GolombReport check_golomb(std::span<const std::uint8_t> seq, unsigned p, unsigned n);
inline GolombReport check_golomb(const MSeq& seq) { return check_golomb(seq.symbols, seq.p, seq.n); }

/// Cyclic run-length histogram of a binary sequence.
RunHistogram binary_runs(std::span<const std::uint8_t> seq);

} // namespace mseq
