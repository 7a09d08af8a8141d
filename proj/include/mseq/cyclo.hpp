/**************************************************************************
 * cyclo.hpp
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

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mseq {

/// Exact element of Z[w], w = exp(2 pi i / p), stored in the basis 1, w, ..., w^{p-2}.
/// The representation is unique, so == and < compare values.
class CycInt {
public:
    CycInt() : CycInt(2) {}
    explicit CycInt(unsigned p);
    CycInt(unsigned p, const mpz_class& integer);

    /// sum_j counts[j] * w^j for a length-p count vector.
    static CycInt from_counts(unsigned p, std::span<const i64> counts);
    static CycInt from_counts(unsigned p, std::span<const mpz_class> counts);
    /// w^k.
    static CycInt root_power(unsigned p, i64 k);
    /// Coordinates in the reduced basis; coords.size() must be p - 1 (or 1 when p = 2).
    static CycInt from_coords(unsigned p, std::vector<mpz_class> coords);

    unsigned p() const noexcept { return p_; }
    const std::vector<mpz_class>& coords() const noexcept { return coords_; }

    bool is_rational() const noexcept;
    std::optional<mpz_class> try_integer() const;
    /// Throws Error(NotRational) unless the value lies in Z.
    mpz_class as_integer() const;
    /// w -> w^{-1}; fixes exactly the real values.
    CycInt conjugate() const;
    bool is_real() const { return conjugate() == *this; }

    CycInt pow(unsigned exponent) const;
    /// Exact division by an integer; throws Error(InvalidArgument) if some coordinate is not divisible.
    CycInt divexact(const mpz_class& divisor) const;

    /// Floating-point evaluation, for diagnostics only.
    std::complex<double> approx() const;
    std::string to_string() const;

    CycInt& operator+=(const CycInt& rhs);
    CycInt& operator-=(const CycInt& rhs);
    CycInt& operator*=(const CycInt& rhs);

    friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
    friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
    friend CycInt operator*(CycInt a, const CycInt& b) { return a *= b; }
    CycInt operator-() const;

    friend bool operator==(const CycInt& a, const CycInt& b) { return a.p_ == b.p_ && a.coords_ == b.coords_; }

private:
    void check_same_ring(const CycInt& other) const;

    unsigned p_;
    std::vector<mpz_class> coords_;
};

/// Canonical order: rational values first by integer value, then the rest by coordinates.
bool operator<(const CycInt& a, const CycInt& b);

} // namespace mseq
