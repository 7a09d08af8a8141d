/**************************************************************************
 * cyclo.cpp
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

#include "mseq/cyclo.hpp"

#include "mseq/error.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace mseq {

namespace {

std::size_t basis_size(unsigned p) { return p == 2 ? 1 : p - 1; }

// Reduce a length-p vector of coefficients of 1..w^{p-1} into basis coordinates.
std::vector<mpz_class> reduce_full(unsigned p, std::vector<mpz_class> full) {
    const mpz_class top = full[p - 1];
    full.resize(basis_size(p));
    if (top != 0)
        for (auto& c : full) c -= top;
    return full;
}

} // namespace

CycInt::CycInt(unsigned p) : p_(p), coords_(basis_size(p)) {
    if (p < 2) throw Error(Errc::InvalidArgument, "root order must be >= 2");
}

CycInt::CycInt(unsigned p, const mpz_class& integer) : CycInt(p) { coords_[0] = integer; }

CycInt CycInt::from_counts(unsigned p, std::span<const i64> counts) {
    if (counts.size() != p) throw Error(Errc::InvalidArgument, "from_counts needs p counts");
    CycInt out(p);
    const i64 top = counts[p - 1];
    for (std::size_t j = 0; j < out.coords_.size(); ++j) out.coords_[j] = static_cast<long>(counts[j] - top);
    return out;
}

CycInt CycInt::from_counts(unsigned p, std::span<const mpz_class> counts) {
    if (counts.size() != p) throw Error(Errc::InvalidArgument, "from_counts needs p counts");
    CycInt out(p);
    out.coords_ = reduce_full(p, {counts.begin(), counts.end()});
    return out;
}

CycInt CycInt::root_power(unsigned p, i64 k) {
    std::vector<mpz_class> full(p);
    full[reduce_mod(k, p)] = 1;
    CycInt out(p);
    out.coords_ = reduce_full(p, std::move(full));
    return out;
}

CycInt CycInt::from_coords(unsigned p, std::vector<mpz_class> coords) {
    CycInt out(p);
    if (coords.size() != out.coords_.size()) throw Error(Errc::InvalidArgument, "wrong number of coordinates");
    out.coords_ = std::move(coords);
    return out;
}

bool CycInt::is_rational() const noexcept {
    for (std::size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return false;
    return true;
}

std::optional<mpz_class> CycInt::try_integer() const {
    if (!is_rational()) return std::nullopt;
    return coords_[0];
}

mpz_class CycInt::as_integer() const {
    if (!is_rational()) throw Error(Errc::NotRational, to_string() + " is not a rational integer");
    return coords_[0];
}

CycInt CycInt::conjugate() const {
    if (p_ == 2) return *this;
    std::vector<mpz_class> full(p_);
    for (std::size_t j = 0; j < coords_.size(); ++j) full[(p_ - j) % p_] = coords_[j];
    CycInt out(p_);
    out.coords_ = reduce_full(p_, std::move(full));
    return out;
}

CycInt CycInt::pow(unsigned exponent) const {
    CycInt result(p_, 1), base = *this;
    while (exponent) {
        if (exponent & 1) result *= base;
        exponent >>= 1;
        if (exponent) base *= base;
    }
    return result;
}

CycInt CycInt::divexact(const mpz_class& divisor) const {
    if (divisor == 0) throw Error(Errc::InvalidArgument, "division by zero");
    CycInt out(p_);
    for (std::size_t j = 0; j < coords_.size(); ++j) {
        if (!mpz_divisible_p(coords_[j].get_mpz_t(), divisor.get_mpz_t()))
            throw Error(Errc::InvalidArgument, to_string() + " is not divisible by " + divisor.get_str());
        mpz_divexact(out.coords_[j].get_mpz_t(), coords_[j].get_mpz_t(), divisor.get_mpz_t());
    }
    return out;
}

std::complex<double> CycInt::approx() const {
    std::complex<double> acc = 0;
    for (std::size_t j = 0; j < coords_.size(); ++j) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / p_;
        acc += coords_[j].get_d() * std::polar(1.0, angle);
    }
    return acc;
}

std::string CycInt::to_string() const {
    if (is_rational()) return coords_[0].get_str();
    std::ostringstream os;
    os << "[";
    for (std::size_t j = 0; j < coords_.size(); ++j) os << (j ? "," : "") << coords_[j].get_str();
    os << "]_w" << p_;
    return os.str();
}

void CycInt::check_same_ring(const CycInt& other) const {
    if (p_ != other.p_) throw Error(Errc::InvalidArgument, "mixed cyclotomic rings");
}

CycInt& CycInt::operator+=(const CycInt& rhs) {
    check_same_ring(rhs);
    for (std::size_t j = 0; j < coords_.size(); ++j) coords_[j] += rhs.coords_[j];
    return *this;
}

CycInt& CycInt::operator-=(const CycInt& rhs) {
    check_same_ring(rhs);
    for (std::size_t j = 0; j < coords_.size(); ++j) coords_[j] -= rhs.coords_[j];
    return *this;
}

CycInt& CycInt::operator*=(const CycInt& rhs) {
    check_same_ring(rhs);
    if (p_ == 2) {
        coords_[0] *= rhs.coords_[0];
        return *this;
    }
    std::vector<mpz_class> full(p_);
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coords_.size(); ++j) full[(i + j) % p_] += coords_[i] * rhs.coords_[j];
    }
    coords_ = reduce_full(p_, std::move(full));
    return *this;
}

CycInt CycInt::operator-() const {
    CycInt out(p_);
    for (std::size_t j = 0; j < coords_.size(); ++j) out.coords_[j] = -coords_[j];
    return out;
}

bool operator<(const CycInt& a, const CycInt& b) {
    if (a.p() != b.p()) return a.p() < b.p();
    const bool ra = a.is_rational(), rb = b.is_rational();
    if (ra != rb) return ra;
    return a.coords() < b.coords();
}

} // namespace mseq
