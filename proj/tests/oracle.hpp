/**************************************************************************
 * oracle.hpp
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

// Slow reference implementations for tests. Nothing here touches the library:
// polynomials are plain coefficient vectors and every sum is evaluated by definition.

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace oracle {

using Poly = std::vector<unsigned>; // c_0 .. c_{n-1}; element coefficients of 1, x, ..., x^{n-1}

inline std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

/// GF(p^n) as GF(p)[x]/(x^n + c_{n-1}x^{n-1} + ... + c_0), elements as coefficient vectors.
struct Field {
    unsigned p, n;
    Poly modulus;

    Poly zero() const { return Poly(n, 0); }
    Poly one() const {
        Poly r(n, 0);
        r[0] = 1 % p;
        return r;
    }
    Poly x() const {
        Poly r(n, 0);
        if (n == 1) r[0] = (p - modulus[0]) % p;
        else r[1] = 1;
        return r;
    }
    Poly add(const Poly& a, const Poly& b) const {
        Poly r(n);
        for (unsigned i = 0; i < n; ++i) r[i] = (a[i] + b[i]) % p;
        return r;
    }
    Poly sub(const Poly& a, const Poly& b) const {
        Poly r(n);
        for (unsigned i = 0; i < n; ++i) r[i] = (a[i] + p - b[i]) % p;
        return r;
    }
    Poly scale(const Poly& a, unsigned c) const {
        Poly r(n);
        for (unsigned i = 0; i < n; ++i) r[i] = a[i] * c % p;
        return r;
    }
    Poly mul(const Poly& a, const Poly& b) const {
        std::vector<unsigned> prod(2 * n, 0);
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
        for (unsigned k = 2 * n - 1; k >= n; --k) {
            const unsigned top = prod[k];
            if (!top) continue;
            prod[k] = 0;
            for (unsigned i = 0; i < n; ++i) prod[k - n + i] = (prod[k - n + i] + p * p - top * modulus[i] % p) % p;
        }
        return Poly(prod.begin(), prod.begin() + n);
    }
    Poly pow(Poly a, std::uint64_t e) const {
        Poly r = one();
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    unsigned trace(const Poly& a) const {
        Poly acc = zero(), y = a;
        for (unsigned i = 0; i < n; ++i) {
            acc = add(acc, y);
            y = pow(y, p);
        }
        for (unsigned i = 1; i < n; ++i)
            if (acc[i]) throw std::logic_error("trace left the prime field");
        return acc[0];
    }
    bool is_zero(const Poly& a) const {
        for (unsigned c : a)
            if (c) return false;
        return true;
    }
    std::uint64_t order() const { return ipow(p, n); }
    /// Index of a as a base-p number with c_0 least significant.
    std::uint64_t index(const Poly& a) const {
        std::uint64_t v = 0;
        for (unsigned i = n; i-- > 0;) v = v * p + a[i];
        return v;
    }
    Poly from_index(std::uint64_t v) const {
        Poly r(n);
        for (unsigned i = 0; i < n; ++i) {
            r[i] = static_cast<unsigned>(v % p);
            v /= p;
        }
        return r;
    }
};

/// Multiplicative order of x by repeated multiplication.
inline bool primitive_by_order(unsigned p, unsigned n, const Poly& coeffs) {
    if (coeffs[0] == 0) return false;
    const Field f{p, n, coeffs};
    const std::uint64_t g = f.order() - 1;
    Poly y = f.x();
    for (std::uint64_t e = 1; e < g; ++e) {
        if (y == f.one()) return false;
        y = f.mul(y, f.x());
    }
    return y == f.one();
}

/// Least (c_{n-1}, ..., c_0) in lexicographic order that is primitive.
inline Poly least_primitive(unsigned p, unsigned n) {
    const std::uint64_t total = ipow(p, n);
    for (std::uint64_t v = 0; v < total; ++v) {
        // v enumerates (c_{n-1}, ..., c_0) with c_0 least significant
        Poly c(n);
        std::uint64_t t = v;
        for (unsigned i = 0; i < n; ++i) {
            c[i] = static_cast<unsigned>(t % p);
            t /= p;
        }
        if (primitive_by_order(p, n, c)) return c;
    }
    throw std::logic_error("no primitive polynomial");
}

/// s_t = Tr(x^t) for the canonical polynomial.
inline std::vector<unsigned> trace_sequence(unsigned p, unsigned n) {
    const Field f{p, n, least_primitive(p, n)};
    const std::uint64_t g = f.order() - 1;
    std::vector<unsigned> s(g);
    Poly y = f.one();
    for (std::uint64_t t = 0; t < g; ++t) {
        s[t] = f.trace(y);
        y = f.mul(y, f.x());
    }
    return s;
}

/// Integer-valued crosscorrelation spectrum by definition; throws if some value is not an integer.
inline std::map<long, std::uint64_t> spectrum(unsigned p, const std::vector<unsigned>& s, std::uint64_t d) {
    const std::uint64_t g = s.size();
    std::map<long, std::uint64_t> out;
    std::vector<long> counts(p);
    for (std::uint64_t tau = 0; tau < g; ++tau) {
        std::fill(counts.begin(), counts.end(), 0);
        for (std::uint64_t t = 0; t < g; ++t) counts[(s[(t + tau) % g] + p - s[(d % g) * t % g]) % p] += 1;
        for (unsigned j = 2; j < p; ++j)
            if (counts[j] != counts[1]) throw std::logic_error("non-integral correlation value");
        out[counts[0] - counts[1]] += 1;
    }
    return out;
}

/// Spectrum keyed by coordinates in the basis 1, w, ..., w^{p-2} (one coordinate for p = 2).
inline std::map<std::vector<long>, std::uint64_t> spectrum_coords(unsigned p, const std::vector<unsigned>& s, std::uint64_t d) {
    const std::uint64_t g = s.size();
    std::map<std::vector<long>, std::uint64_t> out;
    std::vector<long> counts(p);
    for (std::uint64_t tau = 0; tau < g; ++tau) {
        std::fill(counts.begin(), counts.end(), 0);
        for (std::uint64_t t = 0; t < g; ++t) counts[(s[(t + tau) % g] + p - s[(d % g) * t % g]) % p] += 1;
        // w^{p-1} = -(1 + w + ... + w^{p-2})
        std::vector<long> key(p == 2 ? 1 : p - 1);
        if (p == 2) key[0] = counts[0] - counts[1];
        else
            for (unsigned j = 0; j + 1 < p; ++j) key[j] = counts[j] - counts[p - 1];
        out[key] += 1;
    }
    return out;
}

inline std::map<long, std::uint64_t> spectrum(unsigned p, unsigned n, std::uint64_t d) {
    return spectrum(p, trace_sequence(p, n), d);
}

inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

} // namespace oracle
