/**************************************************************************
 * gf.cpp
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

#include "mseq/gf.hpp"

#include "mseq/error.hpp"

#include <bit>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

namespace mseq {

namespace {

// Polynomials over GF(p) reduced modulo a monic degree-n modulus; coefficient i is x^i.
class PolyRing {
public:
    PolyRing(unsigned p, std::span<const unsigned> coeffs) : p_(p), mod_(coeffs.begin(), coeffs.end()) {}

    std::vector<unsigned> mul(const std::vector<unsigned>& a, const std::vector<unsigned>& b) const {
        const std::size_t n = mod_.size();
        std::vector<u64> prod(2 * n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            if (!a[i]) continue;
            for (std::size_t j = 0; j < n; ++j) prod[i + j] += u64{a[i]} * b[j];
        }
        for (auto& v : prod) v %= p_;
        // x^n = -(c_0 + ... + c_{n-1} x^{n-1})
        for (std::size_t k = 2 * n - 1; k >= n; --k) {
            const u64 top = prod[k];
            if (!top) continue;
            prod[k] = 0;
            for (std::size_t i = 0; i < n; ++i)
                prod[k - n + i] = (prod[k - n + i] + (p_ - top) * mod_[i]) % p_;
        }
        return {prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(n)};
    }

    std::vector<unsigned> pow_x(u64 e) const {
        const std::size_t n = mod_.size();
        std::vector<unsigned> result(n, 0), base(n, 0);
        result[0] = 1;
        if (n == 1)
            base[0] = (p_ - mod_[0]) % p_;
        else
            base[1] = 1;
        while (e) {
            if (e & 1) result = mul(result, base);
            base = mul(base, base);
            e >>= 1;
        }
        return result;
    }

    static bool is_one(const std::vector<unsigned>& v) {
        if (v[0] != 1) return false;
        for (std::size_t i = 1; i < v.size(); ++i)
            if (v[i]) return false;
        return true;
    }

private:
    u64 p_;
    std::vector<unsigned> mod_;
};

void check_field_parameters(unsigned p, unsigned n, u64 bound) {
    if (!is_small_prime(p)) throw Error(Errc::CompositeP, std::to_string(p) + " is not a prime below 2^16");
    if (n == 0) throw Error(Errc::InvalidArgument, "extension degree must be >= 1");
    u64 q = 1;
    for (unsigned i = 0; i < n; ++i) {
        q *= p;
        if (q > bound)
            throw Error(Errc::TooLarge, std::to_string(p) + "^" + std::to_string(n) + " exceeds " +
                                            std::to_string(bound));
    }
}

std::mutex g_override_mutex;
std::map<std::pair<unsigned, unsigned>, FieldSpec> g_overrides;

} // namespace

bool is_small_prime(unsigned p) noexcept {
    if (p < 2 || p >= (1u << 16)) return false;
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::string FieldSpec::polynomial_string() const {
    std::ostringstream os;
    os << "x^" << n;
    for (unsigned i = n; i-- > 0;) {
        const unsigned c = coeffs.at(i);
        if (!c) continue;
        os << " + ";
        if (c != 1 || i == 0) os << c;
        if (i >= 1) os << "x";
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

bool is_primitive(unsigned p, unsigned n, std::span<const unsigned> coeffs) {
    check_field_parameters(p, n, kMaxArithmeticOrder);
    if (coeffs.size() != n) throw Error(Errc::InvalidArgument, "expected n coefficients c_0..c_{n-1}");
    for (unsigned c : coeffs)
        if (c >= p) throw Error(Errc::InvalidArgument, "coefficient out of range for GF(p)");
    if (coeffs[0] == 0) return false;
    const u64 group = ipow(p, n) - 1;
    PolyRing ring(p, coeffs);
    if (!PolyRing::is_one(ring.pow_x(group))) return false;
    for (u64 r : distinct_prime_factors(group)) {
        if (PolyRing::is_one(ring.pow_x(group / r))) return false;
    }
    return true;
}

FieldSpec find_primitive_polynomial(unsigned p, unsigned n) {
    check_field_parameters(p, n, kMaxArithmeticOrder);
    const u64 candidates = ipow(p, n);
    std::vector<unsigned> coeffs(n);
    // idx enumerates (c_{n-1}, ..., c_0) with c_{n-1} as the most significant digit.
    for (u64 idx = 0; idx < candidates; ++idx) {
        u64 v = idx;
        for (unsigned i = 0; i < n; ++i) {
            coeffs[i] = static_cast<unsigned>(v % p);
            v /= p;
        }
        if (coeffs[0] == 0) continue;
        if (is_primitive(p, n, coeffs)) return FieldSpec{p, n, coeffs};
    }
    throw Error(Errc::FactorizationFailure, "no primitive polynomial found");
}

void load_modulus_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::ParseError, "cannot open modulus file " + path);
    std::map<std::pair<unsigned, unsigned>, FieldSpec> loaded;
    std::string line;
    unsigned lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        FieldSpec spec;
        if (!(ls >> spec.p)) continue;
        if (!(ls >> spec.n)) throw Error(Errc::ParseError, path + ":" + std::to_string(lineno) + ": missing n");
        spec.coeffs.resize(spec.n);
        for (auto& c : spec.coeffs)
            if (!(ls >> c))
                throw Error(Errc::ParseError, path + ":" + std::to_string(lineno) + ": expected n coefficients");
        std::string extra;
        if (ls >> extra) throw Error(Errc::ParseError, path + ":" + std::to_string(lineno) + ": trailing input");
        if (!is_primitive(spec.p, spec.n, spec.coeffs))
            throw Error(Errc::ParseError, path + ":" + std::to_string(lineno) + ": polynomial is not primitive");
        loaded[{spec.p, spec.n}] = spec;
    }
    std::lock_guard lock(g_override_mutex);
    for (auto& [key, spec] : loaded) g_overrides[key] = spec;
}

void clear_modulus_overrides() {
    std::lock_guard lock(g_override_mutex);
    g_overrides.clear();
}

FieldSpec canonical_field_spec(unsigned p, unsigned n) {
    {
        std::lock_guard lock(g_override_mutex);
        if (auto it = g_overrides.find({p, n}); it != g_overrides.end()) return it->second;
    }
    return find_primitive_polynomial(p, n);
}

FieldCtx::FieldCtx(unsigned p, unsigned n) : FieldCtx(canonical_field_spec(p, n)) {}

FieldCtx::FieldCtx(FieldSpec spec) : spec_(std::move(spec)) {
    const unsigned p = spec_.p, n = spec_.n;
    check_field_parameters(p, n, kMaxTableOrder);
    if (spec_.coeffs.size() != n) throw Error(Errc::InvalidArgument, "expected n coefficients c_0..c_{n-1}");
    if (spec_.coeffs[0] == 0) throw Error(Errc::InvalidArgument, "c_0 must be nonzero");
    if (!is_primitive(p, n, spec_.coeffs))
        throw Error(Errc::InvalidArgument, spec_.polynomial_string() + " is not primitive");

    q_ = ipow(p, n);
    pow_p_.resize(n + 1);
    pow_p_[0] = 1;
    for (unsigned i = 1; i <= n; ++i) pow_p_[i] = pow_p_[i - 1] * p;

    const u64 group = q_ - 1;
    exp_.resize(group);
    log_.assign(q_, Elem::kZeroLog);

    std::uint32_t v = 1;
    if (p == 2) {
        std::uint32_t low = 0;
        for (unsigned i = 0; i < n; ++i) low |= static_cast<std::uint32_t>(spec_.coeffs[i]) << i;
        const std::uint32_t top = std::uint32_t{1} << n;
        for (u64 i = 0; i < group; ++i) {
            exp_[i] = v;
            v <<= 1;
            if (v & top) v = (v ^ top) ^ low;
        }
    } else {
        std::uint32_t modpacked = 0;
        for (unsigned i = 0; i < n; ++i) modpacked += spec_.coeffs[i] * pow_p_[i];
        for (u64 i = 0; i < group; ++i) {
            exp_[i] = v;
            const std::uint32_t top = v / pow_p_[n - 1];
            std::uint32_t shifted = (v % pow_p_[n - 1]) * p;
            // subtract top * modulus, digitwise
            std::uint32_t out = 0;
            for (unsigned k = 0; k < n; ++k) {
                const unsigned a = (shifted / pow_p_[k]) % p;
                const unsigned c = (modpacked / pow_p_[k]) % p;
                out += ((a + (p - (top * c) % p)) % p) * pow_p_[k];
            }
            v = out;
        }
    }
    for (u64 i = 0; i < group; ++i) log_[exp_[i]] = static_cast<std::uint32_t>(i);

    zech_.resize(group);
    for (u64 i = 0; i < group; ++i) zech_[i] = log_[add_packed(exp_[i], 1)];

    // Tr(alpha^k) for the polynomial basis, then extend linearly.
    trace_of_basis_.resize(n);
    for (unsigned k = 0; k < n; ++k) {
        std::uint32_t acc = 0;
        u64 e = k;
        for (unsigned j = 0; j < n; ++j) {
            acc = add_packed(acc, exp_[e % group]);
            e = (e * p) % group;
        }
        if (acc >= p) throw Error(Errc::InvalidArgument, "trace left the prime field; table construction bug");
        trace_of_basis_[k] = acc;
        if (p == 2 && acc) trace_mask_ |= std::uint32_t{1} << k;
    }
    seq_.resize(group);
    for (u64 t = 0; t < group; ++t) seq_[t] = static_cast<std::uint8_t>(trace_packed(exp_[t]));
}

Elem FieldCtx::from_int(i64 v) const {
    const u64 r = reduce_mod(v, p());
    return r == 0 ? zero() : from_packed(static_cast<std::uint32_t>(r));
}

Elem FieldCtx::inv(Elem a) const {
    if (a.is_zero()) throw Error(Errc::NotInvertible, "zero has no inverse");
    return Elem{static_cast<std::uint32_t>(a.log == 0 ? 0 : (q_ - 1) - a.log)};
}

Elem FieldCtx::div(Elem a, Elem b) const { return mul(a, inv(b)); }

Elem FieldCtx::pow(Elem a, i64 e) const noexcept {
    if (e == 0) return one();
    if (a.is_zero()) return zero();
    const u64 g = q_ - 1;
    const u64 er = reduce_mod(e, g);
    return Elem{static_cast<std::uint32_t>(mul_mod(a.log, er, g))};
}

Elem FieldCtx::frobenius(Elem a, unsigned k) const noexcept {
    if (a.is_zero()) return a;
    const u64 g = q_ - 1;
    return Elem{static_cast<std::uint32_t>(mul_mod(a.log, pow_mod(p(), k, g), g))};
}

Elem FieldCtx::relative_trace(Elem a, unsigned m) const {
    if (m == 0 || n() % m != 0)
        throw Error(Errc::NotASubfield, "GF(p^" + std::to_string(m) + ") is not a subfield of GF(p^" +
                                            std::to_string(n()) + ")");
    Elem acc = zero();
    for (unsigned j = 0; j < n() / m; ++j) acc = add(acc, frobenius(a, j * m));
    return acc;
}

bool FieldCtx::in_subfield(Elem a, unsigned m) const {
    if (m == 0 || n() % m != 0) return false;
    return frobenius(a, m) == a;
}

std::uint32_t FieldCtx::add_packed(std::uint32_t a, std::uint32_t b) const noexcept {
    const unsigned p = spec_.p;
    if (p == 2) return a ^ b;
    std::uint32_t out = 0;
    for (unsigned k = 0; k < spec_.n; ++k) {
        const unsigned s = a % p + b % p;
        out += (s >= p ? s - p : s) * pow_p_[k];
        a /= p;
        b /= p;
    }
    return out;
}

std::uint32_t FieldCtx::neg_packed(std::uint32_t a) const noexcept {
    const unsigned p = spec_.p;
    if (p == 2) return a;
    std::uint32_t out = 0;
    for (unsigned k = 0; k < spec_.n; ++k) {
        const unsigned d = a % p;
        out += (d ? p - d : 0) * pow_p_[k];
        a /= p;
    }
    return out;
}

unsigned FieldCtx::trace_packed(std::uint32_t v) const noexcept {
    const unsigned p = spec_.p;
    if (p == 2) return static_cast<unsigned>(std::popcount(v & trace_mask_) & 1);
    unsigned acc = 0;
    for (unsigned k = 0; k < spec_.n; ++k) {
        acc += (v % p) * trace_of_basis_[k];
        v /= p;
    }
    return acc % p;
}

UnitCircle FieldCtx::unit_circle() const {
    if (n() % 2 != 0) throw Error(Errc::OddDegree, "unit circle needs n = 2m");
    UnitCircle u;
    u.m = n() / 2;
    const u64 pm = pow_p_[u.m];
    u.elements.reserve(pm + 1);
    for (u64 k = 0; k <= pm; ++k) u.elements.push_back(Elem{static_cast<std::uint32_t>(k * (pm - 1))});
    return u;
}

} // namespace mseq
