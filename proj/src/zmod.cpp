// SPDX-License-Identifier: Apache-2.0
#include "heckeforge/zmod.hpp"

#include <numeric>

namespace hf {

Zmod Zmod::binop(const Zmod& a, const Zmod& b, int op) {
    if (a.m_ && b.m_ && a.m_ != b.m_)
        throw ValidationError("modulus mismatch: " + std::to_string(a.m_) + " vs " + std::to_string(b.m_));
    std::uint64_t m = a.m_ ? a.m_ : b.m_;
    if (m == 0) {
        switch (op) {
            case 0: return Zmod(a.v_ + b.v_);
            case 1: return Zmod(a.v_ - b.v_);
            default: return Zmod(a.v_ * b.v_);
        }
    }
    __int128 x = Zmod(a.v_, m).v_;
    __int128 y = Zmod(b.v_, m).v_;
    __int128 r = op == 0 ? x + y : op == 1 ? x - y : x * y;
    __int128 mm = static_cast<__int128>(m);
    r %= mm;
    if (r < 0) r += mm;
    Zmod out;
    out.v_ = static_cast<std::int64_t>(r);
    out.m_ = m;
    return out;
}

bool Zmod::is_unit() const {
    if (m_ == 0) return v_ == 1 || v_ == -1;
    return std::gcd(static_cast<std::uint64_t>(v_), m_) == 1;
}

Zmod Zmod::inv() const {
    if (m_ == 0) {
        if (v_ == 1 || v_ == -1) return *this;
        throw ValidationError("inverse of untyped constant " + std::to_string(v_));
    }
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(m_), nr = v_;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw ValidationError("element " + std::to_string(v_) + " is not a unit mod " + std::to_string(m_));
    return Zmod(t, m_);
}

Zmod Zmod::pow(std::int64_t e) const {
    if (e < 0) return inv().pow(-e);
    Zmod base = *this, acc(1, m_);
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

int valuation(const Zmod& a, std::uint64_t p) {
    std::uint64_t m = a.modulus();
    int e = 0;
    for (std::uint64_t t = m; t > 1; t /= p) ++e;
    std::uint64_t v = static_cast<std::uint64_t>(a.value());
    if (v == 0) return e;
    int k = 0;
    while (v % p == 0) {
        v /= p;
        ++k;
    }
    return k;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t ipow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

ResidueRing::ResidueRing(std::uint64_t prime, int exponent) : p(prime), e(exponent) {
    require(is_prime(prime), "p=" + std::to_string(prime) + " is not prime");
    require(exponent >= 1, "precision e must be >= 1");
    modulus = ipow(prime, exponent);
}

}  // namespace hf
