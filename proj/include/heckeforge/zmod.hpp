// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "heckeforge/errors.hpp"

namespace hf {

// Element of Z/m. A default-constructed value (modulus 0) is an untyped
// integer constant that adopts the modulus of the other operand.
class Zmod {
public:
    Zmod() = default;
    Zmod(std::int64_t v) : v_(v) {}  // NOLINT: untyped integer constant
    Zmod(std::int64_t v, std::uint64_t m) : m_(m) {
        if (m == 0) {
            v_ = v;
            return;
        }
        std::int64_t mm = static_cast<std::int64_t>(m);
        v_ = v % mm;
        if (v_ < 0) v_ += mm;
    }

    std::uint64_t modulus() const { return m_; }
    std::int64_t value() const { return v_; }
    // Representative in (-m/2, m/2].
    std::int64_t centered() const {
        if (m_ == 0) return v_;
        std::int64_t mm = static_cast<std::int64_t>(m_);
        return v_ > mm / 2 ? v_ - mm : v_;
    }
    bool is_zero() const { return v_ == 0; }
    bool is_unit() const;
    Zmod inv() const;
    Zmod pow(std::int64_t e) const;
    Zmod with_modulus(std::uint64_t m) const { return Zmod(v_, m); }

    friend Zmod operator+(const Zmod& a, const Zmod& b) { return binop(a, b, 0); }
    friend Zmod operator-(const Zmod& a, const Zmod& b) { return binop(a, b, 1); }
    friend Zmod operator*(const Zmod& a, const Zmod& b) { return binop(a, b, 2); }
    friend Zmod operator/(const Zmod& a, const Zmod& b) { return a * b.inv(); }
    Zmod operator-() const { return Zmod(0, m_) - *this; }
    Zmod& operator+=(const Zmod& o) { return *this = *this + o; }
    Zmod& operator-=(const Zmod& o) { return *this = *this - o; }
    Zmod& operator*=(const Zmod& o) { return *this = *this * o; }

    friend bool operator==(const Zmod& a, const Zmod& b) {
        std::uint64_t m = a.m_ ? a.m_ : b.m_;
        return Zmod(a.v_, m).v_ == Zmod(b.v_, m).v_;
    }
    friend bool operator!=(const Zmod& a, const Zmod& b) { return !(a == b); }
    friend bool operator<(const Zmod& a, const Zmod& b) { return a.v_ < b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Zmod& a) { return os << a.v_; }

private:
    static Zmod binop(const Zmod& a, const Zmod& b, int op);
    std::int64_t v_ = 0;
    std::uint64_t m_ = 0;
};

inline bool is_zero(const Zmod& a) { return a.is_zero(); }
inline Zmod inv(const Zmod& a) { return a.inv(); }
inline std::string to_string(const Zmod& a) { return std::to_string(a.value()); }

// p-adic valuation of a residue in Z/p^e (returns e for zero).
int valuation(const Zmod& a, std::uint64_t p);

// Z/p^e with p prime.
struct ResidueRing {
    std::uint64_t p = 0;
    int e = 1;
    std::uint64_t modulus = 0;

    ResidueRing() = default;
    ResidueRing(std::uint64_t prime, int exponent);
    Zmod operator()(std::int64_t v) const { return Zmod(v, modulus); }
    Zmod residue(const Zmod& a) const { return Zmod(a.value(), p); }
    bool is_field() const { return e == 1; }
};

bool is_prime(std::uint64_t n);
std::uint64_t ipow(std::uint64_t b, int e);

}  // namespace hf
