// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "heckeforge/errors.hpp"
#include "heckeforge/rational.hpp"
#include "heckeforge/zmod.hpp"

namespace hf {

// Dense univariate polynomial, coefficients low degree first, no trailing zeros.
template <class T>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<T> c) : c_(std::move(c)) { trim(); }
    static Poly constant(const T& a) { return Poly(std::vector<T>{a}); }
    // X - a
    static Poly linear(const T& a, const T& one) { return Poly(std::vector<T>{-a, one}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<T>& coeffs() const { return c_; }
    T coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : T(); }
    T lead() const { return c_.empty() ? T() : c_.back(); }

    T operator()(const T& x) const {
        T acc = T();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<T> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<T> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.c_.empty() || b.c_.empty()) return Poly();
        std::vector<T> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }
    Poly scaled(const T& s) const {
        std::vector<T> r(c_);
        for (auto& x : r) x = x * s;
        return Poly(std::move(r));
    }
    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Division by a polynomial with invertible leading coefficient.
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        require(!d.is_zero(), "division by zero polynomial");
        T li = inv(d.lead());
        std::vector<T> rem(c_);
        int dd = d.degree();
        if (degree() < dd) return {Poly(), *this};
        std::vector<T> q(static_cast<std::size_t>(degree() - dd + 1));
        for (int i = degree(); i >= dd; --i) {
            T f = rem[i] * li;
            q[i - dd] = f;
            for (int k = 0; k <= dd; ++k) rem[i - dd + k] = rem[i - dd + k] - f * d.c_[k];
        }
        rem.resize(static_cast<std::size_t>(dd));
        return {Poly(std::move(q)), Poly(std::move(rem))};
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<T> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * T(static_cast<long>(i));
        return Poly(std::move(r));
    }

    Poly pow(int e, const T& one) const {
        Poly acc = constant(one), base = *this;
        while (e) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    // X^deg * P(1/X)
    Poly reversed() const {
        std::vector<T> r(c_.rbegin(), c_.rend());
        return Poly(std::move(r));
    }

    Poly map(T (*f)(const T&)) const {
        std::vector<T> r;
        for (const auto& x : c_) r.push_back(f(x));
        return Poly(std::move(r));
    }

private:
    void trim() {
        while (!c_.empty() && hf::is_zero(c_.back())) c_.pop_back();
    }
    std::vector<T> c_;
};

using QPoly = Poly<Rational>;
using ZPoly = Poly<Zmod>;

template <class T>
Poly<T> poly_from_roots(const std::vector<T>& roots, const T& one) {
    Poly<T> acc = Poly<T>::constant(one);
    for (const auto& r : roots) acc = acc * Poly<T>::linear(r, one);
    return acc;
}

// Reduce every coefficient to a coarser modulus.
ZPoly reduce(const ZPoly& f, std::uint64_t m);

std::string to_string(const QPoly& f);

}  // namespace hf
