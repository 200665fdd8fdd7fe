// SPDX-License-Identifier: Apache-2.0
#include "heckeforge/laurent.hpp"

#include <sstream>

namespace hf {

LaurentPoly LaurentPoly::constant(int nvars, const Rational& c) {
    return monomial(nvars, std::vector<int>(static_cast<std::size_t>(nvars), 0), 0, c);
}

LaurentPoly LaurentPoly::monomial(int nvars, const std::vector<int>& z, int q2, const Rational& c) {
    require(static_cast<int>(z.size()) == nvars, "laurent: exponent vector length mismatch");
    LaurentPoly p(nvars);
    p.add_term(Mono{z, q2}, c);
    return p;
}

LaurentPoly LaurentPoly::var(int nvars, int i, int e) {
    require(i >= 0 && i < nvars, "laurent: variable index out of range");
    std::vector<int> z(static_cast<std::size_t>(nvars), 0);
    z[static_cast<std::size_t>(i)] = e;
    return monomial(nvars, z, 0);
}

Rational LaurentPoly::coeff(const std::vector<int>& z, int q2) const {
    auto it = t_.find(Mono{z, q2});
    return it == t_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(const Mono& m, const Rational& c) {
    if (hf::is_zero(c)) return;
    auto [it, fresh] = t_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (hf::is_zero(it->second)) t_.erase(it);
    }
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    require(a.n_ == b.n_, "laurent: variable count mismatch");
    LaurentPoly r(a);
    for (const auto& [m, c] : b.t_) r.add_term(m, c);
    return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    require(a.n_ == b.n_, "laurent: variable count mismatch");
    LaurentPoly r(a);
    for (const auto& [m, c] : b.t_) r.add_term(m, -c);
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    require(a.n_ == b.n_, "laurent: variable count mismatch");
    LaurentPoly r(a.n_);
    for (const auto& [ma, ca] : a.t_)
        for (const auto& [mb, cb] : b.t_) {
            LaurentPoly::Mono m{ma.z, ma.q2 + mb.q2};
            for (std::size_t i = 0; i < m.z.size(); ++i) m.z[i] += mb.z[i];
            r.add_term(m, ca * cb);
        }
    return r;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
    LaurentPoly r(n_);
    if (hf::is_zero(c)) return r;
    for (const auto& [m, x] : t_) r.t_.emplace(m, x * c);
    return r;
}

LaurentPoly LaurentPoly::pow(int e) const {
    require(e >= 0, "laurent: negative power");
    LaurentPoly acc = constant(n_, 1), base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

LaurentPoly LaurentPoly::act(const SignedPermutation& sigma) const {
    require(sigma.size() == n_, "laurent: permutation size mismatch");
    LaurentPoly r(n_);
    for (const auto& [m, c] : t_) {
        Mono x{std::vector<int>(static_cast<std::size_t>(n_), 0), m.q2};
        for (int i = 1; i <= n_; ++i) {
            int s = sigma(i);
            int a = s < 0 ? -s : s;
            x.z[static_cast<std::size_t>(a - 1)] += (s < 0 ? -1 : 1) * m.z[static_cast<std::size_t>(i - 1)];
        }
        r.add_term(x, c);
    }
    return r;
}

LaurentPoly LaurentPoly::shift_q(const std::vector<int>& shift2) const {
    require(static_cast<int>(shift2.size()) == n_, "laurent: shift length mismatch");
    LaurentPoly r(n_);
    for (const auto& [m, c] : t_) {
        Mono x = m;
        for (int i = 0; i < n_; ++i) x.q2 += shift2[static_cast<std::size_t>(i)] * m.z[static_cast<std::size_t>(i)];
        r.add_term(x, c);
    }
    return r;
}

bool LaurentPoly::has_integral_q() const {
    for (const auto& [m, c] : t_)
        if (m.q2 % 2) return false;
    return true;
}

bool LaurentPoly::is_invariant(const std::vector<SignedPermutation>& gens) const {
    for (const auto& g : gens)
        if (act(g) != *this) return false;
    return true;
}

Rational LaurentPoly::eval(const std::vector<Rational>& z, const Rational& q) const {
    require(static_cast<int>(z.size()) == n_, "eval: assignment does not cover all variables");
    require(has_integral_q(), "eval: half-integral power of q");
    Rational s = 0;
    for (const auto& [m, c] : t_) {
        Rational term = c;
        for (int i = 0; i < n_; ++i) {
            int e = m.z[static_cast<std::size_t>(i)];
            if (e == 0) continue;
            require(e > 0 || !hf::is_zero(z[static_cast<std::size_t>(i)]), "eval: zero value at a negative exponent");
            term *= rpow(z[static_cast<std::size_t>(i)], e);
        }
        if (m.q2) {
            require(m.q2 > 0 || !hf::is_zero(q), "eval: zero q at a negative exponent");
            term *= rpow(q, m.q2 / 2);
        }
        s += term;
    }
    return s;
}

LaurentPoly LaurentPoly::eval_q(const Rational& q) const {
    require(has_integral_q(), "eval: half-integral power of q");
    LaurentPoly r(n_);
    for (const auto& [m, c] : t_) {
        Mono x{m.z, 0};
        r.add_term(x, m.q2 ? c * rpow(q, m.q2 / 2) : c);
    }
    return r;
}

std::string LaurentPoly::to_string() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : t_) {
        if (!first) os << " + ";
        first = false;
        os << '(' << hf::to_string(c) << ')';
        for (int i = 0; i < n_; ++i)
            if (m.z[static_cast<std::size_t>(i)]) os << "*Z" << (i + 1) << '^' << m.z[static_cast<std::size_t>(i)];
        if (m.q2) {
            if (m.q2 % 2)
                os << "*q^(" << m.q2 << "/2)";
            else
                os << "*q^" << m.q2 / 2;
        }
    }
    return os.str();
}

LaurentPoly orbit_sum(const GroupDescriptor& desc, int j) {
    int n = desc.n_s;
    require(j >= 1 && j <= n, "j: must satisfy 1 <= j <= n_s");
    LaurentPoly acc(n);
    for_each_signed(n, desc.flavor, [&](const SignedPermutation& s) {
        // e_j(σZ): sum over j-subsets of positions.
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            if (__builtin_popcount(mask) != j) continue;
            std::vector<int> z(static_cast<std::size_t>(n), 0);
            for (int i = 1; i <= n; ++i) {
                if (!(mask & (1u << (i - 1)))) continue;
                int v = s(i);
                z[static_cast<std::size_t>((v < 0 ? -v : v) - 1)] += v < 0 ? -1 : 1;
            }
            acc.add_term(LaurentPoly::Mono{z, 0}, 1);
        }
    });
    return acc;
}

}  // namespace hf
