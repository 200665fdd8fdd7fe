// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <vector>

#include "heckeforge/errors.hpp"
#include "heckeforge/poly.hpp"
#include "heckeforge/rational.hpp"
#include "heckeforge/weyl.hpp"

namespace hf {

// Laurent polynomial in Z_1..Z_n and q with rational coefficients.
// The q exponent is stored in half units.
class LaurentPoly {
public:
    struct Mono {
        std::vector<int> z;
        int q2 = 0;
        friend bool operator<(const Mono& a, const Mono& b) {
            if (a.z != b.z) return a.z < b.z;
            return a.q2 < b.q2;
        }
        friend bool operator==(const Mono& a, const Mono& b) { return a.z == b.z && a.q2 == b.q2; }
    };
    using Terms = std::map<Mono, Rational>;

    LaurentPoly() = default;
    explicit LaurentPoly(int nvars) : n_(nvars) {}
    static LaurentPoly constant(int nvars, const Rational& c);
    // c · Z^z · q^{q2/2}
    static LaurentPoly monomial(int nvars, const std::vector<int>& z, int q2, const Rational& c = 1);
    static LaurentPoly var(int nvars, int i, int e = 1);
    static LaurentPoly q_power(int nvars, int e) { return monomial(nvars, std::vector<int>(static_cast<std::size_t>(nvars), 0), 2 * e); }

    int nvars() const { return n_; }
    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    Rational coeff(const std::vector<int>& z, int q2) const;
    void add_term(const Mono& m, const Rational& c);

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly operator-() const { return scaled(-1); }
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.n_ == b.n_ && a.t_ == b.t_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    LaurentPoly scaled(const Rational& c) const;
    LaurentPoly pow(int e) const;

    // Z_i ↦ Z_{|σ(i)|}^{sgn σ(i)}.
    LaurentPoly act(const SignedPermutation& sigma) const;
    // Z_i ↦ Z_i · q^{shift2[i]/2}.
    LaurentPoly shift_q(const std::vector<int>& shift2) const;
    bool has_integral_q() const;
    bool is_invariant(const std::vector<SignedPermutation>& gens) const;

    // Exact substitution. Requires integral q exponents.
    Rational eval(const std::vector<Rational>& z, const Rational& q) const;
    // Substitute only q; returns a polynomial with zero q exponent.
    LaurentPoly eval_q(const Rational& q) const;

    std::string to_string() const;

private:
    int n_ = 0;
    Terms t_;
};

// Elementary symmetric polynomial e_j of the given values.
template <class T>
T elem_sym(int j, const std::vector<T>& values, const T& one) {
    int n = static_cast<int>(values.size());
    require(j >= 0 && j <= n, "elem_sym: degree out of range");
    std::vector<T> e(static_cast<std::size_t>(j + 1), one - one);
    e[0] = one;
    for (int i = 0; i < n; ++i)
        for (int k = std::min(i + 1, j); k >= 1; --k)
            e[static_cast<std::size_t>(k)] = e[static_cast<std::size_t>(k)] + e[static_cast<std::size_t>(k - 1)] * values[static_cast<std::size_t>(i)];
    return e[static_cast<std::size_t>(j)];
}

// Σ_{σ∈W} e_j(σZ) over the Weyl group of the descriptor.
LaurentPoly orbit_sum(const GroupDescriptor& desc, int j);

// P(X) = X^r · P̃(X + 1/X).
template <class T>
Poly<T> unfold(const Poly<T>& pt, const T& one) {
    require(!pt.is_zero() && pt.lead() == one, "unfold: input must be monic");
    int r = pt.degree();
    T zero = one - one;
    std::vector<T> out(static_cast<std::size_t>(2 * r + 1), zero);
    for (int k = 0; k <= r; ++k) {
        T c = pt.coeff(k);
        if (hf::is_zero(c)) continue;
        // X^r (X + 1/X)^k = Σ_i C(k,i) X^{r+k-2i}
        long binom = 1;
        for (int i = 0; i <= k; ++i) {
            out[static_cast<std::size_t>(r + k - 2 * i)] = out[static_cast<std::size_t>(r + k - 2 * i)] + c * T(binom);
            binom = binom * (k - i) / (i + 1);
        }
    }
    return Poly<T>(std::move(out));
}

template <class T>
bool is_palindromic(const Poly<T>& p) {
    int d = p.degree();
    for (int i = 0; i <= d; ++i)
        if (!(p.coeff(i) == p.coeff(d - i))) return false;
    return true;
}

// Inverse of unfold by top-down elimination.
template <class T>
Poly<T> fold(const Poly<T>& p, const T& one) {
    require(!p.is_zero() && p.lead() == one, "fold: input must be monic");
    require(p.degree() % 2 == 0, "fold: degree must be even");
    require(is_palindromic(p), "fold: input is not palindromic");
    int r = p.degree() / 2;
    T zero = one - one;
    std::vector<T> rem(p.coeffs());
    std::vector<T> pt(static_cast<std::size_t>(r + 1), zero);
    for (int k = r; k >= 0; --k) {
        T c = rem[static_cast<std::size_t>(r + k)];
        pt[static_cast<std::size_t>(k)] = c;
        if (hf::is_zero(c)) continue;
        long binom = 1;
        for (int i = 0; i <= k; ++i) {
            rem[static_cast<std::size_t>(r + k - 2 * i)] = rem[static_cast<std::size_t>(r + k - 2 * i)] - c * T(binom);
            binom = binom * (k - i) / (i + 1);
        }
    }
    for (const auto& x : rem) require(hf::is_zero(x), "fold: elimination left a remainder");
    return Poly<T>(std::move(pt));
}

}  // namespace hf
