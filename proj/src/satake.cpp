// SPDX-License-Identifier: Apache-2.0
#include "heckeforge/satake.hpp"

#include <algorithm>

namespace hf {

void HeckeEvalInput::validate() const {
    require(!is_zero(q), "q: must be invertible");
    require(static_cast<int>(chi.size()) == desc.n_s, "chi: expected n_s values");
    for (const auto& c : chi) require(!is_zero(c), "chi: values must be invertible");
}

static void check_j(const GroupDescriptor& desc, int j) {
    require(j >= 1 && j <= desc.n_s, "j: must satisfy 1 <= j <= n_s");
}

LaurentPoly satake_image(const GroupDescriptor& desc, int j) {
    check_j(desc, j);
    LaurentPoly o = orbit_sum(desc, j);
    std::vector<int> lead(static_cast<std::size_t>(desc.n_s), 0);
    for (int i = 0; i < j; ++i) lead[static_cast<std::size_t>(i)] = 1;
    Rational c = o.coeff(lead, 0);
    return (o * LaurentPoly::q_power(desc.n_s, desc.satake_exponent(j))).scaled(inv(c));
}

Rational unramified_eigenvalue(const HeckeEvalInput& in, int j) {
    in.validate();
    check_j(in.desc, j);
    std::vector<Rational> s;
    for (const auto& c : in.chi) {
        Rational y = c / in.q;
        s.push_back(y + inv(y));
    }
    return rpow(in.q, in.desc.satake_exponent(j)) * elem_sym(j, s, Rational(1));
}

LaurentPoly unramified_eigenvalue_symbolic(const GroupDescriptor& desc, int j) {
    check_j(desc, j);
    int n = desc.n_s;
    LaurentPoly acc(n);
    int e2 = 2 * desc.satake_exponent(j);
    for (unsigned I = 0; I < (1u << n); ++I) {
        if (__builtin_popcount(I) != j) continue;
        for (unsigned J = I;; J = (J - 1) & I) {
            std::vector<int> z(static_cast<std::size_t>(n), 0);
            int q2 = e2;
            for (int i = 0; i < n; ++i) {
                if (!(I & (1u << i))) continue;
                int sgn = (J & (1u << i)) ? 1 : -1;
                z[static_cast<std::size_t>(i)] = sgn;
                q2 -= 2 * sgn;
            }
            acc.add_term(LaurentPoly::Mono{z, q2}, 1);
            if (J == 0) break;
        }
    }
    return acc;
}

LaurentPoly satake_at_chi(const GroupDescriptor& desc, int j) {
    return satake_image(desc, j).shift_q(std::vector<int>(static_cast<std::size_t>(desc.n_s), -2));
}

int charpoly_exponent(const GroupDescriptor& desc, int j) {
    int base = desc.is_sp() ? desc.n_s * (desc.n_s + 1) / 2 : desc.n_s * (desc.n_s - 1) / 2;
    return base - (j + desc.n_s - desc.n) * j;
}

PalindromicPair hecke_char_poly(const GroupDescriptor& desc, const std::vector<Rational>& t_values, const Rational& q) {
    require(static_cast<int>(t_values.size()) == desc.n_s, "t_values: expected n_s values");
    require(!is_zero(q), "q: must be invertible");
    int r = desc.n_s;
    std::vector<Rational> c(static_cast<std::size_t>(r + 1));
    c[static_cast<std::size_t>(r)] = 1;
    for (int j = 1; j <= r; ++j) {
        Rational v = rpow(q, -charpoly_exponent(desc, j)) * t_values[static_cast<std::size_t>(j - 1)];
        c[static_cast<std::size_t>(r - j)] = (j % 2) ? Rational(-v) : v;
    }
    PalindromicPair pp;
    pp.Ptilde = QPoly(c);
    pp.P = unfold(pp.Ptilde, Rational(1));
    return pp;
}

std::vector<std::vector<int>> v_operator_reps(const GroupDescriptor& desc, int n0) {
    require(n0 >= 1 && n0 <= desc.n_s, "n0: must satisfy 1 <= n0 <= n_s");
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::vector<bool> used(static_cast<std::size_t>(desc.n_s + 1), false);
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(cur.size()) == n0) {
            out.push_back(cur);
            return;
        }
        for (int v = 1; v <= desc.n_s; ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            used[static_cast<std::size_t>(v)] = true;
            cur.push_back(v);
            self(self);
            cur.pop_back();
            used[static_cast<std::size_t>(v)] = false;
        }
    };
    rec(rec);
    return out;
}

Rational v_operator_diagonal(const GroupDescriptor& desc, int n0, const std::vector<int>& s,
                             const std::vector<Rational>& chi, const Rational& q) {
    require(n0 >= 1 && n0 <= desc.n_s, "n0: must satisfy 1 <= n0 <= n_s");
    require(static_cast<int>(s.size()) == n0, "s: expected n0 entries");
    require(static_cast<int>(chi.size()) == desc.n_s, "chi: expected n_s values");
    std::vector<bool> used(static_cast<std::size_t>(desc.n_s + 1), false);
    Rational v = 1;
    for (int x : s) {
        require(x >= 1 && x <= desc.n_s && !used[static_cast<std::size_t>(x)], "s: not an injective representative");
        used[static_cast<std::size_t>(x)] = true;
        v *= chi[static_cast<std::size_t>(x - 1)] / q;
    }
    return v;
}

std::vector<Rational> v_operator_spectrum(const GroupDescriptor& desc, int n0, const std::vector<Rational>& chi,
                                          const Rational& q) {
    std::vector<Rational> out;
    for (const auto& s : v_operator_reps(desc, n0)) out.push_back(v_operator_diagonal(desc, n0, s, chi, q));
    return out;
}

DivisibilityReport charpoly_divisibility(const GroupDescriptor& desc, int n0, const std::vector<Rational>& chi,
                                         const Rational& q) {
    HeckeEvalInput in{desc, q, chi};
    in.validate();
    std::vector<Rational> t;
    for (int j = 1; j <= desc.n_s; ++j) t.push_back(unramified_eigenvalue(in, j));
    QPoly P = hecke_char_poly(desc, t, q).P;
    auto spec = v_operator_spectrum(desc, n0, chi, q);
    DivisibilityReport rep;
    long num = 1, den = 1;
    for (int i = 1; i <= desc.n_s - 1; ++i) num *= i;
    for (int i = 1; i <= desc.n_s - n0; ++i) den *= i;
    rep.exponent = static_cast<int>(n0 * num / den);
    QPoly cp = poly_from_roots(spec, Rational(1));
    rep.divides = P.pow(rep.exponent, Rational(1)).divmod(cp).second.is_zero();
    rep.roots_of_P = std::all_of(spec.begin(), spec.end(), [&](const Rational& x) { return is_zero(P(x)); });
    return rep;
}

}  // namespace hf
