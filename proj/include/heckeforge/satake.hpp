// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "heckeforge/laurent.hpp"
#include "heckeforge/poly.hpp"
#include "heckeforge/rational.hpp"
#include "heckeforge/weyl.hpp"

namespace hf {

struct HeckeEvalInput {
    GroupDescriptor desc;
    Rational q;
    std::vector<Rational> chi;  // χ_i(ϖ), i = 1..n_s

    void validate() const;
};

// q^{E(j)} times the W-orbit sum of Z_1···Z_j, each orbit monomial with
// coefficient 1. orbit_sum(desc, j) is an integer multiple of this.
LaurentPoly satake_image(const GroupDescriptor& desc, int j);

// q^{E(j)} Σ_{I,J} Π_{i∈J} Y_i Π_{i∈I∖J} Y_i^{-1}, Y_i = χ_i/q.
Rational unramified_eigenvalue(const HeckeEvalInput& in, int j);
// The same sum as a Laurent polynomial in χ_1..χ_{n_s} (stored as Z_i) and q.
LaurentPoly unramified_eigenvalue_symbolic(const GroupDescriptor& desc, int j);
// satake_image with Z_i replaced by χ_i q^{-1}.
LaurentPoly satake_at_chi(const GroupDescriptor& desc, int j);

struct PalindromicPair {
    QPoly P;
    QPoly Ptilde;
};

// P̃(X) = X^{n_s} + Σ_j (−1)^j q^{−D(j)} t^{(j)} X^{n_s−j}, P its unfold.
PalindromicPair hecke_char_poly(const GroupDescriptor& desc, const std::vector<Rational>& t_values, const Rational& q);
int charpoly_exponent(const GroupDescriptor& desc, int j);

// Π_{i≤n_0} χ_{s(i)} q^{-1} for an injection s: {1..n_0} → {1..n_s}.
Rational v_operator_diagonal(const GroupDescriptor& desc, int n0, const std::vector<int>& s,
                             const std::vector<Rational>& chi, const Rational& q);
// All injections s in lexicographic order.
std::vector<std::vector<int>> v_operator_reps(const GroupDescriptor& desc, int n0);
std::vector<Rational> v_operator_spectrum(const GroupDescriptor& desc, int n0, const std::vector<Rational>& chi,
                                          const Rational& q);

struct DivisibilityReport {
    int exponent = 0;        // n_0 (n_s−1)!/(n_s−n_0)!
    bool divides = false;    // charpoly of the V-spectrum divides P^exponent
    bool roots_of_P = false; // every diagonal value is a root of P
};
DivisibilityReport charpoly_divisibility(const GroupDescriptor& desc, int n0, const std::vector<Rational>& chi,
                                         const Rational& q);

}  // namespace hf
