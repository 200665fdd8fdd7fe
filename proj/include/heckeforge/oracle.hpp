// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "heckeforge/galsplit.hpp"
#include "heckeforge/laurent.hpp"
#include "heckeforge/satake.hpp"
#include "heckeforge/weyl.hpp"

namespace hf {

// Elements of {g : g^t Λ g = Λ} over F_q (det 1 when special), packed
// row-major one byte per entry and sorted.
struct FiniteClassicalGroup {
    using Packed = std::array<std::uint8_t, 16>;
    BilinearForm form;
    std::uint64_t q = 0;
    int n = 0;
    std::vector<Packed> elements;

    std::size_t size() const { return elements.size(); }
    ZMatrix element(std::size_t i) const;
    bool contains(const ZMatrix& g) const;
};

// Matrix form of G for desc (size desc.n); the quasi-split kind uses the least non-square.
BilinearForm oracle_form(const GroupDescriptor& desc, const ResidueRing& field);
FiniteClassicalGroup enumerate_points(const BilinearForm& form, std::uint64_t q, bool special);
FiniteClassicalGroup enumerate_points(const GroupDescriptor& desc, std::uint64_t q);

struct FlagCount {
    std::uint64_t group_order = 0;
    std::uint64_t parabolic_order = 0;
    std::uint64_t index = 0;        // |G| / |P|
    std::uint64_t orbit_count = 0;  // distinct flags g·F_0
    std::uint64_t poincare = 0;     // Σ_{w∈W^Θ} q^{ℓ(w)}
    bool agree() const { return index == orbit_count && index == poincare && group_order % parabolic_order == 0; }
};

// Block sizes of the parabolic attached to Θ, in matrix order.
std::vector<int> parabolic_blocks(const GroupDescriptor& desc, const IntervalPartition& theta);
bool in_parabolic(const ZMatrix& g, const std::vector<int>& blocks);
FlagCount flag_count(const GroupDescriptor& desc, const FiniteClassicalGroup& G, const IntervalPartition& theta);

enum class LevelKind { U0, U1 };

// log_q #I from the residue pattern of the block decomposition (n_0, n−2n_0, n_0).
int double_coset_pattern_exponent(int n, int j, int n0);
// log_q #I counted on root spaces of the Lie algebra of G.
int double_coset_root_exponent(const GroupDescriptor& desc, int j);
// [U : U ∩ ς U ς^{-1}] by exhaustive counting in G(Z/p^{m+2}).
std::uint64_t double_coset_index(const GroupDescriptor& desc, LevelKind kind, int j, int n0, int m, std::uint64_t p);

// log_q #𝔍(I, J): closed form and per-slot count. I, J are sorted 1-based index sets, J ⊂ I.
int coset_exponent_closed(const GroupDescriptor& desc, const std::vector<int>& I, const std::vector<int>& J);
int coset_exponent_pattern(const GroupDescriptor& desc, const std::vector<int>& I, const std::vector<int>& J);

// Σ_{I,J} #𝔍(I,J) φ(b_{I,J}) as a Laurent polynomial in χ_1..χ_{n_s} and q.
LaurentPoly spherical_coset_sum(const GroupDescriptor& desc, int j, bool use_pattern = false);
Rational spherical_coset_sum(const HeckeEvalInput& in, int j);

}  // namespace hf
