// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "heckeforge/galsplit.hpp"
#include "heckeforge/weyl.hpp"
#include "heckeforge/zmod.hpp"

namespace hf {

struct ParahoricDatum {
    GroupDescriptor desc;
    IntervalPartition omega;
    int j0 = 1, j1 = 2;  // 1-based block indices
    std::uint64_t q = 0;
    std::uint64_t p = 0;
    void validate() const;
};

// Torus coordinates (1-based) carried by block j (1-based); the block holding 0 keeps 1..h.
std::vector<int> block_coordinates(const IntervalPartition& omega, int j);
int block_rank(const IntervalPartition& omega, int j);

// a_{ij} = #(I_i^Ω ∩ |w(I_j^Θ)|), with w(0) = 0.
std::vector<std::vector<int>> block_incidence(const SignedPermutation& w, const IntervalPartition& omega,
                                              const IntervalPartition& theta);

using LocalDims = std::function<int(int block, const SignedPermutation& w)>;
int invariant_dim(const GroupDescriptor& desc, const IntervalPartition& omega, const IntervalPartition& theta,
                  const LocalDims& local_dims);
// Table keyed by (1-based block, window string of w); missing entries are errors.
int invariant_dim(const GroupDescriptor& desc, const IntervalPartition& omega, const IntervalPartition& theta,
                  const std::map<std::pair<int, std::string>, int>& table);

// Elements of ^ΩW^Θ whose incidence entries are all ≤ 1.
std::vector<SignedPermutation> jacquet_w_set(const GroupDescriptor& desc, const IntervalPartition& omega,
                                             const IntervalPartition& theta);

struct IwahoriPSModule {
    GroupDescriptor desc;
    IntervalPartition theta;
    std::vector<SignedPermutation> basis;  // W^Θ
    std::vector<Zmod> psi;                 // ψ_i(ϖ), i = 1..n_s
    Zmod q;
    bool block_constant = true;            // ψ constant on Θ-blocks

    // (wψ)_l = ψ_{w^{-1}(l)}, inverted for a negative index.
    Zmod twisted(std::size_t b, int l) const;
    // X_l φ_w = (wψ)_l φ_w.
    Zmod x_eigenvalue(std::size_t b, int l) const { return twisted(b, l); }
    std::size_t dim() const { return basis.size(); }
};

IwahoriPSModule build_ps_module(const GroupDescriptor& desc, const IntervalPartition& theta,
                                const std::vector<Zmod>& psi, const Zmod& q);
// Restricts the basis to the given representatives.
IwahoriPSModule build_ps_module(const GroupDescriptor& desc, const IntervalPartition& theta,
                                const std::vector<Zmod>& psi, const Zmod& q,
                                const std::vector<SignedPermutation>& basis);

// Diagonal of V_k^j: e_k of {(wψ)_l : l in block j} per basis vector.
std::vector<Zmod> v_operator(const IwahoriPSModule& m, const IntervalPartition& omega, int j, int k);
// The same operator as the literal sum over k-subsets of the block with free signs, on the identity vector.
Zmod v_operator_signed_sum(const std::vector<Zmod>& values, int k);

// Π over block_size-subsets S of the root indices of (X − e_k(x_S)).
std::vector<Zmod> phat_roots(const std::vector<Zmod>& root_data, int block_size, int k);
ZPoly phat_poly(const std::vector<Zmod>& root_data, int block_size, int k);
std::vector<Zmod> root_data(const std::vector<Zmod>& psi, bool sp);

struct ProjectorFactor {
    ZPoly R, Q;
    std::vector<Zmod> r_roots, q_roots;
    int r = 0;                 // multiplicity of each residue C·ᾱ^{±k} in R
    bool balanced = true;      // R ≡ ((X − Cᾱ^k)(X − Cᾱ^{-k}))^r
    bool degenerate = false;   // Cᾱ^k ≡ Cᾱ^{-k} with ᾱ ≢ ᾱ^{-1}
    bool coprime = true;
};

ProjectorFactor projector_factor(const std::vector<Zmod>& roots, const Zmod& alpha_bar, int i_j, int k,
                                 const ResidueRing& ring);

enum class ProfileType { Type1, Type2, Invalid };
std::string profile_name(ProfileType t);

struct ProfileResult {
    ProfileType type = ProfileType::Invalid;
    std::int64_t alpha_bar = 0;  // residue in F_p
};

// eigs: residual Frobenius eigenvalues with multiplicity (the extra 1 included for Sp).
ProfileResult frobenius_profile_check(const std::vector<std::int64_t>& eigs, std::uint64_t p, int i_j0, bool sp);

struct ProjectorComponent {
    enum class Type { Unramified, Steinberg };
    Type type = Type::Unramified;
    // Unramified: ψ_1..ψ_{n_s}. Steinberg: χ_1..χ_{n_s−1}; the pattern appends χ_{n_s−1}·q^{-1}.
    std::vector<Zmod> chi;
};

struct ComponentReport {
    ProjectorComponent::Type type;
    std::vector<SignedPermutation> basis;
    std::vector<Zmod> diagonal;   // pr_{(j1)} on each basis vector
    int image_dim = 0;
    bool annihilated = false;
    std::map<std::pair<int, int>, ProjectorFactor> factors;
};

struct ProjectorReport {
    ProfileResult profile;
    std::vector<ComponentReport> components;
    int image_dim = 0;
    int unramified_dim = 0;       // Σ invariant_dim over unramified components
    std::vector<std::int64_t> distinguished;  // pr(Σ φ_w), unramified components, concatenated
    std::vector<SignedPermutation> w_prime;   // unramified basis vectors with a unit pr-coefficient
    // W' by its combinatorial description: w sends every ᾱ^{±1}-coordinate into one block j' ≠ j1.
    std::vector<SignedPermutation> w_prime_literal;
    bool dimension_matches() const { return image_dim == unramified_dim; }
};

ProjectorReport apply_projector(const ParahoricDatum& datum, const std::vector<ProjectorComponent>& components,
                                const ResidueRing& ring);

}  // namespace hf
