// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "heckeforge/galsplit.hpp"
#include "heckeforge/matrix.hpp"
#include "heckeforge/weyl.hpp"

namespace hf {

// Finite subgroup of GL_N(F_p), closed from its generators.
struct FiniteMatrixGroup {
    std::uint64_t p = 0;
    int N = 0;
    std::vector<ZMatrix> generators;
    std::vector<ZMatrix> elements;  // elements[0] is the identity; BFS order
    std::size_t size() const { return elements.size(); }
    // elements[i] = generators[parent_gen[i]] * elements[parent[i]] for i > 0.
    std::vector<std::size_t> parent, parent_gen;
    std::optional<std::size_t> index_of(const ZMatrix& g) const;

    std::map<std::vector<std::int64_t>, std::size_t> lookup_;
};

// Breadth-first closure; GuardError beyond guards().max_group_order.
FiniteMatrixGroup close_group(const std::vector<ZMatrix>& generators, std::uint64_t p);

// Linear action of H on F_p^d: one d×d matrix per generator of H.
struct GroupModule {
    int dim = 0;
    std::vector<ZMatrix> gen_action;
};

// Lie algebra {X : X^t Λ + Λ X = 0} with H acting by conjugation.
struct AdjointModule {
    BilinearForm form;
    std::vector<ZMatrix> basis;
    int dim() const { return static_cast<int>(basis.size()); }
    // Coordinates of X in the basis; ValidationError if X is not in the span.
    std::vector<Zmod> coords(const ZMatrix& X) const;

    std::vector<int> pivot_entries_;
    ZMatrix pivot_inverse_;
};

AdjointModule adjoint_module(const BilinearForm& form, std::uint64_t p);
// Dual-group Lie algebra ĝ(F_p) for a descriptor: sp_N, or so_N with the split form.
AdjointModule adjoint_module(const GroupDescriptor& desc, std::uint64_t p);
// H must preserve the form.
GroupModule conjugation_module(const FiniteMatrixGroup& H, const AdjointModule& M);
// gl_N with the conjugation action.
GroupModule gl_conjugation_module(const FiniteMatrixGroup& H);
GroupModule trivial_module(const FiniteMatrixGroup& H, int dim);

int h0_module(const FiniteMatrixGroup& H, const GroupModule& M);
// Rank of the averaging projector; ValidationError when p divides |H|.
int reynolds_rank(const FiniteMatrixGroup& H, const GroupModule& M);
// dim Z¹ − dim B¹; cocycles are determined on generators and propagated over the Cayley graph.
int h1_finite(const FiniteMatrixGroup& H, const GroupModule& M);
// The same from the full multiplication table (unknowns f(g) for every g); for small H only.
int h1_finite_table(const FiniteMatrixGroup& H, const GroupModule& M);
// dim ker(norm) − dim im(g − 1) for H = ⟨g⟩ with the given action matrix of g.
int h1_cyclic(const ZMatrix& g_action, std::size_t order);
// dim Hom(H, F_p).
int hom_to_kappa(const FiniteMatrixGroup& H);

struct TraceWitness {
    std::size_t gamma = 0;  // index into H.elements
    std::int64_t a = 0;     // eigenvalue of γ
    std::size_t w = 0;      // index into the supplied spanning list
    Zmod trace;
};

// Projector onto the generalized a-eigenspace of γ along the other eigenspaces.
ZMatrix eigen_projector(const ZMatrix& gamma, std::int64_t a, std::uint64_t p);
// Roots of the characteristic polynomial in F_p; ValidationError if it does not split.
std::vector<std::int64_t> split_eigenvalues(const ZMatrix& gamma, std::uint64_t p);

// W is the span of the given elements of ĝ and must be H-stable.
std::optional<TraceWitness> trace_pairing_check(const FiniteMatrixGroup& H, const AdjointModule& M,
                                                const std::vector<ZMatrix>& W);

struct Condition4Report {
    bool all_submodules = false;       // no nonzero submodule lies in the common trace kernel
    int bad_submodule_dim = 0;         // dimension of the largest H-stable subspace of that kernel
    std::optional<bool> all_cyclic;    // exhaustive cyclic mode, when run
    std::vector<std::int64_t> cyclic_counterexample;
};
Condition4Report condition4(const FiniteMatrixGroup& H, const AdjointModule& M, bool exhaustive_cyclic);

enum class SufficientVerdict { AdequateByLemma, Inconclusive };
std::string verdict_name(SufficientVerdict v);
SufficientVerdict sufficient_conditions(std::uint64_t p, int N, bool irreducible, bool eigenvalues_split);

struct AdequacyReport {
    std::size_t order = 0;
    int h0 = 0, h1 = 0, hom = 0;
    Condition4Report cond4;
    bool adequate() const { return h0 == 0 && h1 == 0 && hom == 0 && cond4.all_submodules; }
};
AdequacyReport adequacy_check(const FiniteMatrixGroup& H, const AdjointModule& M, bool exhaustive_cyclic);

}  // namespace hf
