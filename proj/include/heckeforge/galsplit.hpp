// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "heckeforge/matrix.hpp"
#include "heckeforge/poly.hpp"
#include "heckeforge/zmod.hpp"

namespace hf {

enum class Symmetry { Symmetric, Alternating };

struct BilinearForm {
    ZMatrix lambda;
    Symmetry symmetry = Symmetry::Symmetric;
    int dim() const { return lambda.rows(); }
};

enum class FormKind { Orthogonal, Symplectic, QuasiSplit };

// A_m, A'_{2m} (m is the half size), or A_m^η with central block diag(1, −u).
BilinearForm standard_form(FormKind kind, int m, std::int64_t u, const ResidueRing& ring);
void validate_form(const BilinearForm& f, const ResidueRing& ring);

bool check_isometry(const ZMatrix& M, const BilinearForm& form);

// Division-free characteristic polynomial det(X − M) (Berkowitz).
ZPoly charpoly(const ZMatrix& M);
ZMatrix eval_poly(const ZPoly& f, const ZMatrix& M);

// Sylvester matrix of (f, g); its determinant is the resultant.
ZMatrix sylvester(const ZPoly& f, const ZPoly& g);
bool coprime(const ZPoly& f, const ZPoly& g, const ResidueRing& ring);
// (u, v) with u f + v g = 1, deg u < deg g, deg v < deg f.
std::pair<ZPoly, ZPoly> bezout(const ZPoly& f, const ZPoly& g, const ResidueRing& ring);
// reverse(f) = f(0) · f, i.e. the roots are closed under inversion.
bool is_reciprocal(const ZPoly& f);

struct SplitResult {
    ZMatrix basis_s;    // image of B(M)
    ZMatrix basis_psi;  // image of A(M)
    ZMatrix gram_s, gram_psi;
    bool stable = false;
    bool orthogonal = false;
    bool nondegenerate_s = false;
    bool nondegenerate_psi = false;
    bool charpoly_recombines = false;
    std::vector<std::int64_t> witness;  // vector in a degenerate summand, if any

    bool ok() const { return stable && orthogonal && nondegenerate_s && nondegenerate_psi && charpoly_recombines; }
};

SplitResult split_by_factor(const ZMatrix& M, const BilinearForm& form, const ZPoly& A, const ZPoly& B,
                            const ResidueRing& ring);

// φ(E_{j,1}) for j = 1..N; A = Σ_j φ(E_{j,1}) E_{1,j}.
ZMatrix inner_derivation_matrix(const std::vector<ZMatrix>& phi_col);
// Full table φ(E_{j,k}); validates φ(a) = Aa − aA on all elementary matrices.
ZMatrix inner_derivation_checked(const std::vector<std::vector<ZMatrix>>& phi_table);

struct DualMatrix {
    ZMatrix re, eps;
    friend DualMatrix operator*(const DualMatrix& a, const DualMatrix& b) {
        return {a.re * b.re, a.re * b.eps + a.eps * b.re};
    }
};

struct DescentResult {
    ZMatrix A;        // inner derivation matrix
    std::int64_t b = 0;
    ZMatrix A_prime;  // A − (b/2)·1
    std::vector<ZMatrix> descended;  // g^{-1} ρ(γ) g, real parts
    bool isometry = false;
    bool residual_equal = false;
};

DescentResult descend_dual_numbers(const std::vector<DualMatrix>& rho, const BilinearForm& form,
                                   const ResidueRing& ring);

// Random isometries and Lie algebra elements for tests and CLI scenarios.
ZMatrix random_isometry(const BilinearForm& form, const ResidueRing& ring, std::mt19937_64& rng, int steps = 6);
ZMatrix random_lie_element(const BilinearForm& form, const ResidueRing& ring, std::mt19937_64& rng);

}  // namespace hf
