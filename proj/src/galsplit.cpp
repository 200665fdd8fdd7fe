// SPDX-License-Identifier: Apache-2.0
#include "heckeforge/galsplit.hpp"

#include <algorithm>

#include "heckeforge/errors.hpp"
#include "heckeforge/guards.hpp"

namespace hf {

BilinearForm standard_form(FormKind kind, int m, std::int64_t u, const ResidueRing& ring) {
    require(m >= 1, "m: must be positive");
    BilinearForm f;
    if (kind == FormKind::Symplectic) {
        int n = 2 * m;
        f.lambda = ZMatrix(n, n, ring(0));
        for (int i = 0; i < m; ++i) f.lambda(i, n - 1 - i) = ring(1);
        for (int i = m; i < n; ++i) f.lambda(i, n - 1 - i) = ring(-1);
        f.symmetry = Symmetry::Alternating;
        return f;
    }
    f.lambda = ZMatrix(m, m, ring(0));
    for (int i = 0; i < m; ++i) f.lambda(i, m - 1 - i) = ring(1);
    f.symmetry = Symmetry::Symmetric;
    if (kind == FormKind::QuasiSplit) {
        require(m >= 2 && m % 2 == 0, "m: quasi-split form needs an even size");
        Zmod uu = ring(u);
        require(uu.is_unit(), "u: must be a unit");
        int c = m / 2 - 1;
        f.lambda(c, c + 1) = ring(0);
        f.lambda(c + 1, c) = ring(0);
        f.lambda(c, c) = ring(1);
        f.lambda(c + 1, c + 1) = -uu;
    }
    return f;
}

void validate_form(const BilinearForm& f, const ResidueRing& ring) {
    require(f.lambda.rows() == f.lambda.cols(), "form: matrix must be square");
    auto t = f.lambda.transpose();
    if (f.symmetry == Symmetry::Symmetric)
        require(t == f.lambda, "form: matrix is not symmetric");
    else
        require(t == f.lambda.scaled(ring(-1)), "form: matrix is not alternating");
    require(LocalLinalg{ring}.is_invertible(f.lambda), "form: matrix is not invertible");
}

bool check_isometry(const ZMatrix& M, const BilinearForm& form) {
    require(M.rows() == M.cols() && M.rows() == form.dim(), "isometry: size mismatch");
    return M.transpose() * form.lambda * M == form.lambda;
}

ZPoly charpoly(const ZMatrix& M) {
    int n = M.rows();
    require(n == M.cols(), "charpoly: matrix must be square");
    Zmod one = Zmod(1, n ? M(0, 0).modulus() : 0);
    Zmod zero = one - one;
    std::vector<Zmod> p{one};  // highest degree first
    for (int r = 0; r < n; ++r) {
        // Column of the Toeplitz matrix: 1, −a, −RS, −R A_r S, ...
        std::vector<Zmod> col{one, -M(r, r)};
        std::vector<Zmod> v(static_cast<std::size_t>(r));
        for (int i = 0; i < r; ++i) v[static_cast<std::size_t>(i)] = M(i, r);
        for (int k = 0; k < r; ++k) {
            Zmod s = zero;
            for (int i = 0; i < r; ++i) s += M(r, i) * v[static_cast<std::size_t>(i)];
            col.push_back(-s);
            std::vector<Zmod> nv(static_cast<std::size_t>(r), zero);
            for (int i = 0; i < r; ++i)
                for (int l = 0; l < r; ++l) nv[static_cast<std::size_t>(i)] += M(i, l) * v[static_cast<std::size_t>(l)];
            v = nv;
        }
        std::vector<Zmod> np(static_cast<std::size_t>(r + 2), zero);
        for (int i = 0; i < r + 2; ++i)
            for (int k = 0; k <= std::min(i, r); ++k) {
                int d = i - k;
                if (d < static_cast<int>(col.size())) np[static_cast<std::size_t>(i)] += col[static_cast<std::size_t>(d)] * p[static_cast<std::size_t>(k)];
            }
        p = np;
    }
    std::reverse(p.begin(), p.end());
    return ZPoly(p);
}

ZMatrix eval_poly(const ZPoly& f, const ZMatrix& M) {
    int n = M.rows();
    Zmod one = Zmod(1, n ? M(0, 0).modulus() : 0);
    ZMatrix acc(n, n, one - one);
    auto id = ZMatrix::identity(n, one);
    for (int i = f.degree(); i >= 0; --i) acc = acc * M + id.scaled(f.coeff(i));
    return acc;
}

ZMatrix sylvester(const ZPoly& f, const ZPoly& g) {
    int m = f.degree(), n = g.degree();
    require(m >= 0 && n >= 0, "sylvester: zero polynomial");
    int s = m + n;
    std::uint64_t mod = f.lead().modulus() ? f.lead().modulus() : g.lead().modulus();
    ZMatrix S(s, s, Zmod(0, mod));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= m; ++k) S(i + k, i) = Zmod(f.coeff(k).value(), mod);
    for (int i = 0; i < m; ++i)
        for (int k = 0; k <= n; ++k) S(i + k, n + i) = Zmod(g.coeff(k).value(), mod);
    return S;
}

bool coprime(const ZPoly& f, const ZPoly& g, const ResidueRing& ring) {
    if (f.degree() == 0) return f.lead().is_unit();
    if (g.degree() == 0) return g.lead().is_unit();
    return LocalLinalg{ring}.is_invertible(sylvester(f, g));
}

std::pair<ZPoly, ZPoly> bezout(const ZPoly& f, const ZPoly& g, const ResidueRing& ring) {
    int m = f.degree(), n = g.degree();
    if (m == 0) return {ZPoly::constant(inv(ring(f.lead().value()))), ZPoly()};
    if (n == 0) return {ZPoly(), ZPoly::constant(inv(ring(g.lead().value())))};
    auto Sinv = LocalLinalg{ring}.inverse(sylvester(f, g));
    require(Sinv.has_value(), "bezout: polynomials are not coprime");
    std::vector<Zmod> u(static_cast<std::size_t>(n)), v(static_cast<std::size_t>(m));
    for (int i = 0; i < n; ++i) u[static_cast<std::size_t>(i)] = (*Sinv)(i, 0);
    for (int i = 0; i < m; ++i) v[static_cast<std::size_t>(i)] = (*Sinv)(n + i, 0);
    return {ZPoly(u), ZPoly(v)};
}

bool is_reciprocal(const ZPoly& f) {
    if (f.degree() <= 0) return true;
    Zmod c0 = f.coeff(0);
    if (!c0.is_unit()) return false;
    return f.reversed() == f.scaled(c0);
}

namespace {

ZMatrix block(const ZMatrix& m, int r0, int c0, int nr, int nc) {
    ZMatrix r(nr, nc);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) r(i, j) = m(r0 + i, c0 + j);
    return r;
}

std::vector<std::int64_t> degeneracy_witness(const ZMatrix& basis, const ZMatrix& gram, const ResidueRing& ring) {
    ZMatrix g = reduce(gram, ring.p);
    auto k = FieldLinalg<Zmod>::kernel(g, Zmod(1, ring.p));
    std::vector<std::int64_t> w;
    if (k.cols() == 0) return w;
    for (int i = 0; i < basis.rows(); ++i) {
        Zmod s = ring(0);
        for (int j = 0; j < basis.cols(); ++j) s += basis(i, j) * ring(k(j, 0).value());
        w.push_back(s.value());
    }
    return w;
}

}  // namespace

SplitResult split_by_factor(const ZMatrix& M, const BilinearForm& form, const ZPoly& A, const ZPoly& B,
                            const ResidueRing& ring) {
    int n = M.rows();
    require(n == M.cols() && n == form.dim(), "split: size mismatch");
    check_guard(n <= guards().max_matrix_dim, "max_matrix_dim: matrix size " + std::to_string(n));
    check_guard(ring.e <= guards().max_precision, "max_precision: e = " + std::to_string(ring.e));
    ZMatrix Mr = reduce(M, ring.modulus);
    ZPoly Ar = reduce(A, ring.modulus), Br = reduce(B, ring.modulus);
    require(!Ar.is_zero() && Ar.lead() == ring(1), "A: must be monic");
    require(!Br.is_zero() && Br.lead() == ring(1), "B: must be monic");
    require(Ar * Br == charpoly(Mr), "A*B: product is not the characteristic polynomial");
    require(coprime(Ar, Br, ring), "A,B: factors are not coprime (resultant is not a unit)");
    require(is_reciprocal(Ar), "A: roots are not closed under inversion");
    require(is_reciprocal(Br), "B: roots are not closed under inversion");

    auto [u, v] = bezout(Ar, Br, ring);
    ZMatrix Es = eval_poly(v * Br, Mr);
    ZMatrix Epsi = eval_poly(u * Ar, Mr);
    LocalLinalg la{ring};
    SplitResult r;
    r.basis_s = la.summand_basis(Es);
    r.basis_psi = la.summand_basis(Epsi);
    const ZMatrix& L = form.lambda;
    r.stable = Es * Mr * r.basis_s == Mr * r.basis_s && Epsi * Mr * r.basis_psi == Mr * r.basis_psi;
    r.orthogonal = (eval_poly(Br, Mr).transpose() * L * eval_poly(Ar, Mr)).is_zero() &&
                   (r.basis_s.transpose() * L * r.basis_psi).is_zero();
    r.gram_s = r.basis_s.transpose() * L * r.basis_s;
    r.gram_psi = r.basis_psi.transpose() * L * r.basis_psi;
    r.nondegenerate_s = r.basis_s.cols() == 0 || la.is_invertible(r.gram_s);
    r.nondegenerate_psi = r.basis_psi.cols() == 0 || la.is_invertible(r.gram_psi);
    if (!r.nondegenerate_s) r.witness = degeneracy_witness(r.basis_s, r.gram_s, ring);
    if (r.witness.empty() && !r.nondegenerate_psi) r.witness = degeneracy_witness(r.basis_psi, r.gram_psi, ring);

    int ds = r.basis_s.cols(), dp = r.basis_psi.cols();
    if (ds + dp == n) {
        ZMatrix P = hstack(r.basis_s, r.basis_psi);
        auto Pinv = la.inverse(P);
        if (Pinv) {
            ZMatrix C = *Pinv * Mr * P;
            bool block_diag = block(C, 0, ds, ds, dp).is_zero() && block(C, ds, 0, dp, ds).is_zero();
            ZPoly one = ZPoly::constant(ring(1));
            ZPoly cs = ds ? charpoly(block(C, 0, 0, ds, ds)) : one;
            ZPoly cp = dp ? charpoly(block(C, ds, ds, dp, dp)) : one;
            r.charpoly_recombines = block_diag && cs * cp == charpoly(Mr) && cs == Ar && cp == Br;
        }
    }
    return r;
}

ZMatrix inner_derivation_matrix(const std::vector<ZMatrix>& phi_col) {
    int n = static_cast<int>(phi_col.size());
    require(n >= 1, "phi: empty table");
    Zmod zero = phi_col[0](0, 0) - phi_col[0](0, 0);
    ZMatrix A(n, n, zero);
    for (int j = 0; j < n; ++j) {
        require(phi_col[static_cast<std::size_t>(j)].rows() == n && phi_col[static_cast<std::size_t>(j)].cols() == n,
                "phi: entry has the wrong size");
        // φ(E_{j,1}) E_{1,j} places column 1 of φ(E_{j,1}) into column j.
        for (int i = 0; i < n; ++i) A(i, j) += phi_col[static_cast<std::size_t>(j)](i, 0);
    }
    return A;
}

ZMatrix inner_derivation_checked(const std::vector<std::vector<ZMatrix>>& phi) {
    int n = static_cast<int>(phi.size());
    std::vector<ZMatrix> col;
    for (int j = 0; j < n; ++j) col.push_back(phi[static_cast<std::size_t>(j)][0]);
    ZMatrix A = inner_derivation_matrix(col);
    Zmod one = A(0, 0) - A(0, 0) + Zmod(1);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            ZMatrix E(n, n, one - one);
            E(j, k) = one;
            require(A * E - E * A == phi[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)],
                    "phi: derivation rule violated at E_{" + std::to_string(j + 1) + "," + std::to_string(k + 1) + "}");
        }
    return A;
}

namespace {

std::vector<Zmod> vec(const ZMatrix& m) { return m.data(); }

}  // namespace

DescentResult descend_dual_numbers(const std::vector<DualMatrix>& rho, const BilinearForm& form,
                                   const ResidueRing& ring) {
    require(ring.e == 1, "ring: residue field expected");
    require(ring.p != 2, "ring: characteristic 2 is not supported");
    require(!rho.empty(), "rho: no generators");
    int n = form.dim();
    check_guard(n <= guards().max_matrix_dim, "max_matrix_dim: matrix size " + std::to_string(n));
    Zmod one = ring(1), zero = ring(0);
    for (const auto& g : rho) {
        require(g.re.rows() == n && g.eps.rows() == n, "rho: generator has the wrong size");
        require(check_isometry(g.re, form), "rho: residual generator does not preserve the form");
    }
    // Basis of the algebra spanned by words in the residual generators.
    std::vector<DualMatrix> basis;
    ZMatrix rows(0, n * n);
    auto try_add = [&](const DualMatrix& d) {
        ZMatrix cand(rows.rows() + 1, n * n);
        for (int i = 0; i < rows.rows(); ++i)
            for (int k = 0; k < n * n; ++k) cand(i, k) = rows(i, k);
        auto v = vec(d.re);
        for (int k = 0; k < n * n; ++k) cand(rows.rows(), k) = v[static_cast<std::size_t>(k)];
        if (FieldLinalg<Zmod>::rank(cand) > rows.rows()) {
            rows = cand;
            basis.push_back(d);
            return true;
        }
        return false;
    };
    try_add({ZMatrix::identity(n, one), ZMatrix(n, n, zero)});
    for (std::size_t head = 0; head < basis.size() && static_cast<int>(basis.size()) < n * n; ++head)
        for (const auto& g : rho) {
            DualMatrix w = basis[head] * g;
            try_add(w);
            if (static_cast<int>(basis.size()) == n * n) break;
        }
    require(static_cast<int>(basis.size()) == n * n,
            "rho: residual image does not span the full matrix algebra (not absolutely irreducible)");
    // Coordinates of the elementary matrices in the word basis.
    auto inv = FieldLinalg<Zmod>::inverse(rows.transpose(), one);
    require(inv.has_value(), "rho: word basis is singular");
    std::vector<std::vector<ZMatrix>> phi(static_cast<std::size_t>(n), std::vector<ZMatrix>(static_cast<std::size_t>(n)));
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            int idx = j * n + k;
            ZMatrix val(n, n, zero);
            for (int w = 0; w < n * n; ++w) {
                Zmod c = (*inv)(w, idx);
                if (!c.is_zero()) val = val + basis[static_cast<std::size_t>(w)].eps.scaled(c);
            }
            phi[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] = val;
        }
    // The ε-part of ρ is ρ̄·(derivation)... φ(ρ̄(γ)) = ε-part of ρ(γ), so A satisfies φ(a) = Aa − aA.
    DescentResult res;
    res.A = inner_derivation_checked(phi);
    const ZMatrix& L = form.lambda;
    ZMatrix S = res.A.transpose() * L + L * res.A;
    int pi = -1, pj = -1;
    for (int i = 0; i < n && pi < 0; ++i)
        for (int j = 0; j < n; ++j)
            if (!L(i, j).is_zero()) {
                pi = i;
                pj = j;
                break;
            }
    Zmod b = S(pi, pj) / L(pi, pj);
    require(S == L.scaled(b), "rho: form correction is not scalar (irreducibility violated)");
    res.b = b.value();
    res.A_prime = res.A - ZMatrix::identity(n, one).scaled(b / ring(2));
    res.isometry = (res.A_prime.transpose() * L + L * res.A_prime).is_zero();
    res.residual_equal = true;
    for (const auto& g : rho) {
        ZMatrix e = g.eps + g.re * res.A_prime - res.A_prime * g.re;
        res.descended.push_back(g.re);
        if (!e.is_zero()) res.residual_equal = false;
    }
    require(res.isometry, "descent: 1 + A'ε does not preserve the form");
    require(res.residual_equal, "descent: conjugated representation is not defined over the residue field");
    return res;
}

ZMatrix random_isometry(const BilinearForm& form, const ResidueRing& ring, std::mt19937_64& rng, int steps) {
    int n = form.dim();
    const ZMatrix& L = form.lambda;
    ZMatrix g = ZMatrix::identity(n, ring(1));
    std::uniform_int_distribution<std::int64_t> coef(0, static_cast<std::int64_t>(ring.modulus) - 1);
    auto rand_vec = [&]() {
        ZMatrix v(n, 1, ring(0));
        for (int i = 0; i < n; ++i) v(i, 0) = ring(coef(rng));
        return v;
    };
    for (int s = 0; s < steps; ++s) {
        if (form.symmetry == Symmetry::Alternating) {
            ZMatrix v = rand_vec();
            Zmod c = ring(coef(rng));
            g = g * (ZMatrix::identity(n, ring(1)) + (v * (v.transpose() * L)).scaled(c));
        } else {
            // Product of two reflections keeps determinant 1.
            ZMatrix acc = ZMatrix::identity(n, ring(1));
            for (int t = 0; t < 2; ++t) {
                ZMatrix v(n, 1);
                Zmod q = ring(0);
                for (int tries = 0; tries < 1000 && !q.is_unit(); ++tries) {
                    v = rand_vec();
                    q = (v.transpose() * L * v)(0, 0);
                }
                if (!q.is_unit()) continue;
                acc = acc * (ZMatrix::identity(n, ring(1)) - (v * (v.transpose() * L)).scaled(ring(2) / q));
            }
            g = g * acc;
        }
    }
    return g;
}

ZMatrix random_lie_element(const BilinearForm& form, const ResidueRing& ring, std::mt19937_64& rng) {
    int n = form.dim();
    std::uniform_int_distribution<std::int64_t> coef(0, static_cast<std::int64_t>(ring.modulus) - 1);
    ZMatrix S(n, n, ring(0));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Zmod c = ring(coef(rng));
            if (form.symmetry == Symmetry::Alternating) {
                S(i, j) = c;
                S(j, i) = c;
            } else if (i != j) {
                S(i, j) = c;
                S(j, i) = -c;
            }
        }
    auto Li = LocalLinalg{ring}.inverse(form.lambda);
    require(Li.has_value(), "form: matrix is not invertible");
    return *Li * S;
}

}  // namespace hf
