// SPDX-License-Identifier: Apache-2.0
#include "heckeforge/adequacy.hpp"

#include <algorithm>
#include <deque>

#include "heckeforge/guards.hpp"

namespace hf {

namespace {

using Row = std::vector<std::int64_t>;

std::int64_t md(std::int64_t x, std::int64_t p) {
    x %= p;
    return x < 0 ? x + p : x;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) { return Zmod(a, static_cast<std::uint64_t>(p)).inv().value(); }

// Row space over F_p kept in echelon form with unit pivots.
class Echelon {
public:
    Echelon(std::int64_t p, std::size_t cols) : p_(p), cols_(cols) {}
    bool add(Row v) {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            std::int64_t c = v[piv_[r]];
            if (c == 0) continue;
            const Row& row = rows_[r];
            for (std::size_t j = 0; j < cols_; ++j)
                if (row[j]) v[j] = md(v[j] - c * row[j], p_);
        }
        std::size_t pv = 0;
        while (pv < cols_ && v[pv] == 0) ++pv;
        if (pv == cols_) return false;
        std::int64_t iv = inv_mod(v[pv], p_);
        for (auto& x : v) x = md(x * iv, p_);
        rows_.push_back(std::move(v));
        piv_.push_back(pv);
        return true;
    }
    std::size_t rank() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

private:
    std::int64_t p_;
    std::size_t cols_;
    std::vector<Row> rows_;
    std::vector<std::size_t> piv_;
};

std::vector<std::int64_t> key_of(const ZMatrix& m) {
    std::vector<std::int64_t> k;
    k.reserve(m.data().size());
    for (const auto& x : m.data()) k.push_back(x.value());
    return k;
}

Zmod one_mod(std::uint64_t p) { return Zmod(1, p); }

ZMatrix inverse_mod(const ZMatrix& m, std::uint64_t p) {
    auto r = FieldLinalg<Zmod>::inverse(m, one_mod(p));
    require(r.has_value(), "matrix is not invertible over F_p");
    return *r;
}

// Action matrices of every element, following the BFS parents.
std::vector<ZMatrix> all_actions(const FiniteMatrixGroup& H, const GroupModule& M) {
    std::vector<ZMatrix> out(H.size());
    out[0] = ZMatrix::identity(M.dim, one_mod(H.p));
    for (std::size_t i = 1; i < H.size(); ++i) out[i] = M.gen_action[H.parent_gen[i]] * out[H.parent[i]];
    return out;
}

int kernel_dim(const ZMatrix& m, std::uint64_t p) {
    return m.cols() - FieldLinalg<Zmod>::rank(m.rows() ? m : ZMatrix(1, m.cols(), Zmod(0, p)));
}

// Subspaces as column bases; annihilator rows of a column span.
ZMatrix annihilator(const ZMatrix& basis, int d, std::uint64_t p) {
    if (basis.cols() == 0) return ZMatrix::identity(d, one_mod(p));
    return FieldLinalg<Zmod>::kernel(basis.transpose(), one_mod(p)).transpose();
}

// Largest subspace of span(K) stable under all generator actions.
ZMatrix largest_stable(ZMatrix K, const std::vector<ZMatrix>& actions, int d, std::uint64_t p) {
    bool changed = true;
    while (changed && K.cols() > 0) {
        changed = false;
        for (const auto& g : actions) {
            if (K.cols() == 0) break;
            ZMatrix A = annihilator(K, d, p);
            if (A.rows() == 0) continue;
            ZMatrix cond = A * g * K;
            ZMatrix c = FieldLinalg<Zmod>::kernel(cond, one_mod(p));
            if (c.cols() < K.cols()) {
                K = K * c;
                changed = true;
            }
        }
    }
    return K;
}

}  // namespace

std::optional<std::size_t> FiniteMatrixGroup::index_of(const ZMatrix& g) const {
    auto it = lookup_.find(key_of(g));
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
}

FiniteMatrixGroup close_group(const std::vector<ZMatrix>& generators, std::uint64_t p) {
    require(is_prime(p), "p: must be prime");
    require(!generators.empty(), "generators: empty list");
    FiniteMatrixGroup H;
    H.p = p;
    H.N = generators[0].rows();
    LocalLinalg la{ResidueRing(p, 1)};
    for (std::size_t i = 0; i < generators.size(); ++i) {
        const auto& g = generators[i];
        require(g.rows() == H.N && g.cols() == H.N, "generators[" + std::to_string(i) + "]: must be N×N");
        ZMatrix r = reduce(g, p);
        require(la.is_invertible(r), "generators[" + std::to_string(i) + "]: not invertible");
        H.generators.push_back(r);
    }
    ZMatrix e = ZMatrix::identity(H.N, one_mod(p));
    H.elements.push_back(e);
    H.parent.push_back(0);
    H.parent_gen.push_back(0);
    H.lookup_[key_of(e)] = 0;
    std::size_t cap = guards().max_group_order;
    for (std::size_t head = 0; head < H.elements.size(); ++head) {
        for (std::size_t s = 0; s < H.generators.size(); ++s) {
            ZMatrix x = H.generators[s] * H.elements[head];
            auto k = key_of(x);
            if (H.lookup_.count(k)) continue;
            check_guard(H.elements.size() < cap, "group order exceeds max_group_order");
            H.lookup_[k] = H.elements.size();
            H.elements.push_back(std::move(x));
            H.parent.push_back(head);
            H.parent_gen.push_back(s);
        }
    }
    return H;
}

std::vector<Zmod> AdjointModule::coords(const ZMatrix& X) const {
    int d = dim();
    std::vector<Zmod> rhs;
    for (int e : pivot_entries_) rhs.push_back(X.data()[static_cast<std::size_t>(e)]);
    std::vector<Zmod> c(static_cast<std::size_t>(d), Zmod(0, X.data().empty() ? 0 : X.data()[0].modulus()));
    for (int i = 0; i < d; ++i) {
        Zmod acc = Zmod(0, c[0].modulus());
        for (int j = 0; j < d; ++j) acc += pivot_inverse_(i, j) * rhs[static_cast<std::size_t>(j)];
        c[static_cast<std::size_t>(i)] = acc;
    }
    ZMatrix rec(X.rows(), X.cols(), Zmod(0, c.empty() ? 0 : c[0].modulus()));
    for (int i = 0; i < d; ++i) rec = rec + basis[static_cast<std::size_t>(i)].scaled(c[static_cast<std::size_t>(i)]);
    require(rec == X, "element is not in the Lie algebra");
    return c;
}

AdjointModule adjoint_module(const BilinearForm& form, std::uint64_t p) {
    require(is_prime(p) && p != 2, "p: must be an odd prime");
    ResidueRing F(p, 1);
    AdjointModule M;
    M.form.lambda = reduce(form.lambda, p);
    M.form.symmetry = form.symmetry;
    validate_form(M.form, F);
    int N = M.form.dim();
    int NN = N * N;
    // Row (r,c) of X^tΛ + ΛX against unknown X(i,j).
    ZMatrix L(NN, NN, F(0));
    const auto& Lam = M.form.lambda;
    for (int r = 0; r < N; ++r)
        for (int c = 0; c < N; ++c)
            for (int k = 0; k < N; ++k) {
                L(r * N + c, k * N + r) += Lam(k, c);
                L(r * N + c, k * N + c) += Lam(r, k);
            }
    ZMatrix K = FieldLinalg<Zmod>::kernel(L, F(1));
    for (int j = 0; j < K.cols(); ++j) {
        ZMatrix X(N, N, F(0));
        for (int e = 0; e < NN; ++e) X(e / N, e % N) = K(e, j);
        M.basis.push_back(X);
    }
    ZMatrix T = K.transpose();
    M.pivot_entries_ = FieldLinalg<Zmod>::rref(T);
    int d = M.dim();
    ZMatrix S(d, d, F(0));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) S(i, j) = K(M.pivot_entries_[static_cast<std::size_t>(i)], j);
    M.pivot_inverse_ = inverse_mod(S, p);
    return M;
}

AdjointModule adjoint_module(const GroupDescriptor& desc, std::uint64_t p) {
    ResidueRing F(p, 1);
    if (desc.kind == GroupKind::SOodd) return adjoint_module(standard_form(FormKind::Symplectic, desc.N / 2, 0, F), p);
    return adjoint_module(standard_form(FormKind::Orthogonal, desc.N, 0, F), p);
}

GroupModule conjugation_module(const FiniteMatrixGroup& H, const AdjointModule& M) {
    require(H.N == M.form.dim(), "group and module sizes differ");
    GroupModule out;
    out.dim = M.dim();
    for (std::size_t s = 0; s < H.generators.size(); ++s) {
        const auto& g = H.generators[s];
        require(g.transpose() * M.form.lambda * g == M.form.lambda,
                "generators[" + std::to_string(s) + "]: does not preserve the form");
        ZMatrix gi = inverse_mod(g, H.p);
        ZMatrix A(out.dim, out.dim, Zmod(0, H.p));
        for (int j = 0; j < out.dim; ++j) {
            auto c = M.coords(g * M.basis[static_cast<std::size_t>(j)] * gi);
            for (int i = 0; i < out.dim; ++i) A(i, j) = c[static_cast<std::size_t>(i)];
        }
        out.gen_action.push_back(A);
    }
    return out;
}

GroupModule gl_conjugation_module(const FiniteMatrixGroup& H) {
    int N = H.N;
    GroupModule out;
    out.dim = N * N;
    for (const auto& g : H.generators) {
        ZMatrix gi = inverse_mod(g, H.p);
        ZMatrix A(out.dim, out.dim, Zmod(0, H.p));
        for (int a = 0; a < N; ++a)
            for (int b = 0; b < N; ++b)
                // g E_ab g^{-1} = (column a of g)(row b of g^{-1})
                for (int r = 0; r < N; ++r)
                    for (int c = 0; c < N; ++c) A(r * N + c, a * N + b) = g(r, a) * gi(b, c);
        out.gen_action.push_back(A);
    }
    return out;
}

GroupModule trivial_module(const FiniteMatrixGroup& H, int dim) {
    GroupModule out;
    out.dim = dim;
    out.gen_action.assign(H.generators.size(), ZMatrix::identity(dim, one_mod(H.p)));
    return out;
}

int h0_module(const FiniteMatrixGroup& H, const GroupModule& M) {
    require(M.gen_action.size() == H.generators.size(), "module: one action matrix per generator required");
    int d = M.dim;
    if (d == 0) return 0;
    ZMatrix I = ZMatrix::identity(d, one_mod(H.p));
    ZMatrix stack(d * static_cast<int>(M.gen_action.size()), d, Zmod(0, H.p));
    for (std::size_t s = 0; s < M.gen_action.size(); ++s) {
        require(M.gen_action[s].rows() == d && M.gen_action[s].cols() == d,
                "module: action matrix " + std::to_string(s) + " has the wrong size");
        ZMatrix D = M.gen_action[s] - I;
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) stack(static_cast<int>(s) * d + i, j) = D(i, j);
    }
    return kernel_dim(stack, H.p);
}

int reynolds_rank(const FiniteMatrixGroup& H, const GroupModule& M) {
    require(H.size() % H.p != 0, "p divides |H|: averaging projector undefined");
    auto acts = all_actions(H, M);
    ZMatrix S(M.dim, M.dim, Zmod(0, H.p));
    for (const auto& a : acts) S = S + a;
    S = S.scaled(Zmod(static_cast<std::int64_t>(H.size() % H.p), H.p).inv());
    return FieldLinalg<Zmod>::rank(S);
}

int h1_finite(const FiniteMatrixGroup& H, const GroupModule& M) {
    require(M.gen_action.size() == H.generators.size(), "module: one action matrix per generator required");
    const std::int64_t p = static_cast<std::int64_t>(H.p);
    const int d = M.dim;
    const int r = static_cast<int>(H.generators.size());
    const std::size_t U = static_cast<std::size_t>(r * d);
    if (d == 0) return 0;
    // F[g] is the d×U matrix expressing f(g) in the unknowns f(s_1..s_r).
    std::vector<std::vector<Row>> F(H.size());
    F[0].assign(static_cast<std::size_t>(d), Row(U, 0));
    auto step = [&](std::size_t g, int s) {
        std::vector<Row> out(static_cast<std::size_t>(d), Row(U, 0));
        const auto& A = M.gen_action[static_cast<std::size_t>(s)];
        for (int i = 0; i < d; ++i) {
            Row& row = out[static_cast<std::size_t>(i)];
            row[static_cast<std::size_t>(s * d + i)] = 1;
            for (int k = 0; k < d; ++k) {
                std::int64_t a = A(i, k).value();
                if (!a) continue;
                const Row& src = F[g][static_cast<std::size_t>(k)];
                for (std::size_t u = 0; u < U; ++u)
                    if (src[u]) row[u] = md(row[u] + a * src[u], p);
            }
        }
        return out;
    };
    Echelon cons(p, U);
    for (std::size_t i = 1; i < H.size(); ++i) {
        F[i] = step(H.parent[i], static_cast<int>(H.parent_gen[i]));
    }
    for (std::size_t g = 0; g < H.size(); ++g)
        for (int s = 0; s < r; ++s) {
            std::size_t t = *H.index_of(H.generators[static_cast<std::size_t>(s)] * H.elements[g]);
            if (t != 0 && H.parent[t] == g && H.parent_gen[t] == static_cast<std::size_t>(s)) continue;
            auto val = step(g, s);
            for (int i = 0; i < d; ++i) {
                Row diff(U);
                for (std::size_t u = 0; u < U; ++u)
                    diff[u] = md(val[static_cast<std::size_t>(i)][u] - F[t][static_cast<std::size_t>(i)][u], p);
                cons.add(std::move(diff));
            }
        }
    int z1 = static_cast<int>(U - cons.rank());
    int b1 = d - h0_module(H, M);
    return z1 - b1;
}

int h1_finite_table(const FiniteMatrixGroup& H, const GroupModule& M) {
    const std::int64_t p = static_cast<std::int64_t>(H.p);
    const int d = M.dim;
    const std::size_t n = H.size();
    check_guard(n <= 200, "h1_finite_table: group too large for the table method");
    const std::size_t U = n * static_cast<std::size_t>(d);
    auto acts = all_actions(H, M);
    Echelon cons(p, U);
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h) {
            std::size_t gh = *H.index_of(H.elements[g] * H.elements[h]);
            // f(gh) − f(g) − g·f(h) = 0
            for (int i = 0; i < d; ++i) {
                Row row(U, 0);
                auto at = [&](std::size_t x, int k) -> std::int64_t& { return row[x * static_cast<std::size_t>(d) + static_cast<std::size_t>(k)]; };
                at(gh, i) = md(at(gh, i) + 1, p);
                at(g, i) = md(at(g, i) - 1, p);
                for (int k = 0; k < d; ++k) at(h, k) = md(at(h, k) - acts[g](i, k).value(), p);
                cons.add(std::move(row));
            }
        }
    int z1 = static_cast<int>(U - cons.rank());
    int b1 = d - h0_module(H, M);
    return z1 - b1;
}

int h1_cyclic(const ZMatrix& g_action, std::size_t order) {
    int d = g_action.rows();
    if (d == 0) return 0;
    std::uint64_t p = g_action.data()[0].modulus();
    ZMatrix I = ZMatrix::identity(d, one_mod(p));
    ZMatrix norm(d, d, Zmod(0, p)), pw = I;
    for (std::size_t i = 0; i < order; ++i) {
        norm = norm + pw;
        pw = pw * g_action;
    }
    require(pw == I, "order: g^order is not the identity");
    return kernel_dim(norm, p) - FieldLinalg<Zmod>::rank(g_action - I);
}

int hom_to_kappa(const FiniteMatrixGroup& H) { return h1_finite(H, trivial_module(H, 1)); }

std::vector<std::int64_t> split_eigenvalues(const ZMatrix& gamma, std::uint64_t p) {
    ZPoly f = charpoly(reduce(gamma, p));
    std::vector<std::int64_t> roots;
    for (std::int64_t a = 0; a < static_cast<std::int64_t>(p); ++a) {
        ZPoly lin = ZPoly::linear(Zmod(a, p), one_mod(p));
        while (f.degree() >= 1) {
            auto [q, rem] = f.divmod(lin);
            if (!rem.is_zero()) break;
            roots.push_back(a);
            f = q;
        }
    }
    require(static_cast<int>(roots.size()) == gamma.rows(), "characteristic polynomial does not split over F_p");
    return roots;
}

ZMatrix eigen_projector(const ZMatrix& gamma, std::int64_t a, std::uint64_t p) {
    ResidueRing F(p, 1);
    ZMatrix g = reduce(gamma, p);
    ZPoly f = charpoly(g);
    ZPoly lin = ZPoly::linear(F(a), F(1));
    ZPoly pa = ZPoly::constant(F(1));
    int m = 0;
    while (f.degree() >= 1) {
        auto [q, rem] = f.divmod(lin);
        if (!rem.is_zero()) break;
        f = q;
        pa = pa * lin;
        ++m;
    }
    require(m > 0, "a: not an eigenvalue");
    int N = g.rows();
    if (f.degree() == 0) return ZMatrix::identity(N, F(1));
    auto [u, v] = bezout(pa, f, F);
    (void)u;
    return eval_poly(v * f, g);
}

std::optional<TraceWitness> trace_pairing_check(const FiniteMatrixGroup& H, const AdjointModule& M,
                                                const std::vector<ZMatrix>& W) {
    require(!W.empty(), "W: must be nonzero");
    int d = M.dim();
    ZMatrix span(d, static_cast<int>(W.size()), Zmod(0, H.p));
    for (std::size_t j = 0; j < W.size(); ++j) {
        auto c = M.coords(reduce(W[j], H.p));
        for (int i = 0; i < d; ++i) span(i, static_cast<int>(j)) = c[static_cast<std::size_t>(i)];
    }
    int rk = FieldLinalg<Zmod>::rank(span);
    require(rk > 0, "W: must be nonzero");
    for (std::size_t s = 0; s < H.generators.size(); ++s) {
        ZMatrix gi = inverse_mod(H.generators[s], H.p);
        ZMatrix img(d, static_cast<int>(W.size()), Zmod(0, H.p));
        for (std::size_t j = 0; j < W.size(); ++j) {
            auto c = M.coords(H.generators[s] * reduce(W[j], H.p) * gi);
            for (int i = 0; i < d; ++i) img(i, static_cast<int>(j)) = c[static_cast<std::size_t>(i)];
        }
        require(FieldLinalg<Zmod>::rank(hstack(span, img)) == rk, "W: not stable under H");
    }
    for (std::size_t gi = 0; gi < H.size(); ++gi) {
        const auto& gamma = H.elements[gi];
        auto eig = split_eigenvalues(gamma, H.p);
        eig.erase(std::unique(eig.begin(), eig.end()), eig.end());
        for (auto a : eig) {
            ZMatrix P = eigen_projector(gamma, a, H.p);
            require(P * P == P && P * gamma == gamma * P, "eigen projector identity failed");
            for (std::size_t j = 0; j < W.size(); ++j) {
                Zmod t = (P * reduce(W[j], H.p)).trace();
                if (!t.is_zero()) return TraceWitness{gi, a, j, t};
            }
        }
    }
    return std::nullopt;
}

Condition4Report condition4(const FiniteMatrixGroup& H, const AdjointModule& M, bool exhaustive_cyclic) {
    int d = M.dim();
    std::uint64_t p = H.p;
    GroupModule act = conjugation_module(H, M);
    Echelon fun(static_cast<std::int64_t>(p), static_cast<std::size_t>(d));
    std::vector<Row> rows;
    for (std::size_t gi = 0; gi < H.size() && static_cast<int>(fun.rank()) < d; ++gi) {
        const auto& gamma = H.elements[gi];
        auto eig = split_eigenvalues(gamma, p);
        eig.erase(std::unique(eig.begin(), eig.end()), eig.end());
        for (auto a : eig) {
            ZMatrix P = eigen_projector(gamma, a, p);
            Row r(static_cast<std::size_t>(d));
            for (int i = 0; i < d; ++i) r[static_cast<std::size_t>(i)] = (P * M.basis[static_cast<std::size_t>(i)]).trace().value();
            if (fun.add(r)) rows.push_back(r);
        }
    }
    ZMatrix K;
    if (rows.empty()) {
        K = ZMatrix::identity(d, one_mod(p));
    } else {
        ZMatrix A(static_cast<int>(rows.size()), d, Zmod(0, p));
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (int j = 0; j < d; ++j) A(static_cast<int>(i), j) = Zmod(rows[i][static_cast<std::size_t>(j)], p);
        K = FieldLinalg<Zmod>::kernel(A, one_mod(p));
    }
    ZMatrix bad = largest_stable(K, act.gen_action, d, p);
    Condition4Report rep;
    rep.bad_submodule_dim = bad.cols();
    rep.all_submodules = bad.cols() == 0;
    if (exhaustive_cyclic) {
        check_guard(d <= 10, "exhaustive cyclic mode needs dim ≤ 10");
        double pts = 1;
        for (int i = 0; i < d; ++i) pts *= static_cast<double>(p);
        check_guard(pts <= static_cast<double>(guards().oracle_max_column_space) * static_cast<double>(p),
                    "exhaustive cyclic mode: too many vectors");
        ZMatrix annK = annihilator(K, d, p);
        rep.all_cyclic = true;
        std::vector<std::int64_t> v(static_cast<std::size_t>(d), 0);
        // Projective representatives: first nonzero coordinate 1.
        for (int lead = 0; lead < d && *rep.all_cyclic; ++lead) {
            std::size_t tail = static_cast<std::size_t>(d - lead - 1);
            std::uint64_t count = ipow(p, static_cast<int>(tail));
            for (std::uint64_t idx = 0; idx < count; ++idx) {
                std::fill(v.begin(), v.end(), 0);
                v[static_cast<std::size_t>(lead)] = 1;
                std::uint64_t x = idx;
                for (std::size_t t = 0; t < tail; ++t) {
                    v[static_cast<std::size_t>(lead) + 1 + t] = static_cast<std::int64_t>(x % p);
                    x /= p;
                }
                // Cyclic submodule by closure under the generators.
                ZMatrix S(d, 1, Zmod(0, p));
                for (int i = 0; i < d; ++i) S(i, 0) = Zmod(v[static_cast<std::size_t>(i)], p);
                std::deque<ZMatrix> todo{S};
                ZMatrix basis = S;
                int rk = 1;
                while (!todo.empty()) {
                    ZMatrix u = todo.front();
                    todo.pop_front();
                    for (const auto& g : act.gen_action) {
                        ZMatrix w = g * u;
                        ZMatrix ext = hstack(basis, w);
                        if (FieldLinalg<Zmod>::rank(ext) > rk) {
                            basis = ext;
                            ++rk;
                            todo.push_back(w);
                        }
                    }
                }
                if (annK.rows() == 0 || (annK * basis).is_zero()) {
                    rep.all_cyclic = false;
                    rep.cyclic_counterexample = v;
                    break;
                }
            }
        }
    }
    return rep;
}

std::string verdict_name(SufficientVerdict v) {
    return v == SufficientVerdict::AdequateByLemma ? "adequate-by-lemma" : "inconclusive";
}

SufficientVerdict sufficient_conditions(std::uint64_t p, int N, bool irreducible, bool eigenvalues_split) {
    require(N >= 1, "N: must be positive");
    bool big_p = p >= 2 * static_cast<std::uint64_t>(N + 1);
    return big_p && irreducible && eigenvalues_split ? SufficientVerdict::AdequateByLemma : SufficientVerdict::Inconclusive;
}

AdequacyReport adequacy_check(const FiniteMatrixGroup& H, const AdjointModule& M, bool exhaustive_cyclic) {
    AdequacyReport r;
    r.order = H.size();
    GroupModule act = conjugation_module(H, M);
    r.h0 = h0_module(H, act);
    r.h1 = h1_finite(H, act);
    r.hom = hom_to_kappa(H);
    r.cond4 = condition4(H, M, exhaustive_cyclic);
    return r;
}

}  // namespace hf
