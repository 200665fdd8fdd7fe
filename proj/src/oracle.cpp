// SPDX-License-Identifier: Apache-2.0
#include "heckeforge/oracle.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <thread>
#include <unordered_set>

#include "heckeforge/errors.hpp"
#include "heckeforge/guards.hpp"

namespace hf {

namespace {

using Vec = std::vector<std::int64_t>;

std::int64_t md(std::int64_t a, std::int64_t m) {
    a %= m;
    return a < 0 ? a + m : a;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) { return Zmod(a, static_cast<std::uint64_t>(p)).inv().value(); }

std::int64_t det_mod(std::vector<Vec> a, std::int64_t p) {
    int n = static_cast<int>(a.size());
    std::int64_t d = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (md(a[r][c], p) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            d = md(-d, p);
        }
        std::int64_t iv = inv_mod(md(a[c][c], p), p);
        d = md(d * a[c][c], p);
        for (int r = c + 1; r < n; ++r) {
            std::int64_t f = md(a[r][c] * iv, p);
            if (!f) continue;
            for (int k = c; k < n; ++k) a[r][k] = md(a[r][k] - f * a[c][k], p);
        }
    }
    return d;
}

// Affine solution set of rows·x = rhs over F_p: particular solution and kernel basis.
bool solve_affine(std::vector<Vec> rows, Vec rhs, int n, std::int64_t p, Vec& part, std::vector<Vec>& kernel) {
    int m = static_cast<int>(rows.size());
    std::vector<int> pivcol;
    int r = 0;
    for (int c = 0; c < n && r < m; ++c) {
        int piv = -1;
        for (int i = r; i < m; ++i)
            if (rows[i][c] % p) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[piv], rows[r]);
        std::swap(rhs[piv], rhs[r]);
        std::int64_t iv = inv_mod(md(rows[r][c], p), p);
        for (int k = 0; k < n; ++k) rows[r][k] = md(rows[r][k] * iv, p);
        rhs[r] = md(rhs[r] * iv, p);
        for (int i = 0; i < m; ++i) {
            if (i == r || !(rows[i][c] % p)) continue;
            std::int64_t f = md(rows[i][c], p);
            for (int k = 0; k < n; ++k) rows[i][k] = md(rows[i][k] - f * rows[r][k], p);
            rhs[i] = md(rhs[i] - f * rhs[r], p);
        }
        pivcol.push_back(c);
        ++r;
    }
    for (int i = r; i < m; ++i)
        if (md(rhs[i], p)) return false;
    part.assign(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < r; ++i) part[pivcol[i]] = rhs[i];
    kernel.clear();
    std::vector<bool> is_piv(static_cast<std::size_t>(n), false);
    for (int c : pivcol) is_piv[c] = true;
    for (int f = 0; f < n; ++f) {
        if (is_piv[f]) continue;
        Vec k(static_cast<std::size_t>(n), 0);
        k[f] = 1;
        for (int i = 0; i < r; ++i) k[pivcol[i]] = md(-rows[i][f], p);
        kernel.push_back(k);
    }
    return true;
}

std::vector<Vec> lambda_int(const BilinearForm& form, std::int64_t m) {
    int n = form.dim();
    std::vector<Vec> L(static_cast<std::size_t>(n), Vec(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) L[i][j] = md(form.lambda(i, j).centered(), m);
    return L;
}

std::int64_t pair(const Vec& a, const std::vector<Vec>& L, const Vec& b, std::int64_t m) {
    std::int64_t s = 0;
    std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!a[i]) continue;
        std::int64_t t = 0;
        for (std::size_t j = 0; j < n; ++j) t += L[i][j] * b[j];
        s = md(s + a[i] * md(t, m), m);
    }
    return s;
}

std::int64_t least_nonsquare(std::int64_t q) {
    for (std::int64_t u = 2; u < q; ++u) {
        bool sq = false;
        for (std::int64_t x = 1; x < q && !sq; ++x) sq = (x * x) % q == u;
        if (!sq) return u;
    }
    return 1;
}

}  // namespace

ZMatrix FiniteClassicalGroup::element(std::size_t i) const {
    ZMatrix g(n, n, Zmod(0, q));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) g(r, c) = Zmod(elements[i][static_cast<std::size_t>(r * n + c)], q);
    return g;
}

bool FiniteClassicalGroup::contains(const ZMatrix& g) const {
    Packed key{};
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) key[static_cast<std::size_t>(r * n + c)] = static_cast<std::uint8_t>(md(g(r, c).value(), static_cast<std::int64_t>(q)));
    return std::binary_search(elements.begin(), elements.end(), key);
}

BilinearForm oracle_form(const GroupDescriptor& desc, const ResidueRing& field) {
    switch (desc.kind) {
        case GroupKind::Sp: return standard_form(FormKind::Symplectic, desc.n / 2, 0, field);
        case GroupKind::SOevenQuasi:
            return standard_form(FormKind::QuasiSplit, desc.n, least_nonsquare(static_cast<std::int64_t>(field.p)), field);
        default: return standard_form(FormKind::Orthogonal, desc.n, 0, field);
    }
}

FiniteClassicalGroup enumerate_points(const BilinearForm& form, std::uint64_t q, bool special) {
    int n = form.dim();
    require(is_prime(q) && q % 2 == 1, "q: must be an odd prime");
    check_guard(n <= guards().oracle_max_n, "oracle_max_n: matrix size " + std::to_string(n));
    check_guard(static_cast<int>(q) <= guards().oracle_max_q, "oracle_max_q: q = " + std::to_string(q));
    std::int64_t p = static_cast<std::int64_t>(q);
    auto L = lambda_int(form, p);
    require(det_mod(L, p) != 0, "form: degenerate over F_q");

    std::vector<Vec> first;
    {
        Vec c(static_cast<std::size_t>(n), 0);
        std::function<void(int)> rec = [&](int i) {
            if (i == n) {
                if (pair(c, L, c, p) == L[0][0]) first.push_back(c);
                return;
            }
            for (std::int64_t v = 0; v < p; ++v) {
                c[i] = v;
                rec(i + 1);
            }
        };
        rec(0);
    }

    auto run = [&](std::size_t lo, std::size_t stride, std::vector<FiniteClassicalGroup::Packed>& out) {
        std::vector<Vec> cols;
        std::function<void(int)> extend = [&](int k) {
            if (k == n) {
                std::vector<Vec> g(static_cast<std::size_t>(n), Vec(static_cast<std::size_t>(n)));
                for (int r = 0; r < n; ++r)
                    for (int c = 0; c < n; ++c) g[r][c] = cols[c][r];
                if (special && det_mod(g, p) != 1) return;
                FiniteClassicalGroup::Packed e{};
                for (int r = 0; r < n; ++r)
                    for (int c = 0; c < n; ++c) e[static_cast<std::size_t>(r * n + c)] = static_cast<std::uint8_t>(g[r][c]);
                out.push_back(e);
                return;
            }
            std::vector<Vec> rows;
            Vec rhs;
            for (int j = 0; j < k; ++j) {
                Vec r(static_cast<std::size_t>(n), 0);
                for (int x = 0; x < n; ++x) {
                    std::int64_t t = 0;
                    for (int y = 0; y < n; ++y) t += cols[j][y] * L[y][x];
                    r[x] = md(t, p);
                }
                rows.push_back(r);
                rhs.push_back(L[j][k]);
            }
            Vec part;
            std::vector<Vec> ker;
            if (!solve_affine(rows, rhs, n, p, part, ker)) return;
            std::size_t d = ker.size();
            Vec coef(d, 0);
            while (true) {
                Vec c = part;
                for (std::size_t t = 0; t < d; ++t)
                    if (coef[t])
                        for (int x = 0; x < n; ++x) c[x] = md(c[x] + coef[t] * ker[t][x], p);
                if (pair(c, L, c, p) == L[k][k]) {
                    cols.push_back(c);
                    extend(k + 1);
                    cols.pop_back();
                }
                std::size_t t = 0;
                while (t < d && ++coef[t] == p) coef[t++] = 0;
                if (t == d) break;
            }
        };
        for (std::size_t i = lo; i < first.size(); i += stride) {
            cols.assign(1, first[i]);
            extend(1);
        }
    };

    unsigned nt = std::max(1u, std::min<unsigned>(thread_count(), static_cast<unsigned>(first.size())));
    std::vector<std::vector<FiniteClassicalGroup::Packed>> parts(nt);
    if (nt == 1) {
        run(0, 1, parts[0]);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nt; ++t) pool.emplace_back(run, t, nt, std::ref(parts[t]));
        for (auto& th : pool) th.join();
    }
    FiniteClassicalGroup G;
    G.form = form;
    G.q = q;
    G.n = n;
    for (auto& part : parts) G.elements.insert(G.elements.end(), part.begin(), part.end());
    std::sort(G.elements.begin(), G.elements.end());
    return G;
}

FiniteClassicalGroup enumerate_points(const GroupDescriptor& desc, std::uint64_t q) {
    require(is_prime(q) && q % 2 == 1, "q: must be an odd prime");
    ResidueRing F(q, 1);
    return enumerate_points(oracle_form(desc, F), q, desc.kind != GroupKind::Sp);
}

std::vector<int> parabolic_blocks(const GroupDescriptor& desc, const IntervalPartition& theta) {
    require(theta.rank() == desc.n_s, "theta: partition rank does not match n_s");
    require(desc.kind != GroupKind::SOevenQuasi, "kind: parabolic blocks are only modeled for split groups");
    int h = theta.block(0).second;
    require(!(desc.flavor == Flavor::D && h == 1),
            "theta: a first block {0,1} has no block-triangular model in flavor D");
    std::vector<int> upper;
    for (int b = theta.count() - 1; b >= 1; --b) upper.push_back(theta.block_size(b));
    std::vector<int> blocks = upper;
    int mid = 2 * h + (desc.n - 2 * desc.n_s);
    if (mid > 0) blocks.push_back(mid);
    for (auto it = upper.rbegin(); it != upper.rend(); ++it) blocks.push_back(*it);
    return blocks;
}

bool in_parabolic(const ZMatrix& g, const std::vector<int>& blocks) {
    std::vector<int> owner;
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (int k = 0; k < blocks[b]; ++k) owner.push_back(static_cast<int>(b));
    for (int r = 0; r < g.rows(); ++r)
        for (int c = 0; c < g.cols(); ++c)
            if (owner[r] > owner[c] && !g(r, c).is_zero()) return false;
    return true;
}

FlagCount flag_count(const GroupDescriptor& desc, const FiniteClassicalGroup& G, const IntervalPartition& theta) {
    require(G.n == desc.n, "group: matrix size does not match the descriptor");
    auto blocks = parabolic_blocks(desc, theta);
    FlagCount fc;
    fc.group_order = G.size();
    // Flag boundaries in the isotropic half.
    std::vector<int> bounds;
    int acc = 0;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        acc += blocks[b];
        if (2 * acc > desc.n) break;
        bounds.push_back(acc);
    }
    std::unordered_set<std::string> flags;
    Zmod one(1, G.q);
    for (std::size_t i = 0; i < G.size(); ++i) {
        ZMatrix g = G.element(i);
        if (in_parabolic(g, blocks)) ++fc.parabolic_order;
        std::string key;
        for (int b : bounds) {
            ZMatrix sub(b, desc.n);
            for (int r = 0; r < b; ++r)
                for (int c = 0; c < desc.n; ++c) sub(r, c) = g(c, r);
            FieldLinalg<Zmod>::rref(sub);
            for (const auto& v : sub.data()) key.push_back(static_cast<char>(v.value()));
            key.push_back('|');
        }
        flags.insert(key);
    }
    fc.orbit_count = flags.size();
    fc.index = fc.parabolic_order ? fc.group_order / fc.parabolic_order : 0;
    auto poly = poincare_polynomial(desc, theta);
    std::uint64_t qp = 1;
    for (auto c : poly) {
        fc.poincare += c * qp;
        qp *= G.q;
    }
    return fc;
}

namespace {

std::vector<int> varsigma_exponents(int n, int j) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    for (int x = 0; x < j; ++x) {
        e[x] = 1;
        e[n - 1 - x] = -1;
    }
    return e;
}

int level_block(int x, int n, int n0) { return x < n0 ? 0 : (x >= n - n0 ? 2 : 1); }

}  // namespace

int double_coset_pattern_exponent(int n, int j, int n0) {
    require(n0 >= 1 && 2 * n0 <= n, "n0: out of range");
    require(j >= 0 && 2 * j <= n, "j: out of range");
    auto e = varsigma_exponents(n, j);
    int total = 0;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (level_block(x, n, n0) < level_block(y, n, n0)) total += std::max(0, e[x] - e[y]);
    if (j < n0) total += j * (n0 - j);
    return total;
}

int double_coset_root_exponent(const GroupDescriptor& desc, int j) {
    require(j >= 0 && j <= desc.n_s, "j: out of range");
    int n = desc.n;
    ResidueRing F(1000003, 1);
    BilinearForm form = oracle_form(desc, F);
    auto e = varsigma_exponents(n, j);
    int total = 0;
    for (int w = 1; w <= 2; ++w) {
        std::vector<std::pair<int, int>> pos;
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (e[x] - e[y] == w) pos.emplace_back(x, y);
        if (pos.empty()) continue;
        // Linear map X ↦ X^tΛ + ΛX on matrices supported on pos.
        QMatrix map(n * n, static_cast<int>(pos.size()), Rational(0));
        for (std::size_t k = 0; k < pos.size(); ++k) {
            auto [x, y] = pos[k];
            for (int b = 0; b < n; ++b) {
                // (X^tΛ)_{y,b} += Λ_{x,b};  (ΛX)_{a,y} += Λ_{a,x}
                map(y * n + b, static_cast<int>(k)) += Rational(form.lambda(x, b).centered());
                map(b * n + y, static_cast<int>(k)) += Rational(form.lambda(b, x).centered());
            }
        }
        int dim = static_cast<int>(pos.size()) - FieldLinalg<Rational>::rank(map);
        total += w * dim;
    }
    return total;
}

std::uint64_t double_coset_index(const GroupDescriptor& desc, LevelKind kind, int j, int n0, int m, std::uint64_t p) {
    int n = desc.n;
    require(desc.kind != GroupKind::SOevenQuasi, "kind: level subgroups are only modeled for split groups");
    require(n0 >= 1 && n0 <= desc.n_s, "n0: must satisfy 1 <= n0 <= n_s");
    require(j >= 0 && j <= desc.n_s, "j: out of range");
    require(m >= 1, "m: must be positive");
    require(is_prime(p) && p % 2 == 1, "p: must be an odd prime");
    check_guard(n <= guards().oracle_max_n, "oracle_max_n: matrix size " + std::to_string(n));
    int L = m + 2;
    std::int64_t M = 1;
    for (int i = 0; i < L; ++i) M *= static_cast<std::int64_t>(p);
    double space = 1;
    for (int i = 0; i < n; ++i) space *= static_cast<double>(M);
    check_guard(space <= static_cast<double>(guards().oracle_max_column_space),
                "oracle_max_column_space: (p^(m+2))^n = " + std::to_string(static_cast<long long>(space)));

    ResidueRing R(p, L);
    auto Lam = lambda_int(oracle_form(desc, R), M);
    auto e = varsigma_exponents(n, j);
    auto pk = [&](int k) {
        std::int64_t v = 1;
        for (int i = 0; i < std::min(k, L); ++i) v *= static_cast<std::int64_t>(p);
        return v;
    };
    auto count = [&](bool conjugated) {
        // Allowed residues per entry.
        std::vector<std::vector<Vec>> allowed(static_cast<std::size_t>(n), std::vector<Vec>(static_cast<std::size_t>(n)));
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                int bx = level_block(x, n, n0), by = level_block(y, n, n0);
                bool lower = bx > by || (bx == by && bx != 1 && x > y);
                int req = lower ? m : 0;
                int need = conjugated ? std::max(req, req + e[x] - e[y]) : req;
                Vec vals;
                if (kind == LevelKind::U1 && x == y && bx != 1) {
                    for (std::int64_t v = 1; v < M; v += pk(m)) vals.push_back(v);
                } else {
                    for (std::int64_t v = 0; v < M; v += pk(need)) vals.push_back(v);
                }
                allowed[x][y] = vals;
            }
        std::vector<std::vector<Vec>> cand(static_cast<std::size_t>(n));
        for (int c = 0; c < n; ++c) {
            Vec v(static_cast<std::size_t>(n), 0);
            std::function<void(int)> rec = [&](int r) {
                if (r == n) {
                    if (pair(v, Lam, v, M) == Lam[c][c]) cand[c].push_back(v);
                    return;
                }
                for (auto val : allowed[r][c]) {
                    v[r] = val;
                    rec(r + 1);
                }
            };
            rec(0);
        }
        std::uint64_t total = 0;
        std::vector<Vec> cols;
        bool special = desc.kind != GroupKind::Sp;
        std::function<void(int)> rec = [&](int k) {
            if (k == n) {
                if (special) {
                    std::vector<Vec> g(static_cast<std::size_t>(n), Vec(static_cast<std::size_t>(n)));
                    for (int r = 0; r < n; ++r)
                        for (int c = 0; c < n; ++c) g[r][c] = cols[c][r];
                    ZMatrix gm(n, n, R(0));
                    for (int r = 0; r < n; ++r)
                        for (int c = 0; c < n; ++c) gm(r, c) = R(g[r][c]);
                    if (LocalLinalg{R}.det(gm) != R(1)) return;
                }
                ++total;
                return;
            }
            for (const auto& c : cand[k]) {
                bool ok = true;
                for (int i = 0; i < k && ok; ++i) ok = pair(cols[i], Lam, c, M) == Lam[i][k];
                if (!ok) continue;
                cols.push_back(c);
                rec(k + 1);
                cols.pop_back();
            }
        };
        rec(0);
        return total;
    };
    std::uint64_t whole = count(false), inter = count(true);
    require(inter > 0 && whole % inter == 0, "index: subgroup count does not divide the group count");
    return whole / inter;
}

namespace {

void check_index_sets(const GroupDescriptor& desc, const std::vector<int>& I, const std::vector<int>& J) {
    for (std::size_t k = 0; k < I.size(); ++k) {
        require(I[k] >= 1 && I[k] <= desc.n_s, "I: index out of range");
        require(k == 0 || I[k - 1] < I[k], "I: must be strictly increasing");
    }
    for (std::size_t k = 0; k < J.size(); ++k) {
        require(std::binary_search(I.begin(), I.end(), J[k]), "J: must be a subset of I");
        require(k == 0 || J[k - 1] < J[k], "J: must be strictly increasing");
    }
}

int delta(const GroupDescriptor& desc, int i) { return 2 * desc.n_s - 2 * i + (desc.is_sp() ? 4 : 2); }

}  // namespace

int coset_exponent_closed(const GroupDescriptor& desc, const std::vector<int>& I, const std::vector<int>& J) {
    check_index_sets(desc, I, J);
    int ns = desc.n_s, n = desc.n;
    int s = static_cast<int>(I.size()), t = static_cast<int>(J.size());
    std::vector<int> comp;
    for (int x = 1; x <= ns; ++x)
        if (!std::binary_search(I.begin(), I.end(), x)) comp.push_back(x);
    int v = t * (t - 1) + (ns - s) * s + (ns - s) * (ns - s - 1) / 2 + (n - 2 * ns) * s;
    for (int k = 1; k <= t; ++k) v += 2 * (ns - J[k - 1] - (t - k));
    for (int k = 1; k <= ns - s; ++k) v += ns - comp[k - 1] - (ns - s - k);
    if (desc.is_sp()) v += 2 * t + (ns - s);
    return v;
}

int coset_exponent_pattern(const GroupDescriptor& desc, const std::vector<int>& I, const std::vector<int>& J) {
    check_index_sets(desc, I, J);
    int ns = desc.n_s, n = desc.n;
    auto inI = [&](int x) { return std::binary_search(I.begin(), I.end(), x); };
    auto inJ = [&](int x) { return std::binary_search(J.begin(), J.end(), x); };
    int c = 0;
    // Block above the middle rows.
    for (int i = 1; i <= ns; ++i)
        for (int l = i + 1; l <= ns; ++l) {
            if (inJ(i) && !inJ(l))
                c += 2;
            else if (!inI(i) && inI(l))
                c += 1;
        }
    c += (n - 2 * ns) * static_cast<int>(I.size());
    // Upper-right block, one slot per unordered pair.
    for (int i = 1; i <= ns; ++i)
        for (int l = i + 1; l <= ns; ++l) {
            if (inJ(i) && inJ(l))
                c += 2;
            else if (!inI(i) && !inI(l))
                c += 1;
            if (inI(i) != inI(l)) c += 1;
        }
    if (desc.is_sp())
        for (int i = 1; i <= ns; ++i) {
            if (inJ(i)) c += 2;
            if (!inI(i)) c += 1;
        }
    return c;
}

LaurentPoly spherical_coset_sum(const GroupDescriptor& desc, int j, bool use_pattern) {
    require(j >= 1 && j <= desc.n_s, "j: must satisfy 1 <= j <= n_s");
    check_guard(desc.n_s <= guards().max_enum_rank, "max_enum_rank: n_s = " + std::to_string(desc.n_s));
    int ns = desc.n_s;
    LaurentPoly sum = LaurentPoly::constant(ns, 0);
    for (unsigned maskI = 0; maskI < (1u << ns); ++maskI) {
        if (__builtin_popcount(maskI) != j) continue;
        std::vector<int> I;
        for (int x = 0; x < ns; ++x)
            if (maskI >> x & 1) I.push_back(x + 1);
        for (unsigned maskJ = maskI;; maskJ = (maskJ - 1) & maskI) {
            std::vector<int> J;
            for (int x = 0; x < ns; ++x)
                if (maskJ >> x & 1) J.push_back(x + 1);
            int c = use_pattern ? coset_exponent_pattern(desc, I, J) : coset_exponent_closed(desc, I, J);
            std::vector<int> z(static_cast<std::size_t>(ns), 0);
            int q2 = 2 * c;
            for (int i : I) {
                bool inj = std::binary_search(J.begin(), J.end(), i);
                z[static_cast<std::size_t>(i - 1)] = inj ? 1 : -1;
                q2 += inj ? -delta(desc, i) : delta(desc, i);
            }
            sum = sum + LaurentPoly::monomial(ns, z, q2);
            if (maskJ == 0) break;
        }
    }
    return sum;
}

Rational spherical_coset_sum(const HeckeEvalInput& in, int j) {
    in.validate();
    return spherical_coset_sum(in.desc, j).eval(in.chi, in.q);
}

}  // namespace hf
