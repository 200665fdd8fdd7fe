// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include <random>

#include "heckeforge/adequacy.hpp"
#include "heckeforge/guards.hpp"

using namespace hf;

namespace {

ZMatrix mat(const std::vector<std::vector<std::int64_t>>& rows, std::uint64_t p) { return zmatrix(rows, p); }

ZMatrix random_invertible(int N, std::uint64_t p, std::mt19937_64& rng) {
    LocalLinalg la{ResidueRing(p, 1)};
    for (;;) {
        ZMatrix m(N, N, Zmod(0, p));
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) m(i, j) = Zmod(static_cast<std::int64_t>(rng() % p), p);
        if (la.is_invertible(m)) return m;
    }
}

}  // namespace

TEST_CASE("group closure") {
    auto H = close_group({mat({{1, 1}, {0, 1}}, 5), mat({{1, 0}, {1, 1}}, 5)}, 5);
    CHECK(H.size() == 120);
    CHECK(H.index_of(mat({{0, 4}, {1, 0}}, 5)).has_value());
    CHECK_FALSE(H.index_of(mat({{2, 0}, {0, 2}}, 5)).has_value());
    CHECK_THROWS_AS(close_group({mat({{1, 1}, {1, 1}}, 5)}, 5), ValidationError);
    auto saved = guards().max_group_order;
    guards().max_group_order = 50;
    CHECK_THROWS_AS(close_group({mat({{1, 1}, {0, 1}}, 5), mat({{1, 0}, {1, 1}}, 5)}, 5), GuardError);
    guards().max_group_order = saved;
}

TEST_CASE("adjoint modules") {
    for (std::uint64_t p : {3u, 5u, 7u})
        for (int n : {3, 5, 7}) CHECK(adjoint_module(make_group(GroupKind::SOodd, n), p).dim() == (n - 1) * n / 2);
    CHECK(adjoint_module(make_group(GroupKind::Sp, 4), 5).dim() == 10);
    CHECK(adjoint_module(make_group(GroupKind::SOevenSplit, 4), 5).dim() == 6);
    auto M = adjoint_module(make_group(GroupKind::SOodd, 3), 5);
    CHECK_THROWS_AS(M.coords(mat({{1, 0}, {0, 1}}, 5)), ValidationError);
    auto c = M.coords(mat({{1, 0}, {0, 4}}, 5));
    CHECK(c.size() == 3);
}

TEST_CASE("h0") {
    auto M = adjoint_module(make_group(GroupKind::SOodd, 3), 5);
    auto T = close_group({mat({{1, 0}, {0, 1}}, 5)}, 5);
    CHECK(h0_module(T, conjugation_module(T, M)) == 3);
    // −1 is central: it fixes sl_2. The diagonal torus element fixes exactly the Cartan line.
    auto D = close_group({mat({{2, 0}, {0, 3}}, 5)}, 5);
    CHECK(h0_module(D, conjugation_module(D, M)) == 1);
    auto S = close_group({mat({{1, 1}, {0, 1}}, 5), mat({{1, 0}, {1, 1}}, 5)}, 5);
    CHECK(h0_module(S, conjugation_module(S, M)) == 0);
}

TEST_CASE("h1 basic values") {
    for (std::uint64_t p : {3u, 5u, 7u}) {
        auto U = close_group({mat({{1, 1}, {0, 1}}, p)}, p);
        CHECK(U.size() == p);
        CHECK(h1_finite(U, trivial_module(U, 1)) == 1);
        CHECK(h1_finite_table(U, trivial_module(U, 1)) == 1);
        CHECK(hom_to_kappa(U) == 1);
    }
    auto L = close_group({mat({{2, 0}, {0, 1}}, 5)}, 5);
    CHECK(L.size() == 4);
    CHECK(hom_to_kappa(L) == 0);
    auto S = close_group({mat({{1, 1}, {0, 1}}, 5), mat({{1, 0}, {1, 1}}, 5)}, 5);
    CHECK(hom_to_kappa(S) == 0);
    auto V = close_group({mat({{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}, 3), mat({{1, 0, 1}, {0, 1, 0}, {0, 0, 1}}, 3)}, 3);
    CHECK(V.size() == 9);
    CHECK(hom_to_kappa(V) == 2);
}

TEST_CASE("h1 Cayley propagation agrees with the multiplication table") {
    auto M = adjoint_module(make_group(GroupKind::SOodd, 3), 5);
    auto S = close_group({mat({{1, 1}, {0, 1}}, 5), mat({{1, 0}, {1, 1}}, 5)}, 5);
    auto act = conjugation_module(S, M);
    int h1 = h1_finite(S, act);
    CHECK(h1 == h1_finite_table(S, act));
    // SL_2(F_5) on its adjoint representation Sym^2 = L(p−3).
    CHECK(h1 == 1);
    auto M3 = adjoint_module(make_group(GroupKind::SOodd, 3), 7);
    auto S7 = close_group({mat({{1, 1}, {0, 1}}, 7), mat({{1, 0}, {1, 1}}, 7)}, 7);
    CHECK(h1_finite(S7, conjugation_module(S7, M3)) == 0);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 15; ++t) {
        std::uint64_t p = t % 2 ? 3 : 2;
        auto H = close_group({random_invertible(2, p, rng), random_invertible(2, p, rng)}, p);
        if (H.size() > 60) continue;
        auto gl = gl_conjugation_module(H);
        CHECK(h1_finite(H, gl) == h1_finite_table(H, gl));
    }
}

TEST_CASE("coprime order: averaging kills H1") {
    std::mt19937_64 rng(7);
    int tested = 0;
    for (int t = 0; t < 60 && tested < 20; ++t) {
        std::uint64_t p = (t % 3 == 0) ? 5 : 7;
        int N = 2 + t % 2;
        ZMatrix P = random_invertible(N, p, rng), Pi = *FieldLinalg<Zmod>::inverse(P, Zmod(1, p));
        // Monomial generators with entries of order prime to p, then a random conjugation.
        std::vector<ZMatrix> gens;
        for (int g = 0; g < 2; ++g) {
            std::vector<int> perm(static_cast<std::size_t>(N));
            for (int i = 0; i < N; ++i) perm[static_cast<std::size_t>(i)] = i;
            std::shuffle(perm.begin(), perm.end(), rng);
            ZMatrix m(N, N, Zmod(0, p));
            for (int i = 0; i < N; ++i) m(i, perm[static_cast<std::size_t>(i)]) = Zmod(rng() % 2 ? 1 : -1, p);
            gens.push_back(P * m * Pi);
        }
        auto H = close_group(gens, p);
        if (H.size() % p == 0) continue;
        ++tested;
        auto gl = gl_conjugation_module(H);
        CHECK(h1_finite(H, gl) == 0);
        CHECK(h0_module(H, gl) == reynolds_rank(H, gl));
        CHECK(hom_to_kappa(H) == 0);
    }
    CHECK(tested >= 10);
}

TEST_CASE("cyclic formula") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 12; ++t) {
        std::uint64_t p = t % 2 ? 3 : 5;
        auto g = random_invertible(2, p, rng);
        auto H = close_group({g}, p);
        auto gl = gl_conjugation_module(H);
        CHECK(h1_finite(H, gl) == h1_cyclic(gl.gen_action[0], H.size()));
        CHECK(h1_finite(H, trivial_module(H, 2)) == h1_cyclic(ZMatrix::identity(2, Zmod(1, p)), H.size()));
    }
    CHECK_THROWS_AS(h1_cyclic(mat({{1, 1}, {0, 1}}, 5), 3), ValidationError);
}

TEST_CASE("trace pairing") {
    auto M = adjoint_module(make_group(GroupKind::SOodd, 3), 5);
    auto D = close_group({mat({{2, 0}, {0, 3}}, 5)}, 5);
    auto w = trace_pairing_check(D, M, {mat({{1, 0}, {0, 4}}, 5)});
    REQUIRE(w.has_value());
    const auto& g = D.elements[w->gamma];
    CHECK(g == mat({{2, 0}, {0, 3}}, 5));
    auto P = eigen_projector(g, w->a, 5);
    CHECK((P * P == P));
    CHECK((P * g == g * P));
    CHECK((P * mat({{1, 0}, {0, 4}}, 5)).trace() == w->trace);
    CHECK_FALSE(w->trace.is_zero());

    auto Z = close_group({mat({{4, 0}, {0, 4}}, 5)}, 5);
    CHECK_FALSE(trace_pairing_check(Z, M, M.basis).has_value());
    CHECK_FALSE(trace_pairing_check(D, M, {mat({{0, 1}, {0, 0}}, 5)}).has_value());
    auto Rot = close_group({mat({{0, 1}, {4, 0}}, 5)}, 5);
    CHECK(trace_pairing_check(Rot, M, M.basis).has_value());
    CHECK_THROWS_AS(trace_pairing_check(Rot, M, {mat({{0, 1}, {0, 0}}, 5)}), ValidationError);
    CHECK_THROWS_AS(split_eigenvalues(mat({{0, 1}, {3, 0}}, 5), 5), ValidationError);
}

TEST_CASE("condition (4) over all submodules and cyclic submodules") {
    auto M = adjoint_module(make_group(GroupKind::SOodd, 3), 5);
    auto Z = close_group({mat({{4, 0}, {0, 4}}, 5)}, 5);
    auto r = condition4(Z, M, true);
    CHECK_FALSE(r.all_submodules);
    CHECK(r.bad_submodule_dim == 3);
    CHECK(r.all_cyclic == false);
    auto D = close_group({mat({{2, 0}, {0, 3}}, 5)}, 5);
    auto rd = condition4(D, M, true);
    // The root lines are D-stable and every compression of a nilpotent is traceless.
    CHECK_FALSE(rd.all_submodules);
    CHECK(rd.bad_submodule_dim == 2);
    CHECK(rd.all_cyclic == false);
    // The upper unipotent line is stable under the Borel and traceless under every compression.
    auto B = close_group({mat({{2, 0}, {0, 3}}, 5), mat({{1, 1}, {0, 1}}, 5)}, 5);
    CHECK(B.size() == 20);
    auto rb = condition4(B, M, true);
    CHECK(rb.bad_submodule_dim == 1);
    CHECK(rb.all_cyclic == false);
    auto Nt = close_group({mat({{2, 0}, {0, 3}}, 5), mat({{0, 1}, {4, 0}}, 5)}, 5);
    CHECK(Nt.size() == 8);
    auto rn = condition4(Nt, M, true);
    CHECK(rn.all_cyclic == rn.all_submodules);
    auto full = adequacy_check(Nt, M, false);
    CHECK(full.order == 8);
    CHECK(full.h1 == 0);
    CHECK(full.hom == 0);
    // SL_2(F_5) has elements of order 3 whose eigenvalues lie outside F_5.
    auto S = close_group({mat({{1, 1}, {0, 1}}, 5), mat({{1, 0}, {1, 1}}, 5)}, 5);
    CHECK_THROWS_AS(condition4(S, M, false), ValidationError);
    // The two modes agree on random cyclic subgroups of SL_2(F_3).
    auto M3 = adjoint_module(make_group(GroupKind::SOodd, 3), 3);
    std::mt19937_64 rng(9);
    int compared = 0;
    LocalLinalg la{ResidueRing(3, 1)};
    for (int t = 0; t < 40; ++t) {
        auto g = random_invertible(2, 3, rng);
        if (la.det(g) != Zmod(1, 3)) continue;
        auto H = close_group({g}, 3);
        bool splits = true;
        for (const auto& h : H.elements) {
            try {
                split_eigenvalues(h, 3);
            } catch (const ValidationError&) {
                splits = false;
            }
        }
        if (!splits) continue;
        auto r3 = condition4(H, M3, true);
        CHECK(r3.all_cyclic == r3.all_submodules);
        ++compared;
    }
    CHECK(compared > 0);
}

TEST_CASE("sufficient conditions") {
    CHECK(sufficient_conditions(11, 4, true, true) == SufficientVerdict::AdequateByLemma);
    CHECK(sufficient_conditions(7, 4, true, true) == SufficientVerdict::Inconclusive);
    CHECK(sufficient_conditions(11, 4, false, true) == SufficientVerdict::Inconclusive);
    CHECK(sufficient_conditions(11, 4, true, false) == SufficientVerdict::Inconclusive);
    CHECK(sufficient_conditions(10, 4, true, true) == SufficientVerdict::AdequateByLemma);
    CHECK(sufficient_conditions(9, 4, true, true) == SufficientVerdict::Inconclusive);
    CHECK(verdict_name(SufficientVerdict::Inconclusive) == "inconclusive");
}
