// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include <algorithm>
#include <random>

#include "heckeforge/laurent.hpp"
#include "heckeforge/parahoric.hpp"

using namespace hf;

namespace {

ZPoly from_roots(const std::vector<Zmod>& rs, const Zmod& one) {
    ZPoly f = ZPoly::constant(one);
    for (const auto& r : rs) f = f * ZPoly::linear(r, one);
    return f;
}

int ones(int, const SignedPermutation&) { return 1; }

}  // namespace

TEST_CASE("invariant dimensions") {
    auto d = make_group(GroupKind::SOodd, 5);
    auto S = IntervalPartition::singletons(2);
    CHECK(invariant_dim(d, S, S, ones) == 8);
    CHECK(invariant_dim(d, S, IntervalPartition::from_subset(2, {1}), ones) == 4);
    CHECK(invariant_dim(d, IntervalPartition::whole(2), S, ones) == 1);
    std::map<std::pair<int, std::string>, int> table;
    CHECK_THROWS_AS(invariant_dim(d, S, S, table), ValidationError);
    for (const auto& w : double_coset_reps(d, S, S))
        for (int j = 1; j <= S.count(); ++j) table[{j, w.to_string()}] = 1;
    CHECK(invariant_dim(d, S, S, table) == 8);
}

TEST_CASE("invariant dimension against brute-force decomposition") {
    for (int ns = 1; ns <= 3; ++ns) {
        auto d = make_group(GroupKind::Sp, 2 * ns);
        for (const auto& om : IntervalPartition::all(ns))
            for (const auto& th : IntervalPartition::all(ns)) {
                // Steinberg-like local dimension: 1 unless the block meets w(I^Θ) in two points of one Θ-block.
                auto dims = [&](int j, const SignedPermutation& w) {
                    auto a = block_incidence(w, om, th);
                    for (int v : a[static_cast<std::size_t>(j - 1)])
                        if (v > 1) return 2;
                    return 1;
                };
                int expect = 0;
                for (const auto& w : enumerate_group(d)) {
                    if (!is_min_right(w, th) || !is_min_left(w, om)) continue;
                    int prod = 1;
                    for (int j = 1; j <= om.count(); ++j) prod *= dims(j, w);
                    expect += prod;
                }
                CHECK(invariant_dim(d, om, th, dims) == expect);
            }
    }
}

TEST_CASE("jacquet w set") {
    for (int ns = 1; ns <= 4; ++ns) {
        auto d = make_group(GroupKind::SOodd, 2 * ns + 1);
        for (const auto& om : IntervalPartition::all(ns)) {
            auto S = IntervalPartition::singletons(ns);
            CHECK(jacquet_w_set(d, om, S) == double_coset_reps(d, om, S));
            for (const auto& th : IntervalPartition::all(ns)) {
                auto js = jacquet_w_set(d, om, th);
                auto reps = double_coset_reps(d, om, th);
                for (const auto& w : js) CHECK(std::find(reps.begin(), reps.end(), w) != reps.end());
                int max_om = 0;
                for (int b = 0; b < om.count(); ++b) max_om = std::max(max_om, om.block_size(b));
                for (int b = 0; b < th.count(); ++b)
                    if (th.block_size(b) > max_om) {
                        for (const auto& w : js) {
                            auto a = block_incidence(w, om, th);
                            for (const auto& row : a) CHECK(row[static_cast<std::size_t>(b)] <= 1);
                        }
                    }
            }
            CHECK_FALSE(jacquet_w_set(d, om, IntervalPartition::from_subset(ns, {})).empty());
        }
    }
}

TEST_CASE("principal series module") {
    ResidueRing R(7, 2);
    auto d = make_group(GroupKind::SOodd, 3);
    Zmod c = R(3);
    auto m = build_ps_module(d, IntervalPartition::singletons(1), {c}, R(8));
    REQUIRE(m.dim() == 2);
    CHECK(m.basis[0].to_string() == "[-1]");
    CHECK(m.x_eigenvalue(0, 1) == inv(c));
    CHECK(m.x_eigenvalue(1, 1) == c);
    auto d2 = make_group(GroupKind::SOodd, 7);
    auto th = IntervalPartition::from_subset(3, {1});
    auto m2 = build_ps_module(d2, th, {R(3), R(3), R(2)}, R(8));
    CHECK(m2.dim() == 24);
    CHECK(m2.block_constant);
    CHECK_FALSE(build_ps_module(d2, th, {R(3), R(2), R(5)}, R(8)).block_constant);
}

TEST_CASE("V operators") {
    ResidueRing R(11, 2);
    auto d = make_group(GroupKind::SOodd, 7);
    auto om = IntervalPartition(3, {{0, 0}, {1, 3}});
    std::vector<Zmod> psi{R(2), R(3), R(5)};
    auto m = build_ps_module(d, IntervalPartition::singletons(3), psi, R(12));
    for (int k = 1; k <= 3; ++k) {
        auto eig = v_operator(m, om, 2, k);
        for (std::size_t b = 0; b < m.dim(); ++b) {
            std::vector<Zmod> vals;
            for (int l = 1; l <= 3; ++l) vals.push_back(m.twisted(b, l));
            CHECK(eig[b] == elem_sym(k, vals, R(1)));
            auto roots = phat_roots(root_data(psi, false), 3, k);
            CHECK(std::find(roots.begin(), roots.end(), eig[b]) != roots.end());
        }
    }
    auto trivial = build_ps_module(d, IntervalPartition::singletons(3), {R(1), R(1), R(1)}, R(12));
    CHECK(v_operator(trivial, om, 2, 2)[0] == R(3));
    CHECK(v_operator_signed_sum({R(1), R(1), R(1)}, 2) == R(12));
    CHECK(v_operator_signed_sum({R(3)}, 1) == R(3) + inv(R(3)));
    CHECK_THROWS_AS(v_operator(m, om, 2, 4), ValidationError);
}

TEST_CASE("phat polynomials") {
    ResidueRing R(11, 2);
    Zmod a = R(2), b = R(3), one = R(1);
    CHECK(phat_poly({a, inv(a)}, 1, 1) == from_roots({a, inv(a)}, one));
    CHECK(phat_poly({one, one, one, one}, 2, 1) == from_roots(std::vector<Zmod>(6, R(2)), one));
    CHECK(phat_poly({a, inv(a), b, inv(b)}, 2, 2) ==
          from_roots({a * b, a * inv(b), b * inv(a), inv(a * b), one, one}, one));
    CHECK_THROWS_AS(phat_poly({a, inv(a)}, 3, 1), ValidationError);
}

TEST_CASE("projector factors") {
    ResidueRing F(5, 1);
    auto f = projector_factor({F(2), F(3), F(1), F(1)}, F(2), 1, 1, F);
    CHECK(f.R == from_roots({F(2), F(3)}, F(1)));
    CHECK(f.Q == from_roots({F(1), F(1)}, F(1)));
    CHECK(f.r == 1);
    CHECK(f.balanced);
    CHECK(f.coprime);
    auto g = projector_factor({F(1), F(1), F(4)}, F(2), 1, 1, F);
    CHECK(g.R == ZPoly::constant(F(1)));
    CHECK(g.r == 0);

    ResidueRing R(5, 3);
    std::vector<Zmod> roots{R(2), R(2 + 5), R(3 + 25), R(3 + 50), R(1), R(4 + 5)};
    auto h = projector_factor(roots, R(2), 1, 1, R);
    CHECK(h.r_roots.size() == 4);
    CHECK(h.r == 2);
    CHECK(h.R * h.Q == from_roots(roots, R(1)));
    CHECK(h.coprime);
    // ᾱ = 2 over F_5: 2^2 = 4 and 2^{-2} = 4 coincide.
    auto deg = projector_factor({F(4), F(4), F(1)}, F(2), 2, 2, F);
    CHECK(deg.degenerate);
}

TEST_CASE("Frobenius profiles") {
    std::uint64_t p = 11;
    std::int64_t a = 2, ai = 6, b = 3, bi = 4;
    CHECK(frobenius_profile_check({a, a, ai, ai, b, bi}, p, 2, false).type == ProfileType::Type1);
    CHECK(frobenius_profile_check({1, 1, 1, 1, 1}, p, 2, true).type == ProfileType::Type2);
    CHECK(frobenius_profile_check({1, 1, 1, 1}, p, 2, false).type == ProfileType::Type2);
    CHECK_THROWS_AS(frobenius_profile_check({a, ai, ai, ai}, p, 1, false), ValidationError);
    CHECK(frobenius_profile_check({a, ai, b, bi}, p, 2, false).type == ProfileType::Invalid);
}

TEST_CASE("projector structure on mixed modules") {
    std::mt19937_64 rng(11);
    for (std::uint64_t p : {3u, 5u}) {
        ResidueRing R(p, 3);
        std::uint64_t q = p == 3 ? 7 : 11;
        auto d = make_group(GroupKind::SOodd, 7);
        // ᾱ = 2 is self-inverse mod 3.
        std::int64_t abar = 2;
        auto lift = [&](std::int64_t r) {
            return R(r + static_cast<std::int64_t>(p) * static_cast<std::int64_t>(rng() % (p * p)));
        };
        Zmod beta = R(1 + static_cast<std::int64_t>(p));
        for (const auto& om : IntervalPartition::all(3))
            for (int j0 = 1; j0 <= om.count(); ++j0)
                for (int j1 = 1; j1 <= om.count(); ++j1) {
                    if (j0 == j1 || block_rank(om, j0) != 2) continue;
                    ParahoricDatum datum{d, om, j0, j1, q, p};
                    Zmod chi = lift(abar);
                    std::vector<ProjectorComponent> comps{
                        {ProjectorComponent::Type::Unramified, {beta, chi, chi * inv(R(static_cast<std::int64_t>(q)))}},
                        {ProjectorComponent::Type::Steinberg, {beta, chi}}};
                    auto rep = apply_projector(datum, comps, R);
                    CHECK(rep.profile.type == (p == 3 ? ProfileType::Type2 : ProfileType::Type1));
                    CHECK(rep.components.size() == 2);
                    CHECK(rep.components[1].annihilated);
                    for (const auto& c : rep.components)
                        for (const auto& v : c.diagonal) CHECK((v.is_zero() || v.is_unit()));
                    auto alone = apply_projector(datum, {comps[0]}, R);
                    CHECK(alone.image_dim == rep.image_dim);
                    CHECK(rep.unramified_dim == 1);
                    for (const auto& c : rep.components)
                        for (const auto& [jk, f] : c.factors) {
                            CHECK(f.coprime);
                            CHECK(f.R * f.Q == phat_poly(root_data(c.type == ProjectorComponent::Type::Unramified
                                                                       ? comps[0].chi
                                                                       : std::vector<Zmod>{beta, chi, chi * inv(R(static_cast<std::int64_t>(q)))},
                                                                   false),
                                                         block_rank(om, jk.first), jk.second));
                        }
                }
    }
}

TEST_CASE("projector validation") {
    ResidueRing R(5, 3);
    auto d = make_group(GroupKind::SOodd, 5);
    auto om = IntervalPartition(2, {{0, 1}, {2, 2}});
    ParahoricDatum bad{d, om, 1, 2, 12, 5};
    CHECK_THROWS_AS(apply_projector(bad, {{ProjectorComponent::Type::Unramified, {R(2), R(3)}}}, R), ValidationError);
    ParahoricDatum same{d, om, 1, 1, 11, 5};
    CHECK_THROWS_AS(apply_projector(same, {{ProjectorComponent::Type::Unramified, {R(2), R(3)}}}, R), ValidationError);
    ParahoricDatum ok{d, om, 1, 2, 11, 5};
    // {2, 3} and inverses {3, 2} over F_5: every residue has multiplicity 2, no block of rank 1 matches.
    CHECK_THROWS_AS(apply_projector(ok, {{ProjectorComponent::Type::Unramified, {R(2), R(3)}}}, R), ValidationError);
    auto rep = apply_projector(ok, {{ProjectorComponent::Type::Unramified, {R(2), R(1)}}}, R);
    CHECK_FALSE(rep.w_prime.empty());
}
