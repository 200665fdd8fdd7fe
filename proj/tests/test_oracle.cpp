// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include "heckeforge/oracle.hpp"

using namespace hf;

namespace {

// Classical orders, written independently of the enumeration.
std::uint64_t classical_order(GroupKind k, int n, std::uint64_t q) {
    auto pw = [](std::uint64_t b, int e) {
        std::uint64_t r = 1;
        while (e-- > 0) r *= b;
        return r;
    };
    int m = n / 2;
    std::uint64_t o = 1;
    switch (k) {
        case GroupKind::Sp:
            o = pw(q, m * m);
            for (int i = 1; i <= m; ++i) o *= pw(q, 2 * i) - 1;
            return o;
        case GroupKind::SOodd:
            o = pw(q, m * m);
            for (int i = 1; i <= m; ++i) o *= pw(q, 2 * i) - 1;
            return o;
        case GroupKind::SOevenSplit:
            o = pw(q, m * (m - 1)) * (pw(q, m) - 1);
            for (int i = 1; i < m; ++i) o *= pw(q, 2 * i) - 1;
            return o;
        case GroupKind::SOevenQuasi:
            o = pw(q, m * (m - 1)) * (pw(q, m) + 1);
            for (int i = 1; i < m; ++i) o *= pw(q, 2 * i) - 1;
            return o;
    }
    return 0;
}

std::vector<GroupDescriptor> groups_up_to(int nmax) {
    std::vector<GroupDescriptor> out;
    for (GroupKind k : {GroupKind::SOodd, GroupKind::SOevenSplit, GroupKind::SOevenQuasi, GroupKind::Sp})
        for (int n = 2; n <= nmax; ++n) {
            try {
                out.push_back(make_group(k, n));
            } catch (const ValidationError&) {
            }
        }
    return out;
}

}  // namespace

TEST_CASE("enumerated orders match classical formulas") {
    CHECK(enumerate_points(make_group(GroupKind::Sp, 2), 3).size() == 24);
    CHECK(enumerate_points(make_group(GroupKind::SOodd, 3), 3).size() == 24);
    for (const auto& d : groups_up_to(4))
        for (std::uint64_t q : {3u, 5u}) {
            if (d.kind == GroupKind::Sp && d.n == 4 && q == 5) continue;
            auto G = enumerate_points(d, q);
            CHECK_MESSAGE(G.size() == classical_order(d.kind, d.n, q), kind_name(d.kind) << " n=" << d.n << " q=" << q);
        }
}

TEST_CASE("enumerated group axioms") {
    auto d = make_group(GroupKind::SOodd, 3);
    auto G = enumerate_points(d, 3);
    auto id = ZMatrix::identity(3, Zmod(1, 3));
    CHECK(G.contains(id));
    for (std::size_t i = 0; i < G.size(); i += 5) {
        auto g = G.element(i);
        CHECK(check_isometry(g, G.form));
        auto gi = LocalLinalg{ResidueRing(3, 1)}.inverse(g);
        REQUIRE(gi.has_value());
        CHECK(G.contains(*gi));
        CHECK(G.contains(g * G.element((i * 7) % G.size())));
    }
}

TEST_CASE("enumeration guards") {
    auto d = make_group(GroupKind::Sp, 6);
    CHECK_THROWS_AS(enumerate_points(d, 3), GuardError);
    CHECK_THROWS_AS(enumerate_points(make_group(GroupKind::Sp, 2), 7), GuardError);
    CHECK_THROWS_AS(enumerate_points(make_group(GroupKind::Sp, 2), 9), ValidationError);
}

TEST_CASE("flag counts match Poincare sums") {
    for (const auto& d : {make_group(GroupKind::SOodd, 3), make_group(GroupKind::Sp, 2)}) {
        auto G = enumerate_points(d, 3);
        auto fc = flag_count(d, G, IntervalPartition::singletons(d.n_s));
        CHECK(fc.index == 4);
        CHECK(fc.agree());
        auto full = flag_count(d, G, IntervalPartition::whole(d.n_s));
        CHECK(full.index == 1);
        CHECK(full.agree());
    }
    for (const auto& d : {make_group(GroupKind::SOevenSplit, 4), make_group(GroupKind::Sp, 4)}) {
        auto G = enumerate_points(d, 3);
        for (const auto& th : IntervalPartition::all(d.n_s)) {
            if (d.flavor == Flavor::D && th.block(0).second == 1) {
                CHECK_THROWS_AS(flag_count(d, G, th), ValidationError);
                continue;
            }
            auto fc = flag_count(d, G, th);
            CHECK_MESSAGE(fc.agree(), kind_name(d.kind) << " " << th.to_string() << " index=" << fc.index
                                                        << " orbits=" << fc.orbit_count << " poincare=" << fc.poincare);
        }
    }
}

TEST_CASE("spherical coset sum example") {
    auto d = make_group(GroupKind::SOodd, 3);
    auto chi = LaurentPoly::var(1, 0);
    auto expect = chi + LaurentPoly::var(1, 0, -1) * LaurentPoly::q_power(1, 2);
    CHECK(spherical_coset_sum(d, 1) == expect);
    HeckeEvalInput in{d, Rational(3), {Rational(3)}};
    CHECK(spherical_coset_sum(in, 1) == Rational(6));
}

TEST_CASE("closed-form and per-slot exponents agree") {
    for (const auto& d : groups_up_to(9)) {
        int ns = d.n_s;
        for (unsigned mi = 0; mi < (1u << ns); ++mi)
            for (unsigned mj = mi;; mj = (mj - 1) & mi) {
                std::vector<int> I, J;
                for (int x = 0; x < ns; ++x) {
                    if (mi >> x & 1) I.push_back(x + 1);
                    if (mj >> x & 1) J.push_back(x + 1);
                }
                CHECK(coset_exponent_closed(d, I, J) == coset_exponent_pattern(d, I, J));
                if (mj == 0) break;
            }
    }
}

TEST_CASE("spherical coset sum equals the unramified eigenvalue") {
    for (const auto& d : groups_up_to(8)) {
        if (d.n_s > 3) continue;
        for (int j = 1; j <= d.n_s; ++j) {
            auto s = spherical_coset_sum(d, j);
            CHECK_MESSAGE(s == unramified_eigenvalue_symbolic(d, j), kind_name(d.kind) << " n=" << d.n << " j=" << j);
            CHECK(spherical_coset_sum(d, j, true) == s);
            // Trivial character: nonnegative integer polynomial in q.
            auto at1 = s;
            std::vector<Rational> ones(static_cast<std::size_t>(d.n_s), Rational(1));
            auto v = s.eval(ones, Rational(2));
            CHECK(v > 0);
        }
    }
}

TEST_CASE("double coset index brute force") {
    auto sl2 = make_group(GroupKind::Sp, 2);
    for (auto kind : {LevelKind::U0, LevelKind::U1}) {
        CHECK(double_coset_index(sl2, kind, 1, 1, 1, 3) == 9);
        CHECK(double_coset_index(sl2, kind, 1, 1, 2, 3) == 9);
        CHECK(double_coset_index(sl2, kind, 0, 1, 1, 3) == 1);
    }
    auto so3 = make_group(GroupKind::SOodd, 3);
    CHECK(double_coset_index(so3, LevelKind::U0, 1, 1, 1, 3) == 3);
    CHECK(double_coset_index(so3, LevelKind::U1, 1, 1, 1, 3) == 3);
    CHECK_THROWS_AS(double_coset_index(so3, LevelKind::U0, 1, 1, 2, 3), GuardError);
}

TEST_CASE("double coset exponents") {
    // Root count matches the brute-force index where it is computable.
    CHECK(double_coset_root_exponent(make_group(GroupKind::Sp, 2), 1) == 2);
    CHECK(double_coset_root_exponent(make_group(GroupKind::SOodd, 3), 1) == 1);
    CHECK(double_coset_pattern_exponent(2, 1, 1) == 2);
    // The matrix-entry pattern ignores the form relations on SO and Sp.
    CHECK(double_coset_pattern_exponent(3, 1, 1) == 4);
    CHECK(double_coset_pattern_exponent(4, 1, 1) == 6);
    CHECK(double_coset_root_exponent(make_group(GroupKind::Sp, 4), 1) == 4);
    CHECK(double_coset_root_exponent(make_group(GroupKind::Sp, 4), 2) == 6);
    for (int n = 2; n <= 8; ++n)
        for (int j = 0; 2 * j <= n; ++j)
            for (int n0 = std::max(1, j); 2 * n0 <= n; ++n0)
                CHECK(double_coset_pattern_exponent(n, j, n0) >= 0);
}
