// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include <random>

#include "heckeforge/defledger.hpp"
#include "heckeforge/errors.hpp"

using namespace hf;

namespace {

PlaceRecord inf(int h0) { return {"inf", PlaceKind::Infinite, h0, 0, 0}; }
PlaceRecord tw(int h0) { return {"tw", PlaceKind::TaylorWiles, h0, h0 + 1, 0}; }
PlaceRecord minimal(int h0) { return {"v", PlaceKind::OtherFinite, h0, h0, 0}; }
PlaceRecord above(int f, int h0, int l) { return {"p", PlaceKind::AboveP, h0, l, f}; }

}  // namespace

TEST_CASE("local constants") {
    auto so3 = make_group(GroupKind::SOodd, 3);
    auto sp2 = make_group(GroupKind::Sp, 2);
    CHECK(fl_defect(1, so3) == 1);
    CHECK(fl_defect(2, so3) == 2);
    CHECK(fl_defect(1, sp2) == 1);
    CHECK_THROWS_AS(fl_defect(0, so3), ValidationError);
    CHECK(h0_infinity(so3) == 3);
    CHECK(h0_infinity(sp2) == 3);
    CHECK(h0_infinity(make_group(GroupKind::SOevenSplit, 4)) == 6);
    CHECK(h0_infinity(make_group(GroupKind::SOevenQuasi, 6)) == 15);
    // dim Ĝ − dim B̂ from the Lie algebra dimension and the rank.
    for (int n = 2; n <= 10; ++n)
        for (auto k : {GroupKind::SOodd, GroupKind::Sp, GroupKind::SOevenSplit}) {
            if ((k == GroupKind::SOodd) != (n % 2 == 1) || (k != GroupKind::SOodd && n % 2 == 1)) continue;
            auto g = make_group(k, n);
            int rank = g.N / 2;
            CHECK(2 * dual_positive_roots(g) + rank == dual_lie_dim(g));
            CHECK(fl_defect(3, g) == 3 * fl_defect(1, g));
        }
}

TEST_CASE("Euler characteristic examples") {
    LedgerInput in;
    in.group = make_group(GroupKind::SOodd, 3);
    in.degree = 1;
    in.places = {inf(3)};
    CHECK(euler_chi_S(in) == 0);
    int base = euler_chi_S(in);
    in.places.push_back(tw(1));
    CHECK(euler_chi_S(in) == base - 1);
    in.places.push_back(minimal(2));
    CHECK(euler_chi_S(in) == base - 1);
    in.places.push_back({"bad", PlaceKind::TaylorWiles, 1, 1, 0});
    CHECK_THROWS_AS(euler_chi_S(in), ValidationError);
}

TEST_CASE("h1_S examples") {
    LedgerInput in;
    in.group = make_group(GroupKind::SOodd, 3);
    CHECK(h1_S(in) == 0);
    in.places = {inf(3), above(1, 0, 3)};
    for (int q = 0; q < 4; ++q) {
        CHECK(h1_S(in) == q);
        in.places.push_back(tw(q));
    }
}

TEST_CASE("TW budget") {
    auto b = tw_budget(3, 5, {3}, {3});
    CHECK(b.q == 5);
    CHECK(b.bound == 5);
    auto c = tw_budget(7, 5, {3}, {3});
    CHECK(c.q == 7);
    CHECK(c.bound == 7);
    auto g = make_group(GroupKind::Sp, 4);
    auto d = tw_budget(2, 1, {h0_infinity(g), h0_infinity(g)}, {h0_infinity(g), h0_infinity(g)});
    CHECK(d.bound == d.q);
    CHECK_THROWS_AS(tw_budget(0, 1, {}, {}), ValidationError);
}

TEST_CASE("fuzzed consistency") {
    std::mt19937_64 rng(1);
    auto U = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
    const GroupKind kinds[] = {GroupKind::SOodd, GroupKind::Sp, GroupKind::SOevenSplit, GroupKind::SOevenQuasi};
    for (int t = 0; t < 500; ++t) {
        LedgerInput in;
        auto k = kinds[t % 4];
        int n = k == GroupKind::SOodd ? 2 * U(1, 4) + 1 : 2 * U(2, 4);
        in.group = make_group(k, n);
        in.degree = U(1, 4);
        int left = in.degree;
        while (left > 0) {
            int f = U(1, left);
            in.places.push_back(above(f, U(0, 5), U(0, 8)));
            left -= f;
        }
        int r = U(0, 2);
        for (int i = 0; i < in.degree; ++i) in.places.push_back(inf(U(0, 10)));
        for (int i = 0; i < r; ++i) in.places.push_back(minimal(U(0, 4)));
        in.h0_global = U(0, 3);
        in.h0_twist = U(0, 3);
        in.h1_Sperp_twist = U(0, 6);
        auto rep = ledger_report(in);
        CHECK(rep.covers_p);
        CHECK(rep.consistent);
        CHECK(rep.euler_chi_S == rep.chi_S_closed);
        int before_chi = rep.euler_chi_S, before_h1 = rep.h1_S;
        in.places.push_back(tw(U(0, 5)));
        auto rep2 = ledger_report(in);
        CHECK(rep2.euler_chi_S == before_chi - 1);
        CHECK(rep2.h1_S == before_h1 + 1);
        in.places.push_back(minimal(U(0, 5)));
        auto rep3 = ledger_report(in);
        CHECK(rep3.euler_chi_S == rep2.euler_chi_S);
        CHECK(rep3.h1_S == rep2.h1_S);
        CHECK(rep3.consistent);
    }
}

TEST_CASE("coincidence is reported, not enforced") {
    LedgerInput in;
    in.group = make_group(GroupKind::SOodd, 3);
    in.degree = 1;
    in.places = {inf(h0_infinity(in.group)), above(1, 0, 1)};
    auto r = ledger_report(in);
    CHECK(r.coincidence_lhs == 1);
    CHECK(r.coincidence_rhs == 3);
    CHECK(r.fl_total == 1);
}
