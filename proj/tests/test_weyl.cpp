#include "doctest.h"

#include <deque>
#include <map>
#include <set>
#include <unordered_map>

#include "heckeforge/errors.hpp"
#include "heckeforge/weyl.hpp"

using namespace hf;

namespace {

// Word length by breadth-first search over the Cayley graph.
std::unordered_map<std::uint64_t, int> bfs_lengths(const GroupDescriptor& d) {
    auto gens = generators(d);
    std::unordered_map<std::uint64_t, int> dist;
    auto id = SignedPermutation::identity(d.n_s, d.flavor);
    dist[id.key()] = 0;
    std::deque<SignedPermutation> q{id};
    while (!q.empty()) {
        auto w = q.front();
        q.pop_front();
        for (const auto& s : gens) {
            auto ws = group_op(w, s);
            if (!dist.count(ws.key())) {
                dist[ws.key()] = dist[w.key()] + 1;
                q.push_back(ws);
            }
        }
    }
    return dist;
}

GroupDescriptor desc_for(int n_s, Flavor f) {
    return f == Flavor::B ? make_group(GroupKind::SOodd, 2 * n_s + 1) : make_group(GroupKind::SOevenSplit, 2 * n_s);
}

}  // namespace

TEST_CASE("make_group derived constants") {
    auto a = make_group(GroupKind::SOodd, 3);
    CHECK(a.n_s == 1);
    CHECK(a.N == 2);
    CHECK(a.flavor == Flavor::B);
    auto b = make_group(GroupKind::Sp, 4);
    CHECK(b.n_s == 2);
    CHECK(b.N == 5);
    CHECK(b.flavor == Flavor::B);
    auto c = make_group(GroupKind::SOevenQuasi, 6);
    CHECK(c.n_s == 2);
    CHECK(c.N == 6);
    CHECK(c.flavor == Flavor::D);
    CHECK_THROWS_AS(make_group(GroupKind::Sp, 3), ValidationError);
    CHECK_THROWS_AS(make_group(GroupKind::SOodd, 4), ValidationError);
    CHECK_THROWS_AS(make_group(GroupKind::SOevenQuasi, 2), ValidationError);
    CHECK_THROWS_AS(make_group(GroupKind::SOodd, 1), ValidationError);
}

TEST_CASE("satake exponents") {
    CHECK(make_group(GroupKind::SOodd, 3).satake_exponent(1) == 1);
    CHECK(make_group(GroupKind::Sp, 2).satake_exponent(1) == 1);
    CHECK(make_group(GroupKind::Sp, 4).satake_exponent(2) == 3);
}

TEST_CASE("generators") {
    auto g = generators(make_group(GroupKind::SOodd, 5));
    REQUIRE(g.size() == 2);
    CHECK(g[0].window() == std::vector<int>{-1, 2});
    CHECK(g[1].window() == std::vector<int>{2, 1});
    auto d = generators(make_group(GroupKind::SOevenSplit, 6));
    CHECK(d[0].window() == std::vector<int>{-2, -1, 3});
    for (int ns = 1; ns <= 5; ++ns)
        for (Flavor f : {Flavor::B, Flavor::D}) {
            if (f == Flavor::D && ns < 2) continue;
            for (const auto& s : generators(desc_for(ns, f))) CHECK(group_op(s, s).is_identity());
        }
    CHECK(generators(make_group(GroupKind::SOevenSplit, 2)).empty());
}

TEST_CASE("braid relations") {
    for (int ns = 2; ns <= 5; ++ns) {
        for (Flavor f : {Flavor::B, Flavor::D}) {
            auto gens = generators(desc_for(ns, f));
            auto order = [](SignedPermutation x) {
                int k = 1;
                auto p = x;
                while (!p.is_identity()) {
                    p = group_op(p, x);
                    ++k;
                }
                return k;
            };
            for (int i = 1; i + 1 < ns; ++i) CHECK(order(group_op(gens[i], gens[i + 1])) == 3);
            if (f == Flavor::B) {
                CHECK(order(group_op(gens[0], gens[1])) == 4);
            } else {
                CHECK(order(group_op(gens[0], gens[1])) == 2);
                if (ns >= 3) CHECK(order(group_op(gens[0], gens[2])) == 3);
            }
        }
    }
}

TEST_CASE("group operations") {
    SignedPermutation s0({-1, 2}, Flavor::B), s1({2, 1}, Flavor::B);
    CHECK(group_op(s0, s0).is_identity());
    CHECK(group_op(s1, SignedPermutation::identity(2, Flavor::B)) == s1);
    auto x = group_op(s1, s0);
    CHECK(group_op(invert(x), x).is_identity());
    CHECK(group_op(x, invert(x)).is_identity());
    CHECK_THROWS_AS(group_op(s0, SignedPermutation::identity(3, Flavor::B)), ValidationError);
    CHECK_THROWS_AS(SignedPermutation({-1, 2}, Flavor::D), ValidationError);
    CHECK_THROWS_AS(SignedPermutation({1, 1}, Flavor::B), ValidationError);
}

TEST_CASE("length agrees with Cayley-graph distance") {
    for (int ns = 1; ns <= 4; ++ns)
        for (Flavor f : {Flavor::B, Flavor::D}) {
            auto d = desc_for(ns, f);
            auto dist = bfs_lengths(d);
            auto all = enumerate_group(d);
            CHECK(dist.size() == all.size());
            for (const auto& w : all) CHECK(length(w) == dist.at(w.key()));
        }
    auto b2 = enumerate_group(desc_for(2, Flavor::B));
    int mx = 0;
    for (const auto& w : b2) mx = std::max(mx, length(w));
    CHECK(mx == 4);
    for (const auto& s : generators(desc_for(3, Flavor::B))) CHECK(length(s) == 1);
}

TEST_CASE("enumeration sizes and order") {
    CHECK(enumerate_group(desc_for(2, Flavor::B)).size() == 8);
    CHECK(enumerate_group(desc_for(3, Flavor::D)).size() == 24);
    auto b1 = enumerate_group(desc_for(1, Flavor::B));
    REQUIRE(b1.size() == 2);
    CHECK(b1[0].window() == std::vector<int>{-1});
    CHECK(b1[1].window() == std::vector<int>{1});
    for (int ns = 1; ns <= 6; ++ns)
        for (Flavor f : {Flavor::B, Flavor::D}) {
            auto all = enumerate_group(desc_for(ns, f));
            CHECK(all.size() == weyl_order(ns, f));
            CHECK(std::is_sorted(all.begin(), all.end()));
            std::set<std::uint64_t> keys;
            for (const auto& w : all) keys.insert(w.key());
            CHECK(keys.size() == all.size());
        }
}

TEST_CASE("interval partitions") {
    auto p = IntervalPartition::from_subset(3, {0, 2});
    CHECK(p.blocks() == std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});
    CHECK(p.subset() == std::vector<int>{0, 2});
    CHECK(IntervalPartition::all(4).size() == 16);
    CHECK_THROWS_AS(IntervalPartition(2, {{0, 0}, {2, 2}}), ValidationError);
    CHECK_THROWS_AS(IntervalPartition(2, {{0, 1}}), ValidationError);
}

TEST_CASE("minimal coset representatives") {
    auto d = desc_for(2, Flavor::B);
    CHECK(min_coset_reps(d, IntervalPartition::singletons(2)).size() == 8);
    CHECK(min_coset_reps(d, IntervalPartition::from_subset(2, {1})).size() == 4);
    // Brute force: the shortest element of each left coset wW_Θ.
    for (int ns = 1; ns <= 4; ++ns)
        for (Flavor f : {Flavor::B, Flavor::D}) {
            auto dd = desc_for(ns, f);
            auto all = enumerate_group(dd);
            for (const auto& th : IntervalPartition::all(ns)) {
                auto wt = parabolic_subgroup(dd, th);
                std::set<std::uint64_t> done;
                std::set<std::uint64_t> brute;
                for (const auto& w : all) {
                    if (done.count(w.key())) continue;
                    SignedPermutation best = w;
                    for (const auto& u : wt) {
                        auto x = group_op(w, u);
                        done.insert(x.key());
                        if (length(x) < length(best)) best = x;
                    }
                    brute.insert(best.key());
                }
                auto reps = min_coset_reps(dd, th);
                std::set<std::uint64_t> got;
                for (const auto& w : reps) got.insert(w.key());
                CHECK(got == brute);
                CHECK(reps.size() * wt.size() == all.size());
            }
        }
}

TEST_CASE("parabolic factorization") {
    for (int ns = 2; ns <= 4; ++ns)
        for (Flavor f : {Flavor::B, Flavor::D}) {
            auto dd = desc_for(ns, f);
            for (const auto& th : IntervalPartition::all(ns)) {
                auto wt = parabolic_subgroup(dd, th);
                std::set<std::uint64_t> wtk;
                for (const auto& u : wt) wtk.insert(u.key());
                for (const auto& w : enumerate_group(dd)) {
                    auto [top, low] = parabolic_factor(w, th);
                    CHECK(is_min_right(top, th));
                    CHECK(wtk.count(low.key()) == 1);
                    CHECK(group_op(top, low) == w);
                    CHECK(length(w) == length(top) + length(low));
                }
            }
        }
}

TEST_CASE("double coset representatives") {
    for (int ns = 1; ns <= 4; ++ns) {
        auto dd = desc_for(ns, Flavor::B);
        auto all = enumerate_group(dd);
        auto parts = IntervalPartition::all(ns);
        for (const auto& om : parts)
            for (const auto& th : parts) {
                auto wo = parabolic_subgroup(dd, om);
                auto wt = parabolic_subgroup(dd, th);
                std::map<std::uint64_t, int> orbit;
                int norbits = 0;
                std::set<std::uint64_t> minimal;
                for (const auto& w : all) {
                    if (orbit.count(w.key())) continue;
                    SignedPermutation best = w;
                    for (const auto& u : wo)
                        for (const auto& v : wt) {
                            auto x = group_op(group_op(u, w), v);
                            orbit[x.key()] = norbits;
                            if (length(x) < length(best)) best = x;
                        }
                    minimal.insert(best.key());
                    ++norbits;
                }
                auto reps = double_coset_reps(dd, om, th);
                std::set<std::uint64_t> got;
                for (const auto& w : reps) got.insert(w.key());
                CHECK(got == minimal);
                CHECK(got.count(SignedPermutation::identity(ns, Flavor::B).key()) == 1);
            }
        CHECK(double_coset_reps(dd, IntervalPartition::singletons(ns), IntervalPartition::singletons(ns)).size() ==
              all.size());
    }
}

TEST_CASE("coset matrix of the identity") {
    auto d = make_group(GroupKind::SOodd, 5);
    IntervalPartition om(2, {{0, 0}, {1, 2}}), th(2, {{0, 1}, {2, 2}});
    auto m = coset_matrix(d, SignedPermutation::identity(2, Flavor::B), om, th);
    CHECK(m.b == std::vector<int>{0, 0});
    CHECK(m.a == std::vector<std::vector<int>>{{1, 0}, {1, 1}});
    CHECK_THROWS_AS(coset_matrix(d, SignedPermutation({2, 1}, Flavor::B), om, IntervalPartition::whole(2)),
                    ValidationError);
}

TEST_CASE("coset matrix bijection") {
    for (int ns = 1; ns <= 4; ++ns)
        for (Flavor f : {Flavor::B, Flavor::D}) {
            auto dd = desc_for(ns, f);
            auto parts = IntervalPartition::all(ns);
            for (const auto& om : parts)
                for (const auto& th : parts) {
                    auto dom = matrix_domain(dd, om, th);
                    std::vector<CosetMatrix> img;
                    for (const auto& w : dom) {
                        auto m = coset_matrix(dd, w, om, th);
                        CHECK(matrix_to_rep(dd, m, om, th) == w);
                        img.push_back(m);
                    }
                    std::sort(img.begin(), img.end());
                    CHECK(img == admissible_matrices(dd, om, th));
                }
        }
}

TEST_CASE("poincare polynomial") {
    auto d = desc_for(2, Flavor::B);
    CHECK(poincare_polynomial(d, IntervalPartition::singletons(2)) == std::vector<std::uint64_t>{1, 2, 2, 2, 1});
    CHECK(poincare_polynomial(d, IntervalPartition::whole(2)) == std::vector<std::uint64_t>{1});
}
