#include "doctest.h"

#include <random>

#include "heckeforge/laurent.hpp"

using namespace hf;

namespace {

LaurentPoly random_poly(std::mt19937_64& rng, int nvars) {
    std::uniform_int_distribution<int> e(-2, 2), c(-5, 5), cnt(0, 4);
    LaurentPoly p(nvars);
    int k = cnt(rng);
    for (int t = 0; t < k; ++t) {
        std::vector<int> z(static_cast<std::size_t>(nvars));
        for (auto& x : z) x = e(rng);
        p.add_term({z, 2 * e(rng)}, frac(c(rng), 1 + static_cast<long>(rng() % 3)));
    }
    return p;
}

}  // namespace

TEST_CASE("elementary symmetric polynomials") {
    std::vector<Rational> ab{2, 7};
    CHECK(elem_sym(1, ab, Rational(1)) == 9);
    CHECK(elem_sym(2, ab, Rational(1)) == 14);
    CHECK(elem_sym(0, ab, Rational(1)) == 1);
    CHECK(elem_sym(2, std::vector<Rational>{1, 1, 1}, Rational(1)) == 3);
    CHECK_THROWS_AS(elem_sym(3, ab, Rational(1)), ValidationError);
}

TEST_CASE("ring axioms on random Laurent polynomials") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 200; ++it) {
        auto a = random_poly(rng, 2), b = random_poly(rng, 2), c = random_poly(rng, 2);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("orbit sums") {
    auto d1 = make_group(GroupKind::SOodd, 3);
    auto o = orbit_sum(d1, 1);
    CHECK(o == LaurentPoly::var(1, 0) + LaurentPoly::var(1, 0, -1));
    auto d2 = make_group(GroupKind::SOodd, 5);
    // Direct expansion over the 8 elements for j = 2.
    LaurentPoly brute(2);
    for (const auto& s : enumerate_group(d2)) {
        LaurentPoly m = LaurentPoly::constant(2, 1);
        for (int i = 1; i <= 2; ++i) {
            int v = s(i);
            m = m * LaurentPoly::var(2, std::abs(v) - 1, v < 0 ? -1 : 1);
        }
        brute += m;
    }
    CHECK(orbit_sum(d2, 2) == brute);
    for (GroupKind k : {GroupKind::SOodd, GroupKind::SOevenSplit, GroupKind::SOevenQuasi, GroupKind::Sp})
        for (int n = 2; n <= 9; ++n) {
            GroupDescriptor d;
            try {
                d = make_group(k, n);
            } catch (const ValidationError&) {
                continue;
            }
            auto gens = generators(d);
            for (int j = 1; j <= d.n_s; ++j) {
                auto p = orbit_sum(d, j);
                CHECK(p.is_invariant(gens));
                // Z_i ↦ Z_i^{-1} for all i simultaneously.
                std::vector<int> w;
                for (int i = 1; i <= d.n_s; ++i) w.push_back(-i);
                if (d.flavor == Flavor::B || d.n_s % 2 == 0) CHECK(p.act(SignedPermutation(w, d.flavor)) == p);
            }
        }
    CHECK_THROWS_AS(orbit_sum(d2, 3), ValidationError);
}

TEST_CASE("fold and unfold") {
    QPoly p4({1, -4, 6, -4, 1});
    CHECK(fold(p4, Rational(1)) == QPoly({4, -4, 1}));
    QPoly pt({frac(-5, 2), 1});
    CHECK(unfold(pt, Rational(1)) == QPoly({1, frac(-5, 2), 1}));
    CHECK_THROWS_AS(fold(QPoly({2, 1, 1}), Rational(1)), ValidationError);
    std::mt19937_64 rng(11);
    for (int it = 0; it < 300; ++it) {
        int r = static_cast<int>(rng() % 7);
        std::vector<Rational> c;
        for (int i = 0; i < r; ++i) c.push_back(frac(static_cast<long>(rng() % 21) - 10, 1 + static_cast<long>(rng() % 4)));
        c.emplace_back(1);
        QPoly t(c);
        auto u = unfold(t, Rational(1));
        CHECK(is_palindromic(u));
        CHECK(u.degree() == 2 * r);
        CHECK(fold(u, Rational(1)) == t);
        // X^r P̃(X + 1/X) = P(X) at a sample point.
        Rational x = frac(3, 2);
        CHECK(rpow(x, r) * t(x + inv(x)) == u(x));
    }
}

TEST_CASE("evaluation") {
    auto z = LaurentPoly::var(1, 0) + LaurentPoly::var(1, 0, -1);
    CHECK(z.eval({2}, 1) == frac(5, 2));
    CHECK(LaurentPoly::constant(1, 7).eval({5}, 3) == 7);
    CHECK((z * LaurentPoly::q_power(1, 1)).eval({3}, 3) == 10);
    CHECK_THROWS_AS(z.eval({0}, 3), ValidationError);
    auto half = LaurentPoly::monomial(1, {0}, 1);
    CHECK_FALSE(half.has_integral_q());
    CHECK_THROWS_AS(half.eval({1}, 4), ValidationError);
}
