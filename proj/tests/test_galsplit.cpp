// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include <random>

#include "heckeforge/galsplit.hpp"

using namespace hf;

namespace {

ZMatrix diag(const std::vector<std::int64_t>& d, const ResidueRing& R) {
    int n = static_cast<int>(d.size());
    ZMatrix m(n, n, R(0));
    for (int i = 0; i < n; ++i) m(i, i) = R(d[static_cast<std::size_t>(i)]);
    return m;
}

ZPoly monic_from_roots(const std::vector<std::int64_t>& roots, const ResidueRing& R) {
    ZPoly f = ZPoly::constant(R(1));
    for (auto r : roots) f = f * ZPoly::linear(R(r), R(1));
    return f;
}

}  // namespace

TEST_CASE("standard forms") {
    ResidueRing R(7, 1);
    auto a2 = standard_form(FormKind::Orthogonal, 2, 0, R);
    CHECK(a2.lambda(0, 1) == R(1));
    CHECK(a2.lambda(0, 0) == R(0));
    validate_form(a2, R);
    auto sp = standard_form(FormKind::Symplectic, 1, 0, R);
    CHECK(sp.lambda(0, 1) == R(1));
    CHECK(sp.lambda(1, 0) == R(-1));
    validate_form(sp, R);
    auto q4 = standard_form(FormKind::QuasiSplit, 4, 2, R);
    CHECK(q4.lambda(0, 3) == R(1));
    CHECK(q4.lambda(1, 1) == R(1));
    CHECK(q4.lambda(2, 2) == R(-2));
    CHECK(q4.lambda(1, 2) == R(0));
    validate_form(q4, R);
    CHECK_THROWS_AS(standard_form(FormKind::QuasiSplit, 3, 2, R), ValidationError);
    CHECK_THROWS_AS(standard_form(FormKind::QuasiSplit, 4, 7, R), ValidationError);
}

TEST_CASE("isometry check") {
    ResidueRing R(7, 2);
    auto f = standard_form(FormKind::Orthogonal, 2, 0, R);
    Zmod a = R(3);
    CHECK(check_isometry(diag({3, inv(a).value()}, R), f));
    CHECK_FALSE(check_isometry(diag({3, 3}, R), f));
}

TEST_CASE("charpoly and bezout") {
    ResidueRing R(11, 3);
    ZMatrix m(3, 3, R(0));
    int vals[9] = {2, 1, 0, 5, 3, 7, 1, 1, 4};
    for (int i = 0; i < 9; ++i) m(i / 3, i % 3) = R(vals[i]);
    ZPoly cp = charpoly(m);
    CHECK(cp.degree() == 3);
    CHECK(eval_poly(cp, m).is_zero());
    CHECK(cp.coeff(2) == -(m(0, 0) + m(1, 1) + m(2, 2)));
    CHECK(cp.coeff(0) == -LocalLinalg{R}.det(m));

    std::int64_t i2 = inv(R(2)).value(), i3 = inv(R(3)).value();
    ZPoly f = monic_from_roots({2, i2}, R), g = monic_from_roots({3, i3}, R);
    CHECK(coprime(f, g, R));
    auto [u, v] = bezout(f, g, R);
    CHECK(u * f + v * g == ZPoly::constant(R(1)));
    CHECK_FALSE(coprime(f, monic_from_roots({2 + 11, 5}, R), R));
    CHECK(is_reciprocal(f));
    CHECK_FALSE(is_reciprocal(monic_from_roots({2, 3}, R)));
}

TEST_CASE("diagonal split example") {
    ResidueRing R(11, 3);
    auto f = standard_form(FormKind::Orthogonal, 4, 0, R);
    Zmod a = R(2), b = R(3);
    ZMatrix M = diag({a.value(), b.value(), inv(b).value(), inv(a).value()}, R);
    REQUIRE(check_isometry(M, f));
    ZPoly A = monic_from_roots({b.value(), inv(b).value()}, R);
    ZPoly B = monic_from_roots({a.value(), inv(a).value()}, R);
    auto s = split_by_factor(M, f, A, B, R);
    CHECK(s.ok());
    REQUIRE(s.basis_s.cols() == 2);
    for (int c = 0; c < 2; ++c) {
        CHECK(s.basis_s(0, c) == R(0));
        CHECK(s.basis_s(3, c) == R(0));
    }
    CHECK(LocalLinalg{R}.residual_rank(s.basis_s) == 2);
    CHECK_THROWS_AS(split_by_factor(M, f, monic_from_roots({2, 3}, R), monic_from_roots({6, 4}, R), R), ValidationError);
}

TEST_CASE("random isometry splits") {
    std::mt19937_64 rng(42);
    ResidueRing R(11, 3);
    for (FormKind k : {FormKind::Orthogonal, FormKind::Symplectic, FormKind::QuasiSplit}) {
        int m = k == FormKind::Symplectic ? 2 : 4;
        auto f = standard_form(k, m, 2, R);
        int n = f.dim();
        for (int trial = 0; trial < 5; ++trial) {
            ZMatrix g = random_isometry(f, R, rng);
            REQUIRE(check_isometry(g, f));
            REQUIRE(LocalLinalg{R}.is_invertible(g));
            auto Ginv = *LocalLinalg{R}.inverse(g);
            if (k == FormKind::QuasiSplit) continue;
            std::vector<std::int64_t> d{2, 3, inv(R(3)).value(), inv(R(2)).value()};
            ZMatrix M = g * diag(d, R) * Ginv;
            REQUIRE(check_isometry(M, f));
            ZPoly A = monic_from_roots({d[0], d[3]}, R), B = monic_from_roots({d[1], d[2]}, R);
            auto s = split_by_factor(M, f, A, B, R);
            CHECK(s.ok());
            CHECK(s.basis_s.cols() == 2);
            CHECK(s.basis_psi.cols() == n - 2);
        }
    }
}

TEST_CASE("inner derivation") {
    ResidueRing R(7, 1);
    int n = 3;
    ZMatrix A0(n, n, R(0));
    A0(0, 1) = R(1);
    std::vector<std::vector<ZMatrix>> phi(3, std::vector<ZMatrix>(3));
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            ZMatrix E(n, n, R(0));
            E(j, k) = R(1);
            phi[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] = A0 * E - E * A0;
        }
    CHECK(inner_derivation_checked(phi) == A0);
    phi[1][2](0, 0) += R(1);
    CHECK_THROWS_AS(inner_derivation_checked(phi), ValidationError);
}

TEST_CASE("dual number descent roundtrip") {
    std::mt19937_64 rng(7);
    ResidueRing R(11, 1);
    for (FormKind k : {FormKind::Orthogonal, FormKind::Symplectic, FormKind::QuasiSplit}) {
        int m = k == FormKind::Symplectic ? 2 : 4;
        auto f = standard_form(k, m, 2, R);
        int n = f.dim();
        for (int trial = 0; trial < 3; ++trial) {
            std::vector<ZMatrix> gens;
            for (int i = 0; i < 3; ++i) gens.push_back(random_isometry(f, R, rng));
            ZMatrix B = random_lie_element(f, R, rng);
            CHECK((B.transpose() * f.lambda + f.lambda * B).is_zero());
            std::vector<DualMatrix> rho;
            for (const auto& g : gens) rho.push_back({g, B * g - g * B});
            auto res = descend_dual_numbers(rho, f, R);
            CHECK(res.isometry);
            CHECK(res.residual_equal);
            CHECK(res.descended == gens);
            // Already residual input is a fixed point.
            std::vector<DualMatrix> flat;
            for (const auto& g : gens) flat.push_back({g, ZMatrix(n, n, R(0))});
            auto r0 = descend_dual_numbers(flat, f, R);
            CHECK(r0.A.is_zero());
            CHECK(r0.descended == gens);
        }
    }
}

TEST_CASE("descent rejects reducible input") {
    ResidueRing R(11, 1);
    auto f = standard_form(FormKind::Orthogonal, 2, 0, R);
    std::vector<DualMatrix> rho{{diag({2, 6}, R), ZMatrix(2, 2, R(0))}};
    CHECK_THROWS_AS(descend_dual_numbers(rho, f, R), ValidationError);
}
