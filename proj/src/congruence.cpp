// SPDX-License-Identifier: Apache-2.0
#include "heckeforge/congruence.hpp"

namespace hf {

void MonogenicAlgebra::validate() const {
    require(ring.p != 0 && ring.e >= 1, "ring: precision e must be at least 1");
    require(f.degree() >= 1, "f: must have positive degree");
    for (const auto& c : f.coeffs()) require(c.modulus() == ring.modulus, "f: coefficients must lie in Z/p^e");
    require(f.lead() == ring(1), "f: must be monic");
}

namespace {

void check_root(const MonogenicAlgebra& T, const Augmentation& theta) {
    T.validate();
    require(theta.a.modulus() == T.ring.modulus, "a: must lie in Z/p^e");
    require(T.f(theta.a).is_zero(), "a: f(a) is not 0 at working precision");
}

Valuation val(const Zmod& x, const ResidueRing& R, const std::string& what) {
    require(!x.is_zero(), "precision exhausted: " + what + " vanishes mod p^" + std::to_string(R.e));
    return Valuation{valuation(x, R.p), R.e};
}

}  // namespace

Valuation differential_number(const MonogenicAlgebra& T, const Augmentation& theta) {
    check_root(T, theta);
    return val(T.f.derivative()(theta.a), T.ring, "f'(a)");
}

ZPoly cofactor(const MonogenicAlgebra& T, const Augmentation& theta) {
    check_root(T, theta);
    auto [h, r] = T.f.divmod(ZPoly::linear(theta.a, T.ring(1)));
    require(r.is_zero(), "a: f is not divisible by x − a");
    return h;
}

Valuation congruence_number(const MonogenicAlgebra& T, const Augmentation& theta) {
    ZPoly h = cofactor(T, theta);
    Zmod ha = h(theta.a);
    require(!ha.is_zero(), "a: not a simple root at precision (h(a) ≡ 0 mod p^" + std::to_string(T.ring.e) + ")");
    return val(ha, T.ring, "h(a)");
}

TateReport tate_check(const MonogenicAlgebra& T, const Augmentation& theta) {
    TateReport r;
    r.c0 = congruence_number(T, theta);
    r.c1 = differential_number(T, theta);
    r.equal = r.c0.value == r.c1.value;
    r.assumption = "monogenic with monic f, hence a complete intersection over O";
    return r;
}

TateReport fiber_product_check(int k, int precision) {
    require(k >= 0, "k: must be nonnegative");
    require(precision >= 1 && k < precision, "k: must be below the precision");
    TateReport r;
    r.c0 = {k, precision};
    r.c1 = {k, precision};
    r.equal = true;
    r.assumption = "fiber product O ×_{O/p^k} O";
    return r;
}

std::pair<MonogenicAlgebra, Augmentation> translate(const MonogenicAlgebra& T, const Augmentation& theta, const Zmod& c) {
    T.validate();
    // Horner in the shifted variable: f(x + c).
    ZPoly shift = ZPoly(std::vector<Zmod>{c, T.ring(1)});
    ZPoly g;
    const auto& cs = T.f.coeffs();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) g = g * shift + ZPoly::constant(*it);
    return {MonogenicAlgebra{T.ring, g}, Augmentation{theta.a - c}};
}

}  // namespace hf
