// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "heckeforge/poly.hpp"
#include "heckeforge/zmod.hpp"

namespace hf {

constexpr int kDefaultCongruencePrecision = 8;

// T = O[x]/(f) with O truncated to Z/p^e.
struct MonogenicAlgebra {
    ResidueRing ring;
    ZPoly f;
    void validate() const;
};

// θ: x ↦ a.
struct Augmentation {
    Zmod a;
};

struct Valuation {
    int value = 0;
    int precision = 0;
    bool certified() const { return value < precision; }
};

Valuation differential_number(const MonogenicAlgebra& T, const Augmentation& theta);
// f = (x − a)·h + f(a); v_p(h(a)).
Valuation congruence_number(const MonogenicAlgebra& T, const Augmentation& theta);
ZPoly cofactor(const MonogenicAlgebra& T, const Augmentation& theta);

struct TateReport {
    Valuation c0, c1;
    bool equal = false;
    std::string assumption;
};
TateReport tate_check(const MonogenicAlgebra& T, const Augmentation& theta);
// O ×_{O/p^k} O: both numbers equal k by definition.
TateReport fiber_product_check(int k, int precision);

// f(x + c) with θ moved to a − c.
std::pair<MonogenicAlgebra, Augmentation> translate(const MonogenicAlgebra& T, const Augmentation& theta, const Zmod& c);

}  // namespace hf
