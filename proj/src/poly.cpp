// SPDX-License-Identifier: Apache-2.0
#include "heckeforge/poly.hpp"

namespace hf {

ZPoly reduce(const ZPoly& f, std::uint64_t m) {
    std::vector<Zmod> c;
    for (const auto& x : f.coeffs()) c.emplace_back(x.value(), m);
    return ZPoly(std::move(c));
}

std::string to_string(const QPoly& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (int i = f.degree(); i >= 0; --i) {
        const Rational& a = f.coeffs()[static_cast<std::size_t>(i)];
        if (is_zero(a)) continue;
        if (!s.empty()) s += sgn(a) < 0 ? " - " : " + ";
        else if (sgn(a) < 0) s += "-";
        Rational b = abs(a);
        bool unit = b == 1 && i > 0;
        if (!unit) s += to_string(b);
        if (i > 0) s += std::string(unit ? "" : "*") + "X" + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return s;
}

}  // namespace hf
