// SPDX-License-Identifier: Apache-2.0
#include "heckeforge/rational.hpp"

#include "heckeforge/errors.hpp"

namespace hf {

std::string to_string(const Rational& a) {
    Rational c(a);
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
    Rational r;
    if (s.empty() || r.set_str(s, 10) != 0) throw ValidationError("not a rational: '" + s + "'");
    require(r.get_den() != 0, "zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

Rational rpow(const Rational& a, long e) {
    if (e < 0) return rpow(inv(a), -e);
    Rational acc(1), base(a);
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

}  // namespace hf
