// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <string>

namespace hf {

using Rational = mpq_class;

inline bool is_zero(const Rational& a) { return sgn(a) == 0; }
inline Rational inv(const Rational& a) { return Rational(1) / a; }
inline Rational frac(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// "p/q" or "p" when the denominator is 1.
std::string to_string(const Rational& a);

// Accepts "p", "p/q", or a decimal integer; throws ValidationError otherwise.
Rational parse_rational(const std::string& s);

Rational rpow(const Rational& a, long e);

}  // namespace hf
