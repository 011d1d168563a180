#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace weylcyc {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator) after every arithmetic operation.
using Rational = mpq_class;

// Always "p/q", including integers ("2/1") and zero ("0/1").
std::string to_string(const Rational& x);

// Accepts "a", "-a", "a/b" (b != 0). Result is canonicalized.
Rational parse_rational(std::string_view text);

Rational factorial(int n);

inline Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

}  // namespace weylcyc
