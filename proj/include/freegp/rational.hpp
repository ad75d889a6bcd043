#pragma once

#include <gmpxx.h>

#include <string>

namespace freegp {

// Exact rationals; mpq_class keeps values canonical (gcd(p,q) = 1, q > 0)
// after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

// "p/q", or "p" when q == 1.
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

} // namespace freegp
