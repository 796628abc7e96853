#pragma once

#include <gmpxx.h>

#include <string>

namespace words123 {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Parses a decimal integer; throws InvalidArgument on junk.
Integer parse_integer(const std::string& text);

// Parses "p" or "p/q"; the result is canonicalized.
Rational parse_rational(const std::string& text);

Integer binomial(long long n, long long k);

}  // namespace words123
