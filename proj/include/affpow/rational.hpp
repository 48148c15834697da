#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace affpow {

using Integer = mpz_class;
/// Exact fraction; GMP keeps it canonical (positive denominator, reduced, 0 == 0/1).
using Rational = mpq_class;

/// Parses "p", "-p", "+p" or "p/q" (q != 0). Surrounding whitespace is ignored.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// n (n-1) ... (n-k+1); zero when k > n >= 0.
Integer falling_factorial(long n, unsigned k);
Integer binomial(unsigned long n, unsigned long k);

/// Largest bit length of numerator or denominator.
std::size_t bit_size(const Rational& value);

/// Integer power of a rational.
Rational power(const Rational& base, unsigned exponent);

}  // namespace affpow
