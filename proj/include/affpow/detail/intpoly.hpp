#pragma once

#include <affpow/rational.hpp>

#include <vector>

// Integer coefficient polynomials, low degree first, always trimmed.
namespace affpow::detail {

using IntPoly = std::vector<Integer>;

void trim(IntPoly& f);
Integer content(const IntPoly& f);
/// Divides by the content and makes the leading coefficient positive.
IntPoly primitive_part(IntPoly f);
IntPoly derivative(const IntPoly& f);
/// Primitive gcd with positive leading coefficient; empty when both are zero.
IntPoly gcd(IntPoly a, IntPoly b);
/// Exact quotient a / b over Z (b must divide a).
IntPoly exact_quotient(const IntPoly& a, const IntPoly& b);
/// Sign of f(num/den) * den^deg, i.e. zero test of the homogenized value.
Integer homogeneous_value(const IntPoly& f, const Integer& num, const Integer& den);

}  // namespace affpow::detail
