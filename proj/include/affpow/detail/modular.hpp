#pragma once

#include <affpow/rational.hpp>

#include <cstdint>
#include <vector>

// Word-size arithmetic modulo a prime. Used only as a fast filter in front
// of exact computations: a modular answer never replaces an exact one.
namespace affpow::detail {

using u64 = std::uint64_t;

/// 2^61 - 1.
inline constexpr u64 kFilterPrime = (u64{1} << 61) - 1;

inline u64 mul_mod(u64 a, u64 b, u64 p) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p);
}
inline u64 add_mod(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return s >= p ? s - p : s;
}
inline u64 sub_mod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + (p - b); }

u64 pow_mod(u64 base, u64 exponent, u64 p);
/// Inverse of a nonzero residue modulo a prime.
u64 inv_mod(u64 a, u64 p);
u64 reduce(const Integer& value, u64 p);

/// Rank of a dense matrix over Z/p (destroys the input).
std::size_t rank_mod(std::vector<std::vector<u64>>& rows, u64 p);

/// Monic gcd over Z/p of coefficient vectors (low to high, trimmed in place).
std::vector<u64> gcd_mod(std::vector<u64> a, std::vector<u64> b, u64 p);

}  // namespace affpow::detail
