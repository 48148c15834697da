#include <affpow/detail/modular.hpp>

#include <utility>

namespace affpow::detail {

u64 pow_mod(u64 base, u64 exponent, u64 p) {
  u64 result = 1 % p;
  base %= p;
  while (exponent > 0) {
    if (exponent & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exponent >>= 1;
  }
  return result;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

u64 reduce(const Integer& value, u64 p) { return mpz_fdiv_ui(value.get_mpz_t(), p); }

std::size_t rank_mod(std::vector<std::vector<u64>>& rows, u64 p) {
  if (rows.empty()) return 0;
  const std::size_t m = rows.size();
  const std::size_t n = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n && rank < m; ++c) {
    std::size_t pivot = rank;
    while (pivot < m && rows[pivot][c] == 0) ++pivot;
    if (pivot == m) continue;
    std::swap(rows[pivot], rows[rank]);
    const u64 inv = inv_mod(rows[rank][c], p);
    for (std::size_t j = c; j < n; ++j) rows[rank][j] = mul_mod(rows[rank][j], inv, p);
    for (std::size_t i = rank + 1; i < m; ++i) {
      const u64 factor = rows[i][c];
      if (factor == 0) continue;
      for (std::size_t j = c; j < n; ++j) {
        rows[i][j] = sub_mod(rows[i][j], mul_mod(factor, rows[rank][j], p), p);
      }
    }
    ++rank;
  }
  return rank;
}

namespace {

void trim_mod(std::vector<u64>& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

}  // namespace

std::vector<u64> gcd_mod(std::vector<u64> a, std::vector<u64> b, u64 p) {
  trim_mod(a);
  trim_mod(b);
  while (!b.empty()) {
    // a <- a mod b
    const u64 inv = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
      const u64 factor = mul_mod(a.back(), inv, p);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) {
        a[shift + i] = sub_mod(a[shift + i], mul_mod(factor, b[i], p), p);
      }
      trim_mod(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  if (!a.empty()) {
    const u64 inv = inv_mod(a.back(), p);
    for (auto& c : a) c = mul_mod(c, inv, p);
  }
  return a;
}

}  // namespace affpow::detail
