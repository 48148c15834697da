#pragma once

#include <affpow/rational.hpp>

#include <cstddef>
#include <optional>
#include <vector>

namespace affpow {

/// Dense row-major matrix of rationals.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);
  /// Throws DimensionMismatch unless entries.size() == rows * cols.
  QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const std::vector<Rational>& entries() const noexcept { return entries_; }

  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  /// A v. Throws DimensionMismatch.
  std::vector<Rational> apply(const std::vector<Rational>& v) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

struct Solution {
  std::vector<Rational> values;
  /// False when free variables were set to zero.
  bool unique = true;
};

/// A x = b; nullopt when inconsistent. The returned solution is checked by
/// multiplication. Throws DimensionMismatch when b.size() != A.rows().
std::optional<Solution> solve(const QMatrix& a, const std::vector<Rational>& b);

/// Basis of the right null space, one vector per free column in increasing
/// column order, each primitive integer with first nonzero entry positive.
std::vector<std::vector<Rational>> kernel(const QMatrix& a);

std::size_t rank(const QMatrix& a);

namespace detail {

using IntMatrix = std::vector<std::vector<Integer>>;

/// Fraction-free row echelon form.
struct Echelon {
  IntMatrix rows;
  /// Pivot column of each of the first rank rows.
  std::vector<std::size_t> pivots;
};

Echelon bareiss(IntMatrix m);
/// Scales each row by the lcm of its denominators.
IntMatrix clear_denominators(const QMatrix& a);
std::vector<std::vector<Rational>> kernel(const Echelon& e, std::size_t cols);
/// Integer vector with content 1 and first nonzero entry positive.
std::vector<Integer> primitive_vector(const std::vector<Rational>& v);

}  // namespace detail

}  // namespace affpow
