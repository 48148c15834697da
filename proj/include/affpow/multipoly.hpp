#pragma once

#include <affpow/rational.hpp>

#include <cstddef>
#include <map>
#include <span>
#include <vector>

namespace affpow {

using Exponents = std::vector<unsigned>;

/// Sparse polynomial in n variables; zero coefficients are never stored.
class MultiPoly {
 public:
  explicit MultiPoly(std::size_t n = 0) : n_(n) {}

  std::size_t n() const noexcept { return n_; }
  const std::map<Exponents, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Largest total degree; -1 for the zero polynomial.
  long total_degree() const;

  /// Adds coeff * x^exps. Throws DimensionMismatch when exps.size() != n.
  void add_term(const Exponents& exps, const Rational& coeff);
  MultiPoly& operator+=(const MultiPoly& other);

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  std::size_t n_;
  std::map<Exponents, Rational> terms_;
};

/// Throws DimensionMismatch when point.size() != f.n().
Rational multi_eval(const MultiPoly& f, std::span<const Rational> point);

/// constant + sum_j coefficients[j] x_j.
struct LinearForm {
  Rational constant;
  std::vector<Rational> coefficients;

  bool is_constant() const;
  /// Throws DimensionMismatch.
  Rational operator()(std::span<const Rational> point) const;

  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

/// Multinomial expansion of form^e.
MultiPoly power(const LinearForm& form, unsigned e);

}  // namespace affpow
