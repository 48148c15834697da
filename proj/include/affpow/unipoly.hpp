#pragma once

#include <affpow/rational.hpp>

#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace affpow {

/// Dense univariate polynomial over the rationals, coefficients lowest degree
/// first. The highest stored coefficient is never zero; the zero polynomial
/// stores nothing and reports degree kZeroDegree.
class UniPoly {
 public:
  static constexpr long kZeroDegree = -1;

  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(std::initializer_list<Rational> coeffs);

  static UniPoly constant(const Rational& value);
  static UniPoly monomial(const Rational& coeff, std::size_t degree);
  /// (x - node)^exponent, expanded.
  static UniPoly affine_power(const Rational& node, unsigned exponent);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of x^i, zero past the degree.
  Rational coeff(std::size_t i) const;
  const Rational& leading() const;

  Rational operator()(const Rational& x) const;

  UniPoly& operator+=(const UniPoly& other);
  UniPoly& operator-=(const UniPoly& other);
  UniPoly& operator*=(const Rational& scalar);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
  friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }
  friend UniPoly operator-(UniPoly a) { return a *= Rational(-1); }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// k-th formal derivative; k = 0 returns f.
UniPoly derivative(const UniPoly& f, unsigned k = 1);

/// g(x) = f(x + a); its coefficients are those of f in the basis (x - a)^j.
UniPoly taylor_shift(const UniPoly& f, const Rational& a);

/// Largest t with (x - a)^t | f. Throws ZeroPolynomial on f = 0.
unsigned mult_at(const UniPoly& f, const Rational& a);

/// Unique polynomial of degree < points.size() through all points.
/// Throws DuplicateAbscissa.
UniPoly interpolate(std::span<const std::pair<Rational, Rational>> points);

struct RootMultiplicity {
  Rational root;
  unsigned multiplicity = 0;

  friend bool operator==(const RootMultiplicity&, const RootMultiplicity&) = default;
};

struct RootSplit {
  /// Sorted ascending by root.
  std::vector<RootMultiplicity> roots;
  /// f / prod (x - r)^m; has no rational root.
  UniPoly cofactor;
};

/// Every rational root of f with multiplicity, plus the root-free cofactor.
/// Throws ZeroPolynomial.
RootSplit split_rational_roots(const UniPoly& f);
std::vector<RootMultiplicity> rational_roots(const UniPoly& f);

/// Euclidean division over Q. Throws InvalidArgument when b = 0.
std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b);

/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

UniPoly pow(const UniPoly& base, unsigned exponent);

/// Scales f to integer coefficients with content 1 and positive leading
/// coefficient. Empty for the zero polynomial.
std::vector<Integer> primitive_integer_coeffs(const UniPoly& f);

/// Largest bit size over all coefficients.
std::size_t max_bit_size(const UniPoly& f);

/// Comma-separated coefficients low to high, each "p" or "p/q".
std::string to_text(const UniPoly& f);
UniPoly parse_unipoly_text(std::string_view text);

}  // namespace affpow
