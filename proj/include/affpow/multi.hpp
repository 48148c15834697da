#pragma once

#include <affpow/decompose.hpp>
#include <affpow/linalg.hpp>
#include <affpow/multipoly.hpp>

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace affpow {

/// Evaluation-only access to a polynomial of degree at most degree_bound in
/// n variables. eval must be deterministic; multi_build calls it from
/// several threads when asked to.
struct BlackBox {
  std::function<Rational(std::span<const Rational>)> eval;
  std::size_t n = 0;
  unsigned degree_bound = 0;

  static BlackBox from(const MultiPoly& f);
};

/// x -> matrix x + offset with an invertible matrix.
class AffineChange {
 public:
  /// Throws DimensionMismatch on inconsistent sizes and InvalidArgument when
  /// the matrix is singular.
  AffineChange(QMatrix matrix, std::vector<Rational> offset);
  static AffineChange identity(std::size_t n);

  const QMatrix& matrix() const noexcept { return matrix_; }
  const std::vector<Rational>& offset() const noexcept { return offset_; }
  std::size_t n() const noexcept { return offset_.size(); }

  std::vector<Rational> operator()(const std::vector<Rational>& x) const;

 private:
  QMatrix matrix_;
  std::vector<Rational> offset_;
};

/// coeff * form^exponent with a non-constant form.
struct MultiTerm {
  Rational coeff;
  LinearForm form;
  unsigned exponent = 0;

  friend bool operator==(const MultiTerm&, const MultiTerm&) = default;
};

/// Each form has first nonzero variable coefficient 1 (the scale is folded
/// into coeff); terms sorted by exponent descending, then by form
/// (variable coefficients, then constant). Forms that are proportional with
/// equal exponents are merged.
struct MultiDecomposition {
  std::size_t n = 0;
  std::vector<MultiTerm> terms;

  /// Throws InvalidArgument on a constant form with positive exponent.
  static MultiDecomposition canonical(std::size_t n, std::vector<MultiTerm> terms);

  friend bool operator==(const MultiDecomposition&, const MultiDecomposition&) = default;
};

MultiPoly expand_multi(const MultiDecomposition& d);
Rational eval_multi(const MultiDecomposition& d, std::span<const Rational> point);

/// x -> f(change(0, ..., x, ..., 0)) with x in position axis (1-based),
/// interpolated from degree_bound + 1 queries at x = 0, 1, ..., degree_bound.
/// Throws InvalidArgument on a bad axis.
UniPoly project_to_axis(const BlackBox& bb, const AffineChange& change, std::size_t axis);

struct MultiBuildOptions {
  std::uint64_t seed = 0;
  Algorithm backend = Algorithm::DistinctNodes;
  /// Additional attempts with a fresh change of coordinates.
  unsigned retries = 5;
  unsigned threads = 1;
  unsigned verify_points = 50;
};

/// Random affine change of coordinates with entries in [1, 2^32], univariate
/// decomposition of every axis projection, and lift. The result agrees with
/// bb on options.verify_points random points of [-10^6, 10^6]^n. Throws
/// ReconstructionFailed once every attempt failed.
MultiDecomposition multi_build(const BlackBox& bb, const MultiBuildOptions& options = {});

}  // namespace affpow
