#pragma once

#include <affpow/unipoly.hpp>

#include <optional>
#include <span>
#include <vector>

namespace affpow {

/// Shifted differential equation sum_i P_i(x) g^(i)(x) = 0 with
/// deg P_i <= i + shift. The coefficients of all P_i together form a
/// primitive integer vector whose first nonzero entry (P_0 low degree first,
/// then P_1, ...) is positive.
struct SDE {
  unsigned order = 0;
  unsigned shift = 0;
  std::vector<UniPoly> coefficient_polys;

  friend bool operator==(const SDE&, const SDE&) = default;
};

/// det [f_j^(i)]_{i,j}, by fraction-free elimination over Q[x].
UniPoly wronskian(std::span<const UniPoly> fs);

/// sum_i P_i f^(i).
UniPoly apply_sde(const SDE& s, const UniPoly& f);

/// SDE(k, shift) of f with the smallest k in 1..max_order (default deg f + 1),
/// or nullopt. Throws ZeroPolynomial.
std::optional<SDE> find_min_sde(const UniPoly& f, unsigned shift, std::optional<unsigned> max_order = std::nullopt);

struct PowerSolution {
  Rational node;
  unsigned exponent = 0;

  friend bool operator==(const PowerSolution&, const PowerSolution&) = default;
};

/// All (b, e) with b rational, e_min <= e <= e_max and (x - b)^e a solution
/// of s, sorted by (e, b). Throws IrrationalNodeDetected when some exponent
/// also admits a node outside Q, InvalidArgument when e_min < 1, and
/// ReconstructionFailed when every node solves s for some exponent.
std::vector<PowerSolution> power_solutions(const SDE& s, long e_min, long e_max, unsigned threads = 1);

/// Basis of the span of all solutions R(x) (x - c)^e of s with deg R <= delta
/// and e_min <= e <= e_max. Each element is itself such a solution.
std::vector<UniPoly> shifted_poly_solutions(const SDE& s, const Rational& c, unsigned delta, long e_min, long e_max);

namespace detail {

struct PowerScan {
  std::vector<PowerSolution> solutions;
  /// Exponents at which a node outside Q also solves the SDE.
  std::vector<unsigned> irrational_exponents;
};

/// power_solutions without the irrational-node exception.
PowerScan scan_power_solutions(const SDE& s, long e_min, long e_max, unsigned threads = 1);

}  // namespace detail

}  // namespace affpow
