#pragma once

#include <affpow/unipoly.hpp>

#include <map>
#include <vector>

namespace affpow {

struct WaringTerm {
  Rational coeff;
  Rational node;

  friend bool operator==(const WaringTerm&, const WaringTerm&) = default;
};

/// f = sum coeff (x - node)^degree, or a report that the Waring rank exceeds
/// sqrt(2 degree / 3).
struct WaringResult {
  bool above_threshold = false;
  unsigned degree = 0;
  /// Order of the minimal SDE(k, 0) of f.
  unsigned sde_order = 0;
  /// Sorted by node; distinct nodes, nonzero coefficients.
  std::vector<WaringTerm> terms;
};

/// f = sum_e coeffs[e] (x - shift)^e, or a report that no shift gives at
/// most sqrt(degree) terms.
struct SparsestResult {
  bool above_threshold = false;
  unsigned degree = 0;
  unsigned sde_order = 0;
  Rational shift;
  std::map<unsigned, Rational> coeffs;
};

/// Throws InvalidArgument when deg f < 1, IrrationalNodeDetected when the
/// rank is within the threshold only over an extension of Q.
WaringResult waring_decompose(const UniPoly& f);

/// Throws InvalidArgument when deg f < 1, IrrationalNodeDetected when every
/// sparse enough shift candidate lies outside Q.
SparsestResult sparsest_shift(const UniPoly& f);

UniPoly expand_waring(const WaringResult& r);
UniPoly expand_sparsest(const SparsestResult& r);

}  // namespace affpow
