#pragma once

#include <affpow/decompose.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace affpow {

/// Hypotheses under which one of the reconstruction algorithms is proven to
/// return the planted decomposition.
enum class Regime { BigExponents, DistinctNodes, SmallIntervals, BigGaps, Waring, SparsestShift };

/// big-exp, distinct-nodes, small-intervals, big-gaps, waring, sparsest-shift.
std::string_view to_string(Regime r);
/// Throws InvalidArgument.
Regime parse_regime(std::string_view name);

/// Zero in min or max means "use the regime's own bound"; min_gap is the
/// smallest exponent gap between terms sharing a node.
struct ExponentProfile {
  unsigned min = 0;
  unsigned max = 0;
  unsigned min_gap = 0;
};

struct InstanceSpec {
  /// Number of terms; in the small-intervals regime, number of distinct nodes.
  unsigned s = 2;
  ExponentProfile exponent_profile;
  /// Nodes are integers in [-node_range, node_range].
  long node_range = 9;
  /// Only read by the big-gaps regime: allow several terms per node.
  bool repeated_nodes = true;
  /// Degree bound of the polynomial factors in the small-intervals regime.
  unsigned delta = 1;
  std::uint64_t seed = 0;
};

struct Instance {
  UniPoly f;
  Decomposition truth;
  Regime regime = Regime::BigExponents;
  unsigned delta = 0;
};

struct RegimeCheck {
  bool ok = true;
  /// Why the decomposition is outside the regime; empty when ok.
  std::string reason;
};

/// Structural test of the regime hypotheses on a decomposition. delta is
/// only read for SmallIntervals.
RegimeCheck check_regime(const Decomposition& d, Regime regime, unsigned delta = 0);

/// Planted instance that passes check_regime. Throws UnsatisfiableSpec when
/// the InstanceSpec leaves no room for the regime.
Instance generate_instance(const InstanceSpec& spec, Regime regime);

}  // namespace affpow
