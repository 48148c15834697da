#pragma once

#include <affpow/unipoly.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace affpow {

/// coeff * (x - node)^exponent.
struct AffineTerm {
  Rational coeff;
  Rational node;
  unsigned exponent = 0;

  friend bool operator==(const AffineTerm&, const AffineTerm&) = default;
};

/// Terms sorted by exponent descending, then node ascending; no two terms
/// share (node, exponent), no coefficient is zero, and exponent-0 terms use
/// node 0.
struct Decomposition {
  std::vector<AffineTerm> terms;

  /// Merges repeated (node, exponent) pairs, drops zeros and sorts.
  static Decomposition canonical(std::vector<AffineTerm> terms);

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

UniPoly expand(const Decomposition& d);

enum class Algorithm { Auto, BigExponents, DistinctNodes, SmallIntervals, BigGaps };

/// Command-line names: auto, big-exp, distinct-nodes, small-intervals, big-gaps.
std::string_view to_string(Algorithm a);
/// Throws InvalidArgument on an unknown name.
Algorithm parse_algorithm(std::string_view name);

/// One pass of the distinct-nodes iteration.
struct IterationStats {
  unsigned iteration = 0;
  unsigned derivative_order = 0;
  std::size_t terms_recovered = 0;
  /// Largest coefficient bit size among the recovered terms and the residual.
  std::size_t term_bits = 0;
  std::size_t residual_bits = 0;
};

struct DecomposeOptions {
  unsigned threads = 1;
  /// Last delta tried by the automatic small-intervals mode.
  unsigned delta_max = 4;
  /// When set, decompose_distinct_nodes appends one entry per pass.
  std::vector<IterationStats>* stats = nullptr;
};

// Every algorithm returns a decomposition whose expansion equals f, or
// throws. Out-of-regime inputs end in ReconstructionFailed; a solution that
// needs nodes outside Q ends in IrrationalNodeDetected. All throw
// ZeroPolynomial on f = 0.

Decomposition decompose_big_exponents(const UniPoly& f, const DecomposeOptions& options = {});
Decomposition decompose_big_gaps(const UniPoly& f, const DecomposeOptions& options = {});
Decomposition decompose_distinct_nodes(const UniPoly& f, const DecomposeOptions& options = {});
/// delta = nullopt tries 0, 1, ..., options.delta_max and throws
/// DeltaExhausted when none verifies.
Decomposition decompose_small_intervals(const UniPoly& f, std::optional<unsigned> delta,
                                        const DecomposeOptions& options = {});

struct AutoResult {
  Decomposition decomposition;
  Algorithm algorithm = Algorithm::Auto;
};

/// Tries big exponents, big gaps, distinct nodes and small intervals in that
/// order. The big-exponents and big-gaps pipelines coincide; a result from
/// that pipeline is tagged BigExponents when its nodes are distinct and
/// BigGaps otherwise.
AutoResult decompose_auto(const UniPoly& f, const DecomposeOptions& options = {});

/// Dispatch by tag; Auto goes through decompose_auto.
AutoResult decompose(const UniPoly& f, Algorithm algorithm, std::optional<unsigned> delta = std::nullopt,
                     const DecomposeOptions& options = {});

}  // namespace affpow
