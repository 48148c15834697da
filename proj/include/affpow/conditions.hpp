#pragma once

#include <affpow/decompose.hpp>

#include <optional>
#include <span>
#include <vector>

namespace affpow {

// n_e is the number of terms with exponent <= e.
enum class Criterion {
  /// 2 n_e <= ceil((e + 3) / 2) for every e >= 0.
  RealUniqueness,
  /// n_e <= sqrt((e + 1) / 2), i.e. 2 n_e^2 <= e + 1, for every e >= 0.
  Uniqueness,
  /// n_e <= (3e/4)^(1/3) - 1, i.e. 4 (n_e + 1)^3 <= 3e, for every e >= 2.
  DistinctNodes,
  /// Every exponent e satisfies e < deg f + s^2 / 2 where f is the expansion.
  ExponentBound,
};

std::string_view to_string(Criterion c);

struct CriterionResult {
  Criterion criterion = Criterion::Uniqueness;
  bool holds = true;
  /// First exponent where the inequality fails; set iff !holds.
  std::optional<unsigned> witness;
};

struct ConditionReport {
  std::vector<CriterionResult> results;

  bool all_hold() const;
  /// Result for c; throws InvalidArgument when c was not requested.
  const CriterionResult& at(Criterion c) const;
};

ConditionReport check_conditions(const Decomposition& d, std::span<const Criterion> criteria);

}  // namespace affpow
