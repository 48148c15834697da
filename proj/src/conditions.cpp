#include <affpow/conditions.hpp>
#include <affpow/errors.hpp>

#include <algorithm>

namespace affpow {

std::string_view to_string(Criterion c) {
  switch (c) {
    case Criterion::RealUniqueness: return "real-uniqueness";
    case Criterion::Uniqueness: return "uniqueness";
    case Criterion::DistinctNodes: return "distinct-nodes";
    case Criterion::ExponentBound: return "exponent-bound";
  }
  return "unknown";
}

bool ConditionReport::all_hold() const {
  return std::all_of(results.begin(), results.end(), [](const CriterionResult& r) { return r.holds; });
}

const CriterionResult& ConditionReport::at(Criterion c) const {
  for (const auto& r : results) {
    if (r.criterion == c) return r;
  }
  throw Error(ErrorKind::InvalidArgument, "criterion " + std::string(to_string(c)) + " was not checked");
}

namespace {

bool holds_at(Criterion c, unsigned long e, unsigned long n) {
  switch (c) {
    case Criterion::RealUniqueness: return 2 * n <= (e + 4) / 2;
    case Criterion::Uniqueness: return 2 * n * n <= e + 1;
    case Criterion::DistinctNodes: return e < 2 || 4 * (n + 1) * (n + 1) * (n + 1) <= 3 * e;
    case Criterion::ExponentBound: break;
  }
  return true;
}

}  // namespace

ConditionReport check_conditions(const Decomposition& d, std::span<const Criterion> criteria) {
  std::vector<unsigned> exponents;
  for (const auto& t : d.terms) exponents.push_back(t.exponent);
  std::sort(exponents.begin(), exponents.end());
  const unsigned max_e = exponents.empty() ? 0 : exponents.back();

  ConditionReport report;
  for (Criterion c : criteria) {
    CriterionResult result{c, true, std::nullopt};
    if (c == Criterion::ExponentBound) {
      const long deg = expand(d).degree();
      const long s = static_cast<long>(exponents.size());
      for (unsigned e : exponents) {
        if (2 * (static_cast<long>(e) - deg) >= s * s) {
          result = {c, false, e};
          break;
        }
      }
    } else {
      std::size_t n = 0;
      for (unsigned long e = 0; e <= max_e; ++e) {
        while (n < exponents.size() && exponents[n] <= e) ++n;
        if (!holds_at(c, e, n)) {
          result = {c, false, static_cast<unsigned>(e)};
          break;
        }
      }
    }
    report.results.push_back(result);
  }
  return report;
}

}  // namespace affpow
