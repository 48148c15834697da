#include <affpow/conditions.hpp>
#include <affpow/errors.hpp>
#include <affpow/instances.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace affpow {

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::BigExponents: return "big-exp";
    case Regime::DistinctNodes: return "distinct-nodes";
    case Regime::SmallIntervals: return "small-intervals";
    case Regime::BigGaps: return "big-gaps";
    case Regime::Waring: return "waring";
    case Regime::SparsestShift: return "sparsest-shift";
  }
  return "unknown";
}

Regime parse_regime(std::string_view name) {
  for (auto r : {Regime::BigExponents, Regime::DistinctNodes, Regime::SmallIntervals, Regime::BigGaps, Regime::Waring,
                 Regime::SparsestShift}) {
    if (to_string(r) == name) return r;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown regime '" + std::string(name) + "'");
}

namespace {

// Smallest e with 2e > 5 s^2.
unsigned big_exponent_floor(unsigned long s) { return static_cast<unsigned>(5 * s * s / 2 + 1); }

// Smallest e with 4 (i + 1)^3 <= 3e.
unsigned distinct_nodes_floor(unsigned long i) { return static_cast<unsigned>((4 * (i + 1) * (i + 1) * (i + 1) + 2) / 3); }

// Smallest e with 2e >= 5 t^2 (delta + 1)^2.
unsigned small_intervals_floor(unsigned long t, unsigned long delta) {
  return static_cast<unsigned>((5 * t * t * (delta + 1) * (delta + 1) + 1) / 2);
}

RegimeCheck reject(std::string reason) { return {false, std::move(reason)}; }

bool distinct_nodes(const Decomposition& d) {
  std::set<Rational> seen;
  for (const auto& t : d.terms) {
    if (!seen.insert(t.node).second) return false;
  }
  return true;
}

}  // namespace

RegimeCheck check_regime(const Decomposition& d, Regime regime, unsigned delta) {
  const unsigned long s = d.terms.size();
  if (s == 0) return reject("empty decomposition");
  for (const auto& t : d.terms) {
    if (t.coeff == 0) return reject("zero coefficient");
  }
  const unsigned max_e = d.terms.front().exponent;
  switch (regime) {
    case Regime::BigExponents:
    case Regime::BigGaps: {
      if (regime == Regime::BigExponents && !distinct_nodes(d)) return reject("repeated node");
      for (const auto& t : d.terms) {
        if (2UL * t.exponent <= 5 * s * s) return reject("exponent " + std::to_string(t.exponent) + " too small");
      }
      for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = i + 1; j < s; ++j) {
          if (d.terms[i].node != d.terms[j].node) continue;
          const long gap = std::abs(static_cast<long>(d.terms[i].exponent) - static_cast<long>(d.terms[j].exponent));
          if (2UL * static_cast<unsigned long>(gap) <= 5 * s * s) return reject("exponent gap too small");
        }
      }
      return {};
    }
    case Regime::DistinctNodes: {
      if (!distinct_nodes(d)) return reject("repeated node");
      const Criterion c = Criterion::DistinctNodes;
      const auto report = check_conditions(d, std::span<const Criterion>(&c, 1));
      if (!report.all_hold()) return reject("n_e bound fails at e = " + std::to_string(*report.results[0].witness));
      return {};
    }
    case Regime::SmallIntervals: {
      std::map<Rational, std::pair<unsigned, unsigned>> span;  // node -> (min, max) exponent
      for (const auto& t : d.terms) {
        auto [it, fresh] = span.try_emplace(t.node, t.exponent, t.exponent);
        if (!fresh) {
          it->second.first = std::min(it->second.first, t.exponent);
          it->second.second = std::max(it->second.second, t.exponent);
        }
      }
      const unsigned long groups = span.size();
      for (const auto& [node, range] : span) {
        if (range.second - range.first > delta) return reject("factor degree exceeds delta");
        if (range.first < small_intervals_floor(groups, delta)) return reject("exponent too small");
      }
      return {};
    }
    case Regime::Waring: {
      if (!distinct_nodes(d)) return reject("repeated node");
      for (const auto& t : d.terms) {
        if (t.exponent != max_e) return reject("exponents differ");
      }
      if (3 * s * s > 2UL * max_e) return reject("rank above sqrt(2d/3)");
      if (expand(d).degree() != static_cast<long>(max_e)) return reject("leading coefficients cancel");
      return {};
    }
    case Regime::SparsestShift: {
      for (const auto& t : d.terms) {
        if (t.node != d.terms.front().node && t.exponent != 0) return reject("more than one shift");
      }
      if (s * s > max_e) return reject("support above sqrt(d)");
      return {};
    }
  }
  return reject("unknown regime");
}

namespace {

class Planter {
 public:
  Planter(const InstanceSpec& spec) : spec_(spec), rng_(spec.seed) {}

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Rational coeff() {
    long num = 0;
    while (num == 0) num = uniform(-9, 9);
    Rational c(num, uniform(1, 2));
    c.canonicalize();
    return c;
  }

  std::vector<Rational> nodes(unsigned count) {
    std::vector<long> pool;
    for (long a = -spec_.node_range; a <= spec_.node_range; ++a) pool.push_back(a);
    std::shuffle(pool.begin(), pool.end(), rng_);
    return std::vector<Rational>(pool.begin(), pool.begin() + count);
  }

  std::vector<AffineTerm> draw(Regime regime, unsigned lo, unsigned hi) {
    const unsigned s = spec_.s;
    std::vector<AffineTerm> terms;
    switch (regime) {
      case Regime::BigExponents: {
        for (const auto& a : nodes(s)) terms.push_back({coeff(), a, static_cast<unsigned>(uniform(lo, hi))});
        break;
      }
      case Regime::DistinctNodes: {
        std::vector<unsigned> e(s);
        for (auto& x : e) x = static_cast<unsigned>(uniform(lo, hi));
        auto a = nodes(s);
        for (unsigned i = 0; i < s; ++i) terms.push_back({coeff(), a[i], e[i]});
        break;
      }
      case Regime::BigGaps: {
        const unsigned gap = std::max(spec_.exponent_profile.min_gap, big_exponent_floor(s));
        const unsigned groups = spec_.repeated_nodes && s > 1 ? static_cast<unsigned>(uniform(1, s - 1)) : s;
        auto a = nodes(groups);
        std::vector<unsigned> per(groups, 1);
        for (unsigned extra = groups; extra < s; ++extra) ++per[static_cast<std::size_t>(uniform(0, groups - 1))];
        for (unsigned g = 0; g < groups; ++g) {
          const long last_start = static_cast<long>(hi) - static_cast<long>((per[g] - 1) * gap);
          if (last_start < static_cast<long>(lo)) return {};
          long e = uniform(lo, last_start);
          for (unsigned k = 0; k < per[g]; ++k) {
            terms.push_back({coeff(), a[g], static_cast<unsigned>(e)});
            const long room = static_cast<long>(hi) - e - static_cast<long>((per[g] - 1 - k) * gap);
            e += gap + (k + 1 < per[g] ? uniform(0, std::max(0L, room - static_cast<long>(gap))) : 0);
          }
        }
        break;
      }
      case Regime::SmallIntervals: {
        const unsigned delta = spec_.delta;
        for (const auto& a : nodes(s)) {
          const auto base = static_cast<unsigned>(uniform(lo, hi));
          terms.push_back({coeff(), a, base});
          for (unsigned k = 1; k <= delta; ++k) {
            if (uniform(0, 2) > 0) terms.push_back({coeff(), a, base + k});
          }
        }
        break;
      }
      case Regime::Waring: {
        const auto d = static_cast<unsigned>(uniform(lo, hi));
        for (const auto& a : nodes(s)) terms.push_back({coeff(), a, d});
        break;
      }
      case Regime::SparsestShift: {
        const auto d = static_cast<unsigned>(uniform(lo, hi));
        const Rational a = nodes(1).front();
        std::vector<unsigned> below(d);
        for (unsigned e = 0; e < d; ++e) below[e] = e;
        std::shuffle(below.begin(), below.end(), rng_);
        terms.push_back({coeff(), a, d});
        for (unsigned i = 0; i + 1 < s; ++i) terms.push_back({coeff(), a, below[i]});
        break;
      }
    }
    return terms;
  }

 private:
  const InstanceSpec& spec_;
  std::mt19937_64 rng_;
};

[[noreturn]] void unsatisfiable(const std::string& why) { throw Error(ErrorKind::UnsatisfiableSpec, why); }

}  // namespace

Instance generate_instance(const InstanceSpec& spec, Regime regime) {
  const unsigned s = spec.s;
  const auto& profile = spec.exponent_profile;
  if (s < 1) unsatisfiable("at least one term is required");
  if (spec.node_range < 1) unsatisfiable("node range must be at least 1");
  if (profile.max != 0 && profile.min > profile.max) unsatisfiable("exponent minimum exceeds maximum");
  const unsigned long nodes_needed = regime == Regime::SparsestShift ? 1 : s;
  if (nodes_needed > 2UL * static_cast<unsigned long>(spec.node_range) + 1) unsatisfiable("node range too narrow");

  unsigned floor = 1;
  unsigned width = 40;
  switch (regime) {
    case Regime::BigExponents: floor = big_exponent_floor(s); break;
    case Regime::BigGaps: {
      const unsigned gap = std::max(profile.min_gap, big_exponent_floor(s));
      floor = big_exponent_floor(s);
      width = 40 + (s - 1) * gap;
      break;
    }
    case Regime::DistinctNodes:
      floor = distinct_nodes_floor(1);
      width = distinct_nodes_floor(s) - floor + 30;
      break;
    case Regime::SmallIntervals: floor = small_intervals_floor(s, spec.delta); width = 20; break;
    case Regime::Waring: floor = static_cast<unsigned>((3UL * s * s + 1) / 2); width = 10; break;
    case Regime::SparsestShift: floor = s * s; width = 10; break;
  }
  const unsigned lo = std::max(profile.min, floor);
  const unsigned hi = profile.max != 0 ? profile.max : lo + width;
  if (lo > hi) unsatisfiable("exponent range lies below the regime bound");
  if (regime == Regime::DistinctNodes && hi < distinct_nodes_floor(s)) unsatisfiable("maximum exponent too small");
  if (regime == Regime::BigGaps && spec.repeated_nodes && s > 1 &&
      hi - lo < std::max(profile.min_gap, big_exponent_floor(s))) {
    unsatisfiable("exponent range too narrow for the gaps");
  }

  Planter planter(spec);
  for (int attempt = 0; attempt < 500; ++attempt) {
    Decomposition d = Decomposition::canonical(planter.draw(regime, lo, hi));
    if (d.terms.size() != (regime == Regime::SmallIntervals ? d.terms.size() : s)) continue;
    if (!check_regime(d, regime, spec.delta).ok) continue;
    UniPoly f = expand(d);
    if (f.is_zero()) continue;
    return Instance{std::move(f), std::move(d), regime, regime == Regime::SmallIntervals ? spec.delta : 0};
  }
  unsatisfiable("no instance in the regime found for this spec");
}

}  // namespace affpow
