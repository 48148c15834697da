#include <affpow/decompose.hpp>
#include <affpow/errors.hpp>
#include <affpow/linalg.hpp>
#include <affpow/sde.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace affpow {

Decomposition Decomposition::canonical(std::vector<AffineTerm> terms) {
  std::map<std::pair<unsigned, Rational>, Rational> merged;
  for (auto& t : terms) {
    if (t.exponent == 0) t.node = 0;
    merged[{t.exponent, t.node}] += t.coeff;
  }
  Decomposition d;
  for (auto& [key, coeff] : merged) {
    if (coeff != 0) d.terms.push_back({coeff, key.second, key.first});
  }
  std::stable_sort(d.terms.begin(), d.terms.end(), [](const AffineTerm& a, const AffineTerm& b) {
    return a.exponent != b.exponent ? a.exponent > b.exponent : a.node < b.node;
  });
  return d;
}

UniPoly expand(const Decomposition& d) {
  UniPoly out;
  for (const auto& t : d.terms) out += UniPoly::affine_power(t.node, t.exponent) * t.coeff;
  return out;
}

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::Auto: return "auto";
    case Algorithm::BigExponents: return "big-exp";
    case Algorithm::DistinctNodes: return "distinct-nodes";
    case Algorithm::SmallIntervals: return "small-intervals";
    case Algorithm::BigGaps: return "big-gaps";
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
  for (auto a : {Algorithm::Auto, Algorithm::BigExponents, Algorithm::DistinctNodes, Algorithm::SmallIntervals,
                 Algorithm::BigGaps}) {
    if (to_string(a) == name) return a;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown algorithm '" + std::string(name) + "'");
}

namespace {

Integer floor_half(const Integer& n) {
  Integer q;
  mpz_fdiv_q_2exp(q.get_mpz_t(), n.get_mpz_t(), 1);
  return q;
}

Integer ceil_half(const Integer& n) {
  Integer q;
  mpz_cdiv_q_2exp(q.get_mpz_t(), n.get_mpz_t(), 1);
  return q;
}

long to_long(const Integer& n) { return n.get_si(); }

// Coefficients of target in the given basis when they are unique.
std::optional<std::vector<Rational>> coordinates(const UniPoly& target, const std::vector<UniPoly>& basis) {
  if (basis.empty()) return std::nullopt;
  std::size_t nrows = target.coeffs().size();
  for (const auto& b : basis) nrows = std::max(nrows, b.coeffs().size());
  QMatrix a(nrows, basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const auto& c = basis[j].coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) a(i, j) = c[i];
  }
  std::vector<Rational> rhs(nrows);
  for (std::size_t i = 0; i < target.coeffs().size(); ++i) rhs[i] = target.coeffs()[i];
  auto sol = solve(a, rhs);
  if (!sol || !sol->unique) return std::nullopt;
  return std::move(sol->values);
}

Decomposition verified(const UniPoly& f, std::vector<AffineTerm> terms) {
  Decomposition d = Decomposition::canonical(std::move(terms));
  if (expand(d) != f) throw Error(ErrorKind::ReconstructionFailed, "decomposition does not re-expand to the input");
  return d;
}

void require_nonzero(const UniPoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "cannot decompose the zero polynomial");
}

Decomposition constant_term(const UniPoly& f) { return Decomposition{{{f.coeff(0), Rational(0), 0}}}; }

[[noreturn]] void fail(bool irrational, const std::string& what) {
  if (irrational) throw Error(ErrorKind::IrrationalNodeDetected, what + "; some solution node lies outside Q");
  throw Error(ErrorKind::ReconstructionFailed, what);
}

// Shared by the big-exponents and big-gaps algorithms.
Decomposition power_basis_pipeline(const UniPoly& f, const DecomposeOptions& options) {
  require_nonzero(f);
  if (f.degree() == 0) return constant_term(f);
  const auto s = find_min_sde(f, 0);
  if (!s) throw Error(ErrorKind::ReconstructionFailed, "no shifted differential equation found");
  const Integer r = s->order;
  const long e_lo = to_long(ceil_half((r + 1) * (r + 1)));
  const long e_hi = f.degree() + to_long(floor_half(r * r));
  const detail::PowerScan scan = detail::scan_power_solutions(*s, e_lo, e_hi, options.threads);
  const bool irrational = !scan.irrational_exponents.empty();

  std::vector<UniPoly> basis;
  for (const auto& p : scan.solutions) basis.push_back(UniPoly::affine_power(p.node, p.exponent));
  auto coords = coordinates(f, basis);
  if (!coords) fail(irrational, "input is not uniquely spanned by the power solutions");

  std::vector<AffineTerm> terms;
  for (std::size_t i = 0; i < scan.solutions.size(); ++i) {
    if ((*coords)[i] != 0) terms.push_back({(*coords)[i], scan.solutions[i].node, scan.solutions[i].exponent});
  }
  return verified(f, std::move(terms));
}

bool nodes_distinct(const Decomposition& d) {
  std::set<Rational> seen;
  for (const auto& t : d.terms) {
    if (!seen.insert(t.node).second) return false;
  }
  return true;
}

std::size_t max_term_bits(const std::vector<AffineTerm>& terms) {
  std::size_t bits = 0;
  for (const auto& t : terms) bits = std::max({bits, bit_size(t.coeff), bit_size(t.node)});
  return bits;
}

Decomposition small_intervals_fixed(const UniPoly& f, unsigned delta) {
  const auto s = find_min_sde(f, delta);
  if (!s) throw Error(ErrorKind::ReconstructionFailed, "no shifted differential equation found");
  const Integer r = s->order;
  const Integer width = Integer(delta + 1) * Integer(delta + 1);
  // Exponents strictly between (r+1)^2 (delta+1)^2 / 2 and d + r^2 (delta+1)^2 / 2.
  const long e_lo = to_long(floor_half((r + 1) * (r + 1) * width)) + 1;
  const long e_hi = to_long(ceil_half(2 * Integer(f.degree()) + r * r * width)) - 1;

  const RootSplit split = split_rational_roots(s->coefficient_polys.back());
  const bool irrational = split.cofactor.degree() > 0;
  std::vector<UniPoly> basis;
  std::vector<std::size_t> owner;
  for (std::size_t k = 0; k < split.roots.size(); ++k) {
    for (auto& g : shifted_poly_solutions(*s, split.roots[k].root, delta, e_lo, e_hi)) {
      basis.push_back(std::move(g));
      owner.push_back(k);
    }
  }
  auto coords = coordinates(f, basis);
  if (!coords) fail(irrational, "input is not uniquely spanned by the shifted solutions");

  std::vector<UniPoly> parts(split.roots.size());
  for (std::size_t i = 0; i < basis.size(); ++i) parts[owner[i]] += basis[i] * (*coords)[i];
  std::vector<AffineTerm> terms;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const Rational& c = split.roots[k].root;
    const UniPoly local = taylor_shift(parts[k], c);
    for (std::size_t e = 0; e < local.coeffs().size(); ++e) {
      if (local.coeffs()[e] != 0) terms.push_back({local.coeffs()[e], c, static_cast<unsigned>(e)});
    }
  }
  return verified(f, std::move(terms));
}

}  // namespace

Decomposition decompose_big_exponents(const UniPoly& f, const DecomposeOptions& options) {
  return power_basis_pipeline(f, options);
}

Decomposition decompose_big_gaps(const UniPoly& f, const DecomposeOptions& options) {
  return power_basis_pipeline(f, options);
}

Decomposition decompose_distinct_nodes(const UniPoly& f, const DecomposeOptions& options) {
  require_nonzero(f);
  std::vector<AffineTerm> found;
  UniPoly h = f;
  for (unsigned iteration = 1; !h.is_zero(); ++iteration) {
    if (iteration > static_cast<unsigned>(f.degree()) + 2) {
      throw Error(ErrorKind::ReconstructionFailed, "residual did not vanish");
    }
    if (h.degree() == 0) {
      found.push_back({h.coeff(0), Rational(0), 0});
      break;
    }
    const long deg = h.degree();
    const auto s = find_min_sde(h, 0);
    if (!s) throw Error(ErrorKind::ReconstructionFailed, "no shifted differential equation found");
    const Integer t = s->order;
    const long e_lo = to_long(ceil_half((t + 1) * (t + 1)));
    const long e_hi = deg + to_long((Integer(deg) + 2) * (Integer(deg) + 2) / 8);
    detail::PowerScan scan = detail::scan_power_solutions(*s, e_lo, e_hi, options.threads);
    const bool irrational = !scan.irrational_exponents.empty();
    auto& sols = scan.solutions;
    std::reverse(sols.begin(), sols.end());  // exponent descending

    // Smallest r with d_r - d_{r+1} > r^2/2 and d_{r+1} < deg, where the
    // value after the last solution is (t+1)^2/2.
    const Rational sentinel = Rational((t + 1) * (t + 1), 2);
    std::size_t r = 0;
    for (std::size_t i = 1; i <= sols.size(); ++i) {
      const Rational next = i < sols.size() ? Rational(sols[i].exponent) : sentinel;
      const Rational gap = Rational(sols[i - 1].exponent) - next;
      if (2 * gap > Rational(i * i) && next < deg) {
        r = i;
        break;
      }
    }
    if (r == 0) fail(irrational, "no separated block of power solutions");

    const unsigned j = sols[r - 1].exponent - static_cast<unsigned>(r * r / 2);
    std::vector<UniPoly> basis;
    for (std::size_t i = 0; i < r; ++i) basis.push_back(UniPoly::affine_power(sols[i].node, sols[i].exponent - j));
    auto coords = coordinates(derivative(h, j), basis);
    if (!coords) fail(irrational, "derivative is not uniquely spanned by the leading power solutions");

    std::vector<AffineTerm> step;
    for (std::size_t i = 0; i < r; ++i) {
      if ((*coords)[i] == 0) continue;
      const Rational beta = (*coords)[i] / Rational(falling_factorial(sols[i].exponent, j));
      step.push_back({beta, sols[i].node, sols[i].exponent});
    }
    if (step.empty()) fail(irrational, "no term recovered");
    h -= expand(Decomposition{step});
    if (options.stats) {
      options.stats->push_back({iteration, j, step.size(), max_term_bits(step), max_bit_size(h)});
    }
    found.insert(found.end(), step.begin(), step.end());
  }
  return verified(f, std::move(found));
}

Decomposition decompose_small_intervals(const UniPoly& f, std::optional<unsigned> delta,
                                        const DecomposeOptions& options) {
  require_nonzero(f);
  if (f.degree() == 0) return constant_term(f);
  if (delta) return small_intervals_fixed(f, *delta);
  for (unsigned d = 0; d <= options.delta_max; ++d) {
    try {
      return small_intervals_fixed(f, d);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ReconstructionFailed && e.kind() != ErrorKind::IrrationalNodeDetected) throw;
    }
  }
  throw Error(ErrorKind::DeltaExhausted,
              "no delta up to " + std::to_string(options.delta_max) + " gave a verified decomposition");
}

AutoResult decompose_auto(const UniPoly& f, const DecomposeOptions& options) {
  require_nonzero(f);
  bool irrational = false;
  auto note = [&](const Error& e) {
    if (e.kind() == ErrorKind::IrrationalNodeDetected) {
      irrational = true;
    } else if (e.kind() != ErrorKind::ReconstructionFailed && e.kind() != ErrorKind::DeltaExhausted) {
      throw e;
    }
  };
  try {
    Decomposition d = power_basis_pipeline(f, options);
    const Algorithm tag = nodes_distinct(d) ? Algorithm::BigExponents : Algorithm::BigGaps;
    return {std::move(d), tag};
  } catch (const Error& e) {
    note(e);
  }
  try {
    return {decompose_distinct_nodes(f, options), Algorithm::DistinctNodes};
  } catch (const Error& e) {
    note(e);
  }
  try {
    return {decompose_small_intervals(f, std::nullopt, options), Algorithm::SmallIntervals};
  } catch (const Error& e) {
    note(e);
  }
  fail(irrational, "no algorithm produced a verified decomposition");
}

AutoResult decompose(const UniPoly& f, Algorithm algorithm, std::optional<unsigned> delta,
                     const DecomposeOptions& options) {
  switch (algorithm) {
    case Algorithm::Auto: return decompose_auto(f, options);
    case Algorithm::BigExponents: return {decompose_big_exponents(f, options), algorithm};
    case Algorithm::DistinctNodes: return {decompose_distinct_nodes(f, options), algorithm};
    case Algorithm::SmallIntervals: return {decompose_small_intervals(f, delta, options), algorithm};
    case Algorithm::BigGaps: return {decompose_big_gaps(f, options), algorithm};
  }
  throw Error(ErrorKind::InvalidArgument, "unknown algorithm");
}

}  // namespace affpow
