#include <affpow/classic.hpp>
#include <affpow/errors.hpp>
#include <affpow/linalg.hpp>
#include <affpow/sde.hpp>

namespace affpow {

namespace {

unsigned checked_degree(const UniPoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "input is the zero polynomial");
  if (f.degree() < 1) throw Error(ErrorKind::InvalidArgument, "input must have degree at least 1");
  return static_cast<unsigned>(f.degree());
}

SDE minimal_sde(const UniPoly& f) {
  auto s = find_min_sde(f, 0);
  if (!s) throw Error(ErrorKind::ReconstructionFailed, "no shifted differential equation found");
  return *s;
}

}  // namespace

WaringResult waring_decompose(const UniPoly& f) {
  WaringResult result;
  result.degree = checked_degree(f);
  const SDE s = minimal_sde(f);
  const unsigned long k = s.order;
  result.sde_order = s.order;
  if (3 * k * k > 2UL * result.degree) {
    result.above_threshold = true;
    return result;
  }
  const detail::PowerScan scan = detail::scan_power_solutions(s, result.degree, result.degree);
  const bool irrational = !scan.irrational_exponents.empty();
  if (scan.solutions.size() < k) {
    if (irrational) throw Error(ErrorKind::IrrationalNodeDetected, "Waring nodes lie outside Q");
    result.above_threshold = true;
    return result;
  }

  QMatrix a(result.degree + 1, scan.solutions.size());
  for (std::size_t j = 0; j < scan.solutions.size(); ++j) {
    const UniPoly p = UniPoly::affine_power(scan.solutions[j].node, result.degree);
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) a(i, j) = p.coeffs()[i];
  }
  std::vector<Rational> rhs(result.degree + 1);
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) rhs[i] = f.coeffs()[i];
  const auto sol = solve(a, rhs);
  if (!sol || !sol->unique) {
    if (irrational) throw Error(ErrorKind::IrrationalNodeDetected, "Waring nodes lie outside Q");
    throw Error(ErrorKind::ReconstructionFailed, "input is not uniquely spanned by the power solutions");
  }
  for (std::size_t j = 0; j < scan.solutions.size(); ++j) {
    if (sol->values[j] != 0) result.terms.push_back({sol->values[j], scan.solutions[j].node});
  }
  if (expand_waring(result) != f) throw Error(ErrorKind::ReconstructionFailed, "Waring terms do not re-expand to f");
  return result;
}

SparsestResult sparsest_shift(const UniPoly& f) {
  SparsestResult result;
  result.degree = checked_degree(f);
  const SDE s = minimal_sde(f);
  const unsigned long k = s.order;
  result.sde_order = s.order;
  if (k * k > result.degree) {
    result.above_threshold = true;
    return result;
  }
  const RootSplit split = split_rational_roots(s.coefficient_polys.back());
  std::size_t best = 0;
  for (const auto& [root, mult] : split.roots) {
    const UniPoly g = taylor_shift(f, root);
    std::size_t support = 0;
    for (const auto& c : g.coeffs()) support += c != 0;
    if (best == 0 || support < best) {
      best = support;
      result.shift = root;
      result.coeffs.clear();
      for (std::size_t e = 0; e < g.coeffs().size(); ++e) {
        if (g.coeffs()[e] != 0) result.coeffs.emplace(static_cast<unsigned>(e), g.coeffs()[e]);
      }
    }
  }
  if (best > 0 && best * best <= result.degree) {
    if (expand_sparsest(result) != f) throw Error(ErrorKind::ReconstructionFailed, "shifted form does not re-expand to f");
    return result;
  }
  if (split.cofactor.degree() > 0) {
    throw Error(ErrorKind::IrrationalNodeDetected, "the sparsest shift candidates lie outside Q");
  }
  result.above_threshold = true;
  result.shift = 0;
  result.coeffs.clear();
  return result;
}

UniPoly expand_waring(const WaringResult& r) {
  UniPoly out;
  for (const auto& t : r.terms) out += UniPoly::affine_power(t.node, r.degree) * t.coeff;
  return out;
}

UniPoly expand_sparsest(const SparsestResult& r) {
  UniPoly out;
  for (const auto& [e, c] : r.coeffs) out += UniPoly::affine_power(r.shift, e) * c;
  return out;
}

}  // namespace affpow
