#include <affpow/errors.hpp>
#include <affpow/linalg.hpp>
#include <affpow/sde.hpp>

#include <affpow/detail/intpoly.hpp>
#include <affpow/detail/modular.hpp>

#include <algorithm>
#include <future>
#include <map>

namespace affpow {

namespace {

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw Error(ErrorKind::ReconstructionFailed, "inexact division in fraction-free elimination");
  return q;
}

}  // namespace

UniPoly wronskian(std::span<const UniPoly> fs) {
  const std::size_t n = fs.size();
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "wronskian of an empty family");
  std::vector<std::vector<UniPoly>> m(n, std::vector<UniPoly>(n));
  for (std::size_t j = 0; j < n; ++j) {
    UniPoly d = fs[j];
    for (std::size_t i = 0; i < n; ++i) {
      m[i][j] = d;
      d = derivative(d);
    }
  }
  bool negate = false;
  UniPoly prev = UniPoly::constant(1);
  for (std::size_t r = 0; r < n; ++r) {
    std::size_t pivot = r;
    while (pivot < n && m[pivot][r].is_zero()) ++pivot;
    if (pivot == n) return {};
    if (pivot != r) {
      std::swap(m[pivot], m[r]);
      negate = !negate;
    }
    for (std::size_t i = r + 1; i < n; ++i) {
      for (std::size_t j = r + 1; j < n; ++j) {
        m[i][j] = exact_div(m[r][r] * m[i][j] - m[i][r] * m[r][j], prev);
      }
      m[i][r] = UniPoly{};
    }
    prev = m[r][r];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

UniPoly apply_sde(const SDE& s, const UniPoly& f) {
  UniPoly out;
  UniPoly d = f;
  for (const auto& p : s.coefficient_polys) {
    if (d.is_zero()) break;
    if (!p.is_zero()) out += p * d;
    d = derivative(d);
  }
  return out;
}

std::optional<SDE> find_min_sde(const UniPoly& f, unsigned shift, std::optional<unsigned> max_order) {
  using detail::u64;
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "find_min_sde of the zero polynomial");
  const detail::IntPoly base = primitive_integer_coeffs(f);
  const std::size_t d = static_cast<std::size_t>(f.degree());
  const unsigned k_max = max_order.value_or(static_cast<unsigned>(d + 1));
  const std::size_t nrows = d + shift + 1;

  std::vector<detail::IntPoly> derivs{base};
  for (unsigned k = 1; k <= k_max; ++k) {
    derivs.push_back(detail::derivative(derivs.back()));
    // Unknowns: coefficient of x^j in P_i, i ascending then j ascending. The
    // column of that unknown holds the coefficients of x^j f^(i).
    std::size_t ncols = 0;
    for (unsigned i = 0; i <= k; ++i) ncols += i + shift + 1;

    if (ncols <= nrows) {
      std::vector<std::vector<u64>> mod(nrows, std::vector<u64>(ncols, 0));
      std::size_t col = 0;
      for (unsigned i = 0; i <= k; ++i) {
        for (unsigned j = 0; j <= i + shift; ++j, ++col) {
          for (std::size_t t = 0; t < derivs[i].size(); ++t) {
            mod[t + j][col] = detail::reduce(derivs[i][t], detail::kFilterPrime);
          }
        }
      }
      // Full column rank modulo a prime implies full column rank over Q.
      if (detail::rank_mod(mod, detail::kFilterPrime) == ncols) continue;
    }

    detail::IntMatrix m(nrows, std::vector<Integer>(ncols));
    std::size_t col = 0;
    for (unsigned i = 0; i <= k; ++i) {
      for (unsigned j = 0; j <= i + shift; ++j, ++col) {
        for (std::size_t t = 0; t < derivs[i].size(); ++t) m[t + j][col] = derivs[i][t];
      }
    }
    auto ker = detail::kernel(detail::bareiss(std::move(m)), ncols);
    if (ker.empty()) continue;

    const auto& v = ker.front();
    SDE s;
    s.order = k;
    s.shift = shift;
    col = 0;
    for (unsigned i = 0; i <= k; ++i) {
      std::vector<Rational> c(v.begin() + static_cast<long>(col), v.begin() + static_cast<long>(col + i + shift + 1));
      col += i + shift + 1;
      s.coefficient_polys.emplace_back(std::move(c));
    }
    return s;
  }
  return std::nullopt;
}

namespace {

using Bivariate = std::vector<std::vector<Integer>>;  // [x degree][b degree]

// Q_i(x, b) = P_i(x) (x - b)^(m - i) for i <= m.
std::vector<Bivariate> node_polys(const SDE& s, unsigned m) {
  std::vector<Bivariate> out;
  for (unsigned i = 0; i <= m && i < s.coefficient_polys.size(); ++i) {
    const auto& p = s.coefficient_polys[i];
    const unsigned n = m - i;
    const std::size_t xdeg = (p.is_zero() ? 0 : static_cast<std::size_t>(p.degree())) + n;
    Bivariate q(xdeg + 1, std::vector<Integer>(n + 1));
    for (std::size_t t = 0; t < p.coeffs().size(); ++t) {
      const Integer pc = p.coeffs()[t].get_num();
      if (pc == 0) continue;
      for (unsigned a = 0; a <= n; ++a) {
        // x^a (-b)^(n-a) C(n, a)
        Integer term = pc * binomial(n, a);
        if ((n - a) % 2 == 1) term = -term;
        q[t + a][n - a] += term;
      }
    }
    out.push_back(std::move(q));
  }
  return out;
}

// Same equation with integer coefficient polynomials.
SDE integral(const SDE& s) {
  Integer lcm = 1;
  for (const auto& p : s.coefficient_polys) {
    for (const auto& c : p.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  SDE out = s;
  for (auto& p : out.coefficient_polys) p *= Rational(lcm);
  return out;
}

void scan_range(const SDE& input, long e_min, long e_max, detail::PowerScan& out) {
  using detail::u64;
  const SDE s = integral(input);
  const unsigned k = s.order;
  const std::vector<Bivariate> top = node_polys(s, k);
  for (long e = e_min; e <= e_max; ++e) {
    const unsigned m = static_cast<unsigned>(std::min<long>(e, k));
    const std::vector<Bivariate> low = m == k ? std::vector<Bivariate>{} : node_polys(s, m);
    const std::vector<Bivariate>& q = m == k ? top : low;

    std::size_t xdeg = 0;
    for (const auto& qi : q) xdeg = std::max(xdeg, qi.size());
    std::vector<detail::IntPoly> coeff_polys(xdeg, detail::IntPoly(m + 1));
    for (unsigned i = 0; i < q.size(); ++i) {
      const Integer ff = falling_factorial(e, i);
      for (std::size_t t = 0; t < q[i].size(); ++t) {
        for (std::size_t u = 0; u < q[i][t].size(); ++u) {
          if (q[i][t][u] != 0) coeff_polys[t][u] += ff * q[i][t][u];
        }
      }
    }
    bool all_zero = true;
    bool degree_kept = false;
    std::vector<u64> g;
    for (auto& c : coeff_polys) {
      detail::trim(c);
      if (c.empty()) continue;
      all_zero = false;
      std::vector<u64> cm(c.size());
      for (std::size_t u = 0; u < c.size(); ++u) cm[u] = detail::reduce(c[u], detail::kFilterPrime);
      if (cm.back() != 0) degree_kept = true;
      g = detail::gcd_mod(std::move(g), std::move(cm), detail::kFilterPrime);
    }
    if (all_zero) {
      throw Error(ErrorKind::ReconstructionFailed,
                  "every node solves the equation at exponent " + std::to_string(e));
    }
    // A common factor over Q keeps its degree modulo p when some coefficient
    // polynomial keeps its leading coefficient.
    if (degree_kept && g.size() <= 1) continue;

    detail::IntPoly common;
    for (auto& c : coeff_polys) {
      if (!c.empty()) common = detail::gcd(std::move(common), std::move(c));
      if (common.size() == 1) break;
    }
    if (common.size() <= 1) continue;
    RootSplit split = split_rational_roots(UniPoly(std::vector<Rational>(common.begin(), common.end())));
    if (split.cofactor.degree() > 0) out.irrational_exponents.push_back(static_cast<unsigned>(e));
    for (const auto& [root, mult] : split.roots) {
      const auto exponent = static_cast<unsigned>(e);
      if (!apply_sde(s, UniPoly::affine_power(root, exponent)).is_zero()) {
        throw Error(ErrorKind::ReconstructionFailed, "power solution failed direct substitution");
      }
      out.solutions.push_back({root, exponent});
    }
  }
}

}  // namespace

namespace detail {

PowerScan scan_power_solutions(const SDE& s, long e_min, long e_max, unsigned threads) {
  if (e_min < 1) throw Error(ErrorKind::InvalidArgument, "exponent range must start at 1 or above");
  PowerScan result;
  if (e_min > e_max) return result;
  const long count = e_max - e_min + 1;
  const long workers = std::clamp<long>(threads, 1, count);
  if (workers == 1) {
    scan_range(s, e_min, e_max, result);
  } else {
    std::vector<std::future<PowerScan>> parts;
    const long chunk = (count + workers - 1) / workers;
    for (long lo = e_min; lo <= e_max; lo += chunk) {
      const long hi = std::min(e_max, lo + chunk - 1);
      parts.push_back(std::async(std::launch::async, [&s, lo, hi] {
        PowerScan part;
        scan_range(s, lo, hi, part);
        return part;
      }));
    }
    for (auto& f : parts) {
      PowerScan part = f.get();
      result.solutions.insert(result.solutions.end(), part.solutions.begin(), part.solutions.end());
      result.irrational_exponents.insert(result.irrational_exponents.end(), part.irrational_exponents.begin(),
                                         part.irrational_exponents.end());
    }
  }
  std::sort(result.solutions.begin(), result.solutions.end(), [](const PowerSolution& a, const PowerSolution& b) {
    return a.exponent != b.exponent ? a.exponent < b.exponent : a.node < b.node;
  });
  std::sort(result.irrational_exponents.begin(), result.irrational_exponents.end());
  return result;
}

}  // namespace detail

std::vector<PowerSolution> power_solutions(const SDE& s, long e_min, long e_max, unsigned threads) {
  detail::PowerScan scan = detail::scan_power_solutions(s, e_min, e_max, threads);
  if (!scan.irrational_exponents.empty()) {
    throw Error(ErrorKind::IrrationalNodeDetected,
                "a node outside Q solves the equation at exponent " + std::to_string(scan.irrational_exponents.front()));
  }
  return std::move(scan.solutions);
}

std::vector<UniPoly> shifted_poly_solutions(const SDE& s, const Rational& c, unsigned delta, long e_min, long e_max) {
  if (e_min < 1) throw Error(ErrorKind::InvalidArgument, "exponent range must start at 1 or above");
  std::vector<UniPoly> shifted;
  for (const auto& p : s.coefficient_polys) shifted.push_back(taylor_shift(p, c));

  std::map<long, UniPoly> reduced;  // echelon of accepted solutions, keyed by degree
  std::vector<UniPoly> kept;
  for (long e = e_min; e <= e_max; ++e) {
    const long base = std::max<long>(0, e - static_cast<long>(s.order));
    const long top = e + static_cast<long>(delta + s.shift);
    QMatrix a(static_cast<std::size_t>(top - base + 1), delta + 1);
    for (unsigned m = 0; m <= delta; ++m) {
      const long power = e + m;
      for (unsigned i = 0; i < shifted.size() && i <= power; ++i) {
        const Integer ff = falling_factorial(power, i);
        const auto& p = shifted[i].coeffs();
        for (std::size_t t = 0; t < p.size(); ++t) {
          a(static_cast<std::size_t>(static_cast<long>(t) + power - i - base), m) += ff * p[t];
        }
      }
    }
    for (const auto& v : kernel(a)) {
      std::vector<Rational> g(static_cast<std::size_t>(e) + delta + 1);
      for (unsigned m = 0; m <= delta; ++m) g[static_cast<std::size_t>(e) + m] = v[m];
      UniPoly candidate(std::move(g));
      UniPoly r = candidate;
      while (!r.is_zero()) {
        auto it = reduced.find(r.degree());
        if (it == reduced.end()) break;
        r -= it->second * (r.leading() / it->second.leading());
      }
      if (r.is_zero()) continue;
      reduced.emplace(r.degree(), r);
      kept.push_back(std::move(candidate));
    }
  }

  std::vector<UniPoly> basis;
  for (const auto& g : kept) {
    UniPoly in_x = taylor_shift(g, -c);
    if (!apply_sde(s, in_x).is_zero()) {
      throw Error(ErrorKind::ReconstructionFailed, "shifted solution failed direct substitution");
    }
    basis.push_back(std::move(in_x));
  }
  return basis;
}

}  // namespace affpow
