#include <affpow/errors.hpp>
#include <affpow/unipoly.hpp>

#include <affpow/detail/intpoly.hpp>
#include <affpow/detail/modular.hpp>

#include <algorithm>
#include <optional>
#include <set>

namespace affpow {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

UniPoly UniPoly::constant(const Rational& value) { return UniPoly(std::vector<Rational>{value}); }

UniPoly UniPoly::monomial(const Rational& coeff, std::size_t degree) {
  std::vector<Rational> c(degree + 1);
  c[degree] = coeff;
  return UniPoly(std::move(c));
}

UniPoly UniPoly::affine_power(const Rational& node, unsigned exponent) {
  // coefficient of x^k is C(e, k) (-node)^(e-k)
  std::vector<Rational> c(exponent + 1);
  const Rational minus_node = -node;
  Rational p = 1;
  for (unsigned k = exponent + 1; k-- > 0;) {
    c[k] = p * Rational(binomial(exponent, k));
    p *= minus_node;
  }
  return UniPoly(std::move(c));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UniPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

const Rational& UniPoly::leading() const {
  if (coeffs_.empty()) throw Error(ErrorKind::ZeroPolynomial, "zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Rational UniPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(c));
}

UniPoly derivative(const UniPoly& f, unsigned k) {
  if (k == 0) return f;
  const auto& c = f.coeffs();
  if (c.size() <= k) return {};
  std::vector<Rational> d(c.size() - k);
  for (std::size_t i = k; i < c.size(); ++i) {
    d[i - k] = c[i] * Rational(falling_factorial(static_cast<long>(i), k));
  }
  return UniPoly(std::move(d));
}

UniPoly taylor_shift(const UniPoly& f, const Rational& a) {
  if (f.is_zero() || a == 0) return f;
  std::vector<Rational> c = f.coeffs();
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j-- > i;) c[j] += a * c[j + 1];
  }
  return UniPoly(std::move(c));
}

namespace {

// Synthetic division by (x - a); returns the remainder.
Rational divide_linear(std::vector<Rational>& c, const Rational& a) {
  if (c.empty()) return 0;
  Rational carry = 0;
  for (std::size_t k = c.size(); k-- > 0;) {
    Rational next = c[k] + carry * a;
    c[k] = carry;
    carry = next;
  }
  // c[k] now holds the quotient coefficient of x^k and the top slot is zero.
  c.pop_back();
  return carry;
}

}  // namespace

unsigned mult_at(const UniPoly& f, const Rational& a) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "mult_at of the zero polynomial");
  std::vector<Rational> c = f.coeffs();
  unsigned count = 0;
  if (a == 0) {
    while (c[count] == 0) ++count;
    return count;
  }
  while (c.size() > 1) {
    std::vector<Rational> q = c;
    if (divide_linear(q, a) != 0) break;
    c = std::move(q);
    ++count;
  }
  return count;
}

UniPoly interpolate(std::span<const std::pair<Rational, Rational>> points) {
  std::set<Rational> seen;
  for (const auto& [x, y] : points) {
    if (!seen.insert(x).second) {
      throw Error(ErrorKind::DuplicateAbscissa, "abscissa " + to_string(x) + " repeated");
    }
  }
  const std::size_t n = points.size();
  if (n == 0) return {};
  // Newton divided differences.
  std::vector<Rational> dd(n);
  for (std::size_t i = 0; i < n; ++i) dd[i] = points[i].second;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - j].first);
      if (i == j) break;
    }
  }
  std::vector<Rational> acc{dd[n - 1]};
  for (std::size_t k = n - 1; k-- > 0;) {
    // acc <- acc * (x - x_k) + dd[k]
    std::vector<Rational> next(acc.size() + 1);
    for (std::size_t i = 0; i < acc.size(); ++i) {
      next[i + 1] += acc[i];
      next[i] -= acc[i] * points[k].first;
    }
    next[0] += dd[k];
    acc = std::move(next);
  }
  return UniPoly(std::move(acc));
}

std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by the zero polynomial");
  if (a.degree() < b.degree()) return {UniPoly{}, a};
  std::vector<Rational> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const Rational inv_lead = 1 / bc.back();
  std::vector<Rational> q(rem.size() - bc.size() + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    Rational factor = rem[k + bc.size() - 1] * inv_lead;
    q[k] = factor;
    if (factor == 0) continue;
    for (std::size_t i = 0; i < bc.size(); ++i) rem[k + i] -= factor * bc[i];
  }
  rem.resize(bc.size() - 1);
  return {UniPoly(std::move(q)), UniPoly(std::move(rem))};
}

std::vector<Integer> primitive_integer_coeffs(const UniPoly& f) {
  if (f.is_zero()) return {};
  Integer lcm = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  detail::IntPoly out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) {
    Integer v;
    mpz_divexact(v.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    out.push_back(v * c.get_num());
  }
  return detail::primitive_part(std::move(out));
}

namespace {

UniPoly from_integers(const detail::IntPoly& f) {
  std::vector<Rational> c(f.begin(), f.end());
  return UniPoly(std::move(c));
}

}  // namespace

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  detail::IntPoly g = detail::gcd(primitive_integer_coeffs(a), primitive_integer_coeffs(b));
  UniPoly result = from_integers(g);
  return result * (1 / result.leading());
}

UniPoly pow(const UniPoly& base, unsigned exponent) {
  UniPoly result = UniPoly::constant(1);
  UniPoly b = base;
  while (exponent > 0) {
    if (exponent & 1) result = result * b;
    exponent >>= 1;
    if (exponent > 0) b = b * b;
  }
  return result;
}

std::size_t max_bit_size(const UniPoly& f) {
  std::size_t best = 0;
  for (const auto& c : f.coeffs()) best = std::max(best, bit_size(c));
  return best;
}

namespace {

// Rational a/b with |a| <= num_bound, 0 < b <= den_bound and a = b r mod m,
// when it exists (requires 2 num_bound den_bound < m).
std::optional<Rational> reconstruct(const Integer& r, const Integer& m, const Integer& num_bound,
                                    const Integer& den_bound) {
  Integer r0 = m, r1 = r, t0 = 0, t1 = 1;
  while (r1 > num_bound) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
    Integer r2 = r0 - q * r1;
    Integer t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (t1 == 0 || abs(t1) > den_bound) return std::nullopt;
  Integer g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return std::nullopt;
  Rational q(t1 < 0 ? Integer(-r1) : r1, abs(t1));
  q.canonicalize();
  return q;
}

// Rational roots of a squarefree primitive integer polynomial with S(0) != 0.
// A root a/b in lowest terms has a | S(0) and b | lc(S); it reduces to a simple
// root modulo any prime p that keeps S squarefree, so lifting every root mod p
// p-adically and reconstructing finds all of them.
std::vector<Rational> squarefree_rational_roots(const detail::IntPoly& s) {
  using detail::u64;
  std::vector<Rational> roots;
  if (s.size() == 2) {
    Rational r(-s[0], s[1]);
    r.canonicalize();
    roots.push_back(r);
    return roots;
  }
  const Integer num_bound = abs(s.front());
  const Integer den_bound = abs(s.back());
  const Integer target = 2 * num_bound * den_bound;
  const detail::IntPoly ds = detail::derivative(s);

  Integer prime = 32003;
  for (int attempt = 0; attempt < 400; ++attempt, mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t())) {
    const u64 p = prime.get_ui();
    std::vector<u64> sp(s.size()), dsp(ds.size());
    for (std::size_t i = 0; i < s.size(); ++i) sp[i] = detail::reduce(s[i], p);
    for (std::size_t i = 0; i < ds.size(); ++i) dsp[i] = detail::reduce(ds[i], p);
    if (sp.back() == 0) continue;
    if (detail::gcd_mod(sp, dsp, p).size() != 1) continue;

    std::vector<u64> residues;
    for (u64 x = 0; x < p; ++x) {
      u64 acc = 0;
      for (std::size_t k = sp.size(); k-- > 0;) acc = detail::add_mod(detail::mul_mod(acc, x, p), sp[k], p);
      if (acc == 0) residues.push_back(x);
    }
    for (u64 r0 : residues) {
      Integer r = static_cast<unsigned long>(r0);
      Integer modulus = static_cast<unsigned long>(p);
      while (modulus <= target) {
        modulus *= modulus;
        Integer value = detail::homogeneous_value(s, r, 1);
        Integer slope = detail::homogeneous_value(ds, r, 1);
        Integer inv;
        mpz_mod(slope.get_mpz_t(), slope.get_mpz_t(), modulus.get_mpz_t());
        if (mpz_invert(inv.get_mpz_t(), slope.get_mpz_t(), modulus.get_mpz_t()) == 0) break;
        r -= value * inv;
        mpz_mod(r.get_mpz_t(), r.get_mpz_t(), modulus.get_mpz_t());
      }
      auto candidate = reconstruct(r, modulus, num_bound, den_bound);
      if (candidate && detail::homogeneous_value(s, candidate->get_num(), candidate->get_den()) == 0) {
        roots.push_back(*candidate);
      }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
  }
  throw Error(ErrorKind::ReconstructionFailed, "no suitable prime found for rational root search");
}

}  // namespace

RootSplit split_rational_roots(const UniPoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "rational_roots of the zero polynomial");
  RootSplit split;
  detail::IntPoly F = primitive_integer_coeffs(f);
  std::size_t zeros = 0;
  while (F[zeros] == 0) ++zeros;
  if (zeros > 0) {
    split.roots.push_back({Rational(0), static_cast<unsigned>(zeros)});
    F.erase(F.begin(), F.begin() + static_cast<long>(zeros));
  }
  if (F.size() > 1) {
    detail::IntPoly g = detail::gcd(F, detail::derivative(F));
    detail::IntPoly s = detail::primitive_part(detail::exact_quotient(F, g));
    for (const auto& r : squarefree_rational_roots(s)) split.roots.push_back({r, mult_at(f, r)});
  }
  std::sort(split.roots.begin(), split.roots.end(),
            [](const RootMultiplicity& a, const RootMultiplicity& b) { return a.root < b.root; });

  std::vector<Rational> c = f.coeffs();
  for (const auto& [root, m] : split.roots) {
    for (unsigned i = 0; i < m; ++i) divide_linear(c, root);
  }
  split.cofactor = UniPoly(std::move(c));
  return split;
}

std::vector<RootMultiplicity> rational_roots(const UniPoly& f) { return split_rational_roots(f).roots; }

std::string to_text(const UniPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i > 0) out += ',';
    out += to_string(f.coeffs()[i]);
  }
  return out;
}

UniPoly parse_unipoly_text(std::string_view text) {
  std::vector<Rational> coeffs;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    coeffs.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return UniPoly(std::move(coeffs));
}

}  // namespace affpow
