#include <affpow/detail/intpoly.hpp>

#include <utility>

namespace affpow::detail {

void trim(IntPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Integer content(const IntPoly& f) {
  Integer g = 0;
  for (const auto& c : f) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly primitive_part(IntPoly f) {
  trim(f);
  if (f.empty()) return f;
  Integer g = content(f);
  if (f.back() < 0) g = -g;
  if (g != 1) {
    for (auto& c : f) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
  return f;
}

IntPoly derivative(const IntPoly& f) {
  IntPoly d;
  if (f.size() <= 1) return d;
  d.resize(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = f[i] * static_cast<unsigned long>(i);
  trim(d);
  return d;
}

namespace {

// Pseudo-remainder of a by b, made primitive.
IntPoly primitive_prem(IntPoly a, const IntPoly& b) {
  const Integer& lb = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    const Integer la = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= la * b[i];
    trim(a);
    a = primitive_part(std::move(a));
  }
  return a;
}

}  // namespace

IntPoly gcd(IntPoly a, IntPoly b) {
  a = primitive_part(std::move(a));
  b = primitive_part(std::move(b));
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    IntPoly r = primitive_prem(std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  return primitive_part(std::move(a));
}

IntPoly exact_quotient(const IntPoly& a, const IntPoly& b) {
  IntPoly rem = a;
  trim(rem);
  if (rem.size() < b.size()) return {};
  IntPoly q(rem.size() - b.size() + 1);
  const Integer& lb = b.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    Integer coeff;
    mpz_divexact(coeff.get_mpz_t(), rem[k + b.size() - 1].get_mpz_t(), lb.get_mpz_t());
    q[k] = coeff;
    if (coeff != 0) {
      for (std::size_t i = 0; i < b.size(); ++i) rem[k + i] -= coeff * b[i];
    }
  }
  trim(q);
  return q;
}

Integer homogeneous_value(const IntPoly& f, const Integer& num, const Integer& den) {
  // sum f_i num^i den^(n-i), Horner in both variables.
  Integer acc = 0;
  Integer den_power = 1;
  for (std::size_t k = f.size(); k-- > 0;) {
    acc = acc * num + f[k] * den_power;
    den_power *= den;
  }
  return acc;
}

}  // namespace affpow::detail
