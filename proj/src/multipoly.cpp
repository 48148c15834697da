#include <affpow/errors.hpp>
#include <affpow/multipoly.hpp>

#include <algorithm>
#include <numeric>

namespace affpow {

long MultiPoly::total_degree() const {
  long best = -1;
  for (const auto& [exps, c] : terms_) {
    best = std::max(best, static_cast<long>(std::accumulate(exps.begin(), exps.end(), 0UL)));
  }
  return best;
}

void MultiPoly::add_term(const Exponents& exps, const Rational& coeff) {
  if (exps.size() != n_) throw Error(ErrorKind::DimensionMismatch, "exponent vector length differs from n");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  if (other.n_ != n_) throw Error(ErrorKind::DimensionMismatch, "adding polynomials in different variable counts");
  for (const auto& [exps, c] : other.terms_) add_term(exps, c);
  return *this;
}

Rational multi_eval(const MultiPoly& f, std::span<const Rational> point) {
  if (point.size() != f.n()) throw Error(ErrorKind::DimensionMismatch, "point length differs from n");
  Rational acc = 0;
  for (const auto& [exps, c] : f.terms()) {
    Rational term = c;
    for (std::size_t j = 0; j < exps.size(); ++j) {
      if (exps[j] > 0) term *= power(point[j], exps[j]);
    }
    acc += term;
  }
  return acc;
}

bool LinearForm::is_constant() const {
  return std::all_of(coefficients.begin(), coefficients.end(), [](const Rational& c) { return c == 0; });
}

Rational LinearForm::operator()(std::span<const Rational> point) const {
  if (point.size() != coefficients.size()) throw Error(ErrorKind::DimensionMismatch, "point length differs from n");
  Rational acc = constant;
  for (std::size_t j = 0; j < point.size(); ++j) acc += coefficients[j] * point[j];
  return acc;
}

MultiPoly power(const LinearForm& form, unsigned e) {
  const std::size_t n = form.coefficients.size();
  MultiPoly result(n);
  result.add_term(Exponents(n, 0), 1);
  for (unsigned step = 0; step < e; ++step) {
    MultiPoly next(n);
    for (const auto& [exps, c] : result.terms()) {
      next.add_term(exps, c * form.constant);
      for (std::size_t j = 0; j < n; ++j) {
        if (form.coefficients[j] == 0) continue;
        Exponents bumped = exps;
        ++bumped[j];
        next.add_term(bumped, c * form.coefficients[j]);
      }
    }
    result = std::move(next);
  }
  return result;
}

}  // namespace affpow
