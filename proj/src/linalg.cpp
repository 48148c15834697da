#include <affpow/errors.hpp>
#include <affpow/linalg.hpp>

#include <utility>

namespace affpow {

QMatrix::QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

QMatrix::QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw Error(ErrorKind::DimensionMismatch, "matrix entry count does not match its shape");
  }
}

std::vector<Rational> QMatrix::apply(const std::vector<Rational>& v) const {
  if (v.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "vector length differs from column count");
  std::vector<Rational> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const Rational& x = (*this)(i, j);
      if (x != 0 && v[j] != 0) out[i] += x * v[j];
    }
  }
  return out;
}

namespace detail {

Echelon bareiss(IntMatrix m) {
  Echelon e;
  const std::size_t nrows = m.size();
  const std::size_t ncols = nrows == 0 ? 0 : m.front().size();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
    std::size_t pivot = r;
    while (pivot < nrows && m[pivot][c] == 0) ++pivot;
    if (pivot == nrows) continue;
    std::swap(m[pivot], m[r]);
    const Integer& p = m[r][c];
    for (std::size_t i = r + 1; i < nrows; ++i) {
      const Integer factor = m[i][c];
      for (std::size_t j = c + 1; j < ncols; ++j) {
        Integer& x = m[i][j];
        x *= p;
        if (factor != 0) x -= factor * m[r][j];
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = p;
    e.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  e.rows = std::move(m);
  return e;
}

IntMatrix clear_denominators(const QMatrix& a) {
  IntMatrix m(a.rows(), std::vector<Integer>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Integer lcm = 1;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), a(i, j).get_den_mpz_t());
    }
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Rational& x = a(i, j);
      if (x == 0) continue;
      Integer scale;
      mpz_divexact(scale.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
      m[i][j] = scale * x.get_num();
    }
  }
  return m;
}

std::vector<Integer> primitive_vector(const std::vector<Rational>& v) {
  Integer lcm = 1;
  for (const auto& x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> out(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    Integer scale;
    mpz_divexact(scale.get_mpz_t(), lcm.get_mpz_t(), v[i].get_den_mpz_t());
    out[i] = scale * v[i].get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
  }
  if (g == 0) return out;
  for (const auto& x : out) {
    if (x != 0) {
      if (x < 0) g = -g;
      break;
    }
  }
  for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return out;
}

namespace {

// Back substitution through the echelon rows; entries of x at non-pivot
// columns must already be set. rhs[k] belongs to row k.
void back_substitute(const Echelon& e, const std::vector<Integer>& rhs, std::vector<Rational>& x) {
  for (std::size_t k = e.pivots.size(); k-- > 0;) {
    const auto& row = e.rows[k];
    const std::size_t p = e.pivots[k];
    Rational acc = rhs.empty() ? Rational(0) : Rational(rhs[k]);
    for (std::size_t j = p + 1; j < x.size(); ++j) {
      if (row[j] != 0 && x[j] != 0) acc -= row[j] * x[j];
    }
    x[p] = acc / row[p];
  }
}

}  // namespace

std::vector<std::vector<Rational>> kernel(const Echelon& e, std::size_t cols) {
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(cols);
    x[f] = 1;
    back_substitute(e, {}, x);
    auto ints = primitive_vector(x);
    basis.emplace_back(ints.begin(), ints.end());
  }
  return basis;
}

}  // namespace detail

std::optional<Solution> solve(const QMatrix& a, const std::vector<Rational>& b) {
  if (b.size() != a.rows()) throw Error(ErrorKind::DimensionMismatch, "right-hand side length differs from row count");
  const std::size_t n = a.cols();
  QMatrix augmented(a.rows(), n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) augmented(i, j) = a(i, j);
    augmented(i, n) = b[i];
  }
  detail::Echelon e = detail::bareiss(detail::clear_denominators(augmented));
  if (!e.pivots.empty() && e.pivots.back() == n) return std::nullopt;

  std::vector<Integer> rhs(e.pivots.size());
  for (std::size_t k = 0; k < e.pivots.size(); ++k) rhs[k] = e.rows[k][n];
  for (auto& row : e.rows) row.pop_back();
  Solution s;
  s.values.assign(n, Rational(0));
  s.unique = e.pivots.size() == n;
  detail::back_substitute(e, rhs, s.values);

  if (a.apply(s.values) != b) {
    throw Error(ErrorKind::ReconstructionFailed, "solution failed the substitution check");
  }
  return s;
}

std::vector<std::vector<Rational>> kernel(const QMatrix& a) {
  return detail::kernel(detail::bareiss(detail::clear_denominators(a)), a.cols());
}

std::size_t rank(const QMatrix& a) { return detail::bareiss(detail::clear_denominators(a)).pivots.size(); }

}  // namespace affpow
