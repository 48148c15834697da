#include <affpow/errors.hpp>
#include <affpow/multi.hpp>

#include <algorithm>
#include <future>
#include <map>
#include <random>
#include <tuple>

namespace affpow {

BlackBox BlackBox::from(const MultiPoly& f) {
  BlackBox bb;
  bb.eval = [f](std::span<const Rational> point) { return multi_eval(f, point); };
  bb.n = f.n();
  bb.degree_bound = static_cast<unsigned>(std::max<long>(f.total_degree(), 0));
  return bb;
}

AffineChange::AffineChange(QMatrix matrix, std::vector<Rational> offset)
    : matrix_(std::move(matrix)), offset_(std::move(offset)) {
  if (matrix_.rows() != offset_.size() || matrix_.cols() != offset_.size()) {
    throw Error(ErrorKind::DimensionMismatch, "change of coordinates has inconsistent sizes");
  }
  if (rank(matrix_) != offset_.size()) throw Error(ErrorKind::InvalidArgument, "change of coordinates is singular");
}

AffineChange AffineChange::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return AffineChange(std::move(m), std::vector<Rational>(n));
}

std::vector<Rational> AffineChange::operator()(const std::vector<Rational>& x) const {
  std::vector<Rational> y = matrix_.apply(x);
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += offset_[i];
  return y;
}

namespace {

bool form_less(const LinearForm& a, const LinearForm& b) {
  if (a.coefficients != b.coefficients) return a.coefficients < b.coefficients;
  return a.constant < b.constant;
}

}  // namespace

MultiDecomposition MultiDecomposition::canonical(std::size_t n, std::vector<MultiTerm> terms) {
  std::vector<MultiTerm> normalized;
  for (auto& t : terms) {
    if (t.form.coefficients.size() != n) throw Error(ErrorKind::DimensionMismatch, "form length differs from n");
    if (t.exponent == 0) {
      LinearForm unit{Rational(0), std::vector<Rational>(n)};
      if (n > 0) unit.coefficients[0] = 1;
      t.form = std::move(unit);
    } else {
      auto lead = std::find_if(t.form.coefficients.begin(), t.form.coefficients.end(),
                               [](const Rational& c) { return c != 0; });
      if (lead == t.form.coefficients.end()) {
        throw Error(ErrorKind::InvalidArgument, "term with a constant linear form");
      }
      const Rational scale = *lead;
      t.form.constant /= scale;
      for (auto& c : t.form.coefficients) c /= scale;
      t.coeff *= power(scale, t.exponent);
    }
    auto same = std::find_if(normalized.begin(), normalized.end(), [&](const MultiTerm& u) {
      return u.exponent == t.exponent && u.form == t.form;
    });
    if (same != normalized.end()) {
      same->coeff += t.coeff;
    } else {
      normalized.push_back(std::move(t));
    }
  }
  std::erase_if(normalized, [](const MultiTerm& t) { return t.coeff == 0; });
  std::sort(normalized.begin(), normalized.end(), [](const MultiTerm& a, const MultiTerm& b) {
    if (a.exponent != b.exponent) return a.exponent > b.exponent;
    return form_less(a.form, b.form);
  });
  return MultiDecomposition{n, std::move(normalized)};
}

MultiPoly expand_multi(const MultiDecomposition& d) {
  MultiPoly out(d.n);
  for (const auto& t : d.terms) {
    const MultiPoly p = power(t.form, t.exponent);
    for (const auto& [exps, c] : p.terms()) out.add_term(exps, c * t.coeff);
  }
  return out;
}

Rational eval_multi(const MultiDecomposition& d, std::span<const Rational> point) {
  Rational acc = 0;
  for (const auto& t : d.terms) acc += t.coeff * power(t.form(point), t.exponent);
  return acc;
}

UniPoly project_to_axis(const BlackBox& bb, const AffineChange& change, std::size_t axis) {
  if (axis < 1 || axis > bb.n) throw Error(ErrorKind::InvalidArgument, "axis out of range");
  if (change.n() != bb.n) throw Error(ErrorKind::DimensionMismatch, "change of coordinates has the wrong size");
  std::vector<std::pair<Rational, Rational>> samples;
  for (unsigned k = 0; k <= bb.degree_bound; ++k) {
    std::vector<Rational> x(bb.n);
    x[axis - 1] = k;
    const std::vector<Rational> y = change(x);
    samples.emplace_back(Rational(k), bb.eval(y));
  }
  return interpolate(samples);
}

namespace {

struct Triplet {
  Rational c;
  Rational p;
  unsigned e = 0;
};

// Axis triplets (c, p, e) from beta (x - a)^e, i.e. beta (x + b)^e with b = -a:
// c = beta b^e and p = 1/b. Constants keep p = 0. Empty when some b is zero.
std::optional<std::vector<Triplet>> axis_triplets(const Decomposition& d) {
  std::vector<Triplet> out;
  for (const auto& t : d.terms) {
    if (t.exponent == 0) {
      out.push_back({t.coeff, Rational(0), 0});
      continue;
    }
    const Rational b = -t.node;
    if (b == 0) return std::nullopt;
    out.push_back({t.coeff * power(b, t.exponent), 1 / b, t.exponent});
  }
  return out;
}

class Attempt {
 public:
  Attempt(const BlackBox& bb, const MultiBuildOptions& options, std::mt19937_64& rng)
      : bb_(bb), options_(options), rng_(rng) {}

  // nullopt when a consistency check fails.
  std::optional<MultiDecomposition> run() {
    const std::size_t n = bb_.n;
    std::uniform_int_distribution<std::uint64_t> entry(1, std::uint64_t{1} << 32);
    QMatrix lambda(n, n);
    std::vector<Rational> offset(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) lambda(i, j) = Rational(Integer(std::to_string(entry(rng_))));
    }
    for (auto& v : offset) v = Rational(Integer(std::to_string(entry(rng_))));
    std::optional<AffineChange> change;
    try {
      change.emplace(lambda, offset);
    } catch (const Error&) {
      return std::nullopt;
    }

    std::vector<Decomposition> axes(n);
    auto work = [&](std::size_t j) {
      const UniPoly g = project_to_axis(bb_, *change, j + 1);
      if (g.is_zero()) return Decomposition{};
      DecomposeOptions inner;
      return decompose(g, options_.backend, std::nullopt, inner).decomposition;
    };
    if (options_.threads > 1 && n > 1) {
      std::vector<std::future<Decomposition>> parts;
      for (std::size_t j = 0; j < n; ++j) parts.push_back(std::async(std::launch::async, work, j));
      for (std::size_t j = 0; j < n; ++j) axes[j] = parts[j].get();
    } else {
      for (std::size_t j = 0; j < n; ++j) axes[j] = work(j);
    }

    std::vector<std::vector<Triplet>> sets;
    for (const auto& d : axes) {
      auto t = axis_triplets(d);
      if (!t) return std::nullopt;
      sets.push_back(std::move(*t));
    }
    if (n == 0) return MultiDecomposition{0, {}};
    const std::size_t s = sets.front().size();
    for (const auto& set : sets) {
      if (set.size() != s) return std::nullopt;
      for (std::size_t a = 0; a < set.size(); ++a) {
        for (std::size_t b = a + 1; b < set.size(); ++b) {
          if (set[a].c == set[b].c) return std::nullopt;
        }
      }
    }
    // p_i in the new coordinates, matched across axes by (c, e).
    std::vector<std::vector<Rational>> p(s, std::vector<Rational>(n));
    for (std::size_t i = 0; i < s; ++i) {
      const Triplet& first = sets.front()[i];
      for (std::size_t j = 0; j < n; ++j) {
        auto it = std::find_if(sets[j].begin(), sets[j].end(),
                               [&](const Triplet& t) { return t.c == first.c && t.e == first.e; });
        if (it == sets[j].end()) return std::nullopt;
        p[i][j] = it->p;
      }
    }

    // 1 + p.x in new coordinates is 1 + w.(y - offset) in the original ones,
    // with lambda^T w = p.
    QMatrix transposed(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) transposed(i, j) = lambda(j, i);
    }
    std::vector<MultiTerm> terms;
    for (std::size_t i = 0; i < s; ++i) {
      const Triplet& t = sets.front()[i];
      if (t.e == 0) {
        terms.push_back({t.c, LinearForm{Rational(0), std::vector<Rational>(n)}, 0});
        continue;
      }
      auto w = solve(transposed, p[i]);
      if (!w || !w->unique) return std::nullopt;
      LinearForm form{Rational(1), w->values};
      for (std::size_t j = 0; j < n; ++j) form.constant -= w->values[j] * offset[j];
      if (form.is_constant()) return std::nullopt;
      terms.push_back({t.c, std::move(form), t.e});
    }
    MultiDecomposition result = MultiDecomposition::canonical(n, std::move(terms));

    std::uniform_int_distribution<long> coord(-1000000, 1000000);
    for (unsigned k = 0; k < options_.verify_points; ++k) {
      std::vector<Rational> point(n);
      for (auto& v : point) v = coord(rng_);
      if (bb_.eval(point) != eval_multi(result, point)) return std::nullopt;
    }
    return result;
  }

 private:
  const BlackBox& bb_;
  const MultiBuildOptions& options_;
  std::mt19937_64& rng_;
};

}  // namespace

MultiDecomposition multi_build(const BlackBox& bb, const MultiBuildOptions& options) {
  if (!bb.eval) throw Error(ErrorKind::InvalidArgument, "black box without an evaluator");
  std::mt19937_64 rng(options.seed);
  std::optional<Error> last_backend_error;
  for (unsigned attempt = 0; attempt <= options.retries; ++attempt) {
    try {
      if (auto result = Attempt(bb, options, rng).run()) return std::move(*result);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ReconstructionFailed && e.kind() != ErrorKind::IrrationalNodeDetected &&
          e.kind() != ErrorKind::DeltaExhausted) {
        throw;
      }
      last_backend_error = e;
    }
  }
  if (last_backend_error) throw *last_backend_error;
  throw Error(ErrorKind::ReconstructionFailed,
              "no consistent reconstruction after " + std::to_string(options.retries + 1) + " attempts");
}

}  // namespace affpow
