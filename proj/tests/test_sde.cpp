#include "oracles.hpp"

#include <affpow/errors.hpp>
#include <affpow/linalg.hpp>
#include <affpow/sde.hpp>

#include <doctest.h>

using namespace affpow;

namespace {

UniPoly power_sum(const std::vector<std::tuple<Rational, Rational, unsigned>>& terms) {
  UniPoly f;
  for (const auto& [c, a, e] : terms) f += UniPoly::affine_power(a, e) * c;
  return f;
}

// (x - sqrt 2)^13 + (x + sqrt 2)^13 = 2 sum_{k even} C(13, k) 2^(k/2) x^(13-k).
UniPoly sqrt2_pair() {
  std::vector<Rational> c(14);
  for (unsigned k = 0; k <= 13; k += 2) c[13 - k] = Rational(2 * binomial(13, k) * (Integer(1) << (k / 2)));
  return UniPoly(c);
}

oracle::Coeffs coeffs(const UniPoly& f) { return f.coeffs(); }

bool proportional(const SDE& a, const SDE& b) {
  if (a.coefficient_polys.size() != b.coefficient_polys.size()) return false;
  std::optional<Rational> ratio;
  for (std::size_t i = 0; i < a.coefficient_polys.size(); ++i) {
    const auto& p = a.coefficient_polys[i];
    const auto& q = b.coefficient_polys[i];
    if (p.is_zero() != q.is_zero()) return false;
    if (p.is_zero()) continue;
    const Rational r = p.leading() / q.leading();
    if (ratio && *ratio != r) return false;
    ratio = r;
    if (p != q * r) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("sde") {
  TEST_CASE("wronskian examples") {
    const std::vector<UniPoly> one_x{UniPoly{1}, UniPoly{0, 1}};
    CHECK(wronskian(one_x) == UniPoly{1});
    const UniPoly f{1, 2, 3};
    const std::vector<UniPoly> twice{f, f};
    CHECK(wronskian(twice).is_zero());
    // W(x^3, (x-1)^3) = 3 (1 - 0) x^2 (x-1)^2
    const std::vector<UniPoly> cubes{UniPoly::affine_power(0, 3), UniPoly::affine_power(1, 3)};
    CHECK(wronskian(cubes) == UniPoly::affine_power(0, 2) * UniPoly::affine_power(1, 2) * Rational(3));
  }

  TEST_CASE("wronskian matches cofactor expansion") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t n = 1 + rng() % 4;
      std::vector<UniPoly> fs;
      for (std::size_t j = 0; j < n; ++j) fs.emplace_back(oracle::random_coeffs(rng, rng() % 7, 5));
      std::vector<std::vector<oracle::Coeffs>> m(n, std::vector<oracle::Coeffs>(n));
      for (std::size_t j = 0; j < n; ++j) {
        oracle::Coeffs d = coeffs(fs[j]);
        for (std::size_t i = 0; i < n; ++i) {
          m[i][j] = d;
          d = oracle::diff(d);
        }
      }
      CHECK(wronskian(fs) == UniPoly(oracle::det(m)));
    }
  }

  TEST_CASE("wronskian vanishes exactly for dependent families") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t n = 1 + rng() % 4;
      std::vector<UniPoly> fs;
      for (std::size_t j = 0; j < n; ++j) fs.emplace_back(oracle::random_coeffs(rng, rng() % 7, 4));
      if (n > 1 && rng() % 2 == 0) {
        // Replace one member by a combination of the others.
        UniPoly combo;
        for (std::size_t j = 1; j < n; ++j) combo += fs[j] * oracle::random_rational(rng);
        fs[0] = combo;
      }
      oracle::Matrix rows;
      for (const auto& f : fs) {
        std::vector<Rational> row(7);
        for (std::size_t i = 0; i < f.coeffs().size(); ++i) row[i] = f.coeffs()[i];
        rows.push_back(row);
      }
      CHECK(wronskian(fs).is_zero() == (oracle::rank(rows) < n));
    }
  }

  TEST_CASE("multiplicity is bounded through the wronskian") {
    std::mt19937_64 rng(41);
    int checked = 0;
    while (checked < 40) {
      const std::size_t n = 2 + rng() % 3;
      const Rational a = oracle::random_rational(rng, 3, 2);
      std::vector<UniPoly> fs;
      for (std::size_t j = 0; j < n; ++j) {
        // Members vanishing to various orders at a make the bound non-trivial.
        fs.push_back(UniPoly::affine_power(a, static_cast<unsigned>(rng() % 4)) *
                     UniPoly(oracle::random_coeffs(rng, rng() % 4, 4)));
      }
      const UniPoly w = wronskian(fs);
      UniPoly sum;
      for (const auto& f : fs) sum += f;
      if (w.is_zero() || sum.is_zero()) continue;
      CHECK(mult_at(sum, a) <= n - 1 + mult_at(w, a));
      ++checked;
    }
  }

  TEST_CASE("apply_sde") {
    const SDE s{1, 0, {UniPoly{-5}, UniPoly{-2, 1}}};
    CHECK(apply_sde(s, UniPoly::affine_power(2, 5)).is_zero());
    CHECK(apply_sde(s, UniPoly{}).is_zero());
    const UniPoly other = apply_sde(s, UniPoly::affine_power(3, 5));
    CHECK_FALSE(other.is_zero());
    CHECK(other == UniPoly{-2, 1} * UniPoly::affine_power(3, 4) * Rational(5) - UniPoly::affine_power(3, 5) * Rational(5));
  }

  TEST_CASE("minimal SDE of a single power") {
    const auto s = find_min_sde(UniPoly::affine_power(2, 5), 0);
    REQUIRE(s);
    CHECK(s->order == 1);
    CHECK(s->shift == 0);
    CHECK(proportional(*s, SDE{1, 0, {UniPoly{-5}, UniPoly{-2, 1}}}));
    CHECK_THROWS_AS(find_min_sde(UniPoly{}, 0), Error);
  }

  TEST_CASE("minimal SDE of a two-term sum") {
    const UniPoly f = power_sum({{1, 1, 13}, {2, -2, 11}});
    const auto s = find_min_sde(f, 0, 3);
    REQUIRE(s);
    CHECK(s->order <= 3);
    CHECK(s->order >= 2);
    CHECK(apply_sde(*s, f).is_zero());
    CHECK(find_min_sde(f, 0, 3) == s);
  }

  TEST_CASE("generic polynomial has no SDE(1, 0)") {
    const UniPoly f{3, -1, 4, 1, -5, 9, 2, -6, 5};
    CHECK_FALSE(find_min_sde(f, 0, 1));
    // Independent check: the 9 x 3 system f, f', x f' has full column rank.
    const UniPoly d = derivative(f);
    const UniPoly xd = UniPoly{0, 1} * d;
    oracle::Matrix rows(9, std::vector<Rational>(3));
    for (std::size_t t = 0; t < 9; ++t) {
      rows[t][0] = f.coeff(t);
      rows[t][1] = d.coeff(t);
      rows[t][2] = xd.coeff(t);
    }
    CHECK(oracle::rank(rows) == 3);
  }

  TEST_CASE("SDE search on random sums: success, minimality, order bound") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 25; ++trial) {
      const unsigned t = 1 + static_cast<unsigned>(rng() % 3);
      const unsigned delta = static_cast<unsigned>(rng() % 2);
      UniPoly f;
      for (unsigned i = 0; i < t; ++i) {
        const UniPoly q(oracle::random_coeffs(rng, delta, 5));
        f += q * UniPoly::affine_power(Rational(static_cast<long>(i) * 3 - 4), 8 + static_cast<unsigned>(rng() % 8));
      }
      const auto s = find_min_sde(f, delta, 2 * t - 1);
      REQUIRE(s);
      CHECK(apply_sde(*s, f).is_zero());
      CHECK(s->shift == delta);
      for (unsigned i = 0; i <= s->order; ++i) CHECK(s->coefficient_polys[i].degree() <= static_cast<long>(i + delta));
      CHECK_FALSE(s->coefficient_polys.back().is_zero());
      if (s->order > 1) CHECK_FALSE(find_min_sde(f, delta, s->order - 1));
      // Padding with zero coefficients gives an SDE of every higher order.
      SDE padded = *s;
      padded.order += 2;
      padded.coefficient_polys.resize(padded.order + 1);
      CHECK(apply_sde(padded, f).is_zero());
      CHECK(find_min_sde(f, delta, 2 * t - 1) == s);
    }
  }

  TEST_CASE("power solutions") {
    const SDE single{1, 0, {UniPoly{-5}, UniPoly{-2, 1}}};
    CHECK(power_solutions(single, 1, 10) == std::vector<PowerSolution>{{2, 5}});
    CHECK(power_solutions(single, 6, 10).empty());
    CHECK_THROWS_AS(power_solutions(single, 0, 10), Error);

    const UniPoly f = power_sum({{1, 1, 13}, {2, -2, 11}});
    const auto s = find_min_sde(f, 0, 3);
    REQUIRE(s);
    const auto sols = power_solutions(*s, 5, 20);
    CHECK(std::find(sols.begin(), sols.end(), PowerSolution{1, 13}) != sols.end());
    CHECK(std::find(sols.begin(), sols.end(), PowerSolution{-2, 11}) != sols.end());
    for (const auto& p : sols) CHECK(apply_sde(*s, UniPoly::affine_power(p.node, p.exponent)).is_zero());
    CHECK(std::is_sorted(sols.begin(), sols.end(), [](const PowerSolution& a, const PowerSolution& b) {
      return a.exponent != b.exponent ? a.exponent < b.exponent : a.node < b.node;
    }));
    CHECK(power_solutions(*s, 5, 20, 3) == sols);
  }

  TEST_CASE("irrational nodes are reported") {
    const UniPoly f = sqrt2_pair();
    const auto s = find_min_sde(f, 0);
    REQUIRE(s);
    try {
      power_solutions(*s, 1, 20);
      FAIL("irrational node not reported");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::IrrationalNodeDetected);
    }
    const auto scan = detail::scan_power_solutions(*s, 1, 20);
    CHECK(std::find(scan.irrational_exponents.begin(), scan.irrational_exponents.end(), 13u) !=
          scan.irrational_exponents.end());
  }

  TEST_CASE("shifted polynomial solutions") {
    const UniPoly f = UniPoly::affine_power(1, 13) * Rational(2) + UniPoly::affine_power(1, 12) * Rational(3);
    const auto s = find_min_sde(f, 1);
    REQUIRE(s);
    const auto basis = shifted_poly_solutions(*s, 1, 1, 10, 15);
    REQUIRE_FALSE(basis.empty());
    for (const auto& g : basis) CHECK(apply_sde(*s, g).is_zero());
    // The solution space has dimension at most the order, and f lies in it.
    CHECK(basis.size() <= s->order);
    std::vector<UniPoly> family = basis;
    const long before = static_cast<long>(family.size());
    family.push_back(f);
    oracle::Matrix rows;
    for (const auto& g : family) {
      std::vector<Rational> row(20);
      for (std::size_t i = 0; i < g.coeffs().size(); ++i) row[i] = g.coeffs()[i];
      rows.push_back(row);
    }
    CHECK(static_cast<long>(oracle::rank(rows)) == before);
    CHECK(shifted_poly_solutions(*s, 1, 1, 16, 15).empty());
    // 5 is not a root of the leading coefficient polynomial.
    CHECK(s->coefficient_polys.back()(5) != 0);
    CHECK(shifted_poly_solutions(*s, 5, 1, 10, 15).empty());
  }
}
