#include "oracles.hpp"

#include <affpow/errors.hpp>
#include <affpow/multipoly.hpp>
#include <affpow/unipoly.hpp>

#include <doctest.h>

using namespace affpow;

namespace {

UniPoly from(const oracle::Coeffs& c) { return UniPoly(c); }
Rational q(const char* s) { return parse_rational(s); }

}  // namespace

TEST_SUITE("core-poly") {
  TEST_CASE("rational parsing and canonical form") {
    CHECK(to_string(q("6/4")) == "3/2");
    CHECK(to_string(q("-0/5")) == "0");
    CHECK(to_string(q(" +7 ")) == "7");
    CHECK_THROWS_AS(q("4/-2"), Error);
    CHECK_THROWS_AS(q("1/0"), Error);
    CHECK_THROWS_AS(q("abc"), Error);
    CHECK_THROWS_AS(q(""), Error);
    CHECK_THROWS_AS(q("1/2/3"), Error);
    try {
      q("1/0");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ParseError);
    }
  }

  TEST_CASE("parse print parse is the identity") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
      const Rational r = oracle::random_rational(rng, 1000000, 1000);
      CHECK(q(to_string(r).c_str()) == r);
      CHECK(to_string(q(to_string(r).c_str())) == to_string(r));
    }
  }

  TEST_CASE("zero polynomial representation") {
    UniPoly z{0, 0, 0};
    CHECK(z.is_zero());
    CHECK(z.degree() == UniPoly::kZeroDegree);
    CHECK(z == UniPoly{});
    CHECK(UniPoly{1, 2, 0}.degree() == 1);
  }

  TEST_CASE("arithmetic") {
    const UniPoly x{0, 1};
    CHECK((UniPoly{1, 1} * UniPoly{-1, 1}) == UniPoly{-1, 0, 1});
    const UniPoly f{3, -1, 4};
    CHECK(f + UniPoly{} == f);
    CHECK(f - f == UniPoly{});
    // (x^2 + 1)(x^3 - 2x) = x^5 - x^3 - 2x
    CHECK((UniPoly{1, 0, 1} * UniPoly{0, -2, 0, 1}) == UniPoly{0, -2, 0, -1, 0, 1});
    CHECK(f * Rational(0) == UniPoly{});
    CHECK(-f == UniPoly{-3, 1, -4});
    CHECK(pow(x + UniPoly{1}, 3) == UniPoly{1, 3, 3, 1});
  }

  TEST_CASE("arithmetic agrees with the oracle on random pairs") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
      const auto a = oracle::random_coeffs(rng, rng() % 8);
      const auto b = oracle::random_coeffs(rng, rng() % 8);
      CHECK(from(a) * from(b) == from(oracle::mul(a, b)));
      CHECK(from(a) + from(b) == from(oracle::add(a, b)));
    }
  }

  TEST_CASE("affine power matches repeated multiplication") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) {
      const Rational a = oracle::random_rational(rng);
      const unsigned e = static_cast<unsigned>(rng() % 15);
      CHECK(UniPoly::affine_power(a, e) == from(oracle::linear_power(a, e)));
    }
  }

  TEST_CASE("derivative") {
    CHECK(derivative(UniPoly{0, 0, 0, 1}) == UniPoly{0, 0, 3});
    CHECK(derivative(UniPoly{5}) == UniPoly{});
    const UniPoly f{7, 1, 2};
    CHECK(derivative(f, 0) == f);
    // ((x-2)^5)''' = 5*4*3 (x-2)^2
    CHECK(derivative(UniPoly::affine_power(2, 5), 3) == UniPoly::affine_power(2, 2) * Rational(60));
  }

  TEST_CASE("Leibniz rule on random pairs") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
      const UniPoly f = from(oracle::random_coeffs(rng, rng() % 9));
      const UniPoly g = from(oracle::random_coeffs(rng, rng() % 9));
      CHECK(derivative(f * g) == derivative(f) * g + f * derivative(g));
    }
  }

  TEST_CASE("taylor shift") {
    CHECK(taylor_shift(UniPoly{0, 0, 1}, 0) == UniPoly{0, 0, 1});
    CHECK(taylor_shift(UniPoly::affine_power(3, 2), 3) == UniPoly{0, 0, 1});
    CHECK(taylor_shift(UniPoly{1, 1, 1}, 1) == UniPoly{3, 3, 1});
    std::mt19937_64 rng(9);
    for (int i = 0; i < 50; ++i) {
      const auto c = oracle::random_coeffs(rng, rng() % 12);
      const Rational a = oracle::random_rational(rng);
      const UniPoly f = from(c);
      CHECK(taylor_shift(f, a) == from(oracle::shift(c, a)));
      CHECK(taylor_shift(taylor_shift(f, a), -a) == f);
    }
  }

  TEST_CASE("mult_at") {
    const UniPoly f = UniPoly::affine_power(1, 3) * UniPoly{2, 1};
    CHECK(mult_at(f, 1) == 3);
    CHECK(mult_at(UniPoly{1, 0, 1}, 0) == 0);
    const UniPoly g = UniPoly::affine_power(q("1/2"), 4) * UniPoly{q("-1/3"), 1};
    CHECK(mult_at(g, q("1/2")) == 4);
    CHECK(mult_at(g, q("1/3")) == 1);
    CHECK(mult_at(UniPoly{0, 0, 5}, 0) == 2);
    CHECK_THROWS_AS(mult_at(UniPoly{}, 1), Error);
  }

  TEST_CASE("interpolation") {
    using P = std::vector<std::pair<Rational, Rational>>;
    CHECK(interpolate(P{{0, 1}, {1, 1}}) == UniPoly{1});
    CHECK(interpolate(P{{0, 0}, {1, 1}, {2, 4}}) == UniPoly{0, 0, 1});
    CHECK(interpolate(P{{0, 1}, {1, 2}, {2, 9}, {3, 28}}) == UniPoly{1, 0, 0, 1});
    try {
      interpolate(P{{1, 0}, {1, 2}});
      FAIL("duplicate abscissa accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DuplicateAbscissa);
    }
  }

  TEST_CASE("interpolating samples of f returns f, and matches Lagrange") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 30; ++i) {
      const std::size_t d = rng() % 13;
      const auto c = oracle::random_coeffs(rng, d);
      std::vector<std::pair<Rational, Rational>> pts;
      std::vector<Rational> xs;
      while (xs.size() < d + 1) {
        const Rational x = oracle::random_rational(rng, 20, 4);
        if (std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);
      }
      for (const auto& x : xs) pts.emplace_back(x, oracle::eval(c, x));
      CHECK(interpolate(pts) == from(c));
      CHECK(interpolate(pts) == from(oracle::lagrange(pts)));
    }
  }

  TEST_CASE("rational roots") {
    CHECK(rational_roots(UniPoly{1, -5, 6}) ==
          std::vector<RootMultiplicity>{{q("1/3"), 1}, {q("1/2"), 1}});
    CHECK(rational_roots(UniPoly{1, 0, 1}).empty());
    CHECK(rational_roots(UniPoly::affine_power(2, 3)) == std::vector<RootMultiplicity>{{2, 3}});
    CHECK(rational_roots(UniPoly{7}).empty());
    CHECK(rational_roots(UniPoly{0, 0, 3}) == std::vector<RootMultiplicity>{{0, 2}});
    CHECK_THROWS_AS(rational_roots(UniPoly{}), Error);

    const UniPoly with_irrational = UniPoly{-2, 0, 1} * UniPoly::affine_power(q("-3/7"), 2);
    const RootSplit split = split_rational_roots(with_irrational);
    CHECK(split.roots == std::vector<RootMultiplicity>{{q("-3/7"), 2}});
    CHECK(split.cofactor == UniPoly{-2, 0, 1});
  }

  TEST_CASE("rational roots agree with divisor enumeration") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 40; ++i) {
      // Product of small linear factors and one random quadratic.
      std::vector<long> coeffs{1};
      auto times = [&](long a, long b) {  // multiply by (b x + a)
        std::vector<long> out(coeffs.size() + 1, 0);
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
          out[k] += a * coeffs[k];
          out[k + 1] += b * coeffs[k];
        }
        coeffs = out;
      };
      const int linear = static_cast<int>(rng() % 4);
      for (int k = 0; k < linear; ++k) times(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 3) + 1);
      std::vector<long> quad{static_cast<long>(rng() % 5) + 1, static_cast<long>(rng() % 5) - 2, 1};
      std::vector<long> prod(coeffs.size() + 2, 0);
      for (std::size_t a = 0; a < coeffs.size(); ++a)
        for (std::size_t b = 0; b < 3; ++b) prod[a + b] += coeffs[a] * quad[b];
      oracle::Coeffs rc(prod.begin(), prod.end());
      const auto expected = oracle::roots_by_divisors(prod);
      const auto got = rational_roots(from(rc));
      REQUIRE(got.size() == expected.size());
      for (std::size_t k = 0; k < got.size(); ++k) {
        CHECK(got[k].root == expected[k].first);
        CHECK(got[k].multiplicity == expected[k].second);
        // (x - r)^m divides f and (x - r)^(m+1) does not.
        const UniPoly f = from(rc);
        CHECK(divrem(f, UniPoly::affine_power(got[k].root, got[k].multiplicity)).second.is_zero());
        CHECK(!divrem(f, UniPoly::affine_power(got[k].root, got[k].multiplicity + 1)).second.is_zero());
      }
    }
  }

  TEST_CASE("rational roots with large numerators and denominators") {
    const Rational a = q("123456789123/98765431");
    const Rational b = q("-5/1000000007");
    const UniPoly f = UniPoly::affine_power(a, 2) * UniPoly::affine_power(b, 1) * UniPoly{1, 1, 1};
    CHECK(rational_roots(f) == std::vector<RootMultiplicity>{{b, 1}, {a, 2}});
  }

  TEST_CASE("divrem and gcd") {
    const UniPoly a = UniPoly{-1, 0, 1} * UniPoly{2, 3};
    const UniPoly b = UniPoly{-1, 0, 1} * UniPoly{5, 0, 1};
    CHECK(gcd(a, b) == UniPoly{-1, 0, 1});
    auto [quot, rem] = divrem(a, UniPoly{-1, 1});
    CHECK(rem.is_zero());
    CHECK(quot * UniPoly{-1, 1} == a);
    CHECK(gcd(UniPoly{}, UniPoly{}).is_zero());
    CHECK_THROWS_AS(divrem(a, UniPoly{}), Error);
  }

  TEST_CASE("text form") {
    const UniPoly f = parse_unipoly_text("1,0,-3/2,1");
    CHECK(f == UniPoly{1, 0, q("-3/2"), 1});
    CHECK(to_text(f) == "1,0,-3/2,1");
    CHECK(to_text(UniPoly{}) == "0");
    CHECK_THROWS_AS(parse_unipoly_text("1,,2"), Error);
  }

  TEST_CASE("multivariate evaluation") {
    MultiPoly xy(2);
    xy.add_term({1, 1}, 1);
    const std::vector<Rational> p23{2, 3};
    CHECK(multi_eval(xy, p23) == 6);

    const LinearForm l{1, {1, 2}};
    const std::vector<Rational> origin{0, 0};
    CHECK(multi_eval(power(l, 2), origin) == 1);

    MultiPoly f = power(l, 3);
    MultiPoly g = power(LinearForm{0, {1, -1}}, 2);
    f += g;
    const std::vector<Rational> ones{1, 1};
    CHECK(multi_eval(f, ones) == 64);

    const std::vector<Rational> short_point{1};
    try {
      multi_eval(f, short_point);
      FAIL("dimension mismatch accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DimensionMismatch);
    }
    MultiPoly h(2);
    h.add_term({1, 0}, 2);
    h.add_term({1, 0}, -2);
    CHECK(h.is_zero());
  }
}
