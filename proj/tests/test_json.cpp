#include "oracles.hpp"

#include <affpow/errors.hpp>
#include <affpow/json_io.hpp>

#include <doctest.h>

using namespace affpow;
namespace aj = affpow::json;

TEST_SUITE("cli") {
  TEST_CASE("json: rationals") {
    CHECK(aj::to_json(Rational(-3, 4)) == "-3/4");
    CHECK(aj::rational_from_json(nlohmann::json(7)) == 7);
    CHECK(aj::rational_from_json(nlohmann::json("10/4")) == Rational(5, 2));
    CHECK_THROWS_AS(aj::rational_from_json(nlohmann::json("1/0")), Error);
    CHECK_THROWS_AS(aj::rational_from_json(nlohmann::json::array()), Error);
  }

  TEST_CASE("json: round trips") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 20; ++trial) {
      const UniPoly f(oracle::random_coeffs(rng, rng() % 10));
      CHECK(aj::unipoly_from_json(aj::to_json(f)) == f);
      std::vector<AffineTerm> terms;
      for (int i = 0; i < 3; ++i)
        terms.push_back({oracle::random_rational(rng), oracle::random_rational(rng), static_cast<unsigned>(rng() % 20)});
      const Decomposition d = Decomposition::canonical(terms);
      CHECK(aj::decomposition_from_json(aj::to_json(d)) == d);
      CHECK(aj::decomposition_from_json(nlohmann::json{{"truth", aj::to_json(d)}}) == d);
    }
    const SDE s{2, 1, {UniPoly{1, 2}, UniPoly{0, 1, 3}, UniPoly{}}};
    CHECK(aj::sde_from_json(aj::to_json(s)) == s);

    MultiPoly m(2);
    m.add_term({3, 1}, Rational(1, 2));
    m.add_term({0, 0}, -4);
    CHECK(aj::multipoly_from_json(aj::to_json(m)) == m);

    const MultiDecomposition md =
        MultiDecomposition::canonical(2, {{3, LinearForm{1, {1, 2}}, 4}, {-1, LinearForm{0, {0, 1}}, 2}});
    CHECK(aj::multidecomposition_from_json(aj::to_json(md)) == md);
  }

  TEST_CASE("json: malformed documents") {
    CHECK_THROWS_AS(aj::unipoly_from_json(nlohmann::json{{"coef", {1}}}), Error);
    CHECK_THROWS_AS(aj::decomposition_from_json(nlohmann::json{{"terms", {{{"coeff", "1"}}}}}), Error);
    CHECK_THROWS_AS(aj::multipoly_from_json(nlohmann::json{{"n", 2}, {"terms", {{{"exps", {1}}, {"coeff", 1}}}}}),
                    Error);
  }
}
