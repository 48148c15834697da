#include "oracles.hpp"

#include <affpow/conditions.hpp>
#include <affpow/errors.hpp>
#include <affpow/instances.hpp>

#include <doctest.h>

using namespace affpow;

namespace {

oracle::Coeffs naive_expand(const Decomposition& d) {
  oracle::Coeffs f;
  for (const auto& t : d.terms) f = oracle::add(f, oracle::scale(oracle::linear_power(t.node, t.exponent), t.coeff));
  return f;
}

}  // namespace

TEST_SUITE("instances") {
  TEST_CASE("regime names") {
    for (auto r : {Regime::BigExponents, Regime::DistinctNodes, Regime::SmallIntervals, Regime::BigGaps,
                   Regime::Waring, Regime::SparsestShift})
      CHECK(parse_regime(to_string(r)) == r);
    CHECK_THROWS_AS(parse_regime("tiny"), Error);
  }

  TEST_CASE("generated instances are certified and expand correctly") {
    for (auto r : {Regime::BigExponents, Regime::DistinctNodes, Regime::SmallIntervals, Regime::BigGaps,
                   Regime::Waring, Regime::SparsestShift}) {
      for (unsigned s = 1; s <= 3; ++s) {
        for (std::uint64_t seed = 0; seed < 4; ++seed) {
          InstanceSpec spec;
          spec.s = s;
          spec.seed = seed;
          if (r == Regime::SmallIntervals) spec.delta = static_cast<unsigned>(seed % 3);
          CAPTURE(to_string(r));
          CAPTURE(s);
          CAPTURE(seed);
          const Instance inst = generate_instance(spec, r);
          CHECK(inst.regime == r);
          CHECK(check_regime(inst.truth, r, inst.delta).ok);
          CHECK(inst.f.coeffs() == naive_expand(inst.truth));
          CHECK(inst.truth == Decomposition::canonical(inst.truth.terms));
          for (const auto& t : inst.truth.terms) {
            CHECK(abs(t.node) <= spec.node_range);
            CHECK(t.coeff != 0);
          }
        }
      }
    }
  }

  TEST_CASE("generation is reproducible") {
    InstanceSpec spec;
    spec.s = 3;
    spec.seed = 77;
    CHECK(generate_instance(spec, Regime::BigGaps).truth == generate_instance(spec, Regime::BigGaps).truth);
    InstanceSpec other = spec;
    other.seed = 78;
    CHECK_FALSE(generate_instance(spec, Regime::BigGaps).truth == generate_instance(other, Regime::BigGaps).truth);
  }

  TEST_CASE("regime-specific structure") {
    InstanceSpec spec;
    spec.s = 3;
    spec.seed = 1;
    const Instance waring = generate_instance(spec, Regime::Waring);
    for (const auto& t : waring.truth.terms) CHECK(t.exponent == waring.truth.terms[0].exponent);
    const Instance sparse = generate_instance(spec, Regime::SparsestShift);
    for (const auto& t : sparse.truth.terms) CHECK(t.node == sparse.truth.terms[0].node);
    const Instance big = generate_instance(spec, Regime::BigExponents);
    for (const auto& t : big.truth.terms) CHECK(2 * t.exponent > 5 * spec.s * spec.s);
    const Criterion c = Criterion::DistinctNodes;
    const Instance distinct = generate_instance(spec, Regime::DistinctNodes);
    CHECK(check_conditions(distinct.truth, std::span<const Criterion>(&c, 1)).all_hold());
  }

  TEST_CASE("exponent profile is honoured") {
    InstanceSpec spec;
    spec.s = 2;
    spec.seed = 3;
    spec.exponent_profile = {30, 45, 0};
    const Instance inst = generate_instance(spec, Regime::BigExponents);
    for (const auto& t : inst.truth.terms) {
      CHECK(t.exponent >= 30);
      CHECK(t.exponent <= 45);
    }
  }

  TEST_CASE("unsatisfiable specs") {
    InstanceSpec spec;
    spec.s = 3;
    spec.exponent_profile = {0, 12, 0};
    try {
      generate_instance(spec, Regime::BigExponents);
      FAIL("expected UnsatisfiableSpec");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::UnsatisfiableSpec);
    }
    InstanceSpec none;
    none.s = 0;
    CHECK_THROWS_AS(generate_instance(none, Regime::Waring), Error);
    InstanceSpec crowded;
    crowded.s = 3;
    crowded.node_range = 0;
    crowded.repeated_nodes = false;
    CHECK_THROWS_AS(generate_instance(crowded, Regime::BigExponents), Error);
  }

  TEST_CASE("check_regime explains rejections") {
    const Decomposition low = Decomposition::canonical({{1, 0, 3}, {1, 1, 4}});
    const RegimeCheck r = check_regime(low, Regime::BigExponents);
    CHECK_FALSE(r.ok);
    CHECK_FALSE(r.reason.empty());
    CHECK(check_regime(Decomposition::canonical({{1, 0, 11}, {1, 1, 12}}), Regime::BigExponents).ok);
  }
}
