#include <doctest.h>

#include <numeric>

#include "lensurf/errors.hpp"
#include "lensurf/lens_arithmetic.hpp"
#include "oracles.hpp"

using namespace lensurf;

TEST_CASE("kappa = 2 sequence") {
  const KappaSequence seq = lens_sequence(2, 6);
  const std::vector<std::pair<int, int>> expected{{0, 1}, {2, 1}, {8, 3}, {30, 11}, {112, 41}, {418, 153}, {1560, 571}};
  REQUIRE(seq.terms.size() == expected.size());
  for (std::size_t k = 0; k < expected.size(); ++k) {
    CHECK(seq.p(k) == expected[k].first);
    CHECK(seq.q(k) == expected[k].second);
  }
  CHECK(seq.q_prefix_sum(0) == 0);
  CHECK(seq.q_prefix_sum(3) == 15);
}

TEST_CASE("kappa = 1 sequence starts (1,1), (3,2)") {
  const KappaSequence seq = lens_sequence(1, 2);
  CHECK(seq.p(1) == 1);
  CHECK(seq.q(1) == 1);
  CHECK(seq.p(2) == 3);
  CHECK(seq.q(2) == 2);
}

TEST_CASE("sequence agrees with machine integers") {
  for (int kappa = 1; kappa <= 5; ++kappa) {
    const auto ref = oracle::sequence(kappa, 12);
    const KappaSequence seq = lens_sequence(kappa, 12);
    for (std::size_t k = 0; k < ref.size(); ++k) {
      CHECK(seq.p(k) == ref[k].first);
      CHECK(seq.q(k) == ref[k].second);
    }
  }
}

TEST_CASE("sequence arguments") {
  CHECK_THROWS_AS(lens_sequence(0, 3), Error);
  CHECK_THROWS_AS(lens_sequence(2, -1), Error);
  CHECK(lens_sequence(2, 0).terms.size() == 1);
}

TEST_CASE("big terms stay exact") {
  const KappaSequence seq = lens_sequence(5, 60);
  // p_k grows like (kappa + 1.8)^k; far beyond 64 bits here.
  CHECK(seq.p(60) > BigInt("1000000000000000000000000000000"));
  CHECK(seq.p(60) == 6 * seq.p(59) + 5 * seq.q(59));
}

TEST_CASE("identities hold for kappa 1..5") {
  for (int kappa = 1; kappa <= 5; ++kappa) {
    for (int n = 1; n <= 8; ++n) {
      CAPTURE(kappa);
      CAPTURE(n);
      const FormulaReport rep = check_formulae(kappa, n);
      CHECK(rep.checks.size() == 6);
      CHECK(rep.passed());
    }
  }
}

TEST_CASE("continued fractions") {
  CHECK(continued_fraction(8, 3).terms == std::vector<BigInt>{2, 1, 2});
  CHECK(continued_fraction(30, 11).terms == std::vector<BigInt>{2, 1, 2, 1, 2});
  CHECK(evaluate(continued_fraction(112, 41)) == Rational(112, 41));
  CHECK_THROWS_AS(continued_fraction(8, 6), Error);
  CHECK_THROWS_AS(continued_fraction(3, 3), Error);
  CHECK_THROWS_AS(continued_fraction(3, 0), Error);
  for (auto [p, q] : {std::pair{97, 31}, {1560, 571}, {100, 3}}) {
    std::vector<BigInt> ref;
    for (auto a : oracle::continued_fraction(p, q)) ref.emplace_back(a);
    CHECK(continued_fraction(p, q).terms == ref);
  }
}

TEST_CASE("crosscap numbers") {
  CHECK(bredon_wood_crosscap(8, 3) == 2);
  CHECK(bredon_wood_crosscap(30, 11) == 3);
  CHECK(bredon_wood_crosscap(2, 1) == 1);
  const CrosscapResult r = bredon_wood(8, 3);
  CHECK(r.b == std::vector<BigInt>{2, 0, 2});
  CHECK_THROWS_AS(bredon_wood(7, 3), Error);
}

TEST_CASE("crosscap numbers agree with an independent recipe") {
  for (int p = 4; p <= 80; p += 2) {
    for (int q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      CAPTURE(p);
      CAPTURE(q);
      CHECK(bredon_wood_crosscap(p, q) == oracle::crosscap(p, q));
    }
  }
}
