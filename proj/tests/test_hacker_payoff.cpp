#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "ransom/equilibrium.hpp"
#include "ransom/hacker_payoff.hpp"

using namespace ransom;

namespace {
constexpr auto G1 = GameVariant::Gamma1;
constexpr auto G2 = GameVariant::Gamma2;

GameParams recovery_params() {
  GameParams g;
  g.p3 = 0.3;
  g.c3 = 0.2;
  return g;
}

// Midpoint quadrature over the valuation quantile grid of the realized hacker
// utility against the victim's best response.
double eta_by_quadrature(const GameParams& g, GameVariant v, HackerType t, double r, int n) {
  const auto part = region_boundary(g, v);
  double acc = 0.0;
  for (int k = 0; k < n; ++k) {
    const double x = quantile(g.valuation, (k + 0.5) / n);
    acc += hacker_utility(g, v, x, t, best_response(g, v, part, x, r), r) + g.c4;
  }
  return acc / n;
}
}  // namespace

TEST_CASE("hand-evaluated payoffs") {
  const GameParams g;
  CHECK(eta(g, G1, HackerType::A1, 0.0) == 0.0);
  const double up = 0.3375 / 0.0775;
  const double expected = 0.225 * std::exp(-up) + std::exp(-1.0 / 0.9) - std::exp(-up);
  CHECK(eta(g, G1, HackerType::A1, 1.0) == doctest::Approx(expected).epsilon(1e-13));
  // 0.319245 is a hand value that rounds the tail term; compare to its printed precision only.
  CHECK(eta(g, G1, HackerType::A1, 1.0) == doctest::Approx(0.319245).epsilon(3e-5));

  CHECK(type_gap_d(g, G1, 0.0) == doctest::Approx(1.5 - 0.5 * 0.1 * std::exp(-145.0)).epsilon(1e-15));
  CHECK(type_gap_d(g, G1, 0.0) == doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("closed form agrees with quadrature of the realized utilities") {
  std::mt19937_64 gen(31);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const GameParams g = oracle::random_params(gen, true);
    for (auto v : {G1, G2}) {
      const double omega = region_boundary(g, v).omega;
      for (double r : {0.5 * omega * u(gen), omega + 2.0 * u(gen)}) {
        for (auto t : kHackerTypes) {
          const double e = eta(g, v, t, r);
          CHECK(eta_by_quadrature(g, v, t, r, 100000) == doctest::Approx(e).epsilon(1e-4 * (1.0 + std::abs(e))));
        }
      }
    }
  }
}

TEST_CASE("type gap identity and dominance") {
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 200; ++trial) {
    const GameParams g = oracle::random_params(gen, true);
    for (auto v : {G1, G2}) {
      const auto part = region_boundary(g, v);
      for (int k = 0; k <= 200; ++k) {
        const double r = 3.0 * (part.omega + 1.0) * k / 200.0;
        const double e1 = eta(g, v, part, HackerType::A1, r);
        const double e2 = eta(g, v, part, HackerType::A2, r);
        CHECK(std::abs(type_gap_d(g, v, part, r) - (e2 - e1)) <= 1e-12 * (1.0 + std::abs(e2)));
        CHECK(e2 >= e1 - 1e-12);
      }
    }
  }
}

TEST_CASE("equal side earnings give a constant type gap") {
  GameParams g;
  g.b1 = g.b2 = 0.7;
  for (int k = 0; k <= 100; ++k) CHECK(type_gap_d(g, G1, 0.05 * k) == doctest::Approx(0.7).epsilon(1e-15));
}

TEST_CASE("type gap falls before the boundary and rises after it") {
  CHECK(type_gap_has_valley_shape(GameParams{}, G1));
  CHECK(type_gap_has_valley_shape(recovery_params(), G2));
  const GameParams g;
  const double omega = region_boundary(g, G1).omega;
  double min_d = 1e300, argmin = -1;
  for (int k = 0; k <= 4000; ++k) {
    const double r = 4.0 * omega * k / 4000.0;
    const double d = type_gap_d(g, G1, r);
    if (d < min_d) {
      min_d = d;
      argmin = r;
    }
  }
  CHECK(argmin == doctest::Approx(omega).epsilon(2e-3));
}

TEST_CASE("payoff curves") {
  const GameParams g;
  SUBCASE("u = 1 is the zero ransom") {
    const auto c = payoff_curve(g, G1, HackerType::A1, {GridSpec::Axis::Transformed, 1.0, 1.0, 1});
    REQUIRE(c.points.size() == 1);
    CHECK(c.points[0].r == 0.0);
    CHECK(c.points[0].eta_minus_c4 == -g.c4);
    CHECK_FALSE(c.points[0].launched);
  }
  SUBCASE("fake hackers sit above genuine ones") {
    const GridSpec spec{GridSpec::Axis::Transformed, 0.01, 1.0, 500};
    const auto a1 = payoff_curve(g, G1, HackerType::A1, spec);
    const auto a2 = payoff_curve(g, G1, HackerType::A2, spec);
    REQUIRE(a1.points.size() == a2.points.size());
    for (std::size_t i = 0; i < a1.points.size(); ++i) {
      CHECK(a2.points[i].eta_minus_c4 >= a1.points[i].eta_minus_c4);
      CHECK(a1.points[i].eta_minus_c4 == eta(g, G1, HackerType::A1, a1.points[i].r) - g.c4);
      if (i > 0) CHECK(a1.points[i].r > a1.points[i - 1].r);
    }
  }
  SUBCASE("better cracking lowers the genuine hacker's curve") {
    GameParams hard = g;
    hard.p1 = 0.3;
    const GridSpec spec{GridSpec::Axis::Transformed, 0.01, 1.0, 500};
    const auto easy_c = payoff_curve(g, G1, HackerType::A1, spec);
    const auto hard_c = payoff_curve(hard, G1, HackerType::A1, spec);
    for (std::size_t i = 0; i < easy_c.points.size(); ++i) {
      CHECK(hard_c.points[i].eta_minus_c4 <= easy_c.points[i].eta_minus_c4 + 1e-12);
    }
  }
  SUBCASE("grid validation") {
    CHECK_THROWS_AS(ransom_grid({GridSpec::Axis::Ransom, 0.0, 1.0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(ransom_grid({GridSpec::Axis::Transformed, 0.0, 1.0, 5}), std::invalid_argument);
    CHECK_THROWS_AS(ransom_grid({GridSpec::Axis::Ransom, 2.0, 1.0, 5}), std::invalid_argument);
    const auto rs = ransom_grid({GridSpec::Axis::Ransom, 0.0, 2.0, 5});
    CHECK(rs == std::vector<double>{0.0, 0.5, 1.0, 1.5, 2.0});
  }
}

TEST_CASE("backup lowers both payoffs when recovery is cheap") {
  const GameParams h = recovery_params();  // c3 = 0.2 <= p3 c1 = 0.3
  const auto part2 = region_boundary(h, G2);
  for (int k = 0; k <= 300; ++k) {
    const double r = part2.omega * k / 300.0;
    for (auto t : kHackerTypes) CHECK(eta(h, G2, part2, t, r) <= eta(h, G1, t, r) + 1e-12);
  }
}

TEST_CASE("zero recovery reduces the second game to the first") {
  GameParams g;
  g.p3 = 0.0;
  g.c3 = 0.0;
  for (int k = 0; k <= 400; ++k) {
    const double r = 0.02 * k;
    for (auto t : kHackerTypes) {
      CHECK(std::abs(eta(g, G2, t, r) - eta(g, G1, t, r)) <= 1e-12);
    }
    CHECK(std::abs(type_gap_d(g, G2, r) - type_gap_d(g, G1, r)) <= 1e-12);
  }
}
