#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "ransom/hacker_payoff.hpp"
#include "ransom/simulation.hpp"

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

bool same(const SimulationSummary& a, const SimulationSummary& b) {
  return a.n == b.n && a.mean_hacker_payoff == b.mean_hacker_payoff && a.std_error == b.std_error &&
         a.mean_victim_payoff == b.mean_victim_payoff && a.action_counts == b.action_counts &&
         a.type_counts == b.type_counts;
}
}  // namespace

TEST_CASE("certain crack costs only the crack") {
  GameParams g;
  g.p1 = 1.0;
  g.p = 1.0;
  RngStream rng(1);
  for (int i = 0; i < 100; ++i) {
    const auto rec = resolve_branches(g, G1, 3.0, HackerType::A1, VictimAction::C, 1.0, rng);
    CHECK(rec.victim_payoff == -g.c1);
    CHECK(rec.hacker_payoff == -g.c4);
    REQUIRE(rec.crack_succeeded);
    CHECK(*rec.crack_succeeded);
    CHECK_FALSE(rec.paid_after_crack_fail);
    CHECK_FALSE(rec.recovery_succeeded);
  }
}

TEST_CASE("paying a genuine hacker yields the ransom") {
  GameParams g;
  g.p = 1.0;
  RngStream rng(2);
  for (int i = 0; i < 100; ++i) {
    const auto rec = resolve_branches(g, G1, 3.0, HackerType::A1, VictimAction::P, 1.7, rng);
    CHECK(rec.hacker_payoff == doctest::Approx(1.7 - g.c4).epsilon(1e-15));
    CHECK(rec.victim_payoff == -1.7);
  }
  CHECK_THROWS_AS(resolve_branches(g, G1, 1.0, HackerType::A1, VictimAction::R, 1.0, rng), std::invalid_argument);
}

TEST_CASE("branch flags and payoff signs") {
  const GameParams h = recovery_params();
  const auto part = region_boundary(h, G2);
  RngStream root(3);
  for (std::uint64_t i = 0; i < 20000; ++i) {
    RngStream rng = root.substream(i);
    const auto rec = playout(h, G2, part, 0.3 + 0.0002 * static_cast<double>(i % 10000), rng);
    CHECK(rec.victim_payoff <= 0.0);
    switch (rec.action) {
      case VictimAction::D:
      case VictimAction::P:
        CHECK_FALSE(rec.crack_succeeded);
        CHECK_FALSE(rec.recovery_succeeded);
        break;
      case VictimAction::R:
        REQUIRE(rec.recovery_succeeded);
        CHECK(rec.crack_succeeded.has_value() == !*rec.recovery_succeeded);
        break;
      case VictimAction::C: FAIL("crack is not a top-level action with a backup");
    }
    if (rec.paid_after_crack_fail) CHECK_FALSE(*rec.crack_succeeded);
  }
}

TEST_CASE("summary mechanics") {
  const GameParams g;
  CHECK_THROWS_AS(simulate(g, G1, 1.0, 0, 1), std::invalid_argument);

  const auto one = simulate(g, G1, 1.0, 1, 9);
  RngStream rng = RngStream(9).substream(0);
  const auto rec = playout(g, G1, 1.0, rng);
  CHECK(one.n == 1);
  CHECK(one.mean_hacker_payoff == rec.hacker_payoff);
  CHECK(one.mean_victim_payoff == rec.victim_payoff);
  CHECK(one.std_error == 0.0);
  CHECK(one.action_counts[static_cast<int>(rec.action)] == 1);

  const auto a = simulate(g, G1, 1.0, 50000, 4);
  const auto b = simulate(g, G1, 1.0, 50000, 4);
  SimulationOptions threaded;
  threaded.threads = 3;
  threaded.block_size = 1000;
  SimulationOptions serial_small_blocks;
  serial_small_blocks.block_size = 1000;
  CHECK(same(a, b));
  CHECK(same(simulate(g, G1, 1.0, 50000, 4, threaded), simulate(g, G1, 1.0, 50000, 4, serial_small_blocks)));
  CHECK_FALSE(same(a, simulate(g, G1, 1.0, 50000, 5)));

  double total = 0.0;
  for (double f : a.action_frequencies) total += f;
  CHECK(std::abs(total - 1.0) <= 1e-12);
}

TEST_CASE("Monte Carlo mean matches the closed-form payoff") {
  struct Case {
    GameParams g;
    GameVariant v;
    double r;
  };
  const std::uint64_t n = 1000000;
  for (const auto& c : {Case{GameParams{}, G1, 1.0}, Case{GameParams{}, G1, 2.5}, Case{recovery_params(), G2, 0.5},
                        Case{recovery_params(), G2, 3.0}}) {
    const auto part = region_boundary(c.g, c.v);
    for (auto t : kHackerTypes) {
      SimulationOptions opt;
      opt.fixed_type = t;
      const auto s = simulate(c.g, c.v, c.r, n, 1234, opt);
      const double expected = eta(c.g, c.v, part, t, c.r) - c.g.c4;
      CHECK(std::abs(s.mean_hacker_payoff - expected) <= 3.0 * s.std_error);
    }
  }
}

TEST_CASE("per-profile averages, action frequencies and victim regret") {
  for (auto [g, v] : {std::pair{GameParams{}, G1}, std::pair{recovery_params(), G2}}) {
    const double r = 0.8;
    const std::uint64_t n = 1000000;
    const auto s = simulate(g, v, r, n, 99);
    const auto part = region_boundary(g, v);

    // Hacker payoffs never depend on x, and neither do the genuine-hacker
    // victim payoffs under P and the fallback action.
    for (auto t : kHackerTypes) {
      for (auto a : admissible_actions(v)) {
        const auto& h = s.hacker_by_profile[static_cast<int>(t)][static_cast<int>(a)];
        if (h.n < 1000) continue;
        CHECK(std::abs(h.mean - hacker_utility(g, v, 0.0, t, a, r)) <= 3.0 * h.std_error() + 1e-12);
        if (t == HackerType::A2 || a == VictimAction::D) continue;
        const auto& vs = s.victim_by_profile[static_cast<int>(t)][static_cast<int>(a)];
        CHECK(std::abs(vs.mean - victim_utility(g, v, 0.0, t, a, r)) <= 3.0 * vs.std_error() + 1e-12);
      }
    }

    const auto sr = strategy_region(g, v, part, r);
    const double fd = cdf(g.valuation, sr.lower_D);
    const double fp = sr.upper_P ? cdf(g.valuation, *sr.upper_P) - fd : 0.0;
    auto within = [&](double freq, double q) { return std::abs(freq - q) <= 3.0 * std::sqrt(q * (1 - q) / n) + 1e-15; };
    CHECK(within(s.action_frequencies[static_cast<int>(VictimAction::D)], fd));
    CHECK(within(s.action_frequencies[static_cast<int>(VictimAction::P)], fp));

    RngStream root(5);
    for (std::uint64_t i = 0; i < 10000; ++i) {
      RngStream rng = root.substream(i);
      const auto rec = playout(g, v, part, r, rng);
      const double chosen = victim_expected_payoff(g, v, rec.victim_valuation, rec.action, r);
      for (auto alt : admissible_actions(v)) {
        CHECK(chosen >= victim_expected_payoff(g, v, rec.victim_valuation, alt, r) - 1e-12);
      }
    }
  }
}

TEST_CASE("victim payoffs conditioned on a fixed valuation") {
  // Forcing the profile isolates the branch randomness from the valuation draw.
  const GameParams h = recovery_params();
  const double x = 2.0, r = 1.0;
  for (auto t : kHackerTypes) {
    for (auto a : admissible_actions(GameVariant::Gamma2)) {
      RunningStats vs, hs;
      RngStream root(21);
      for (std::uint64_t i = 0; i < 1000000; ++i) {
        RngStream rng = root.substream(i);
        const auto rec = resolve_branches(h, G2, x, t, a, r, rng);
        vs.add(rec.victim_payoff);
        hs.add(rec.hacker_payoff);
      }
      CHECK(std::abs(vs.mean - victim_utility(h, G2, x, t, a, r)) <= 3.0 * vs.std_error() + 1e-12);
      CHECK(std::abs(hs.mean - hacker_utility(h, G2, x, t, a, r)) <= 3.0 * hs.std_error() + 1e-12);
    }
  }
  GameParams g;
  RunningStats vs;
  RngStream root(22);
  for (std::uint64_t i = 0; i < 1000000; ++i) {
    RngStream rng = root.substream(i);
    vs.add(resolve_branches(g, G1, x, HackerType::A2, VictimAction::C, r, rng).victim_payoff);
  }
  CHECK(std::abs(vs.mean - (-1.7875)) <= 3.0 * vs.std_error());
}
