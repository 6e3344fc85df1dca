#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "ransom/best_response.hpp"
#include "ransom/game.hpp"
#include "ransom/rng.hpp"

namespace ransom {

/// One sampled play of the game. Branch flags are set only on branches that
/// were actually reached.
struct PlayoutRecord {
  double victim_valuation = 0.0;
  HackerType hacker_type = HackerType::A1;
  VictimAction action = VictimAction::D;
  std::optional<bool> crack_succeeded;
  std::optional<bool> paid_after_crack_fail;
  std::optional<bool> recovery_succeeded;
  double victim_payoff = 0.0;
  double hacker_payoff = 0.0;
};

/// Resolves the stochastic branches of a fixed (x, type, action) profile.
/// Order under R: recover, then crack on failure, then maybe pay.
PlayoutRecord resolve_branches(const GameParams& params, GameVariant variant, double x, HackerType type,
                               VictimAction action, double r, RngStream& rng);

/// Full playout: draw V and the hacker type, apply the victim's best response,
/// then resolve the branches.
PlayoutRecord playout(const GameParams& params, GameVariant variant, const RegionPartition& partition, double r,
                      RngStream& rng, std::optional<HackerType> fixed_type = std::nullopt);
PlayoutRecord playout(const GameParams& params, GameVariant variant, double r, RngStream& rng);

/// Running mean and variance (Welford), mergeable in a fixed order.
struct RunningStats {
  std::uint64_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double v);
  void merge(const RunningStats& other);
  [[nodiscard]] double variance() const;  // sample variance, 0 when n < 2
  [[nodiscard]] double std_error() const;
};

struct SimulationOptions {
  std::optional<HackerType> fixed_type;
  int threads = 1;
  std::uint64_t block_size = 1 << 14;
};

struct SimulationSummary {
  std::uint64_t n = 0;
  double mean_hacker_payoff = 0.0;
  double std_error = 0.0;
  double mean_victim_payoff = 0.0;
  double victim_std_error = 0.0;
  std::array<double, 4> action_frequencies{};  // indexed by VictimAction
  std::array<std::uint64_t, 4> action_counts{};
  std::array<std::uint64_t, 2> type_counts{};  // indexed by HackerType
  /// Victim and hacker payoff statistics per (type, action) profile.
  std::array<std::array<RunningStats, 4>, 2> victim_by_profile{};
  std::array<std::array<RunningStats, 4>, 2> hacker_by_profile{};
};

/// Aggregates n playouts; playout i uses substream i of the seed, so the
/// summary depends only on (seed, n, block_size) and not on thread count.
SimulationSummary simulate(const GameParams& params, GameVariant variant, double r, std::uint64_t n,
                           std::uint64_t seed, const SimulationOptions& options = {});

}  // namespace ransom
