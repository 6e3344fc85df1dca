#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ransom/best_response.hpp"
#include "ransom/game.hpp"

namespace ransom {

struct SearchConfig {
  /// Points of the uniform grid in u = 1/(r+1); the grid covers r in [0, N-1].
  int grid_points = 4096;
  /// Golden-section refinement stops once the bracket is <= this * (1 + r).
  double refine_rel_width = 1e-8;
  /// Maximizers within this * (1 + max eta) of the max share the argmax set.
  double tol_argmax_rel = 1e-9;
  /// Launch requires eta > c4 + this * (1 + c4).
  double tol_gate_rel = 1e-12;
};

struct Candidate {
  double r = 0.0;
  double eta = 0.0;
};

struct WeightedRansom {
  double r = 0.0;
  double weight = 0.0;
};

struct EquilibriumResult {
  GameVariant variant = GameVariant::Gamma1;
  HackerType hacker_type = HackerType::A1;
  /// Equilibrium ransom; 0 when the attack is not launched.
  double ransom = 0.0;
  bool launched = false;
  /// eta(ransom) - c4 when launched, else 0 (or the randomized expectation).
  double payoff = 0.0;
  /// max_r eta(r), regardless of the launch gate.
  double eta_max = 0.0;
  /// Smallest maximizer, regardless of the launch gate.
  double smallest_maximizer = 0.0;
  RansomRegion region = RansomRegion::SmallRansom;
  double omega = 0.0;
  std::vector<double> argmax_set;
  std::optional<std::vector<WeightedRansom>> randomized;
  /// Refined local maxima, ascending in r.
  std::vector<Candidate> candidates;
  std::vector<std::string> diagnostics;
};

/// Pure equilibrium for one hacker type: smallest global maximizer of eta,
/// gated by eta > c4. Throws Con1Violation when r * p2(r) is unbounded.
EquilibriumResult find_equilibrium(const GameParams& params, GameVariant variant, HackerType type,
                                   const SearchConfig& cfg = {});

/// Randomizes the hacker over a non-singleton argmax set. `weights` align with
/// `argmax_set` and must sum to 1 within 1e-12.
EquilibriumResult randomized_equilibrium(const GameParams& params, GameVariant variant, HackerType type,
                                         const std::vector<double>& weights, const SearchConfig& cfg = {});
EquilibriumResult randomize(const EquilibriumResult& pure, const GameParams& params,
                            const std::vector<double>& weights);

// ---------------------------------------------------------------------------
// Equilibrium ransom ordering between the two hacker types.
// ---------------------------------------------------------------------------

struct OrderingReport {
  GameVariant variant = GameVariant::Gamma1;
  /// The type gap d(r) falls on the small-ransom set and rises on the large one.
  bool applicable = false;
  std::string note;
  double ransom_a1 = 0.0;
  double ransom_a2 = 0.0;
  RansomRegion region_a2 = RansomRegion::SmallRansom;
  /// "r_A1 >= r_A2" when r_A2 is a small ransom, "r_A1 <= r_A2" otherwise.
  std::string expected;
  bool holds = false;
};

/// Whether d(r) is non-increasing on [0, omega] and non-decreasing beyond, on a
/// grid of `points` ransoms (uniform in u) up to the root-search cap.
bool type_gap_has_valley_shape(const GameParams& params, GameVariant variant, int points = 2048);

OrderingReport check_ordering(const GameParams& params, GameVariant variant, const SearchConfig& cfg = {});

// ---------------------------------------------------------------------------
// Comparative statics.
// ---------------------------------------------------------------------------

enum class Direction { Increasing, Decreasing };
enum class RegionScope { Small, Large, All };

std::string_view to_string(Direction d);
std::string_view to_string(RegionScope s);

/// Parameters a sweep can move: c1 c2 c3 c4 p p1 p3 b1 b2 and the willingness
/// shape (p2.exponent, p2.rate, p2.level, p2.cutoff).
GameParams with_parameter(const GameParams& params, const std::string& name, double value);
double parameter_value(const GameParams& params, const std::string& name);

/// Payoff direction predicted for moving `name` upward with the evaluated ransom
/// in `region`; nullopt when no prediction exists (e.g. b1, b2).
std::optional<Direction> predicted_direction(const GameParams& params, const std::string& name,
                                             RansomRegion region);

struct EvaluationPoint {
  /// Evaluate at this fixed ransom; nullopt means re-solve the equilibrium.
  std::optional<double> fixed_ransom;
};

struct SweepPoint {
  double value = 0.0;
  double payoff = 0.0;  // eta - c4 (ungated)
  double ransom = 0.0;
  RansomRegion region = RansomRegion::SmallRansom;
  bool excluded = false;
};

struct ComparativeReport {
  std::string parameter;
  GameVariant variant = GameVariant::Gamma1;
  HackerType hacker_type = HackerType::A1;
  bool at_equilibrium = false;
  Direction direction = Direction::Increasing;
  RegionScope region = RegionScope::All;
  std::vector<SweepPoint> grid_evidence;
  int violations = 0;
  int excluded = 0;
};

/// Sweeps one parameter over a sorted grid and counts monotonicity violations
/// beyond 1e-9. Points whose ransom leaves the first point's region are excluded.
ComparativeReport comparative_statics(const GameParams& params, GameVariant variant, HackerType type,
                                      const std::string& parameter, const std::vector<double>& grid,
                                      const EvaluationPoint& at, const SearchConfig& cfg = {});

// ---------------------------------------------------------------------------
// Backup versus no backup.
// ---------------------------------------------------------------------------

struct GameComparisonRow {
  double r = 0.0;
  bool in_small_region_gamma2 = false;
  double eta_gamma1_a1 = 0.0;
  double eta_gamma1_a2 = 0.0;
  double eta_gamma2_a1 = 0.0;
  double eta_gamma2_a2 = 0.0;
};

struct GameComparison {
  /// c3 <= p3 * c1: the backup game is predicted to pay the hacker less on
  /// small ransoms.
  bool dominance_applicable = false;
  std::vector<GameComparisonRow> rows;
  int violations = 0;
  /// max_r eta - c4 per type, [A1, A2].
  double max_payoff_gamma1[2] = {0.0, 0.0};
  double max_payoff_gamma2[2] = {0.0, 0.0};
};

GameComparison compare_games(const GameParams& params, const std::vector<double>& r_grid,
                             const SearchConfig& cfg = {});

}  // namespace ransom
