#pragma once

#include <optional>
#include <string>

#include "ransom/game.hpp"

namespace ransom {

/// Split of ransom space into the small-ransom set [0, omega] (where paying can
/// be optimal) and the large-ransom set [omega, inf) (where it never is).
struct RegionPartition {
  double omega = 0.0;
  GameVariant variant = GameVariant::Gamma1;
  /// |Psi(omega)|
  double residual = 0.0;
  /// Psi >= -tol before omega and <= tol after it, on the verification grid.
  bool sign_pattern_ok = true;
  /// Non-empty when the verification grid found a second sign change.
  std::string diagnostic;

  [[nodiscard]] bool is_small(double r) const { return r <= omega + 1e-12 * (1.0 + omega); }
};

enum class RansomRegion { SmallRansom, LargeRansom };

std::string_view to_string(RansomRegion region);

struct StrategyRegion {
  double lower_D = 0.0;  // discard iff x <= lower_D
  std::optional<double> upper_P;  // pay iff lower_D < x <= upper_P (small ransoms only)
  RansomRegion region = RansomRegion::SmallRansom;
};

/// Valuation thresholds. 1/2 belong to Gamma1, 3/4 to Gamma2 (3/4 require the
/// Gamma2 variant). Throws DegenerateParameterError when the denominator is <= 0.
double psi(const GameParams& params, GameVariant variant, int index, double r);

/// Sign-determining function: Psi(r) >= 0 exactly on the small-ransom set.
double capital_psi(const GameParams& params, GameVariant variant, double r);

/// Upper end of the root search; see region_boundary.
double root_search_cap(const GameParams& params);

/// Smallest root of Psi, by grid bracketing then bisection.
/// Throws SearchCapError when Psi stays positive up to the cap.
RegionPartition region_boundary(const GameParams& params, GameVariant variant);

StrategyRegion strategy_region(const GameParams& params, GameVariant variant, const RegionPartition& partition,
                               double r);
StrategyRegion strategy_region(const GameParams& params, GameVariant variant, double r);

/// The victim's weakly dominant action. Discard wins every tie it is part of;
/// at x == upper_P the victim pays.
VictimAction best_response(const GameParams& params, GameVariant variant, const RegionPartition& partition,
                           double x, double r);
VictimAction best_response(const GameParams& params, GameVariant variant, double x, double r);

/// The non-pay, non-discard action of the variant (C or R).
VictimAction fallback_action(GameVariant variant);

}  // namespace ransom
