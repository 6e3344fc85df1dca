#pragma once

#include <vector>

#include "ransom/best_response.hpp"
#include "ransom/game.hpp"

namespace ransom {

/// Hacker's expected revenue at ransom r against the victim's weakly dominant
/// strategy, excluding the attack cost c4. Closed form in survival values.
double eta(const GameParams& params, GameVariant variant, const RegionPartition& partition, HackerType type,
           double r);
double eta(const GameParams& params, GameVariant variant, HackerType type, double r);

/// eta(A2, r) - eta(A1, r), from its own piecewise closed form.
double type_gap_d(const GameParams& params, GameVariant variant, const RegionPartition& partition, double r);
double type_gap_d(const GameParams& params, GameVariant variant, double r);

/// Evaluation grid for payoff curves: uniform in r, or uniform in the
/// compactified coordinate u = 1/(r+1) in (0, 1].
struct GridSpec {
  enum class Axis { Ransom, Transformed };
  Axis axis = Axis::Transformed;
  double lo = 0.0;
  double hi = 1.0;
  int n = 0;
};

/// Strictly increasing ransom values covered by the grid.
std::vector<double> ransom_grid(const GridSpec& spec);

inline double to_transformed(double r) { return 1.0 / (r + 1.0); }
inline double from_transformed(double u) { return 1.0 / u - 1.0; }

struct PayoffPoint {
  double r = 0.0;
  double u = 1.0;
  double eta_minus_c4 = 0.0;
  bool launched = false;  // eta > c4
};

struct PayoffCurve {
  GameVariant variant = GameVariant::Gamma1;
  HackerType hacker_type = HackerType::A1;
  double omega = 0.0;
  std::vector<PayoffPoint> points;
};

PayoffCurve payoff_curve(const GameParams& params, GameVariant variant, HackerType type, const GridSpec& spec);

}  // namespace ransom
