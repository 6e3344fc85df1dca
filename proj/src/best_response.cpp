#include "ransom/best_response.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ransom/errors.hpp"

namespace ransom {
namespace {

constexpr int kVerifyGrid = 4096;
constexpr double kSignTol = 1e-9;

double checked_ratio(double num, double den, int index, double r) {
  if (!(den > 0.0)) {
    std::ostringstream os;
    os << "psi" << index << "(" << r << ") has non-positive denominator " << den
       << "; parameters are degenerate (p == 1 or p2(r)(1 - p1) == 1)";
    throw DegenerateParameterError(os.str());
  }
  return num / den;
}

}  // namespace

std::string_view to_string(RansomRegion region) {
  return region == RansomRegion::SmallRansom ? "small" : "large";
}

VictimAction fallback_action(GameVariant variant) {
  return variant == GameVariant::Gamma1 ? VictimAction::C : VictimAction::R;
}

double psi(const GameParams& g, GameVariant variant, int index, double r) {
  if (!(r >= 0.0)) throw std::invalid_argument("psi: ransom must be >= 0");
  if ((index == 3 || index == 4) && variant != GameVariant::Gamma2) {
    throw std::invalid_argument("psi3/psi4 require the gamma2 variant");
  }
  const double q = p2_eval(g.willingness, r) * (1.0 - g.p1);
  // Operation order mirrors the Gamma2 forms so p3 = c3 = 0 reproduces Gamma1 bit for bit.
  switch (index) {
    case 1: return checked_ratio(g.c1 + (g.c2 + r) * q - r, (1.0 - g.p) * (1.0 - q), 1, r);
    case 2: return checked_ratio(g.c1 + (g.c2 + r) * q, 1.0 - q * (1.0 - g.p), 2, r);
    case 3: {
      const double keep = 1.0 - g.recovery_prob();
      const double s = q * keep;
      return checked_ratio((g.c1 + (g.c2 + r) * q) * keep + g.recovery_cost() - r, (1.0 - g.p) * (1.0 - s), 3, r);
    }
    case 4: {
      const double keep = 1.0 - g.recovery_prob();
      const double s = q * keep;
      return checked_ratio((g.c1 + (g.c2 + r) * q) * keep + g.recovery_cost(), 1.0 - s * (1.0 - g.p), 4, r);
    }
    default: throw std::invalid_argument("psi index must be 1, 2, 3 or 4");
  }
}

double capital_psi(const GameParams& g, GameVariant variant, double r) {
  if (!(r >= 0.0)) throw std::invalid_argument("capital_psi: ransom must be >= 0");
  const double q = p2_eval(g.willingness, r) * (1.0 - g.p1);
  if (variant == GameVariant::Gamma1) return g.c1 * g.p + (g.c2 * g.p + r) * q - r;
  const double keep = 1.0 - g.recovery_prob();
  return g.c1 * g.p * keep + (g.c2 * g.p + r) * q * keep + g.recovery_cost() * g.p - r;
}

double root_search_cap(const GameParams& g) {
  const double cost_scale = 100.0 * (g.c1 + g.c2 + g.recovery_cost() + 1.0);
  return std::max(cost_scale, quantile(g.valuation, 0.9999)) * 10.0;
}

RegionPartition region_boundary(const GameParams& g, GameVariant variant) {
  RegionPartition out;
  out.variant = variant;
  const double cap = root_search_cap(g);

  // Grid uniform in u = 1/(1+r): dense near zero where the root usually sits.
  const double u_min = 1.0 / (1.0 + cap);
  auto grid_r = [&](int k) {
    if (k == 0) return 0.0;
    if (k == kVerifyGrid) return cap;
    const double u = 1.0 - (1.0 - u_min) * static_cast<double>(k) / kVerifyGrid;
    return 1.0 / u - 1.0;
  };

  double lo = 0.0;
  double hi = -1.0;
  if (capital_psi(g, variant, 0.0) <= 0.0) {
    hi = 0.0;
  } else {
    for (int k = 1; k <= kVerifyGrid; ++k) {
      const double rk = grid_r(k);
      if (capital_psi(g, variant, rk) <= 0.0) {
        lo = grid_r(k - 1);
        hi = rk;
        break;
      }
    }
    if (hi < 0.0) {
      std::ostringstream os;
      os << "no sign change of Psi found on [0, " << cap << "]";
      throw SearchCapError(os.str());
    }
    // Invariant: Psi(lo) > 0 >= Psi(hi); converge on inf{r : Psi(r) <= 0}.
    for (int it = 0; it < 400 && hi - lo > 0.0; ++it) {
      const double mid = lo + 0.5 * (hi - lo);
      if (mid <= lo || mid >= hi) break;
      if (capital_psi(g, variant, mid) > 0.0) lo = mid;
      else hi = mid;
    }
  }
  out.omega = hi;
  out.residual = std::abs(capital_psi(g, variant, hi));

  int flips = 0;
  for (int k = 0; k <= kVerifyGrid; ++k) {
    const double rk = grid_r(k);
    const double v = capital_psi(g, variant, rk);
    const bool bad = rk <= out.omega ? v < -kSignTol : v > kSignTol;
    if (bad) ++flips;
  }
  if (flips > 0 || out.residual > kSignTol) {
    out.sign_pattern_ok = false;
    std::ostringstream os;
    os << "Psi sign pattern violated at " << flips << " grid points (residual " << out.residual
       << "); the region root may not be unique";
    out.diagnostic = os.str();
  }
  return out;
}

StrategyRegion strategy_region(const GameParams& g, GameVariant variant, const RegionPartition& partition,
                               double r) {
  if (!(r >= 0.0)) throw std::invalid_argument("strategy_region: ransom must be >= 0");
  const int pay_index = variant == GameVariant::Gamma1 ? 1 : 3;
  StrategyRegion out;
  if (partition.is_small(r)) {
    out.region = RansomRegion::SmallRansom;
    out.lower_D = r / g.p;
    out.upper_P = psi(g, variant, pay_index, r);
  } else {
    out.region = RansomRegion::LargeRansom;
    out.lower_D = psi(g, variant, pay_index + 1, r);
  }
  return out;
}

StrategyRegion strategy_region(const GameParams& g, GameVariant variant, double r) {
  return strategy_region(g, variant, region_boundary(g, variant), r);
}

VictimAction best_response(const GameParams& g, GameVariant variant, const RegionPartition& partition, double x,
                           double r) {
  if (!(x >= 0.0)) throw std::invalid_argument("best_response: valuation must be >= 0");
  const StrategyRegion s = strategy_region(g, variant, partition, r);
  if (x <= s.lower_D) return VictimAction::D;
  if (s.upper_P && x <= *s.upper_P) return VictimAction::P;
  return fallback_action(variant);
}

VictimAction best_response(const GameParams& g, GameVariant variant, double x, double r) {
  return best_response(g, variant, region_boundary(g, variant), x, r);
}

}  // namespace ransom
