#include "ransom/hacker_payoff.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ransom {
namespace {

struct Branch {
  double keep;     // probability the recovery step fails (1 in Gamma1)
  double restore;  // probability the files come back without paying: p3 + (1 - p3) p1
};

Branch branch_probs(const GameParams& g, GameVariant variant) {
  const double p3 = variant == GameVariant::Gamma2 ? g.recovery_prob() : 0.0;
  return {1.0 - p3, p3 + (1.0 - p3) * g.p1};
}

}  // namespace

double eta(const GameParams& g, GameVariant variant, const RegionPartition& partition, HackerType type, double r) {
  if (!(r >= 0.0)) throw std::invalid_argument("eta: ransom must be >= 0");
  const Branch br = branch_probs(g, variant);
  const int pay_index = variant == GameVariant::Gamma1 ? 1 : 3;
  const double p2 = p2_eval(g.willingness, r);
  const double s = p2 * (1.0 - g.p1) * br.keep;  // prob. the fallback action ends in payment
  const auto& F = g.valuation;

  // Revenue per victim who takes the fallback action (C or R).
  const double fallback = type == HackerType::A1
                              ? r * s
                              : g.b1 * br.restore + (g.b2 + r * p2) * (1.0 - g.p1) * br.keep;

  if (partition.is_small(r)) {
    const double upper = psi(g, variant, pay_index, r);
    const double tail = survival(F, upper);
    const double pay_band = survival(F, r / g.p) - tail;
    if (type == HackerType::A1) return fallback * tail + r * pay_band;
    return fallback * tail + (g.b2 + r) * pay_band + g.b1 * cdf(F, r / g.p);
  }
  const double lower = psi(g, variant, pay_index + 1, r);
  if (type == HackerType::A1) return fallback * survival(F, lower);
  return fallback * survival(F, lower) + g.b1 * cdf(F, lower);
}

double eta(const GameParams& g, GameVariant variant, HackerType type, double r) {
  return eta(g, variant, region_boundary(g, variant), type, r);
}

double type_gap_d(const GameParams& g, GameVariant variant, const RegionPartition& partition, double r) {
  if (!(r >= 0.0)) throw std::invalid_argument("type_gap_d: ransom must be >= 0");
  const Branch br = branch_probs(g, variant);
  const int pay_index = variant == GameVariant::Gamma1 ? 1 : 3;
  const auto& F = g.valuation;
  if (partition.is_small(r)) {
    const double upper = psi(g, variant, pay_index, r);
    return g.b2 + (g.b1 - g.b2) * (br.restore * survival(F, upper) + cdf(F, r / g.p));
  }
  const double lower = psi(g, variant, pay_index + 1, r);
  return g.b1 + (1.0 - br.restore) * (g.b2 - g.b1) * survival(F, lower);
}

double type_gap_d(const GameParams& g, GameVariant variant, double r) {
  return type_gap_d(g, variant, region_boundary(g, variant), r);
}

std::vector<double> ransom_grid(const GridSpec& spec) {
  if (spec.n <= 0) throw std::invalid_argument("grid must contain at least one point");
  if (!(spec.lo <= spec.hi)) throw std::invalid_argument("grid lo must not exceed hi");
  if (spec.axis == GridSpec::Axis::Ransom && !(spec.lo >= 0.0 && std::isfinite(spec.hi))) {
    throw std::invalid_argument("ransom grid must lie in [0, inf)");
  }
  if (spec.axis == GridSpec::Axis::Transformed && !(spec.lo > 0.0 && spec.hi <= 1.0)) {
    throw std::invalid_argument("transformed grid must lie in (0, 1]");
  }
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(spec.n));
  for (int i = 0; i < spec.n; ++i) {
    const double t = spec.n == 1 ? 0.0 : static_cast<double>(i) / (spec.n - 1);
    const double v = spec.lo + t * (spec.hi - spec.lo);
    out.push_back(spec.axis == GridSpec::Axis::Ransom ? v : from_transformed(v));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PayoffCurve payoff_curve(const GameParams& g, GameVariant variant, HackerType type, const GridSpec& spec) {
  const auto rs = ransom_grid(spec);
  PayoffCurve curve;
  curve.variant = variant;
  curve.hacker_type = type;
  const RegionPartition part = region_boundary(g, variant);
  curve.omega = part.omega;
  curve.points.reserve(rs.size());
  for (double r : rs) {
    const double e = eta(g, variant, part, type, r);
    curve.points.push_back({r, to_transformed(r), e - g.c4, e > g.c4});
  }
  return curve;
}

}  // namespace ransom
