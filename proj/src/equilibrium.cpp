#include "ransom/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ransom/errors.hpp"
#include "ransom/hacker_payoff.hpp"

namespace ransom {
namespace {

constexpr double kMonotoneSlack = 1e-9;
constexpr double kInvPhi = 0.6180339887498948482;  // 1 / golden ratio

template <class F>
Candidate golden_maximize(F&& f, double a, double b, double rel_width) {
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int it = 0; it < 200 && (b - a) > rel_width * (1.0 + a); ++it) {
    // Ties move left so the search settles on the smaller maximizer.
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  Candidate best{a, f(a)};
  for (double r : {c, d, b}) {
    const double v = f(r);
    if (v > best.eta) best = {r, v};
  }
  return best;
}

}  // namespace

EquilibriumResult find_equilibrium(const GameParams& g, GameVariant variant, HackerType type,
                                   const SearchConfig& cfg) {
  require_valid(g, variant);
  if (cfg.grid_points < 2) throw std::invalid_argument("search grid needs at least 2 points");
  const Con1Check con1 = check_con1(g.willingness);
  if (!con1.bounded) {
    throw Con1Violation("r * p2(r) is unbounded for " + describe(g.willingness) +
                        "; an equilibrium ransom need not exist");
  }

  EquilibriumResult out;
  out.variant = variant;
  out.hacker_type = type;
  const RegionPartition part = region_boundary(g, variant);
  out.omega = part.omega;
  if (!part.sign_pattern_ok) out.diagnostics.push_back(part.diagnostic);
  if (con1.limit_at_infinity > 0.0) {
    out.diagnostics.emplace_back("r * p2(r) has a positive limit; the supremum of eta may only be approached as r -> inf");
  }

  auto f = [&](double r) { return eta(g, variant, part, type, r); };

  // u_i = i / N, i = N..1, gives r ascending from 0 to N - 1.
  const int n = cfg.grid_points;
  std::vector<double> rs(static_cast<std::size_t>(n));
  std::vector<double> vs(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double u = static_cast<double>(n - j) / n;
    rs[j] = j == 0 ? 0.0 : from_transformed(u);
    vs[j] = f(rs[j]);
  }

  std::vector<Candidate> cands;
  for (int j = 0; j < n; ++j) {
    const bool left_ok = j == 0 || vs[j] >= vs[j - 1];
    const bool right_ok = j == n - 1 || vs[j] >= vs[j + 1];
    if (!left_ok || !right_ok) continue;
    // Only the left end of a plateau is refined.
    if (j > 0 && vs[j] == vs[j - 1]) continue;
    const double a = rs[std::max(j - 1, 0)];
    const double b = rs[std::min(j + 1, n - 1)];
    Candidate c = golden_maximize(f, a, b, cfg.refine_rel_width);
    if (vs[j] > c.eta) c = {rs[j], vs[j]};
    cands.push_back(c);
    if (j == n - 1) {
      std::ostringstream os;
      os << "a local maximum sits at the grid edge r = " << rs[j] << "; eta may keep rising beyond it";
      out.diagnostics.push_back(os.str());
    }
  }

  std::sort(cands.begin(), cands.end(), [](const Candidate& x, const Candidate& y) { return x.r < y.r; });
  std::vector<Candidate> merged;
  for (const auto& c : cands) {
    if (!merged.empty() && c.r - merged.back().r <= 2.0 * cfg.refine_rel_width * (1.0 + c.r)) {
      if (c.eta > merged.back().eta) merged.back() = c;
      continue;
    }
    merged.push_back(c);
  }
  out.candidates = merged;

  double best = -std::numeric_limits<double>::infinity();
  for (const auto& c : merged) best = std::max(best, c.eta);
  out.eta_max = best;
  const double tol = cfg.tol_argmax_rel * (1.0 + std::abs(best));
  for (const auto& c : merged) {
    if (c.eta >= best - tol) {
      out.argmax_set.push_back(c.r);
    } else if (c.eta >= best - 1e3 * tol) {
      std::ostringstream os;
      os << "near-tie local maximum at r = " << c.r << " (gap " << best - c.eta << ") treated as distinct";
      out.diagnostics.push_back(os.str());
    }
  }
  out.smallest_maximizer = out.argmax_set.front();
  out.region = part.is_small(out.smallest_maximizer) ? RansomRegion::SmallRansom : RansomRegion::LargeRansom;

  const double gate = g.c4 + cfg.tol_gate_rel * (1.0 + g.c4);
  out.launched = best > gate;
  if (out.launched) {
    out.ransom = out.smallest_maximizer;
    out.payoff = best - g.c4;
  }
  return out;
}

EquilibriumResult randomize(const EquilibriumResult& pure, const GameParams& g, const std::vector<double>& weights) {
  if (pure.argmax_set.size() < 2) {
    throw std::invalid_argument("argmax set is a singleton; the pure equilibrium applies");
  }
  if (weights.size() != pure.argmax_set.size()) {
    throw std::invalid_argument("weights must align with the argmax set");
  }
  for (double w : weights) {
    if (!(w >= 0.0 && w <= 1.0)) throw std::invalid_argument("weights must lie in [0, 1]");
  }
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (std::abs(total - 1.0) > 1e-12) throw std::invalid_argument("weights must sum to 1");

  EquilibriumResult out = pure;
  std::vector<WeightedRansom> mix;
  double expected = 0.0;
  const RegionPartition part = region_boundary(g, pure.variant);
  for (std::size_t i = 0; i < weights.size(); ++i) {
    mix.push_back({pure.argmax_set[i], weights[i]});
    expected += weights[i] * eta(g, pure.variant, part, pure.hacker_type, pure.argmax_set[i]);
  }
  out.randomized = std::move(mix);
  out.payoff = pure.launched ? expected - g.c4 : 0.0;
  return out;
}

EquilibriumResult randomized_equilibrium(const GameParams& g, GameVariant variant, HackerType type,
                                         const std::vector<double>& weights, const SearchConfig& cfg) {
  return randomize(find_equilibrium(g, variant, type, cfg), g, weights);
}

bool type_gap_has_valley_shape(const GameParams& g, GameVariant variant, int points) {
  const RegionPartition part = region_boundary(g, variant);
  const double u_min = 1.0 / (1.0 + root_search_cap(g));
  double prev_r = 0.0;
  double prev_d = type_gap_d(g, variant, part, 0.0);
  for (int k = 1; k <= points; ++k) {
    const double u = 1.0 - (1.0 - u_min) * static_cast<double>(k) / points;
    const double r = from_transformed(u);
    const double d = type_gap_d(g, variant, part, r);
    const bool prev_small = part.is_small(prev_r);
    const bool small = part.is_small(r);
    const double slack = 1e-12 * (1.0 + std::abs(d));
    if (prev_small && small && d > prev_d + slack) return false;
    if (!prev_small && !small && d < prev_d - slack) return false;
    prev_r = r;
    prev_d = d;
  }
  return true;
}

OrderingReport check_ordering(const GameParams& g, GameVariant variant, const SearchConfig& cfg) {
  OrderingReport out;
  out.variant = variant;
  const auto e1 = find_equilibrium(g, variant, HackerType::A1, cfg);
  const auto e2 = find_equilibrium(g, variant, HackerType::A2, cfg);
  out.ransom_a1 = e1.smallest_maximizer;
  out.ransom_a2 = e2.smallest_maximizer;
  out.region_a2 = e2.region;
  out.applicable = type_gap_has_valley_shape(g, variant);
  out.note = out.applicable ? "type gap d(r) falls then rises around omega"
                            : "type gap d(r) lacks the valley shape; ordering not predicted";
  const double tol = 2.0 * cfg.refine_rel_width * (1.0 + std::max(out.ransom_a1, out.ransom_a2));
  if (out.region_a2 == RansomRegion::SmallRansom) {
    out.expected = "r_A1 >= r_A2";
    out.holds = out.ransom_a1 >= out.ransom_a2 - tol;
  } else {
    out.expected = "r_A1 <= r_A2";
    out.holds = out.ransom_a1 <= out.ransom_a2 + tol;
  }
  return out;
}

std::string_view to_string(Direction d) { return d == Direction::Increasing ? "increasing" : "decreasing"; }

std::string_view to_string(RegionScope s) {
  switch (s) {
    case RegionScope::Small: return "small";
    case RegionScope::Large: return "large";
    case RegionScope::All: return "all";
  }
  return "?";
}

namespace {

template <class T>
T& willingness_as(GameParams& g, const std::string& name) {
  if (auto* f = std::get_if<T>(&g.willingness)) return *f;
  throw std::invalid_argument("parameter " + name + " does not apply to " + describe(g.willingness));
}

template <class T>
const T& willingness_as(const GameParams& g, const std::string& name) {
  if (const auto* f = std::get_if<T>(&g.willingness)) return *f;
  throw std::invalid_argument("parameter " + name + " does not apply to " + describe(g.willingness));
}

// +1 when raising the parameter raises p2, -1 when it lowers p2.
int p2_sign(const std::string& name) {
  if (name == "p2.level" || name == "p2.cutoff") return +1;
  if (name == "p2.exponent" || name == "p2.rate") return -1;
  return 0;
}

Direction flip(Direction d) { return d == Direction::Increasing ? Direction::Decreasing : Direction::Increasing; }

}  // namespace

GameParams with_parameter(const GameParams& params, const std::string& name, double value) {
  GameParams g = params;
  if (name == "p") g.p = value;
  else if (name == "p1") g.p1 = value;
  else if (name == "p3") g.p3 = value;
  else if (name == "c1") g.c1 = value;
  else if (name == "c2") g.c2 = value;
  else if (name == "c3") g.c3 = value;
  else if (name == "c4") g.c4 = value;
  else if (name == "b1") g.b1 = value;
  else if (name == "b2") g.b2 = value;
  else if (name == "p2.exponent") willingness_as<PowerDecay>(g, name).exponent = value;
  else if (name == "p2.rate") willingness_as<ExpDecay>(g, name).rate = value;
  else if (name == "p2.level") willingness_as<LinearCutoff>(g, name).level = value;
  else if (name == "p2.cutoff") willingness_as<LinearCutoff>(g, name).cutoff = value;
  else throw std::invalid_argument("unknown sweep parameter '" + name + "'");
  return g;
}

double parameter_value(const GameParams& g, const std::string& name) {
  if (name == "p") return g.p;
  if (name == "p1") return g.p1;
  if (name == "p3") return g.recovery_prob();
  if (name == "c1") return g.c1;
  if (name == "c2") return g.c2;
  if (name == "c3") return g.recovery_cost();
  if (name == "c4") return g.c4;
  if (name == "b1") return g.b1;
  if (name == "b2") return g.b2;
  if (name == "p2.exponent") return willingness_as<PowerDecay>(g, name).exponent;
  if (name == "p2.rate") return willingness_as<ExpDecay>(g, name).rate;
  if (name == "p2.level") return willingness_as<LinearCutoff>(g, name).level;
  if (name == "p2.cutoff") return willingness_as<LinearCutoff>(g, name).cutoff;
  throw std::invalid_argument("unknown sweep parameter '" + name + "'");
}

std::optional<Direction> predicted_direction(const GameParams& params, const std::string& name,
                                             RansomRegion region) {
  (void)parameter_value(params, name);  // rejects unknown names
  const bool small = region == RansomRegion::SmallRansom;
  if (name == "c1" || name == "c2" || name == "c3") return small ? Direction::Increasing : Direction::Decreasing;
  if (name == "c4") return Direction::Decreasing;
  if (name == "p" || name == "b1" || name == "b2") return Direction::Increasing;
  if (name == "p1" || name == "p3") return small ? Direction::Decreasing : Direction::Increasing;
  if (const int s = p2_sign(name); s != 0) {
    const Direction up = small ? Direction::Increasing : Direction::Decreasing;
    return s > 0 ? up : flip(up);
  }
  return std::nullopt;
}

ComparativeReport comparative_statics(const GameParams& params, GameVariant variant, HackerType type,
                                      const std::string& parameter, const std::vector<double>& grid,
                                      const EvaluationPoint& at, const SearchConfig& cfg) {
  if (grid.empty()) throw std::invalid_argument("sweep grid is empty");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) throw std::invalid_argument("sweep grid must be strictly increasing");
  }
  if (at.fixed_ransom && !(*at.fixed_ransom >= 0.0)) throw std::invalid_argument("fixed ransom must be >= 0");

  ComparativeReport rep;
  rep.parameter = parameter;
  rep.variant = variant;
  rep.hacker_type = type;
  rep.at_equilibrium = !at.fixed_ransom;

  for (double value : grid) {
    const GameParams g = with_parameter(params, parameter, value);
    require_valid(g, variant);
    SweepPoint pt;
    pt.value = value;
    const RegionPartition part = region_boundary(g, variant);
    if (at.fixed_ransom) {
      pt.ransom = *at.fixed_ransom;
      pt.payoff = eta(g, variant, part, type, pt.ransom) - g.c4;
    } else {
      const auto eq = find_equilibrium(g, variant, type, cfg);
      pt.ransom = eq.smallest_maximizer;
      pt.payoff = eq.eta_max - g.c4;
    }
    pt.region = part.is_small(pt.ransom) ? RansomRegion::SmallRansom : RansomRegion::LargeRansom;
    rep.grid_evidence.push_back(pt);
  }

  const RansomRegion base = rep.grid_evidence.front().region;
  const auto dir = predicted_direction(params, parameter, base);
  if (!dir) throw std::invalid_argument("no predicted direction for parameter " + parameter);
  rep.direction = *dir;
  const bool region_free = parameter == "c4" || parameter == "p" || parameter == "b1" || parameter == "b2";
  rep.region = region_free ? RegionScope::All
                           : (base == RansomRegion::SmallRansom ? RegionScope::Small : RegionScope::Large);

  const SweepPoint* prev = nullptr;
  for (auto& pt : rep.grid_evidence) {
    if (!region_free && pt.region != base) {
      pt.excluded = true;
      ++rep.excluded;
      continue;
    }
    if (prev) {
      const double delta = pt.payoff - prev->payoff;
      if (rep.direction == Direction::Increasing ? delta < -kMonotoneSlack : delta > kMonotoneSlack) {
        ++rep.violations;
      }
    }
    prev = &pt;
  }
  return rep;
}

GameComparison compare_games(const GameParams& g, const std::vector<double>& r_grid, const SearchConfig& cfg) {
  require_valid(g, GameVariant::Gamma2);
  GameComparison out;
  out.dominance_applicable = g.recovery_cost() <= g.recovery_prob() * g.c1;
  const RegionPartition part1 = region_boundary(g, GameVariant::Gamma1);
  const RegionPartition part2 = region_boundary(g, GameVariant::Gamma2);
  for (double r : r_grid) {
    GameComparisonRow row;
    row.r = r;
    row.in_small_region_gamma2 = part2.is_small(r);
    row.eta_gamma1_a1 = eta(g, GameVariant::Gamma1, part1, HackerType::A1, r);
    row.eta_gamma1_a2 = eta(g, GameVariant::Gamma1, part1, HackerType::A2, r);
    row.eta_gamma2_a1 = eta(g, GameVariant::Gamma2, part2, HackerType::A1, r);
    row.eta_gamma2_a2 = eta(g, GameVariant::Gamma2, part2, HackerType::A2, r);
    if (out.dominance_applicable && row.in_small_region_gamma2 &&
        (row.eta_gamma2_a1 > row.eta_gamma1_a1 + kMonotoneSlack ||
         row.eta_gamma2_a2 > row.eta_gamma1_a2 + kMonotoneSlack)) {
      ++out.violations;
    }
    out.rows.push_back(row);
  }
  for (int t = 0; t < 2; ++t) {
    const HackerType type = kHackerTypes[t];
    out.max_payoff_gamma1[t] = find_equilibrium(g, GameVariant::Gamma1, type, cfg).eta_max - g.c4;
    out.max_payoff_gamma2[t] = find_equilibrium(g, GameVariant::Gamma2, type, cfg).eta_max - g.c4;
  }
  return out;
}

}  // namespace ransom
