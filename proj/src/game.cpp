#include "ransom/game.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ransom {

std::string_view to_string(HackerType t) { return t == HackerType::A1 ? "A1" : "A2"; }

std::string_view to_string(VictimAction a) {
  switch (a) {
    case VictimAction::D: return "D";
    case VictimAction::P: return "P";
    case VictimAction::C: return "C";
    case VictimAction::R: return "R";
  }
  return "?";
}

std::string_view to_string(GameVariant v) { return v == GameVariant::Gamma1 ? "gamma1" : "gamma2"; }

HackerType parse_hacker_type(std::string_view s) {
  if (s == "A1" || s == "a1") return HackerType::A1;
  if (s == "A2" || s == "a2") return HackerType::A2;
  throw std::invalid_argument("unknown hacker type '" + std::string(s) + "'");
}

VictimAction parse_victim_action(std::string_view s) {
  if (s == "D") return VictimAction::D;
  if (s == "P") return VictimAction::P;
  if (s == "C") return VictimAction::C;
  if (s == "R") return VictimAction::R;
  throw std::invalid_argument("unknown victim action '" + std::string(s) + "'");
}

GameVariant parse_variant(std::string_view s) {
  if (s == "gamma1" || s == "Gamma1" || s == "1") return GameVariant::Gamma1;
  if (s == "gamma2" || s == "Gamma2" || s == "2") return GameVariant::Gamma2;
  throw std::invalid_argument("unknown game variant '" + std::string(s) + "'");
}

std::vector<VictimAction> admissible_actions(GameVariant v) {
  if (v == GameVariant::Gamma1) return {VictimAction::D, VictimAction::C, VictimAction::P};
  return {VictimAction::D, VictimAction::R, VictimAction::P};
}

bool is_admissible(GameVariant v, VictimAction a) {
  switch (a) {
    case VictimAction::D:
    case VictimAction::P: return true;
    case VictimAction::C: return v == GameVariant::Gamma1;
    case VictimAction::R: return v == GameVariant::Gamma2;
  }
  return false;
}

std::vector<std::string> validation_errors(const GameParams& g, GameVariant variant) {
  std::vector<std::string> errs;
  auto prob = [&](const char* name, double v) {
    if (!(v >= 0.0 && v <= 1.0)) errs.push_back(std::string(name) + " must lie in [0, 1]");
  };
  auto cost = [&](const char* name, double v) {
    if (!(std::isfinite(v) && v >= 0.0)) errs.push_back(std::string(name) + " must be finite and >= 0");
  };
  prob("p", g.p);
  prob("p1", g.p1);
  if (!(g.p > g.p1)) errs.emplace_back("p must exceed p1");
  cost("c1", g.c1);
  cost("c2", g.c2);
  cost("c4", g.c4);
  cost("b1", g.b1);
  cost("b2", g.b2);
  if (!(g.b1 <= g.b2)) errs.emplace_back("b1 must not exceed b2");
  if (variant == GameVariant::Gamma2) {
    if (!g.p3) errs.emplace_back("gamma2 requires p3");
    else prob("p3", *g.p3);
    if (!g.c3) errs.emplace_back("gamma2 requires c3");
    else cost("c3", *g.c3);
  } else {
    if (g.p3) prob("p3", *g.p3);
    if (g.c3) cost("c3", *g.c3);
  }
  try {
    validate(g.willingness);
  } catch (const std::invalid_argument& e) {
    errs.emplace_back(e.what());
  }
  try {
    validate(g.valuation);
  } catch (const std::invalid_argument& e) {
    errs.emplace_back(e.what());
  }
  return errs;
}

void require_valid(const GameParams& params, GameVariant variant) {
  const auto errs = validation_errors(params, variant);
  if (errs.empty()) return;
  std::ostringstream os;
  os << "invalid game parameters:";
  for (const auto& e : errs) os << "\n  - " << e;
  throw std::invalid_argument(os.str());
}

namespace {

void require_action(GameVariant v, VictimAction a) {
  if (!is_admissible(v, a)) {
    throw std::invalid_argument("action " + std::string(to_string(a)) + " is not admissible in " +
                                std::string(to_string(v)));
  }
}

void require_nonneg(double x, double r) {
  if (!(x >= 0.0)) throw std::invalid_argument("valuation x must be >= 0");
  if (!(r >= 0.0)) throw std::invalid_argument("ransom r must be >= 0");
}

}  // namespace

double victim_utility(const GameParams& g, GameVariant variant, double x, HackerType t, VictimAction a,
                      double r) {
  require_action(variant, a);
  require_nonneg(x, r);
  // The files are lost only when paying a fake hacker; a failed crack that ends
  // without payment costs c1 alone.
  const double lost = t == HackerType::A2 ? x : 0.0;
  const double q = p2_eval(g.willingness, r) * (1.0 - g.p1);
  switch (a) {
    case VictimAction::D: return -x;
    case VictimAction::P: return -lost - r;
    case VictimAction::C: return -g.c1 - (lost + g.c2 + r) * q;
    case VictimAction::R:
      return -g.recovery_cost() - (g.c1 + (lost + g.c2 + r) * q) * (1.0 - g.recovery_prob());
  }
  return 0.0;
}

double hacker_utility(const GameParams& g, GameVariant variant, double x, HackerType t, VictimAction a,
                      double r) {
  require_action(variant, a);
  require_nonneg(x, r);
  const double p2 = p2_eval(g.willingness, r);
  const double p3 = g.recovery_prob();
  if (t == HackerType::A1) {
    switch (a) {
      case VictimAction::D: return -g.c4;
      case VictimAction::P: return r - g.c4;
      case VictimAction::C: return r * p2 * (1.0 - g.p1) - g.c4;
      case VictimAction::R: return r * p2 * (1.0 - g.p1) * (1.0 - p3) - g.c4;
    }
  }
  switch (a) {
    case VictimAction::D: return g.b1 - g.c4;
    case VictimAction::P: return g.b2 + r - g.c4;
    case VictimAction::C: return g.b1 * g.p1 + (g.b2 + r * p2) * (1.0 - g.p1) - g.c4;
    case VictimAction::R:
      return g.b1 * (p3 + (1.0 - p3) * g.p1) + (g.b2 + r * p2) * (1.0 - g.p1) * (1.0 - p3) - g.c4;
  }
  return 0.0;
}

double victim_expected_payoff(const GameParams& g, GameVariant variant, double x, VictimAction a, double r) {
  require_action(variant, a);
  require_nonneg(x, r);
  const double q = p2_eval(g.willingness, r) * (1.0 - g.p1);
  switch (a) {
    case VictimAction::D: return -x;
    case VictimAction::P: return -x * (1.0 - g.p) - r;
    case VictimAction::C: return -x * q * (1.0 - g.p) - g.c1 - (g.c2 + r) * q;
    case VictimAction::R: {
      const double keep = 1.0 - g.recovery_prob();
      return -x * q * keep * (1.0 - g.p) - (g.c1 + (g.c2 + r) * q) * keep - g.recovery_cost();
    }
  }
  return 0.0;
}

}  // namespace ransom
