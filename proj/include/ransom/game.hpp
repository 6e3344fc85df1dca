#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ransom/stochastics.hpp"

namespace ransom {

enum class HackerType { A1, A2 };  // genuine, fake

enum class VictimAction { D, P, C, R };  // discard, pay, crack, recover

/// Gamma1: no backup, actions {D, P, C}. Gamma2: backup, actions {D, P, R}.
enum class GameVariant { Gamma1, Gamma2 };

inline constexpr std::array kHackerTypes{HackerType::A1, HackerType::A2};

std::string_view to_string(HackerType t);
std::string_view to_string(VictimAction a);
std::string_view to_string(GameVariant v);
HackerType parse_hacker_type(std::string_view s);
VictimAction parse_victim_action(std::string_view s);
GameVariant parse_variant(std::string_view s);

/// Actions available to the victim in a variant, in tie-break preference order
/// (D first, then the crack/recover action, then P).
std::vector<VictimAction> admissible_actions(GameVariant v);
bool is_admissible(GameVariant v, VictimAction a);

/// Exogenous game parameters. Recovery fields are only read by Gamma2.
struct GameParams {
  double p = 0.9;   // prior on a genuine (A1) hacker
  double p1 = 0.1;  // crack success probability
  std::optional<double> p3;  // recovery success probability
  double c1 = 1.0;  // crack cost
  double c2 = 0.5;  // punishment fee on late payment (never reaches the hacker)
  std::optional<double> c3;  // recovery cost
  double c4 = 0.2;  // attack cost
  double b1 = 1.0;  // fake-hacker side earnings when files are discarded or restored
  double b2 = 1.5;  // fake-hacker side earnings otherwise
  PaymentWillingness willingness = PowerDecay{2.0};
  ValuationDistribution valuation = Exponential{1.0};

  [[nodiscard]] double recovery_prob() const { return p3.value_or(0.0); }
  [[nodiscard]] double recovery_cost() const { return c3.value_or(0.0); }
};

/// Every invariant violation, one message each; empty when valid.
std::vector<std::string> validation_errors(const GameParams& params, GameVariant variant);

/// Throws std::invalid_argument listing all violations.
void require_valid(const GameParams& params, GameVariant variant);

/// Realized victim payoff for one (type, action) profile, averaged only over the
/// crack/recovery/payment branch randomness.
double victim_utility(const GameParams& params, GameVariant variant, double x, HackerType t, VictimAction a,
                      double r);

double hacker_utility(const GameParams& params, GameVariant variant, double x, HackerType t, VictimAction a,
                      double r);

/// Victim's expected payoff over the hacker type prior {p, 1 - p}.
double victim_expected_payoff(const GameParams& params, GameVariant variant, double x, VictimAction a, double r);

}  // namespace ransom
