#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ransom/equilibrium.hpp"
#include "ransom/game.hpp"
#include "ransom/hacker_payoff.hpp"
#include "ransom/simulation.hpp"

namespace ransom {

using nlohmann::json;

/// Every problem found in a config document, reported together.
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(std::vector<std::string> problems);
  [[nodiscard]] const std::vector<std::string>& problems() const { return problems_; }

private:
  std::vector<std::string> problems_;
};

/// Shortest decimal string that parses back to the same double.
std::string format_double(double v);

json to_json(const ValuationDistribution& d);
json to_json(const PaymentWillingness& w);
json to_json(const GameParams& g);
json to_json(const SearchConfig& cfg);
json to_json(const EquilibriumResult& e);
json to_json(const OrderingReport& o);
json to_json(const ComparativeReport& c);
json to_json(const SimulationSummary& s);

/// Parsers append to `errors` instead of throwing.
ValuationDistribution valuation_from_json(const json& j, const std::string& where, std::vector<std::string>& errors);
PaymentWillingness willingness_from_json(const json& j, const std::string& where, std::vector<std::string>& errors);
GameParams params_from_json(const json& j, std::vector<std::string>& errors);
SearchConfig search_from_json(const json& j, std::vector<std::string>& errors);

/// Inverse of to_json(EquilibriumResult); throws ConfigError on malformed input.
EquilibriumResult equilibrium_from_json(const json& j);

/// Top-level run configuration: shared blocks parsed eagerly, command blocks
/// kept raw for the command that reads them.
struct RunConfig {
  GameVariant variant = GameVariant::Gamma1;
  GameParams params;
  std::uint64_t seed = 1;
  SearchConfig search;
  json doc = json::object();
};

/// Validates the whole document (schema and parameter invariants) and throws
/// a single ConfigError listing every problem.
RunConfig parse_run_config(const json& doc);

/// Applies "a.b.c=value" to a JSON document. The value is parsed as JSON when
/// possible and kept as a string otherwise.
void apply_override(json& doc, const std::string& assignment);

/// CSV helpers
std::string csv_payoff_header();
std::string csv_row(const PayoffCurve& curve, const PayoffPoint& pt);

}  // namespace ransom
