#include "ransom/io.hpp"

#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

namespace ransom {

ConfigError::ConfigError(std::vector<std::string> problems)
    : std::runtime_error([&] {
        std::string msg = "invalid configuration:";
        for (const auto& p : problems) msg += "\n  - " + p;
        return msg;
      }()),
      problems_(std::move(problems)) {}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Non-finite doubles have no JSON literal; they are written as strings.
json num(double v) {
  if (std::isfinite(v)) return v;
  return format_double(v);
}

double read_num(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return INFINITY;
    if (s == "-inf") return -INFINITY;
    if (s == "nan") return NAN;
  }
  return j.get<double>();
}

std::string join(const std::string& where, const std::string& key) {
  return where.empty() ? key : where + "." + key;
}

void check_keys(const json& j, const std::string& where, std::initializer_list<const char*> allowed,
                std::vector<std::string>& errors) {
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [k, v] : j.items()) {
    if (!ok.count(k)) errors.push_back(join(where, k) + ": unknown key");
  }
}

void read_double(const json& j, const char* key, const std::string& where, double& dst,
                 std::vector<std::string>& errors) {
  if (!j.contains(key)) return;
  const auto& v = j.at(key);
  if (!v.is_number()) {
    errors.push_back(join(where, key) + ": expected a number");
    return;
  }
  dst = v.get<double>();
}

}  // namespace

json to_json(const ValuationDistribution& d) {
  return std::visit(overloaded{
                        [](const Exponential& e) { return json{{"type", "exponential"}, {"rate", e.rate}}; },
                        [](const LogNormal& e) { return json{{"type", "lognormal"}, {"mu", e.mu}, {"sigma", e.sigma}}; },
                        [](const Uniform& e) { return json{{"type", "uniform"}, {"lo", e.lo}, {"hi", e.hi}}; },
                    },
                    d);
}

json to_json(const PaymentWillingness& w) {
  return std::visit(
      overloaded{
          [](const PowerDecay& f) { return json{{"type", "power_decay"}, {"exponent", f.exponent}}; },
          [](const ExpDecay& f) { return json{{"type", "exp_decay"}, {"rate", f.rate}}; },
          [](const LinearCutoff& f) {
            return json{{"type", "linear_cutoff"}, {"level", f.level}, {"cutoff", f.cutoff}};
          },
      },
      w);
}

json to_json(const GameParams& g) {
  json j{{"p", g.p},   {"p1", g.p1}, {"c1", g.c1}, {"c2", g.c2},
         {"c4", g.c4}, {"b1", g.b1}, {"b2", g.b2}, {"willingness", to_json(g.willingness)},
         {"valuation", to_json(g.valuation)}};
  if (g.p3) j["p3"] = *g.p3;
  if (g.c3) j["c3"] = *g.c3;
  return j;
}

json to_json(const SearchConfig& c) {
  return {{"grid_points", c.grid_points},
          {"refine_rel_width", c.refine_rel_width},
          {"tol_argmax_rel", c.tol_argmax_rel},
          {"tol_gate_rel", c.tol_gate_rel}};
}

json to_json(const EquilibriumResult& e) {
  json j{{"variant", to_string(e.variant)},
         {"hacker_type", to_string(e.hacker_type)},
         {"ransom", e.ransom},
         {"launched", e.launched},
         {"payoff", e.payoff},
         {"eta_max", num(e.eta_max)},
         {"smallest_maximizer", e.smallest_maximizer},
         {"region", to_string(e.region)},
         {"omega", e.omega},
         {"argmax_set", e.argmax_set},
         {"diagnostics", e.diagnostics}};
  json cands = json::array();
  for (const auto& c : e.candidates) cands.push_back({{"r", c.r}, {"eta", c.eta}});
  j["candidates"] = cands;
  if (e.randomized) {
    json mix = json::array();
    for (const auto& w : *e.randomized) mix.push_back({{"r", w.r}, {"weight", w.weight}});
    j["randomized"] = mix;
  } else {
    j["randomized"] = nullptr;
  }
  return j;
}

EquilibriumResult equilibrium_from_json(const json& j) {
  try {
    EquilibriumResult e;
    e.variant = parse_variant(j.at("variant").get<std::string>());
    e.hacker_type = parse_hacker_type(j.at("hacker_type").get<std::string>());
    e.ransom = j.at("ransom").get<double>();
    e.launched = j.at("launched").get<bool>();
    e.payoff = j.at("payoff").get<double>();
    e.eta_max = read_num(j.at("eta_max"));
    e.smallest_maximizer = j.at("smallest_maximizer").get<double>();
    const auto region = j.at("region").get<std::string>();
    if (region != "small" && region != "large") throw std::invalid_argument("bad region '" + region + "'");
    e.region = region == "small" ? RansomRegion::SmallRansom : RansomRegion::LargeRansom;
    e.omega = j.at("omega").get<double>();
    e.argmax_set = j.at("argmax_set").get<std::vector<double>>();
    e.diagnostics = j.value("diagnostics", std::vector<std::string>{});
    for (const auto& c : j.value("candidates", json::array())) {
      e.candidates.push_back({c.at("r").get<double>(), read_num(c.at("eta"))});
    }
    if (j.contains("randomized") && !j.at("randomized").is_null()) {
      std::vector<WeightedRansom> mix;
      for (const auto& w : j.at("randomized")) mix.push_back({w.at("r").get<double>(), w.at("weight").get<double>()});
      e.randomized = std::move(mix);
    }
    return e;
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& ex) {
    throw ConfigError({std::string("equilibrium result: ") + ex.what()});
  }
}

json to_json(const OrderingReport& o) {
  return {{"variant", to_string(o.variant)}, {"applicable", o.applicable}, {"note", o.note},
          {"ransom_a1", o.ransom_a1},       {"ransom_a2", o.ransom_a2},   {"region_a2", to_string(o.region_a2)},
          {"expected", o.expected},         {"holds", o.holds}};
}

json to_json(const ComparativeReport& c) {
  json pts = json::array();
  for (const auto& p : c.grid_evidence) {
    pts.push_back({{"value", p.value},
                   {"payoff", p.payoff},
                   {"ransom", p.ransom},
                   {"region", to_string(p.region)},
                   {"excluded", p.excluded}});
  }
  return {{"parameter", c.parameter},
          {"variant", to_string(c.variant)},
          {"hacker_type", to_string(c.hacker_type)},
          {"at_equilibrium", c.at_equilibrium},
          {"direction", to_string(c.direction)},
          {"region", to_string(c.region)},
          {"violations", c.violations},
          {"excluded", c.excluded},
          {"grid_evidence", pts}};
}

json to_json(const SimulationSummary& s) {
  json freq = json::object();
  for (auto a : {VictimAction::D, VictimAction::P, VictimAction::C, VictimAction::R}) {
    freq[std::string(to_string(a))] = s.action_frequencies[static_cast<std::size_t>(a)];
  }
  return {{"n", s.n},
          {"mean_hacker_payoff", s.mean_hacker_payoff},
          {"std_error", s.std_error},
          {"mean_victim_payoff", s.mean_victim_payoff},
          {"victim_std_error", s.victim_std_error},
          {"action_frequencies", freq},
          {"type_counts", {{"A1", s.type_counts[0]}, {"A2", s.type_counts[1]}}}};
}

ValuationDistribution valuation_from_json(const json& j, const std::string& where, std::vector<std::string>& errors) {
  if (!j.is_object() || !j.contains("type") || !j.at("type").is_string()) {
    errors.push_back(where + ": expected an object with a string 'type'");
    return Exponential{};
  }
  const auto type = j.at("type").get<std::string>();
  ValuationDistribution out;
  if (type == "exponential") {
    check_keys(j, where, {"type", "rate"}, errors);
    Exponential d;
    read_double(j, "rate", where, d.rate, errors);
    out = d;
  } else if (type == "lognormal") {
    check_keys(j, where, {"type", "mu", "sigma"}, errors);
    LogNormal d;
    read_double(j, "mu", where, d.mu, errors);
    read_double(j, "sigma", where, d.sigma, errors);
    out = d;
  } else if (type == "uniform") {
    check_keys(j, where, {"type", "lo", "hi"}, errors);
    Uniform d;
    read_double(j, "lo", where, d.lo, errors);
    read_double(j, "hi", where, d.hi, errors);
    out = d;
  } else {
    errors.push_back(where + ".type: unknown valuation family '" + type + "'");
    return Exponential{};
  }
  return out;  // family ranges are checked with the rest of the parameters
}

PaymentWillingness willingness_from_json(const json& j, const std::string& where, std::vector<std::string>& errors) {
  if (!j.is_object() || !j.contains("type") || !j.at("type").is_string()) {
    errors.push_back(where + ": expected an object with a string 'type'");
    return PowerDecay{};
  }
  const auto type = j.at("type").get<std::string>();
  PaymentWillingness out;
  if (type == "power_decay") {
    check_keys(j, where, {"type", "exponent"}, errors);
    PowerDecay f;
    read_double(j, "exponent", where, f.exponent, errors);
    out = f;
  } else if (type == "exp_decay") {
    check_keys(j, where, {"type", "rate"}, errors);
    ExpDecay f;
    read_double(j, "rate", where, f.rate, errors);
    out = f;
  } else if (type == "linear_cutoff") {
    check_keys(j, where, {"type", "level", "cutoff"}, errors);
    LinearCutoff f;
    read_double(j, "level", where, f.level, errors);
    read_double(j, "cutoff", where, f.cutoff, errors);
    out = f;
  } else {
    errors.push_back(where + ".type: unknown willingness family '" + type + "'");
    return PowerDecay{};
  }
  return out;  // family ranges are checked with the rest of the parameters
}

GameParams params_from_json(const json& j, std::vector<std::string>& errors) {
  GameParams g;
  if (!j.is_object()) {
    errors.emplace_back("params: expected an object");
    return g;
  }
  check_keys(j, "params", {"p", "p1", "p3", "c1", "c2", "c3", "c4", "b1", "b2", "willingness", "valuation"}, errors);
  read_double(j, "p", "params", g.p, errors);
  read_double(j, "p1", "params", g.p1, errors);
  read_double(j, "c1", "params", g.c1, errors);
  read_double(j, "c2", "params", g.c2, errors);
  read_double(j, "c4", "params", g.c4, errors);
  read_double(j, "b1", "params", g.b1, errors);
  read_double(j, "b2", "params", g.b2, errors);
  for (const char* key : {"p3", "c3"}) {
    if (!j.contains(key) || j.at(key).is_null()) continue;
    double v = 0.0;
    read_double(j, key, "params", v, errors);
    (std::string(key) == "p3" ? g.p3 : g.c3) = v;
  }
  if (j.contains("willingness")) g.willingness = willingness_from_json(j.at("willingness"), "params.willingness", errors);
  if (j.contains("valuation")) g.valuation = valuation_from_json(j.at("valuation"), "params.valuation", errors);
  return g;
}

SearchConfig search_from_json(const json& j, std::vector<std::string>& errors) {
  SearchConfig c;
  if (!j.is_object()) {
    errors.emplace_back("search: expected an object");
    return c;
  }
  check_keys(j, "search", {"grid_points", "refine_rel_width", "tol_argmax_rel", "tol_gate_rel"}, errors);
  if (j.contains("grid_points")) {
    if (!j.at("grid_points").is_number_integer() || j.at("grid_points").get<long long>() < 2) {
      errors.emplace_back("search.grid_points: expected an integer >= 2");
    } else {
      c.grid_points = j.at("grid_points").get<int>();
    }
  }
  read_double(j, "refine_rel_width", "search", c.refine_rel_width, errors);
  read_double(j, "tol_argmax_rel", "search", c.tol_argmax_rel, errors);
  read_double(j, "tol_gate_rel", "search", c.tol_gate_rel, errors);
  if (!(c.refine_rel_width > 0.0)) errors.emplace_back("search.refine_rel_width: must be > 0");
  if (!(c.tol_argmax_rel >= 0.0)) errors.emplace_back("search.tol_argmax_rel: must be >= 0");
  if (!(c.tol_gate_rel >= 0.0)) errors.emplace_back("search.tol_gate_rel: must be >= 0");
  return c;
}

RunConfig parse_run_config(const json& doc) {
  std::vector<std::string> errors;
  RunConfig cfg;
  if (!doc.is_object()) throw ConfigError({"config root must be a JSON object"});
  cfg.doc = doc;
  check_keys(doc, "",
             {"variant", "params", "seed", "search", "thresholds", "best_response", "payoff_curve", "simulate",
              "check", "description"},
             errors);
  if (doc.contains("variant")) {
    try {
      cfg.variant = parse_variant(doc.at("variant").get<std::string>());
    } catch (const std::exception&) {
      errors.emplace_back("variant: expected \"gamma1\" or \"gamma2\"");
    }
  }
  if (doc.contains("params")) cfg.params = params_from_json(doc.at("params"), errors);
  if (doc.contains("seed")) {
    if (doc.at("seed").is_number_unsigned()) {
      cfg.seed = doc.at("seed").get<std::uint64_t>();
    } else {
      errors.emplace_back("seed: expected a non-negative integer");
    }
  }
  if (doc.contains("search")) cfg.search = search_from_json(doc.at("search"), errors);
  for (const char* block : {"thresholds", "best_response", "payoff_curve", "simulate", "check"}) {
    if (doc.contains(block) && !doc.at(block).is_object()) errors.push_back(std::string(block) + ": expected an object");
  }
  for (const auto& e : validation_errors(cfg.params, cfg.variant)) errors.push_back("params: " + e);
  if (!errors.empty()) throw ConfigError(std::move(errors));
  return cfg;
}

void apply_override(json& doc, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw ConfigError({"--set expects path=value, got '" + assignment + "'"});
  }
  const std::string path = assignment.substr(0, eq);
  const std::string raw = assignment.substr(eq + 1);
  json value = json::parse(raw, nullptr, false);
  if (value.is_discarded()) value = raw;

  json* node = &doc;
  std::stringstream ss(path);
  std::string part;
  std::vector<std::string> parts;
  while (std::getline(ss, part, '.')) parts.push_back(part);
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    if (!node->is_object()) throw ConfigError({"--set " + path + ": '" + parts[i] + "' is not inside an object"});
    node = &(*node)[parts[i]];
    if (node->is_null()) *node = json::object();
  }
  if (!node->is_object()) throw ConfigError({"--set " + path + ": parent is not an object"});
  (*node)[parts.back()] = value;
}

std::string csv_payoff_header() { return "variant,hacker_type,r,u,eta_minus_c4,launched"; }

std::string csv_row(const PayoffCurve& c, const PayoffPoint& pt) {
  std::string row;
  row += to_string(c.variant);
  row += ',';
  row += to_string(c.hacker_type);
  row += ',' + format_double(pt.r) + ',' + format_double(pt.u) + ',' + format_double(pt.eta_minus_c4) + ',';
  row += pt.launched ? "1" : "0";
  return row;
}

}  // namespace ransom
