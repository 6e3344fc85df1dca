#include "ransom/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "ransom/best_response.hpp"
#include "ransom/equilibrium.hpp"
#include "ransom/errors.hpp"
#include "ransom/hacker_payoff.hpp"
#include "ransom/io.hpp"
#include "ransom/simulation.hpp"

namespace ransom {
namespace {

enum class Format { Csv, Json };

struct Context {
  RunConfig cfg;
  Format format = Format::Json;
  bool format_given = false;
  std::ostream* out = nullptr;
  std::ostream* err = nullptr;
};

const json& block(const RunConfig& cfg, const char* name) {
  static const json empty = json::object();
  return cfg.doc.contains(name) ? cfg.doc.at(name) : empty;
}

std::string region_label(GameVariant v, bool small) {
  if (v == GameVariant::Gamma1) return small ? "M1" : "M2";
  return small ? "M3" : "M4";
}

bool has_recovery(const GameParams& g) { return g.p3.has_value() && g.c3.has_value(); }

// A ransom field is a number, or "A1"/"A2" for that type's equilibrium ransom.
double resolve_ransom(const Context& ctx, const json& v, const std::string& where) {
  if (v.is_number()) {
    const double r = v.get<double>();
    if (!(r >= 0.0)) throw ConfigError({where + ": ransom must be >= 0"});
    return r;
  }
  if (v.is_string()) {
    HackerType t;
    try {
      t = parse_hacker_type(v.get<std::string>());
    } catch (const std::exception&) {
      throw ConfigError({where + ": expected a number, \"A1\" or \"A2\""});
    }
    return find_equilibrium(ctx.cfg.params, ctx.cfg.variant, t, ctx.cfg.search).smallest_maximizer;
  }
  throw ConfigError({where + ": expected a number, \"A1\" or \"A2\""});
}

std::vector<double> number_list(const json& v, const std::string& where) {
  std::vector<double> xs;
  if (!v.is_array()) throw ConfigError({where + ": expected an array of numbers"});
  for (const auto& e : v) {
    if (!e.is_number()) throw ConfigError({where + ": expected an array of numbers"});
    xs.push_back(e.get<double>());
  }
  return xs;
}

GridSpec grid_from_json(const json& j, GridSpec def, const std::string& where) {
  std::vector<std::string> errors;
  GridSpec g = def;
  if (!j.is_object()) throw ConfigError({where + ": expected an object"});
  if (j.contains("axis")) {
    const auto axis = j.at("axis").is_string() ? j.at("axis").get<std::string>() : "";
    if (axis == "u") g.axis = GridSpec::Axis::Transformed;
    else if (axis == "r") g.axis = GridSpec::Axis::Ransom;
    else errors.push_back(where + ".axis: expected \"u\" or \"r\"");
  }
  for (const char* key : {"lo", "hi"}) {
    if (!j.contains(key)) continue;
    if (!j.at(key).is_number()) errors.push_back(where + "." + key + ": expected a number");
    else (std::string(key) == "lo" ? g.lo : g.hi) = j.at(key).get<double>();
  }
  if (j.contains("n")) {
    if (!j.at("n").is_number_integer() || j.at("n").get<long long>() < 1) errors.push_back(where + ".n: expected an integer >= 1");
    else g.n = j.at("n").get<int>();
  }
  if (!errors.empty()) throw ConfigError(errors);
  try {
    (void)ransom_grid(g);
  } catch (const std::invalid_argument& e) {
    throw ConfigError({where + ": " + e.what()});
  }
  return g;
}

std::string opt_str(const std::optional<double>& v) { return v ? format_double(*v) : ""; }

json opt_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

// ---------------------------------------------------------------------------

int cmd_thresholds(Context& ctx) {
  const auto& g = ctx.cfg.params;
  const auto v = ctx.cfg.variant;
  const json& blk = block(ctx.cfg, "thresholds");
  std::vector<double> rs{0.0, 1.0};
  if (blk.contains("r")) rs = number_list(blk.at("r"), "thresholds.r");
  for (double r : rs) {
    if (!(r >= 0.0)) throw ConfigError({"thresholds.r: ransoms must be >= 0"});
  }
  const RegionPartition part = region_boundary(g, v);
  const bool g2 = v == GameVariant::Gamma2;

  json rows = json::array();
  std::ostringstream csv;
  csv << "r,r_over_p,psi1,psi2" << (g2 ? ",psi3,psi4" : "") << ",region\n";
  for (double r : rs) {
    const bool small = part.is_small(r);
    json row{{"r", r},
             {"r_over_p", r / g.p},
             {"psi1", psi(g, v, 1, r)},
             {"psi2", psi(g, v, 2, r)},
             {"region", region_label(v, small)},
             {"ransom_region", to_string(small ? RansomRegion::SmallRansom : RansomRegion::LargeRansom)}};
    csv << format_double(r) << ',' << format_double(r / g.p) << ',' << format_double(row["psi1"].get<double>()) << ','
        << format_double(row["psi2"].get<double>());
    if (g2) {
      row["psi3"] = psi(g, v, 3, r);
      row["psi4"] = psi(g, v, 4, r);
      csv << ',' << format_double(row["psi3"].get<double>()) << ',' << format_double(row["psi4"].get<double>());
    }
    csv << ',' << region_label(v, small) << '\n';
    rows.push_back(row);
  }
  json doc{{"variant", to_string(v)}, {"omega", part.omega}, {"residual", part.residual}, {"rows", rows}};
  if (g2) doc["omega_gamma1"] = region_boundary(g, GameVariant::Gamma1).omega;
  if (!part.sign_pattern_ok) doc["diagnostic"] = part.diagnostic;
  if (ctx.format == Format::Csv) *ctx.out << csv.str();
  else *ctx.out << doc.dump(2) << '\n';
  return kExitOk;
}

int cmd_best_response(Context& ctx, bool sweep) {
  const auto& g = ctx.cfg.params;
  const auto v = ctx.cfg.variant;
  const json& blk = block(ctx.cfg, "best_response");
  const RegionPartition part = region_boundary(g, v);

  if (sweep) {
    GridSpec def{GridSpec::Axis::Transformed, 0.05, 1.0, 200};
    const GridSpec spec = blk.contains("sweep") ? grid_from_json(blk.at("sweep"), def, "best_response.sweep") : def;
    json rows = json::array();
    std::ostringstream csv;
    csv << "r,u,lower_D,upper_P,region\n";
    for (double r : ransom_grid(spec)) {
      const StrategyRegion s = strategy_region(g, v, part, r);
      const std::string reg = region_label(v, s.region == RansomRegion::SmallRansom);
      csv << format_double(r) << ',' << format_double(to_transformed(r)) << ',' << format_double(s.lower_D) << ','
          << opt_str(s.upper_P) << ',' << reg << '\n';
      rows.push_back({{"r", r}, {"u", to_transformed(r)}, {"lower_D", s.lower_D}, {"upper_P", opt_json(s.upper_P)},
                      {"region", reg}});
    }
    if (ctx.format == Format::Json) *ctx.out << json{{"variant", to_string(v)}, {"omega", part.omega}, {"rows", rows}}.dump(2) << '\n';
    else *ctx.out << csv.str();
    return kExitOk;
  }

  const double r = resolve_ransom(ctx, blk.value("r", json("A1")), "best_response.r");
  std::vector<double> xs{0.0, 0.25, 0.5, 1.0, 2.0, 5.0};
  if (blk.contains("x")) xs = number_list(blk.at("x"), "best_response.x");
  for (double x : xs) {
    if (!(x >= 0.0)) throw ConfigError({"best_response.x: valuations must be >= 0"});
  }
  const StrategyRegion s = strategy_region(g, v, part, r);
  json rows = json::array();
  std::ostringstream csv;
  csv << "x,action\n";
  for (double x : xs) {
    const auto a = best_response(g, v, part, x, r);
    rows.push_back({{"x", x}, {"action", to_string(a)}});
    csv << format_double(x) << ',' << to_string(a) << '\n';
  }
  if (ctx.format == Format::Csv) {
    *ctx.out << csv.str();
  } else {
    *ctx.out << json{{"variant", to_string(v)},
                     {"r", r},
                     {"lower_D", s.lower_D},
                     {"upper_P", opt_json(s.upper_P)},
                     {"region", region_label(v, s.region == RansomRegion::SmallRansom)},
                     {"rows", rows}}
                    .dump(2)
             << '\n';
  }
  return kExitOk;
}

int cmd_equilibrium(Context& ctx) {
  const auto& g = ctx.cfg.params;
  const auto v = ctx.cfg.variant;
  json results = json::array();
  std::ostringstream csv;
  csv << "variant,hacker_type,ransom,launched,payoff,region\n";
  std::ostringstream summary;
  summary << to_string(v) << ':';
  for (HackerType t : kHackerTypes) {
    const auto e = find_equilibrium(g, v, t, ctx.cfg.search);
    results.push_back(to_json(e));
    csv << to_string(v) << ',' << to_string(t) << ',' << format_double(e.ransom) << ',' << (e.launched ? 1 : 0) << ','
        << format_double(e.payoff) << ',' << to_string(e.region) << '\n';
    summary << ' ' << to_string(t) << " r*=" << format_double(e.ransom) << (e.launched ? " launched" : " not-launched")
            << " payoff=" << format_double(e.payoff) << ';';
    for (const auto& d : e.diagnostics) *ctx.err << "note (" << to_string(t) << "): " << d << '\n';
  }
  const OrderingReport ord = check_ordering(g, v, ctx.cfg.search);
  if (ctx.format == Format::Csv) {
    *ctx.out << csv.str();
  } else {
    *ctx.out << json{{"variant", to_string(v)}, {"results", results}, {"ordering", to_json(ord)}}.dump(2) << '\n';
  }
  *ctx.err << summary.str() << " ordering " << ord.expected << (ord.holds ? " holds" : " fails") << '\n';
  return kExitOk;
}

int cmd_payoff_curve(Context& ctx) {
  const auto& g = ctx.cfg.params;
  const auto v = ctx.cfg.variant;
  const json& blk = block(ctx.cfg, "payoff_curve");
  GridSpec def{GridSpec::Axis::Transformed, 0.01, 1.0, 200};
  const GridSpec spec = blk.contains("grid") ? grid_from_json(blk.at("grid"), def, "payoff_curve.grid") : def;
  std::vector<HackerType> types(kHackerTypes.begin(), kHackerTypes.end());
  if (blk.contains("hacker_types")) {
    types.clear();
    try {
      for (const auto& t : blk.at("hacker_types")) types.push_back(parse_hacker_type(t.get<std::string>()));
    } catch (const std::exception&) {
      throw ConfigError({"payoff_curve.hacker_types: expected a list of \"A1\"/\"A2\""});
    }
  }
  json curves = json::array();
  std::ostringstream csv;
  csv << csv_payoff_header() << '\n';
  for (HackerType t : types) {
    const PayoffCurve c = payoff_curve(g, v, t, spec);
    json pts = json::array();
    for (const auto& pt : c.points) {
      csv << csv_row(c, pt) << '\n';
      pts.push_back({{"r", pt.r}, {"u", pt.u}, {"eta_minus_c4", pt.eta_minus_c4}, {"launched", pt.launched}});
    }
    curves.push_back({{"variant", to_string(v)}, {"hacker_type", to_string(t)}, {"omega", c.omega}, {"points", pts}});
  }
  if (ctx.format == Format::Json) *ctx.out << curves.dump(2) << '\n';
  else *ctx.out << csv.str();
  return kExitOk;
}

std::string flag(const std::optional<bool>& f) { return f ? (*f ? "1" : "0") : ""; }

// Debug dump, one row per playout, replaying the substreams simulate() used.
void write_playouts(const Context& ctx, const RegionPartition& part, double r, std::uint64_t n,
                    const SimulationOptions& opt, const json& path) {
  if (!path.is_string()) throw ConfigError({"simulate.dump: expected a file path"});
  std::ofstream file(path.get<std::string>());
  if (!file) throw ConfigError({"simulate.dump: cannot write '" + path.get<std::string>() + "'"});
  file << "i,victim_valuation,hacker_type,action,crack_succeeded,paid_after_crack_fail,recovery_succeeded,"
          "victim_payoff,hacker_payoff\n";
  const RngStream root(ctx.cfg.seed);
  for (std::uint64_t i = 0; i < n; ++i) {
    RngStream rng = root.substream(i);
    const auto rec = playout(ctx.cfg.params, ctx.cfg.variant, part, r, rng, opt.fixed_type);
    file << i << ',' << format_double(rec.victim_valuation) << ',' << to_string(rec.hacker_type) << ','
         << to_string(rec.action) << ',' << flag(rec.crack_succeeded) << ',' << flag(rec.paid_after_crack_fail) << ','
         << flag(rec.recovery_succeeded) << ',' << format_double(rec.victim_payoff) << ','
         << format_double(rec.hacker_payoff) << '\n';
  }
}

int cmd_simulate(Context& ctx) {
  const auto& g = ctx.cfg.params;
  const auto v = ctx.cfg.variant;
  const json& blk = block(ctx.cfg, "simulate");
  const double r = resolve_ransom(ctx, blk.value("r", json("A1")), "simulate.r");
  std::uint64_t n = 100000;
  if (blk.contains("n")) {
    if (!blk.at("n").is_number_integer() || blk.at("n").get<long long>() < 1) {
      throw ConfigError({"simulate.n: expected an integer >= 1"});
    }
    n = blk.at("n").get<std::uint64_t>();
  }
  SimulationOptions opt;
  if (blk.contains("hacker_type")) {
    try {
      opt.fixed_type = parse_hacker_type(blk.at("hacker_type").get<std::string>());
    } catch (const std::exception&) {
      throw ConfigError({"simulate.hacker_type: expected \"A1\" or \"A2\""});
    }
  }
  if (blk.contains("threads")) opt.threads = std::max(1, blk.at("threads").get<int>());

  const RegionPartition part = region_boundary(g, v);
  const SimulationSummary s = simulate(g, v, r, n, ctx.cfg.seed, opt);
  if (blk.contains("dump")) write_playouts(ctx, part, r, n, opt, blk.at("dump"));
  double expected;
  if (opt.fixed_type) {
    expected = eta(g, v, part, *opt.fixed_type, r) - g.c4;
  } else {
    expected = g.p * eta(g, v, part, HackerType::A1, r) + (1.0 - g.p) * eta(g, v, part, HackerType::A2, r) - g.c4;
  }
  const double diff = std::abs(s.mean_hacker_payoff - expected);
  const double z = s.std_error > 0.0 ? diff / s.std_error : (diff <= 1e-12 * (1.0 + std::abs(expected)) ? 0.0 : INFINITY);
  json doc{{"variant", to_string(v)},
           {"r", r},
           {"seed", ctx.cfg.seed},
           {"hacker_type", opt.fixed_type ? std::string(to_string(*opt.fixed_type)) : std::string("prior")},
           {"summary", to_json(s)},
           {"closed_form", expected},
           {"z", std::isfinite(z) ? json(z) : json("inf")},
           {"within_3se", z <= 3.0}};
  if (ctx.format == Format::Csv) {
    *ctx.out << "n,mean_hacker_payoff,std_error,closed_form,z\n"
             << s.n << ',' << format_double(s.mean_hacker_payoff) << ',' << format_double(s.std_error) << ','
             << format_double(expected) << ',' << format_double(z) << '\n';
  } else {
    *ctx.out << doc.dump(2) << '\n';
  }
  if (z > 4.0) {
    *ctx.err << "simulation disagrees with the closed form: |z| = " << format_double(z) << '\n';
    return kExitOracle;
  }
  return kExitOk;
}

// ---- check ----------------------------------------------------------------

struct Range {
  double lo, hi;
};

// Sweep range of +-50% around the base value, clipped to keep parameters valid.
Range sweep_range(const GameParams& g, const std::string& name) {
  const double base = parameter_value(g, name);
  Range r{base * 0.5, base * 1.5};
  if (base == 0.0) r = {0.0, 0.5};
  if (name == "p") r = {std::max(r.lo, g.p1 + 0.01), std::min(r.hi, 0.99)};
  if (name == "p1") r = {r.lo, std::min(r.hi, g.p - 0.01)};
  if (name == "p3" || name == "p2.level") r.hi = std::min(r.hi, 1.0);
  if (name == "p2.exponent") r.lo = std::max(r.lo, 1.05);
  return r;
}

std::vector<double> linspace(Range r, int n) {
  std::vector<double> v;
  for (int i = 0; i < n; ++i) v.push_back(n == 1 ? r.lo : r.lo + (r.hi - r.lo) * i / (n - 1));
  return v;
}

std::string willingness_parameter(const GameParams& g) {
  return std::visit(
      [](const auto& f) -> std::string {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, PowerDecay>) return "p2.exponent";
        else if constexpr (std::is_same_v<T, ExpDecay>) return "p2.rate";
        else return "p2.level";
      },
      g.willingness);
}

int cmd_check(Context& ctx) {
  const auto& g = ctx.cfg.params;
  const json& blk = block(ctx.cfg, "check");
  const int points = blk.value("points", 30);
  const int r_points = blk.value("r_points", 200);
  if (points < 2 || r_points < 2) throw ConfigError({"check.points and check.r_points must be >= 2"});

  std::vector<GameVariant> variants{GameVariant::Gamma1};
  if (has_recovery(g)) variants.push_back(GameVariant::Gamma2);

  json report = json::object();
  long total = 0;

  // Fake hackers earn at least as much as genuine ones, at every ransom.
  json dom = json::array();
  const GridSpec rgrid{GridSpec::Axis::Transformed, 0.01, 1.0, r_points};
  for (auto v : variants) {
    const RegionPartition part = region_boundary(g, v);
    int bad = 0;
    int identity_bad = 0;
    for (double r : ransom_grid(rgrid)) {
      const double e1 = eta(g, v, part, HackerType::A1, r);
      const double e2 = eta(g, v, part, HackerType::A2, r);
      if (e2 < e1 - 1e-12 * (1.0 + std::abs(e1))) ++bad;
      if (std::abs(type_gap_d(g, v, part, r) - (e2 - e1)) > 1e-12 * (1.0 + std::abs(e2))) ++identity_bad;
    }
    const bool valley = type_gap_has_valley_shape(g, v);
    dom.push_back({{"variant", to_string(v)},
                   {"a2_dominates_violations", bad},
                   {"type_gap_identity_violations", identity_bad},
                   {"type_gap_valley_shape", valley}});
    total += bad + identity_bad;
  }
  report["type_dominance"] = dom;

  json ords = json::array();
  for (auto v : variants) {
    const OrderingReport o = check_ordering(g, v, ctx.cfg.search);
    ords.push_back(to_json(o));
    if (o.applicable && !o.holds) ++total;
  }
  report["ordering"] = ords;

  // Cost monotonicity at fixed ransoms on each side of the region boundary.
  json costs = json::array();
  for (auto v : variants) {
    const double omega = region_boundary(g, v).omega;
    std::vector<std::string> names{"c1", "c2", "c4"};
    if (v == GameVariant::Gamma2) names.emplace_back("c3");
    for (double r : {0.5 * omega, 2.0 * omega + 1.0}) {
      for (HackerType t : kHackerTypes) {
        for (const auto& name : names) {
          const auto rep = comparative_statics(g, v, t, name, linspace(sweep_range(g, name), points),
                                               EvaluationPoint{r}, ctx.cfg.search);
          json j = to_json(rep);
          j["fixed_ransom"] = r;
          j.erase("grid_evidence");
          costs.push_back(j);
          total += rep.violations;
        }
      }
    }
  }
  report["cost_monotonicity"] = costs;

  // Probability monotonicity at equilibrium.
  json probs = json::array();
  for (auto v : variants) {
    std::vector<std::string> names{"p1", "p", willingness_parameter(g)};
    if (v == GameVariant::Gamma2) names.emplace_back("p3");
    for (HackerType t : kHackerTypes) {
      for (const auto& name : names) {
        const auto rep = comparative_statics(g, v, t, name, linspace(sweep_range(g, name), points), EvaluationPoint{},
                                             ctx.cfg.search);
        json j = to_json(rep);
        j.erase("grid_evidence");
        probs.push_back(j);
        total += rep.violations;
      }
    }
  }
  report["probability_monotonicity"] = probs;

  if (has_recovery(g)) {
    const double omega1 = region_boundary(g, GameVariant::Gamma2).omega;
    const auto cmp = compare_games(g, linspace({0.0, omega1}, points), ctx.cfg.search);
    report["game_comparison"] = {{"dominance_applicable", cmp.dominance_applicable},
                                 {"violations", cmp.violations},
                                 {"max_payoff_gamma1", {{"A1", cmp.max_payoff_gamma1[0]}, {"A2", cmp.max_payoff_gamma1[1]}}},
                                 {"max_payoff_gamma2", {{"A1", cmp.max_payoff_gamma2[0]}, {"A2", cmp.max_payoff_gamma2[1]}}}};
    total += cmp.violations;
  } else {
    report["game_comparison"] = {{"skipped", "no recovery parameters"}};
  }
  report["total_violations"] = total;

  *ctx.out << report.dump(2) << '\n';
  *ctx.err << "check: " << total << " violation(s)\n";
  return total == 0 ? kExitOk : kExitProperty;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ransom payment game solver"};
  app.require_subcommand(1);
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string out_path;
  std::string format;
  std::vector<std::string> sets;
  app.add_option("--config", config_path, "JSON config file");
  app.add_option("--seed", seed, "RNG seed (overrides the config)");
  app.add_option("--out", out_path, "write the report to this file");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--set", sets, "override a config field, path=value")->take_all();
  app.fallthrough();

  bool sweep = false;
  auto* thresholds = app.add_subcommand("thresholds", "threshold valuations and region boundary");
  auto* best = app.add_subcommand("best-response", "victim action per valuation");
  best->add_flag("--sweep", sweep, "emit the boundary curves over an r-grid");
  auto* equilibrium = app.add_subcommand("equilibrium", "equilibrium ransom for both hacker types");
  auto* curve = app.add_subcommand("payoff-curve", "hacker payoff against the ransom");
  auto* sim = app.add_subcommand("simulate", "Monte Carlo playouts against the closed form");
  auto* check = app.add_subcommand("check", "comparative-statics and ordering property suite");
  for (auto* sc : {thresholds, best, equilibrium, curve, sim, check}) sc->fallthrough();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  Context ctx;
  ctx.err = &err;
  std::ofstream file;
  try {
    json doc = json::object();
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw ConfigError({"cannot open config '" + config_path + "'"});
      doc = json::parse(in, nullptr, false);
      if (doc.is_discarded()) throw ConfigError({"config '" + config_path + "' is not valid JSON"});
    }
    for (const auto& s : sets) apply_override(doc, s);
    ctx.cfg = parse_run_config(doc);
    if (seed) ctx.cfg.seed = *seed;

    const bool csv_default = curve->parsed() || (best->parsed() && sweep);
    ctx.format = format.empty() ? (csv_default ? Format::Csv : Format::Json)
                                : (format == "csv" ? Format::Csv : Format::Json);
    if (check->parsed() && ctx.format == Format::Csv) throw ConfigError({"check only emits json"});

    ctx.out = &out;
    if (!out_path.empty()) {
      file.open(out_path);
      if (!file) throw ConfigError({"cannot write '" + out_path + "'"});
      ctx.out = &file;
    }

    if (thresholds->parsed()) return cmd_thresholds(ctx);
    if (best->parsed()) return cmd_best_response(ctx, sweep);
    if (equilibrium->parsed()) return cmd_equilibrium(ctx);
    if (curve->parsed()) return cmd_payoff_curve(ctx);
    if (sim->parsed()) return cmd_simulate(ctx);
    if (check->parsed()) return cmd_check(ctx);
    return kExitConfig;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const DegenerateParameterError& e) {
    err << "degenerate parameters: " << e.what() << '\n';
    return kExitDegenerate;
  } catch (const SearchCapError& e) {
    err << "search cap reached: " << e.what() << '\n';
    return kExitDegenerate;
  } catch (const Con1Violation& e) {
    err << "unbounded payment term: " << e.what() << '\n';
    return kExitCon1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }
}

}  // namespace ransom
