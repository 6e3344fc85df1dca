#include <doctest.h>

#include <stdexcept>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "ransom/cli.hpp"
#include "ransom/io.hpp"

using namespace ransom;

namespace {
struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string cfg(const char* name) { return std::string(RANSOM_CONFIG_DIR) + "/" + name; }
}  // namespace

TEST_CASE("shortest round-trip number formatting") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(145.00000000000006) == "145.00000000000006");
  for (double v : {1.0 / 3.0, 2.0 / 7.0, 1e-300, 123456.789}) CHECK(std::stod(format_double(v)) == v);
}

TEST_CASE("thresholds command") {
  const auto r = run({"thresholds", "--config", cfg("example1.json")});
  REQUIRE(r.code == kExitOk);
  const auto doc = json::parse(r.out);
  CHECK(doc["omega"].get<double>() == doctest::Approx(1.2062389378));
  const auto& rows = doc["rows"];
  CHECK(rows[0]["region"] == "M1");
  CHECK(rows[1]["psi1"].get<double>() == doctest::Approx(4.35484).epsilon(1e-6));
  CHECK(rows[1]["region"] == "M1");
  CHECK(rows[3]["region"] == "M2");

  const auto r2 = run({"thresholds", "--config", cfg("example2.json"), "--format", "csv"});
  REQUIRE(r2.code == kExitOk);
  CHECK(r2.out.rfind("r,r_over_p,psi1,psi2,psi3,psi4,region\n", 0) == 0);

  const auto degenerate = run({"thresholds", "--config", cfg("example1.json"), "--set", "params.p=1"});
  CHECK(degenerate.code == kExitDegenerate);
}

TEST_CASE("best-response command") {
  const auto r = run({"best-response", "--config", cfg("example1.json")});
  REQUIRE(r.code == kExitOk);
  const auto doc = json::parse(r.out);
  std::string bands;
  for (const auto& row : doc["rows"]) bands += row["action"].get<std::string>();
  CHECK(bands.front() == 'D');
  CHECK(bands.find('P') != std::string::npos);
  CHECK(bands.back() == 'C');

  const auto g2 = run({"best-response", "--config", cfg("example2.json"), "--set", "best_response.x=[0,0.5,2,50]"});
  REQUIRE(g2.code == kExitOk);
  std::string bands2;
  const auto doc2 = json::parse(g2.out);
  for (const auto& row : doc2["rows"]) bands2 += row["action"].get<std::string>();
  CHECK(bands2 == "DDPR");

  const auto sweep = run({"best-response", "--sweep", "--config", cfg("example1.json")});
  REQUIRE(sweep.code == kExitOk);
  CHECK(sweep.out.rfind("r,u,lower_D,upper_P,region\n", 0) == 0);
}

TEST_CASE("equilibrium command and result round trip") {
  const auto r = run({"equilibrium", "--config", cfg("example1.json")});
  REQUIRE(r.code == kExitOk);
  const auto doc = json::parse(r.out);
  const auto a1 = equilibrium_from_json(doc["results"][0]);
  const auto a2 = equilibrium_from_json(doc["results"][1]);
  CHECK(a1.launched);
  CHECK(a2.launched);
  CHECK(a2.ransom < a1.ransom);
  CHECK(to_json(a1) == doc["results"][0]);
  CHECK(to_json(a2).dump() == doc["results"][1].dump());
  CHECK(r.err.find("ordering") != std::string::npos);

  const auto gated = run({"equilibrium", "--config", cfg("example1.json"), "--set", "params.c4=1e6"});
  REQUIRE(gated.code == kExitOk);
  for (const auto& e : json::parse(gated.out)["results"]) {
    CHECK(e["launched"] == false);
    CHECK(e["ransom"].get<double>() == 0.0);
  }

  const auto con1 = run({"equilibrium", "--config", cfg("example1.json"), "--set",
                         R"(params.willingness={"type":"power_decay","exponent":0.5})"});
  CHECK(con1.code == kExitCon1);
}

TEST_CASE("payoff-curve command") {
  const auto r = run({"payoff-curve", "--config", cfg("example1.json"), "--set", "payoff_curve.grid.n=5"});
  REQUIRE(r.code == kExitOk);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "variant,hacker_type,r,u,eta_minus_c4,launched");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 10);
  CHECK(r.out.find("gamma1,A1,0,1,-0.2,0\n") != std::string::npos);
}

TEST_CASE("simulate command") {
  const std::vector<std::string> args{"simulate", "--config", cfg("example1.json"), "--set", "simulate.n=20000",
                                      "--seed", "11"};
  const auto a = run(args);
  const auto b = run(args);
  REQUIRE(a.code == kExitOk);
  CHECK(a.out == b.out);
  const auto doc = json::parse(a.out);
  CHECK(doc["seed"] == 11);
  CHECK(doc["summary"]["n"] == 20000);
  CHECK(doc["within_3se"] == true);
  CHECK(run({"simulate", "--set", "simulate.n=0"}).code == kExitConfig);

  const std::string dump = "test_cli_playouts.csv";
  REQUIRE(run({"simulate", "--set", "simulate.n=50", "--set", "simulate.dump=" + dump}).code == kExitOk);
  std::ifstream in(dump);
  std::string line;
  int rows = -1;
  double total = 0.0;
  while (std::getline(in, line)) {
    if (++rows == 0) continue;
    total += std::stod(line.substr(line.rfind(',') + 1));
  }
  CHECK(rows == 50);
  const auto summary = json::parse(run({"simulate", "--set", "simulate.n=50"}).out);
  CHECK(total / 50 == doctest::Approx(summary["summary"]["mean_hacker_payoff"].get<double>()).epsilon(1e-12));
  std::remove(dump.c_str());
}

TEST_CASE("check command exit codes") {
  const auto ok = run({"check", "--config", cfg("example2.json")});
  CHECK(ok.code == kExitOk);
  const auto doc = json::parse(ok.out);
  CHECK(doc["total_violations"] == 0);
  CHECK(doc["game_comparison"]["dominance_applicable"] == true);

  const auto counter = run({"check", "--config", cfg("counterexample.json")});
  CHECK(counter.code == kExitOk);
  const auto cdoc = json::parse(counter.out);
  CHECK(cdoc["game_comparison"]["dominance_applicable"] == false);
  for (const char* t : {"A1", "A2"}) {
    CHECK(cdoc["game_comparison"]["max_payoff_gamma2"][t].get<double>() >
          cdoc["game_comparison"]["max_payoff_gamma1"][t].get<double>());
  }
}

TEST_CASE("configuration errors") {
  const auto r = run({"thresholds", "--set", "params.p=2", "--set", "params.c1=-1", "--set", "params.bogus=1"});
  CHECK(r.code == kExitConfig);
  CHECK(r.err.find("bogus") != std::string::npos);
  CHECK(r.err.find("p must lie") != std::string::npos);
  CHECK(r.err.find("c1 must be") != std::string::npos);

  CHECK(run({"thresholds", "--config", "/nonexistent.json"}).code == kExitConfig);
  CHECK(run({"frobnicate"}).code == kExitConfig);
  CHECK(run({}).code == kExitConfig);
  CHECK(run({"thresholds", "--format", "xml"}).code == kExitConfig);
  CHECK(run({"thresholds", "--set", "novalue"}).code == kExitConfig);
  CHECK(run({"equilibrium", "--set", "variant=gamma2"}).code == kExitConfig);  // recovery fields missing
}

TEST_CASE("--out writes the report to a file") {
  const std::string path = "test_cli_out.json";
  const auto r = run({"equilibrium", "--config", cfg("example1.json"), "--out", path});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.empty());
  std::ifstream in(path);
  const auto doc = json::parse(in);
  CHECK(doc["results"].size() == 2);
  std::remove(path.c_str());
}

TEST_CASE("parameter documents round trip") {
  GameParams g;
  g.p3 = 0.3;
  g.c3 = 0.2;
  g.willingness = LinearCutoff{0.8, 3.0};
  g.valuation = LogNormal{0.1, 0.7};
  std::vector<std::string> errors;
  const GameParams back = params_from_json(to_json(g), errors);
  CHECK(errors.empty());
  CHECK(to_json(back) == to_json(g));
}
