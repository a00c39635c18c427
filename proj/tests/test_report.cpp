#include <doctest.h>

#include <sstream>

#include "fixtures.hpp"
#include "paradox/property_suite.hpp"
#include "paradox/report_io.hpp"

using namespace paradox;

TEST_CASE("number formatting round-trips") {
  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(std::stod(format_number(1.0 / 3.0)) == 1.0 / 3.0);
  CHECK(format_number(-2.0) == "-2");
}

TEST_CASE("analysis JSON schema") {
  const Graph g = testing::path3();
  AnalysisView v;
  v.graph = &g;
  v.graph_class = classify(g);
  v.analysis = analyze(g);
  const nlohmann::json j = analysis_to_json(v);
  CHECK(j["graph"]["n"] == 3);
  CHECK(j["graph"]["m"] == 2);
  CHECK(j["graph"]["connected"] == true);
  CHECK(j["gaps"]["lwafp"]["value"].get<double>() == doctest::Approx(-1.0 / 3.0));
  CHECK(j["gaps"]["lwafp"]["verdict"] == "Fails");
  CHECK(j["gaps"]["lfp"]["verdict"] == "Holds");
  CHECK(j["gaps"]["lfp"]["zero"] == false);
  CHECK(j["correlations"]["w_a"]["value"].get<double>() == doctest::Approx(-1.0));
  CHECK(j["correlations"]["w_a"]["prediction"] == "PredictFails");
  CHECK_FALSE(j["correlations"]["d_delta"].contains("prediction"));
  CHECK(j["consistency"]["ok"] == true);
  CHECK(j["consistency"]["details"].size() == 4);

  std::ostringstream csv;
  write_analysis_csv(csv, v);
  CHECK(csv.str().find("gap,lwafp,-0.33333333333333") != std::string::npos);
  std::ostringstream table;
  write_analysis_table(table, v);
  CHECK(table.str().find("-0.333333") != std::string::npos);
}

TEST_CASE("undefined correlations serialize as text") {
  const std::vector<Edge> e{{0, 1, 1.0}, {1, 2, 1.0}, {2, 0, 1.0}};
  const Graph g = Graph::build(3, e);
  AnalysisView v;
  v.graph = &g;
  v.graph_class = classify(g);
  v.analysis = analyze(g);
  const nlohmann::json j = analysis_to_json(v);
  CHECK(j["correlations"]["d_a"]["value"] == "undefined");
  CHECK(j["consistency"]["ok"] == true);
}

TEST_CASE("simulation outputs") {
  SweepSpec s;
  s.runs = 5;
  s.graph = {40, 0.15, 10, 0};
  s.conditions = {0, 10};
  s.threads = 1;
  const SimulationSummary sum = run_sweep(s);
  std::ostringstream cond;
  write_conditions_csv(cond, sum);
  std::size_t lines = 0;
  for (char c : cond.str()) lines += c == '\n' ? 1 : 0;
  CHECK(lines == 1 + 2 * 8);
  std::ostringstream scatter;
  write_scatter_csv(scatter, sum.scatter);
  CHECK(scatter.str().rfind("network,paradox,correlation,gap\n", 0) == 0);
  const nlohmann::json j = summary_to_json(sum);
  CHECK(j["conditions"].size() == 2);
  CHECK(j["sign_violations"] == 0);
}

TEST_CASE("property suite passes and detects an injected fault") {
  VerifyOptions o;
  o.graphs = 25;
  o.max_n = 15;
  const std::vector<PropertyResult> ok = run_property_suite(o);
  for (const auto& r : ok) CHECK_MESSAGE(r.ok(), r.name << ": " << r.first_failure);
  o.fault = Fault::FlipSign;
  bool sign_failed = false;
  for (const auto& r : run_property_suite(o)) sign_failed = sign_failed || (r.name == kPropSignRule && !r.ok());
  CHECK(sign_failed);
  const nlohmann::json j = properties_to_json(ok);
  CHECK(j["ok"] == true);
}

TEST_CASE("property ledger") {
  PropertyLedger l;
  l.record("x", true);
  l.record("x", false, "first");
  l.record("x", false, "second");
  CHECK_FALSE(l.ok());
  CHECK(l.find("x")->violations == 2);
  CHECK(l.find("x")->first_failure == "first");
  CHECK(l.find("y") == nullptr);
  CHECK(close_relative(1.0, 1.0 + 1e-13, 1e-12, 0.0));
  CHECK_FALSE(close_relative(1.0, 1.1, 1e-12, 0.0));
}
