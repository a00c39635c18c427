#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>

#include <nlohmann/json.hpp>

#include "paradox/graph.hpp"
#include "paradox/property_suite.hpp"
#include "paradox/simulation.hpp"

namespace paradox {

/// Shortest text that round-trips the double ("%.17g" precision).
std::string format_number(double x);

struct AnalysisView {
  const Graph* graph = nullptr;
  GraphClass graph_class;
  AnalyzedGraph analysis;
  std::size_t dropped_isolates = 0;
};

/// {"graph": {n, m, connected, regular, weighted_regular, dropped_isolates},
///  "gaps": {lfp..swafp: {value, verdict, zero}},
///  "correlations": {d_a, delta_a, w_a, gamma_a: {value|"undefined", prediction},
///                   d_delta, w_gamma, d_w: {value|"undefined"}},
///  "consistency": {ok, details: [{paradox, correlation, consistent}]}}
nlohmann::json analysis_to_json(const AnalysisView& view);

/// "section,key,value,label" rows: one per graph field, gap and correlation.
void write_analysis_csv(std::ostream& out, const AnalysisView& view);

/// Human-readable table with six significant digits.
void write_analysis_table(std::ostream& out, const AnalysisView& view);

/// One row per condition per paradox.
void write_conditions_csv(std::ostream& out, const SimulationSummary& summary);
/// network,paradox,correlation,gap ("undefined" for undefined correlations).
void write_scatter_csv(std::ostream& out, const ScatterTable& table);
nlohmann::json summary_to_json(const SimulationSummary& summary);

/// One row per network (and per rewired counterpart).
void write_networks_csv(std::ostream& out, std::span<const std::string> ids, std::span<const PipelineResult> results);
/// metric,pair,original,rewired.
void write_comparison_csv(std::ostream& out, const ConfigComparison& comparison);
/// metric,pairs,slope ("undefined" when the originals are constant).
void write_slopes_csv(std::ostream& out, const ConfigComparison& comparison);

nlohmann::json properties_to_json(std::span<const PropertyResult> results);

}  // namespace paradox
