#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "paradox/correlation.hpp"
#include "paradox/gaps.hpp"
#include "paradox/generators.hpp"
#include "paradox/graph.hpp"
#include "paradox/node_table.hpp"

namespace paradox {

/// Gaps, sign-rule correlations and their consistency for one graph and one
/// attribute choice.
struct AnalyzedGraph {
  GapReport gaps;
  CorrelationReport correlations;
  SignConsistency consistency;
};

/// Analyzes g (isolates must already be dropped) with its own attribute.
AnalyzedGraph analyze(const Graph& g);
/// Same with precomputed quantities; `attributes` overrides g's attribute.
AnalyzedGraph analyze(const Graph& g, const NodeQuantities& weighted, const NodeQuantities& unit,
                      std::optional<std::span<const double>> attributes);

struct SummaryStat {
  double mean = 0.0;
  double sd = 0.0;  // sample standard deviation; 0 with fewer than two values
  std::size_t count = 0;      // defined values summarized
  std::size_t undefined = 0;  // excluded undefined values
};

/// Mean and sample s.d. of the defined correlations.
SummaryStat summarize(std::span<const Correlation> values);

struct SweepSpec {
  std::size_t runs = 200;
  GnpSpec graph{300, 0.02, 10, 0};  // graph.seed is ignored; seeds derive from master_seed
  std::vector<int> conditions = {-5, -4, -3, -2, -1, 0, 1, 2, 3, 4, 5};
  std::uint64_t master_seed = 0;
  /// Condition whose per-network (correlation, gap) pairs are kept as scatter rows.
  int scatter_condition = 0;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned threads = 0;
  /// Generation attempts per run before giving up (rejected graphs are redrawn).
  std::size_t max_attempts_per_run = 10'000;
  /// Throw when a sign-rule violation is recorded.
  bool abort_on_violation = true;
};

/// n = 1000, p = 1/50, 1000 runs, every condition in [-100, 100].
SweepSpec full_scale_sweep();

struct ScatterRow {
  std::string network;
  Paradox paradox = Paradox::LAFP;
  Correlation correlation = Correlation::undefined(UndefinedReason::Both);
  double gap = 0.0;
};

struct ScatterTable {
  std::vector<ScatterRow> rows;
  /// Across-network correlation of (correlation, gap), indexed like
  /// kAttributeParadoxes. Undefined with fewer than two networks.
  std::array<Correlation, 4> across{Correlation::undefined(UndefinedReason::Both),
                                    Correlation::undefined(UndefinedReason::Both),
                                    Correlation::undefined(UndefinedReason::Both),
                                    Correlation::undefined(UndefinedReason::Both)};
};

/// (network, paradox, correlation, gap) for the four attribute versions.
/// Networks whose correlation is undefined are listed but left out of the
/// across-network correlation. `ids` defaults to "0", "1", ...
ScatterTable scatter_table(std::span<const AnalyzedGraph> graphs, std::span<const std::string> ids = {});

struct TopologyStats {
  SummaryStat d_delta;
  SummaryStat w_gamma;
  SummaryStat dw;
};

TopologyStats topology_correlation_stats(std::span<const CorrelationReport> reports);

struct ConditionSummary {
  int condition = 0;
  std::size_t runs = 0;
  std::array<std::size_t, 8> failures{};  // indexed like kAllParadoxes
  std::array<std::size_t, 8> zero_gaps{};
  /// r_da, r_delta_a, r_wa, r_gamma_a across runs.
  std::array<SummaryStat, 4> correlations{};
  std::size_t sign_violations = 0;
  /// Across-run corr(correlation, gap), indexed like kAttributeParadoxes.
  std::array<Correlation, 4> gap_correlation{Correlation::undefined(UndefinedReason::Both),
                                             Correlation::undefined(UndefinedReason::Both),
                                             Correlation::undefined(UndefinedReason::Both),
                                             Correlation::undefined(UndefinedReason::Both)};

  double failure_proportion(Paradox p) const;
};

struct SimulationSummary {
  SweepSpec spec;
  std::vector<ConditionSummary> conditions;
  std::size_t discarded = 0;
  std::size_t discarded_disconnected = 0;
  std::size_t discarded_regular = 0;
  std::size_t discarded_weighted_regular = 0;
  TopologyStats topology;
  /// Rows for spec.scatter_condition, if it was swept.
  ScatterTable scatter;

  const ConditionSummary* condition(int j) const;
  std::size_t total_sign_violations() const;
};

/// For every run: draw G(n,p) until accepted, draw base normal attributes once,
/// then for each condition derive attributes, compute gaps and correlations,
/// and check the sign rules. Deterministic in master_seed regardless of the
/// thread count. Throws InvalidArgument on a bad spec, RetryLimitExceeded when
/// a run cannot produce an acceptable graph, and (with abort_on_violation)
/// InternalInconsistency describing the first sign-rule violation.
SimulationSummary run_sweep(const SweepSpec& spec);

/// Ordinary least-squares slope of y on x; nullopt when x is constant.
std::optional<double> least_squares_slope(std::span<const double> x, std::span<const double> y);

struct PairedMetric {
  std::string name;  // "lafp", ..., "r_da", ...
  std::vector<double> original;
  std::vector<double> rewired;
  std::optional<double> slope;
};

struct ConfigComparison {
  std::vector<PairedMetric> metrics;  // eight gaps, then seven correlations
  const PairedMetric& metric(std::string_view name) const;
};

/// Pairs every gap and correlation before and after rewiring. Networks with an
/// undefined correlation on either side are skipped for that metric. Throws
/// LengthMismatch when the lists differ in length.
ConfigComparison compare_original_vs_config(std::span<const AnalyzedGraph> original,
                                            std::span<const AnalyzedGraph> rewired);

struct PipelineOptions {
  std::string gender_column = "gender";
  std::string year_column = "year";
  bool config_model = false;
  std::uint64_t seed = 0;
};

struct NetworkResult {
  std::size_t n = 0;
  std::size_t m = 0;
  double p2 = 0.0;  // share of weight-2 edges
  double mean_attribute = 0.0;
  GraphClass graph_class;
  AnalyzedGraph analysis;
};

struct PipelineResult {
  NetworkResult original;
  std::optional<NetworkResult> rewired;
};

/// Builds the prop_own attribute from the gender column, homophily weights
/// from the year column, and analyzes the result. With config_model, also
/// rewires the unweighted topology (attributes kept), assigns Bernoulli(p2)
/// weights and analyzes that.
PipelineResult run_pipeline(const Graph& g, const NodeTable& metadata, const PipelineOptions& options);

}  // namespace paradox
