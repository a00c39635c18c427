#include "paradox/simulation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <numeric>
#include <sstream>
#include <thread>

#include "paradox/detail/moments.hpp"
#include "paradox/error.hpp"
#include "paradox/ingest.hpp"

namespace paradox {

AnalyzedGraph analyze(const Graph& g, const NodeQuantities& weighted, const NodeQuantities& unit,
                      std::optional<std::span<const double>> attributes) {
  if (!attributes && g.attributes()) attributes = std::span<const double>(*g.attributes());
  AnalyzedGraph out;
  out.gaps = gap_report(g, weighted, unit, attributes);
  out.correlations = sign_rule_report(weighted, attributes);
  out.consistency = check_sign_consistency(out.gaps, out.correlations);
  return out;
}

AnalyzedGraph analyze(const Graph& g) {
  return analyze(g, node_quantities(g), node_quantities(g.with_unit_weights()), std::nullopt);
}

SummaryStat summarize(std::span<const Correlation> values) {
  SummaryStat s;
  std::vector<double> defined;
  for (const Correlation& c : values) {
    if (c.is_defined()) {
      defined.push_back(c.value());
    } else {
      ++s.undefined;
    }
  }
  s.count = defined.size();
  if (defined.empty()) return s;
  s.mean = detail::mean(defined);
  if (defined.size() > 1) {
    s.sd = std::sqrt(detail::centered_cross(defined, defined) / static_cast<double>(defined.size() - 1));
  }
  return s;
}

SweepSpec full_scale_sweep() {
  SweepSpec spec;
  spec.runs = 1000;
  spec.graph = GnpSpec{1000, 1.0 / 50.0, 10, 0};
  spec.conditions.clear();
  for (int j = -100; j <= 100; ++j) spec.conditions.push_back(j);
  return spec;
}

namespace {

Correlation safe_pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() < 2) return Correlation::undefined(UndefinedReason::Both);
  return pearson(x, y);
}

}  // namespace

ScatterTable scatter_table(std::span<const AnalyzedGraph> graphs, std::span<const std::string> ids) {
  if (!ids.empty() && ids.size() != graphs.size()) {
    throw Error(ErrorCode::LengthMismatch, "scatter ids do not match the number of networks");
  }
  ScatterTable table;
  for (std::size_t k = 0; k < kAttributeParadoxes.size(); ++k) {
    const Paradox p = kAttributeParadoxes[k];
    std::vector<double> xs;
    std::vector<double> ys;
    for (std::size_t g = 0; g < graphs.size(); ++g) {
      const Correlation& r = graphs[g].correlations.governing(p);
      const double gap = graphs[g].gaps.value(p);
      table.rows.push_back({ids.empty() ? std::to_string(g) : ids[g], p, r, gap});
      if (r.is_defined()) {
        xs.push_back(r.value());
        ys.push_back(gap);
      }
    }
    table.across[k] = safe_pearson(xs, ys);
  }
  return table;
}

TopologyStats topology_correlation_stats(std::span<const CorrelationReport> reports) {
  std::vector<Correlation> d_delta;
  std::vector<Correlation> w_gamma;
  std::vector<Correlation> dw;
  for (const auto& r : reports) {
    d_delta.push_back(r.r_d_delta);
    w_gamma.push_back(r.r_w_gamma);
    dw.push_back(r.r_dw);
  }
  return {summarize(d_delta), summarize(w_gamma), summarize(dw)};
}

double ConditionSummary::failure_proportion(Paradox p) const {
  return runs == 0 ? 0.0 : static_cast<double>(failures[static_cast<std::size_t>(p)]) / static_cast<double>(runs);
}

const ConditionSummary* SimulationSummary::condition(int j) const {
  const auto it = std::find_if(conditions.begin(), conditions.end(), [j](const auto& c) { return c.condition == j; });
  return it == conditions.end() ? nullptr : &*it;
}

std::size_t SimulationSummary::total_sign_violations() const {
  std::size_t total = 0;
  for (const auto& c : conditions) total += c.sign_violations;
  return total;
}

namespace {

struct RunOutcome {
  std::size_t disconnected = 0;
  std::size_t regular = 0;
  std::size_t weighted_regular = 0;
  CorrelationReport topology;
  std::vector<AnalyzedGraph> per_condition;
};

RunOutcome simulate_run(const SweepSpec& spec, std::size_t run) {
  RunOutcome out;
  const std::uint64_t run_seed = derive_seed(spec.master_seed, run, Stream::Topology);
  std::optional<Graph> graph;
  for (std::size_t attempt = 0; attempt < spec.max_attempts_per_run; ++attempt) {
    GnpSpec gs = spec.graph;
    gs.seed = derive_seed(run_seed, attempt, Stream::Topology);
    Graph candidate = generate_gnp(gs);
    const Acceptance verdict = accept_graph(candidate);
    if (verdict.accepted) {
      graph = std::move(candidate);
      break;
    }
    switch (verdict.reason) {
      case RejectReason::Disconnected: ++out.disconnected; break;
      case RejectReason::Regular: ++out.regular; break;
      case RejectReason::WeightedRegular: ++out.weighted_regular; break;
      case RejectReason::None: break;
    }
  }
  if (!graph) {
    throw Error(ErrorCode::RetryLimitExceeded, "run " + std::to_string(run) + " produced no acceptable graph in " +
                                                   std::to_string(spec.max_attempts_per_run) + " attempts");
  }

  const NodeQuantities weighted = node_quantities(*graph);
  const NodeQuantities unit = node_quantities(graph->with_unit_weights());
  const std::vector<double> base = draw_standard_normal(graph->node_count(),
                                                        derive_seed(spec.master_seed, run, Stream::Attributes));
  out.per_condition.reserve(spec.conditions.size());
  for (int j : spec.conditions) {
    const std::vector<double> a = shift_attributes(base, weighted.degree, j);
    out.per_condition.push_back(analyze(*graph, weighted, unit, std::span<const double>(a)));
  }
  out.topology = out.per_condition.front().correlations;
  return out;
}

void validate(const SweepSpec& spec) {
  if (spec.runs == 0) throw Error(ErrorCode::InvalidArgument, "sweep needs at least one run");
  if (spec.conditions.empty()) throw Error(ErrorCode::InvalidArgument, "sweep needs at least one condition");
  for (int j : spec.conditions) {
    if (j < -100 || j > 100) throw Error(ErrorCode::InvalidArgument, "condition " + std::to_string(j) + " outside [-100, 100]");
  }
  if (spec.graph.n < 3) throw Error(ErrorCode::InvalidArgument, "sweep graphs need n >= 3");
  if (!(spec.graph.p > 0.0 && spec.graph.p <= 1.0)) throw Error(ErrorCode::InvalidArgument, "p must lie in (0, 1]");
}

}  // namespace

SimulationSummary run_sweep(const SweepSpec& spec) {
  validate(spec);
  std::vector<RunOutcome> outcomes(spec.runs);
  std::vector<std::exception_ptr> errors(spec.runs);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t run = next++; run < spec.runs; run = next++) {
      try {
        outcomes[run] = simulate_run(spec, run);
      } catch (...) {
        errors[run] = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(spec.threads == 0 ? std::thread::hardware_concurrency() : spec.threads,
                                                           static_cast<unsigned>(spec.runs)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  // Aggregation walks runs in index order so the result is independent of
  // which worker finished first.
  SimulationSummary summary;
  summary.spec = spec;
  std::vector<CorrelationReport> topology;
  for (const RunOutcome& o : outcomes) {
    summary.discarded_disconnected += o.disconnected;
    summary.discarded_regular += o.regular;
    summary.discarded_weighted_regular += o.weighted_regular;
    topology.push_back(o.topology);
  }
  summary.discarded = summary.discarded_disconnected + summary.discarded_regular + summary.discarded_weighted_regular;
  summary.topology = topology_correlation_stats(topology);

  std::string first_violation;
  for (std::size_t c = 0; c < spec.conditions.size(); ++c) {
    ConditionSummary cs;
    cs.condition = spec.conditions[c];
    cs.runs = spec.runs;
    std::array<std::vector<Correlation>, 4> corrs;
    std::vector<AnalyzedGraph> analyses;
    analyses.reserve(spec.runs);
    for (std::size_t run = 0; run < spec.runs; ++run) {
      const AnalyzedGraph& a = outcomes[run].per_condition[c];
      for (Paradox p : kAllParadoxes) {
        const GapEntry& e = a.gaps[p];
        cs.failures[static_cast<std::size_t>(p)] += e.verdict == Verdict::Fails ? 1 : 0;
        cs.zero_gaps[static_cast<std::size_t>(p)] += e.zero ? 1 : 0;
      }
      for (std::size_t k = 0; k < kAttributeParadoxes.size(); ++k) {
        corrs[k].push_back(a.correlations.governing(kAttributeParadoxes[k]));
        if (!a.consistency.consistent[k]) {
          ++cs.sign_violations;
          if (first_violation.empty()) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "sign rule violated in run " << run << ", condition " << cs.condition << ", "
                << name(kAttributeParadoxes[k]) << ": gap " << a.gaps.value(kAttributeParadoxes[k])
                << ", correlation " << a.correlations.governing(kAttributeParadoxes[k]).value();
            first_violation = msg.str();
          }
        }
      }
      analyses.push_back(a);
    }
    for (std::size_t k = 0; k < 4; ++k) cs.correlations[k] = summarize(corrs[k]);
    ScatterTable scatter = scatter_table(analyses);
    cs.gap_correlation = scatter.across;
    if (cs.condition == spec.scatter_condition) summary.scatter = std::move(scatter);
    summary.conditions.push_back(std::move(cs));
  }

  if (spec.abort_on_violation && !first_violation.empty()) {
    throw Error(ErrorCode::InternalInconsistency, first_violation);
  }
  return summary;
}

std::optional<double> least_squares_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw Error(ErrorCode::LengthMismatch, "slope inputs differ in length");
  if (x.size() < 2) return std::nullopt;
  const double sxx = detail::centered_cross(x, x);
  if (!(sxx > 0.0)) return std::nullopt;
  return detail::centered_cross(x, y) / sxx;
}

const PairedMetric& ConfigComparison::metric(std::string_view name) const {
  const auto it = std::find_if(metrics.begin(), metrics.end(), [&](const auto& m) { return m.name == name; });
  if (it == metrics.end()) throw Error(ErrorCode::InvalidArgument, "no metric named " + std::string(name));
  return *it;
}

ConfigComparison compare_original_vs_config(std::span<const AnalyzedGraph> original,
                                            std::span<const AnalyzedGraph> rewired) {
  if (original.size() != rewired.size()) {
    throw Error(ErrorCode::LengthMismatch, std::to_string(original.size()) + " original networks but " +
                                               std::to_string(rewired.size()) + " rewired");
  }
  ConfigComparison out;
  for (Paradox p : kAllParadoxes) {
    PairedMetric m;
    m.name = std::string(key(p));
    for (std::size_t k = 0; k < original.size(); ++k) {
      m.original.push_back(original[k].gaps.value(p));
      m.rewired.push_back(rewired[k].gaps.value(p));
    }
    out.metrics.push_back(std::move(m));
  }
  using Member = Correlation CorrelationReport::*;
  const std::pair<const char*, Member> corr_members[] = {
      {"r_da", &CorrelationReport::r_da},           {"r_delta_a", &CorrelationReport::r_delta_a},
      {"r_wa", &CorrelationReport::r_wa},           {"r_gamma_a", &CorrelationReport::r_gamma_a},
      {"r_d_delta", &CorrelationReport::r_d_delta}, {"r_w_gamma", &CorrelationReport::r_w_gamma},
      {"r_dw", &CorrelationReport::r_dw}};
  for (const auto& [label, member] : corr_members) {
    PairedMetric m;
    m.name = label;
    for (std::size_t k = 0; k < original.size(); ++k) {
      const Correlation& before = original[k].correlations.*member;
      const Correlation& after = rewired[k].correlations.*member;
      if (before.is_defined() && after.is_defined()) {
        m.original.push_back(before.value());
        m.rewired.push_back(after.value());
      }
    }
    out.metrics.push_back(std::move(m));
  }
  for (auto& m : out.metrics) m.slope = least_squares_slope(m.original, m.rewired);
  return out;
}

namespace {

NetworkResult analyze_network(const Graph& g, double p2) {
  NetworkResult r;
  r.n = g.node_count();
  r.m = g.edge_count();
  r.p2 = p2;
  r.mean_attribute = g.attributes() ? detail::mean(*g.attributes()) : 0.0;
  r.graph_class = classify(g);
  r.analysis = analyze(g);
  return r;
}

}  // namespace

PipelineResult run_pipeline(const Graph& g, const NodeTable& metadata, const PipelineOptions& options) {
  // Resolve both columns up front so a bad name fails before any work.
  metadata.column(options.gender_column);
  metadata.column(options.year_column);

  const Graph unweighted = g.with_unit_weights().with_attributes(
      derive_prop_own(g, metadata, options.gender_column));
  const HomophilyWeights weighted = derive_homophily_weights(unweighted, metadata, options.year_column);

  PipelineResult out;
  out.original = analyze_network(weighted.graph, weighted.p2);
  if (options.config_model) {
    const Graph rewired = configuration_rewire(unweighted, derive_seed(options.seed, 0, Stream::Rewire));
    const Graph reweighted = assign_bernoulli_weights(rewired, weighted.p2, derive_seed(options.seed, 0, Stream::Weights));
    NetworkResult r = analyze_network(reweighted, weighted.p2);
    std::size_t heavy = 0;
    for (const Edge& e : reweighted.edges()) heavy += e.weight == 2.0 ? 1 : 0;
    r.p2 = reweighted.edge_count() == 0 ? 0.0 : static_cast<double>(heavy) / static_cast<double>(reweighted.edge_count());
    out.rewired = std::move(r);
  }
  return out;
}

}  // namespace paradox
