#include "paradox/report_io.hpp"

#include <cstdio>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "paradox/error.hpp"

namespace paradox {

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

using nlohmann::json;

struct NamedCorrelation {
  const char* key;
  const Correlation* value;
  const Prediction* prediction;  // null for the topology correlations
};

std::vector<NamedCorrelation> named_correlations(const CorrelationReport& r) {
  return {{"d_a", &r.r_da, &r.predictions[0]},
          {"delta_a", &r.r_delta_a, &r.predictions[1]},
          {"w_a", &r.r_wa, &r.predictions[2]},
          {"gamma_a", &r.r_gamma_a, &r.predictions[3]},
          {"d_delta", &r.r_d_delta, nullptr},
          {"w_gamma", &r.r_w_gamma, nullptr},
          {"d_w", &r.r_dw, nullptr}};
}

const char* governing_key(Paradox p) {
  switch (p) {
    case Paradox::LAFP: return "d_a";
    case Paradox::SAFP: return "delta_a";
    case Paradox::LWAFP: return "w_a";
    case Paradox::SWAFP: return "gamma_a";
    default: return "";
  }
}

json correlation_json(const Correlation& c) {
  json j;
  if (c.is_defined()) {
    j["value"] = c.value();
  } else {
    j["value"] = "undefined";
    j["reason"] = std::string(to_string(*c.reason()));
  }
  return j;
}

std::string correlation_text(const Correlation& c) { return c.is_defined() ? format_number(c.value()) : "undefined"; }

std::string six(double x) {
  std::ostringstream out;
  out << std::setprecision(6) << x;
  return out.str();
}

json stat_json(const SummaryStat& s) {
  return {{"mean", s.mean}, {"sd", s.sd}, {"count", s.count}, {"undefined", s.undefined}};
}

}  // namespace

json analysis_to_json(const AnalysisView& view) {
  if (view.graph == nullptr) throw Error(ErrorCode::InvalidArgument, "analysis view without a graph");
  json out;
  out["graph"] = {{"n", view.graph->node_count()},
                  {"m", view.graph->edge_count()},
                  {"connected", view.graph_class.connected},
                  {"regular", view.graph_class.regular},
                  {"weighted_regular", view.graph_class.weighted_regular},
                  {"dropped_isolates", view.dropped_isolates},
                  {"attributes_used", view.analysis.gaps.attributes_used}};
  json gaps = json::object();
  for (Paradox p : kAllParadoxes) {
    const GapEntry& e = view.analysis.gaps[p];
    gaps[std::string(key(p))] = {{"value", e.value}, {"verdict", std::string(to_string(e.verdict))}, {"zero", e.zero}};
  }
  out["gaps"] = std::move(gaps);
  json corrs = json::object();
  for (const auto& nc : named_correlations(view.analysis.correlations)) {
    json c = correlation_json(*nc.value);
    if (nc.prediction) c["prediction"] = std::string(to_string(*nc.prediction));
    corrs[nc.key] = std::move(c);
  }
  out["correlations"] = std::move(corrs);
  json details = json::array();
  for (std::size_t k = 0; k < kAttributeParadoxes.size(); ++k) {
    details.push_back({{"paradox", std::string(key(kAttributeParadoxes[k]))},
                       {"correlation", governing_key(kAttributeParadoxes[k])},
                       {"consistent", view.analysis.consistency.consistent[k]}});
  }
  out["consistency"] = {{"ok", view.analysis.consistency.ok()}, {"details", std::move(details)}};
  return out;
}

void write_analysis_csv(std::ostream& out, const AnalysisView& view) {
  if (view.graph == nullptr) throw Error(ErrorCode::InvalidArgument, "analysis view without a graph");
  auto flag = [](bool b) { return b ? "true" : "false"; };
  out << "section,key,value,label\n";
  out << "graph,n," << view.graph->node_count() << ",\n";
  out << "graph,m," << view.graph->edge_count() << ",\n";
  out << "graph,connected," << flag(view.graph_class.connected) << ",\n";
  out << "graph,regular," << flag(view.graph_class.regular) << ",\n";
  out << "graph,weighted_regular," << flag(view.graph_class.weighted_regular) << ",\n";
  out << "graph,dropped_isolates," << view.dropped_isolates << ",\n";
  for (Paradox p : kAllParadoxes) {
    const GapEntry& e = view.analysis.gaps[p];
    out << "gap," << key(p) << ',' << format_number(e.value) << ',' << to_string(e.verdict) << (e.zero ? ";zero" : "")
        << '\n';
  }
  for (const auto& nc : named_correlations(view.analysis.correlations)) {
    out << "correlation," << nc.key << ',' << correlation_text(*nc.value) << ','
        << (nc.prediction ? to_string(*nc.prediction) : std::string_view()) << '\n';
  }
  out << "consistency,ok," << flag(view.analysis.consistency.ok()) << ",\n";
}

void write_analysis_table(std::ostream& out, const AnalysisView& view) {
  if (view.graph == nullptr) throw Error(ErrorCode::InvalidArgument, "analysis view without a graph");
  const GraphClass& c = view.graph_class;
  out << "nodes " << view.graph->node_count() << ", edges " << view.graph->edge_count() << ", connected "
      << (c.connected ? "yes" : "no") << ", regular " << (c.regular ? "yes" : "no") << ", weighted-regular "
      << (c.weighted_regular ? "yes" : "no");
  if (view.dropped_isolates > 0) out << ", isolates dropped " << view.dropped_isolates;
  out << "\n\n";
  out << std::left << std::setw(8) << "paradox" << std::right << std::setw(14) << "gap" << "  " << std::left
      << std::setw(9) << "verdict" << std::setw(10) << "governing" << std::right << std::setw(14) << "correlation"
      << '\n';
  for (Paradox p : kAllParadoxes) {
    const GapEntry& e = view.analysis.gaps[p];
    out << std::left << std::setw(8) << name(p) << std::right << std::setw(14) << six(e.value) << "  " << std::left
        << std::setw(9) << to_string(e.verdict);
    if (uses_attribute(p)) {
      const Correlation& r = view.analysis.correlations.governing(p);
      out << std::setw(10) << governing_key(p) << std::right << std::setw(14)
          << (r.is_defined() ? six(r.value()) : "undefined");
    }
    out << '\n';
  }
  const CorrelationReport& r = view.analysis.correlations;
  out << "\nr_d_delta " << (r.r_d_delta.is_defined() ? six(r.r_d_delta.value()) : "undefined") << ", r_w_gamma "
      << (r.r_w_gamma.is_defined() ? six(r.r_w_gamma.value()) : "undefined") << ", r_d_w "
      << (r.r_dw.is_defined() ? six(r.r_dw.value()) : "undefined") << '\n';
  out << "sign rules " << (view.analysis.consistency.ok() ? "consistent" : "VIOLATED") << '\n';
}

void write_conditions_csv(std::ostream& out, const SimulationSummary& summary) {
  out << "condition,paradox,runs,failures,failure_proportion,zero_gaps,correlation,corr_mean,corr_sd,corr_count,"
         "corr_undefined,sign_violations,gap_correlation\n";
  for (const ConditionSummary& c : summary.conditions) {
    for (Paradox p : kAllParadoxes) {
      const std::size_t i = static_cast<std::size_t>(p);
      out << c.condition << ',' << key(p) << ',' << c.runs << ',' << c.failures[i] << ','
          << format_number(c.failure_proportion(p)) << ',' << c.zero_gaps[i] << ',';
      if (uses_attribute(p)) {
        const std::size_t k = i - static_cast<std::size_t>(Paradox::LAFP);
        const SummaryStat& s = c.correlations[k];
        out << governing_key(p) << ',' << format_number(s.mean) << ',' << format_number(s.sd) << ',' << s.count << ','
            << s.undefined << ',' << c.sign_violations << ',' << correlation_text(c.gap_correlation[k]);
      } else {
        out << ",,,,," << c.sign_violations << ',';
      }
      out << '\n';
    }
  }
}

void write_scatter_csv(std::ostream& out, const ScatterTable& table) {
  out << "network,paradox,correlation,gap\n";
  for (const ScatterRow& row : table.rows) {
    out << row.network << ',' << key(row.paradox) << ',' << correlation_text(row.correlation) << ','
        << format_number(row.gap) << '\n';
  }
}

json summary_to_json(const SimulationSummary& summary) {
  const SweepSpec& s = summary.spec;
  json out;
  out["spec"] = {{"runs", s.runs},
                 {"n", s.graph.n},
                 {"p", s.graph.p},
                 {"max_weight", s.graph.max_weight},
                 {"conditions", s.conditions},
                 {"master_seed", s.master_seed},
                 {"scatter_condition", s.scatter_condition}};
  out["discarded"] = {{"total", summary.discarded},
                      {"disconnected", summary.discarded_disconnected},
                      {"regular", summary.discarded_regular},
                      {"weighted_regular", summary.discarded_weighted_regular}};
  out["topology"] = {{"d_delta", stat_json(summary.topology.d_delta)},
                     {"w_gamma", stat_json(summary.topology.w_gamma)},
                     {"d_w", stat_json(summary.topology.dw)}};
  out["sign_violations"] = summary.total_sign_violations();
  json conditions = json::array();
  for (const ConditionSummary& c : summary.conditions) {
    json cj;
    cj["condition"] = c.condition;
    cj["runs"] = c.runs;
    json failures = json::object();
    json zeros = json::object();
    for (Paradox p : kAllParadoxes) {
      failures[std::string(key(p))] = c.failure_proportion(p);
      zeros[std::string(key(p))] = c.zero_gaps[static_cast<std::size_t>(p)];
    }
    cj["failure_proportion"] = std::move(failures);
    cj["zero_gaps"] = std::move(zeros);
    json corrs = json::object();
    json across = json::object();
    for (std::size_t k = 0; k < kAttributeParadoxes.size(); ++k) {
      corrs[governing_key(kAttributeParadoxes[k])] = stat_json(c.correlations[k]);
      across[std::string(key(kAttributeParadoxes[k]))] = correlation_json(c.gap_correlation[k]);
    }
    cj["correlations"] = std::move(corrs);
    cj["gap_correlation"] = std::move(across);
    cj["sign_violations"] = c.sign_violations;
    conditions.push_back(std::move(cj));
  }
  out["conditions"] = std::move(conditions);
  json scatter = json::object();
  for (std::size_t k = 0; k < kAttributeParadoxes.size(); ++k) {
    scatter[std::string(key(kAttributeParadoxes[k]))] = correlation_json(summary.scatter.across[k]);
  }
  out["scatter_correlation"] = std::move(scatter);
  return out;
}

void write_networks_csv(std::ostream& out, std::span<const std::string> ids, std::span<const PipelineResult> results) {
  if (ids.size() != results.size()) throw Error(ErrorCode::LengthMismatch, "network ids do not match results");
  out << "network,model,n,m,p2,mean_attribute,connected";
  for (Paradox p : kAllParadoxes) out << ",g_" << key(p);
  for (const char* c : {"d_a", "delta_a", "w_a", "gamma_a", "d_delta", "w_gamma", "d_w"}) out << ",r_" << c;
  out << ",consistent\n";
  auto row = [&](const std::string& id, const char* model, const NetworkResult& r) {
    out << id << ',' << model << ',' << r.n << ',' << r.m << ',' << format_number(r.p2) << ','
        << format_number(r.mean_attribute) << ',' << (r.graph_class.connected ? "true" : "false");
    for (Paradox p : kAllParadoxes) out << ',' << format_number(r.analysis.gaps.value(p));
    for (const auto& nc : named_correlations(r.analysis.correlations)) out << ',' << correlation_text(*nc.value);
    out << ',' << (r.analysis.consistency.ok() ? "true" : "false") << '\n';
  };
  for (std::size_t k = 0; k < results.size(); ++k) {
    row(ids[k], "original", results[k].original);
    if (results[k].rewired) row(ids[k], "configuration", *results[k].rewired);
  }
}

void write_comparison_csv(std::ostream& out, const ConfigComparison& comparison) {
  out << "metric,pair,original,rewired\n";
  for (const PairedMetric& m : comparison.metrics) {
    for (std::size_t k = 0; k < m.original.size(); ++k) {
      out << m.name << ',' << k << ',' << format_number(m.original[k]) << ',' << format_number(m.rewired[k]) << '\n';
    }
  }
}

void write_slopes_csv(std::ostream& out, const ConfigComparison& comparison) {
  out << "metric,pairs,slope\n";
  for (const PairedMetric& m : comparison.metrics) {
    out << m.name << ',' << m.original.size() << ',' << (m.slope ? format_number(*m.slope) : "undefined") << '\n';
  }
}

json properties_to_json(std::span<const PropertyResult> results) {
  json out = json::array();
  bool ok = true;
  for (const PropertyResult& r : results) {
    ok = ok && r.ok();
    out.push_back({{"property", r.name}, {"checks", r.checks}, {"violations", r.violations},
                   {"first_failure", r.first_failure}});
  }
  return {{"ok", ok}, {"properties", std::move(out)}};
}

}  // namespace paradox
