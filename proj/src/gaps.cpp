#include "paradox/gaps.hpp"

#include <cmath>
#include <string>

#include "paradox/detail/moments.hpp"
#include "paradox/error.hpp"

namespace paradox {

std::string_view key(Paradox p) {
  switch (p) {
    case Paradox::LFP: return "lfp";
    case Paradox::SFP: return "sfp";
    case Paradox::LWFP: return "lwfp";
    case Paradox::SWFP: return "swfp";
    case Paradox::LAFP: return "lafp";
    case Paradox::SAFP: return "safp";
    case Paradox::LWAFP: return "lwafp";
    case Paradox::SWAFP: return "swafp";
  }
  return "";
}

std::string_view name(Paradox p) {
  switch (p) {
    case Paradox::LFP: return "LFP";
    case Paradox::SFP: return "SFP";
    case Paradox::LWFP: return "LWFP";
    case Paradox::SWFP: return "SWFP";
    case Paradox::LAFP: return "LAFP";
    case Paradox::SAFP: return "SAFP";
    case Paradox::LWAFP: return "LWAFP";
    case Paradox::SWAFP: return "SWAFP";
  }
  return "";
}

bool is_singular(Paradox p) {
  return p == Paradox::SFP || p == Paradox::SWFP || p == Paradox::SAFP || p == Paradox::SWAFP;
}

bool is_weighted(Paradox p) {
  return p == Paradox::LWFP || p == Paradox::SWFP || p == Paradox::LWAFP || p == Paradox::SWAFP;
}

bool uses_attribute(Paradox p) {
  return p == Paradox::LAFP || p == Paradox::SAFP || p == Paradox::LWAFP || p == Paradox::SWAFP;
}

std::string_view to_string(Verdict v) { return v == Verdict::Holds ? "Holds" : "Fails"; }

GapEntry make_gap_entry(double value, double scale) {
  GapEntry e;
  e.value = value;
  e.scale = scale > 0.0 ? scale : 1.0;
  e.zero = std::abs(value) <= kGapZeroTolerance * e.scale;
  e.verdict = (value < 0.0 && !e.zero) ? Verdict::Fails : Verdict::Holds;
  return e;
}

namespace {

using detail::centered_cross_ext;
using detail::mean;

long double sum_ext(std::span<const double> x) {
  long double s = 0.0L;
  for (double v : x) s += v;
  return s;
}

double mean_abs(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += std::abs(v);
  return s / static_cast<double>(x.size());
}

void check_inputs(const NodeQuantities& q, std::span<const double> a) {
  if (q.size() == 0) throw Error(ErrorCode::EmptyGraph, "gap of an empty graph");
  if (a.size() != q.size()) {
    throw Error(ErrorCode::AttributeLengthMismatch,
                "attribute vector has " + std::to_string(a.size()) + " entries for " +
                    std::to_string(q.size()) + " nodes");
  }
}

// Edge-sum singular gap against first-order values x (d or w):
// (1/n) sum_edges e (x_u - x_v)^2 / (x_u x_v). Equal to the textbook
// (1/n) sum e (x_u/x_v + x_v/x_u) - mean x because sum_edges 2e = sum x.
double singular_edge_gap(const Graph& g, std::span<const double> x, bool weighted) {
  long double s = 0.0L;
  for (const Edge& e : g.edges()) {
    const long double diff = static_cast<long double>(x[e.u]) - x[e.v];
    s += (weighted ? e.weight : 1.0L) * diff * diff / (static_cast<long double>(x[e.u]) * x[e.v]);
  }
  return static_cast<double>(s / static_cast<long double>(x.size()));
}

}  // namespace

double gap_lfp(const NodeQuantities& q) {
  const std::vector<double> d = q.degree_real();
  check_inputs(q, d);
  return static_cast<double>(centered_cross_ext(d, d) / sum_ext(d));
}

double gap_sfp(const Graph& g, const NodeQuantities& q) {
  const std::vector<double> d = q.degree_real();
  check_inputs(q, d);
  return singular_edge_gap(g, d, false);
}

double gap_lwfp(const NodeQuantities& q, const Graph& g) {
  return gap_lefp(g, q, q.weighted_degree);
}

double gap_swfp(const Graph& g, const NodeQuantities& q) {
  check_inputs(q, q.weighted_degree);
  return singular_edge_gap(g, q.weighted_degree, true);
}

double gap_lefp(const Graph& /*g*/, const NodeQuantities& q, std::span<const double> a) {
  check_inputs(q, a);
  const auto& w = q.weighted_degree;
  return static_cast<double>(centered_cross_ext(w, a) / sum_ext(w));
}

double gap_sefp(const Graph& /*g*/, const NodeQuantities& q, std::span<const double> a) {
  check_inputs(q, a);
  // (1/n) sum gamma_i a_i - mean a, with sum gamma = n letting gamma be centered too.
  return static_cast<double>(centered_cross_ext(q.gamma, a) / static_cast<long double>(a.size()));
}

GapReport gap_report(const Graph& g, const NodeQuantities& weighted, const NodeQuantities& unit,
                     std::optional<std::span<const double>> attributes) {
  GapReport r;
  const std::vector<double> d = weighted.degree_real();
  const auto& w = weighted.weighted_degree;
  const double mean_d = mean(d);
  const double mean_w = mean(w);

  r[Paradox::LFP] = make_gap_entry(gap_lfp(weighted), mean_d);
  r[Paradox::SFP] = make_gap_entry(gap_sfp(g, weighted), mean_d);
  r[Paradox::LWFP] = make_gap_entry(gap_lwfp(weighted, g), mean_w);
  r[Paradox::SWFP] = make_gap_entry(gap_swfp(g, weighted), mean_w);

  if (!attributes && g.attributes()) attributes = std::span<const double>(*g.attributes());
  r.attributes_used = attributes.has_value();
  // Without an attribute each version falls back to its own weighted degree.
  const std::span<const double> a_unit = attributes ? *attributes : std::span<const double>(d);
  const std::span<const double> a_weighted = attributes ? *attributes : std::span<const double>(w);

  r[Paradox::LAFP] = make_gap_entry(gap_lefp(g, unit, a_unit), mean_abs(a_unit));
  r[Paradox::SAFP] = make_gap_entry(gap_sefp(g, unit, a_unit), mean_abs(a_unit));
  r[Paradox::LWAFP] = make_gap_entry(gap_lefp(g, weighted, a_weighted), mean_abs(a_weighted));
  r[Paradox::SWAFP] = make_gap_entry(gap_sefp(g, weighted, a_weighted), mean_abs(a_weighted));
  return r;
}

GapReport full_report(const Graph& g) {
  const Graph unit_graph = g.with_unit_weights();
  return gap_report(g, node_quantities(g), node_quantities(unit_graph), std::nullopt);
}

namespace reformulations {

double lefp_seed_sum(const Graph& g, std::span<const double> a) {
  const std::size_t n = g.node_count();
  if (a.size() != n) throw Error(ErrorCode::AttributeLengthMismatch, "attribute length");
  double numerator = 0.0;
  double lengths = 0.0;
  for (NodeId i = 0; i < n; ++i) {
    for (const Neighbor& nb : g.neighbors(i)) {
      numerator += nb.weight * a[nb.node];
      lengths += nb.weight;
    }
  }
  return numerator / lengths - mean(a);
}

double lefp_friend_count(const NodeQuantities& q, std::span<const double> a) {
  check_inputs(q, a);
  double numerator = 0.0;
  double total = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    numerator += a[j] * q.weighted_degree[j];
    total += q.weighted_degree[j];
  }
  return numerator / total - mean(a);
}

double sefp_seed_mean(const Graph& g, std::span<const double> a) {
  const std::size_t n = g.node_count();
  if (a.size() != n) throw Error(ErrorCode::AttributeLengthMismatch, "attribute length");
  double total = 0.0;
  for (NodeId i = 0; i < n; ++i) {
    double numerator = 0.0;
    double length = 0.0;
    for (const Neighbor& nb : g.neighbors(i)) {
      numerator += nb.weight * a[nb.node];
      length += nb.weight;
    }
    if (length == 0.0) throw Error(ErrorCode::IsolatePresent, "node " + g.label(i));
    total += numerator / length;
  }
  return total / static_cast<double>(n) - mean(a);
}

double sefp_edge_sum(const Graph& g, std::span<const double> a) {
  const std::size_t n = g.node_count();
  if (a.size() != n) throw Error(ErrorCode::AttributeLengthMismatch, "attribute length");
  std::vector<double> w(n, 0.0);
  for (const Edge& e : g.edges()) {
    w[e.u] += e.weight;
    w[e.v] += e.weight;
  }
  double total = 0.0;
  for (const Edge& e : g.edges()) total += e.weight * (a[e.v] / w[e.u] + a[e.u] / w[e.v]);
  return total / static_cast<double>(n) - mean(a);
}

}  // namespace reformulations

}  // namespace paradox
