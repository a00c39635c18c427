#include "paradox/property_suite.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include <boost/random/normal_distribution.hpp>
#include <boost/random/uniform_int_distribution.hpp>
#include <boost/random/uniform_real_distribution.hpp>

#include "paradox/correlation.hpp"
#include "paradox/detail/moments.hpp"
#include "paradox/error.hpp"
#include "paradox/gaps.hpp"
#include "paradox/generators.hpp"
#include "paradox/oracle.hpp"
#include "paradox/simulation.hpp"

namespace paradox {

void PropertyLedger::record(const std::string& property, bool ok, const std::string& detail) {
  PropertyResult& r = results_[property];
  r.name = property;
  ++r.checks;
  if (!ok) {
    if (r.violations == 0) r.first_failure = detail;
    ++r.violations;
  }
}

std::vector<PropertyResult> PropertyLedger::results() const {
  std::vector<PropertyResult> out;
  for (const auto& [name, r] : results_) out.push_back(r);
  return out;
}

bool PropertyLedger::ok() const {
  return std::all_of(results_.begin(), results_.end(), [](const auto& kv) { return kv.second.ok(); });
}

const PropertyResult* PropertyLedger::find(const std::string& property) const {
  const auto it = results_.find(property);
  return it == results_.end() ? nullptr : &it->second;
}

bool close_relative(double x, double y, double rel, double scale) {
  return std::abs(x - y) <= rel * std::max({std::abs(x), std::abs(y), std::abs(scale)});
}

namespace {

std::string describe(const Graph& g, Paradox p, double got, double want) {
  std::ostringstream out;
  out.precision(17);
  out << "n=" << g.node_count() << " m=" << g.edge_count() << " " << name(p) << ": " << got << " vs " << want;
  return out.str();
}

double mean_abs(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += std::abs(v);
  return s / static_cast<double>(x.size());
}

void apply_fault(GapReport& gaps, Fault fault) {
  if (fault != Fault::FlipSign) return;
  const GapEntry e = gaps[Paradox::LWAFP];
  gaps[Paradox::LWAFP] = make_gap_entry(-e.value, e.scale);
}

}  // namespace

void check_non_negativity(const Graph& g, bool accepted, PropertyLedger& ledger, Fault fault) {
  GapReport gaps = full_report(g.with_attributes(std::nullopt));
  if (fault == Fault::FlipSign) gaps[Paradox::LWFP] = make_gap_entry(-gaps.value(Paradox::LWFP), gaps[Paradox::LWFP].scale);
  for (Paradox p : {Paradox::LFP, Paradox::SFP, Paradox::LWFP, Paradox::SWFP}) {
    const GapEntry& e = gaps[p];
    ledger.record(kPropNonNegative, e.verdict == Verdict::Holds, describe(g, p, e.value, 0.0));
    if (accepted) ledger.record(kPropStrictlyPositive, e.value > 0.0 && !e.zero, describe(g, p, e.value, 0.0));
  }
}

void check_sign_rules(const Graph& g, std::span<const double> attributes, PropertyLedger& ledger, Fault fault) {
  const NodeQuantities weighted = node_quantities(g);
  const NodeQuantities unit = node_quantities(g.with_unit_weights());
  AnalyzedGraph a = analyze(g, weighted, unit, attributes);
  apply_fault(a.gaps, fault);
  a.consistency = check_sign_consistency(a.gaps, a.correlations);
  for (std::size_t k = 0; k < kAttributeParadoxes.size(); ++k) {
    const Paradox p = kAttributeParadoxes[k];
    ledger.record(kPropSignRule, a.consistency.consistent[k],
                  describe(g, p, a.gaps.value(p), a.correlations.governing(p).value()));
  }
}

void check_constant_attribute(const Graph& g, double value, PropertyLedger& ledger) {
  const std::vector<double> a(g.node_count(), value);
  const NodeQuantities weighted = node_quantities(g);
  const NodeQuantities unit = node_quantities(g.with_unit_weights());
  const AnalyzedGraph r = analyze(g, weighted, unit, std::span<const double>(a));
  for (Paradox p : kAttributeParadoxes) {
    const double gap = r.gaps.value(p);
    ledger.record(kPropUndefinedZero, !r.correlations.governing(p).is_defined() && std::abs(gap) <= kGapZeroTolerance,
                  describe(g, p, gap, 0.0));
  }
}

void check_identities(const Graph& g, PropertyLedger& ledger) {
  const NodeQuantities q = node_quantities(g);
  const double n = static_cast<double>(g.node_count());
  double gamma_sum = 0.0;
  double delta_sum = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    gamma_sum += q.gamma[i];
    delta_sum += q.delta[i];
  }
  std::ostringstream detail;
  detail.precision(17);
  detail << "n=" << g.node_count() << " sum gamma=" << gamma_sum << " sum delta=" << delta_sum;
  ledger.record(kPropGammaSum, std::abs(gamma_sum - n) <= 1e-9 * n, detail.str());
  ledger.record(kPropDeltaSum, std::abs(delta_sum - n) <= 1e-9 * n, detail.str());

  const std::vector<double> d = q.degree_real();
  const Correlation r_dd = pearson(d, q.delta);
  const Correlation r_wg = pearson(q.weighted_degree, q.gamma);
  if (r_dd.is_defined()) ledger.record(kPropAlwaysPositive, r_dd.value() > 0.0, detail.str() + " r_d_delta");
  if (r_wg.is_defined()) ledger.record(kPropAlwaysPositive, r_wg.value() > 0.0, detail.str() + " r_w_gamma");
}

void check_attribute_transforms(const Graph& g, std::span<const double> attributes, PropertyLedger& ledger) {
  const NodeQuantities weighted = node_quantities(g);
  const NodeQuantities unit = node_quantities(g.with_unit_weights());
  std::vector<double> shifted(attributes.begin(), attributes.end());
  std::vector<double> negated(attributes.begin(), attributes.end());
  const double shift = 3.0 * (mean_abs(attributes) + 1.0);
  for (double& v : shifted) v += shift;
  for (double& v : negated) v = -v;

  const GapReport base = gap_report(g, weighted, unit, attributes);
  const GapReport up = gap_report(g, weighted, unit, std::span<const double>(shifted));
  const GapReport neg = gap_report(g, weighted, unit, std::span<const double>(negated));
  for (Paradox p : kAttributeParadoxes) {
    const double scale = base[p].scale + shift;
    ledger.record(kPropShift, std::abs(up.value(p) - base.value(p)) <= kGapZeroTolerance * scale,
                  describe(g, p, up.value(p), base.value(p)));
    ledger.record(kPropNegation, neg.value(p) == -base.value(p), describe(g, p, neg.value(p), -base.value(p)));
  }
}

void check_oracles(const Graph& g, std::span<const double> attributes, bool exact, PropertyLedger& ledger,
                   Fault fault) {
  constexpr double kRel = 1e-12;
  const NodeQuantities weighted = node_quantities(g);
  const NodeQuantities unit = node_quantities(g.with_unit_weights());
  GapReport closed = gap_report(g, weighted, unit, attributes);
  apply_fault(closed, fault);

  const std::vector<double> d = weighted.degree_real();
  const std::vector<double>& w = weighted.weighted_degree;
  std::array<double, 8> listed{};
  listed[static_cast<std::size_t>(Paradox::LFP)] = oracle::list_gap(g, d, false);
  listed[static_cast<std::size_t>(Paradox::SFP)] = oracle::singular_gap(g, d, false);
  listed[static_cast<std::size_t>(Paradox::LWFP)] = oracle::list_gap(g, w, true);
  listed[static_cast<std::size_t>(Paradox::SWFP)] = oracle::singular_gap(g, w, true);
  listed[static_cast<std::size_t>(Paradox::LAFP)] = oracle::list_gap(g, attributes, false);
  listed[static_cast<std::size_t>(Paradox::SAFP)] = oracle::singular_gap(g, attributes, false);
  listed[static_cast<std::size_t>(Paradox::LWAFP)] = oracle::list_gap(g, attributes, true);
  listed[static_cast<std::size_t>(Paradox::SWAFP)] = oracle::singular_gap(g, attributes, true);

  for (Paradox p : kAllParadoxes) {
    const double want = listed[static_cast<std::size_t>(p)];
    ledger.record(kPropOracle, close_relative(closed.value(p), want, kRel, closed[p].scale),
                  describe(g, p, closed.value(p), want));
  }

  const Graph unit_graph = g.with_unit_weights();
  const std::array<std::pair<Paradox, double>, 8> reformed = {{
      {Paradox::LAFP, reformulations::lefp_seed_sum(unit_graph, attributes)},
      {Paradox::LAFP, reformulations::lefp_friend_count(unit, attributes)},
      {Paradox::SAFP, reformulations::sefp_seed_mean(unit_graph, attributes)},
      {Paradox::SAFP, reformulations::sefp_edge_sum(unit_graph, attributes)},
      {Paradox::LWAFP, reformulations::lefp_seed_sum(g, attributes)},
      {Paradox::LWAFP, reformulations::lefp_friend_count(weighted, attributes)},
      {Paradox::SWAFP, reformulations::sefp_seed_mean(g, attributes)},
      {Paradox::SWAFP, reformulations::sefp_edge_sum(g, attributes)},
  }};
  for (const auto& [p, value] : reformed) {
    ledger.record(kPropReformulations, close_relative(closed.value(p), value, kRel, closed[p].scale),
                  describe(g, p, closed.value(p), value));
  }

  if (!exact) return;
  std::vector<oracle::Rational> rational(attributes.begin(), attributes.end());
  const oracle::ExactGaps truth = oracle::exact(g, std::move(rational));
  for (Paradox p : kAllParadoxes) {
    const double want = oracle::to_double(truth[p]);
    ledger.record(kPropOracleExact, close_relative(closed.value(p), want, kRel, closed[p].scale),
                  describe(g, p, closed.value(p), want));
  }
}

namespace {

using Engine = std::mt19937_64;

Graph random_graph(std::size_t n, double p, int max_weight, Engine& engine) {
  boost::random::uniform_real_distribution<double> coin(0.0, 1.0);
  boost::random::uniform_int_distribution<int> weight(1, max_weight);
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (coin(engine) < p) edges.push_back({u, v, static_cast<double>(weight(engine))});
    }
  }
  return Graph::build(n, edges);
}

// Normal draws, plus versions correlated positively and negatively with degree.
std::array<std::vector<double>, 3> attribute_draws(const Graph& g, Engine& engine) {
  boost::random::normal_distribution<double> normal(0.0, 1.0);
  std::array<std::vector<double>, 3> out;
  for (NodeId i = 0; i < g.node_count(); ++i) {
    const double z = normal(engine);
    const double d = static_cast<double>(g.degree(i));
    out[0].push_back(z);
    out[1].push_back(z + d);
    out[2].push_back(z - d);
  }
  return out;
}

}  // namespace

std::vector<PropertyResult> run_property_suite(const VerifyOptions& options) {
  if (options.max_n < 3) throw Error(ErrorCode::InvalidArgument, "max-n must be at least 3");
  Engine engine(derive_seed(options.seed, 0, Stream::Topology));
  boost::random::uniform_int_distribution<std::size_t> size(3, options.max_n);
  boost::random::uniform_real_distribution<double> density(0.1, 0.6);
  PropertyLedger ledger;
  std::size_t made = 0;
  while (made < options.graphs) {
    const Graph raw = random_graph(size(engine), density(engine), 10, engine);
    if (raw.edge_count() == 0) continue;
    const Graph g = drop_isolates(raw).graph;
    ++made;
    const bool accepted = accept_graph(g).accepted;
    const auto draws = attribute_draws(g, engine);
    check_non_negativity(g, accepted, ledger, options.fault);
    check_identities(g, ledger);
    for (const auto& a : draws) {
      check_sign_rules(g, a, ledger, options.fault);
      check_attribute_transforms(g, a, ledger);
    }
    check_constant_attribute(g, 1.5, ledger);
    check_oracles(g, draws[0], true, ledger, options.fault);
  }
  return ledger.results();
}

std::vector<Graph> accepted_gnp_corpus(const CorpusSpec& spec) {
  if (spec.n_min < 2 || spec.n_max < spec.n_min || !(spec.p_min > 0.0) || spec.p_max < spec.p_min || spec.p_max > 1.0) {
    throw Error(ErrorCode::InvalidArgument, "corpus ranges are empty or out of bounds");
  }
  Engine params(derive_seed(spec.seed, 0, Stream::Parameters));
  boost::random::uniform_int_distribution<std::size_t> size(spec.n_min, spec.n_max);
  boost::random::uniform_real_distribution<double> density(spec.p_min, spec.p_max);
  std::vector<Graph> out;
  for (std::uint64_t attempt = 0; out.size() < spec.count; ++attempt) {
    if (attempt > 1000 * (spec.count + 1)) throw Error(ErrorCode::RetryLimitExceeded, "corpus acceptance rate too low");
    GnpSpec gnp{size(params), density(params), spec.max_weight, derive_seed(spec.seed, attempt, Stream::Topology)};
    Graph g = generate_gnp(gnp);
    if (accept_graph(g).accepted) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace paradox
