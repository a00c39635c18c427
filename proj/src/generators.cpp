#include "paradox/generators.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <utility>

#include <boost/random/bernoulli_distribution.hpp>
#include <boost/random/gamma_distribution.hpp>
#include <boost/random/normal_distribution.hpp>
#include <boost/random/uniform_int_distribution.hpp>
#include <boost/random/uniform_real_distribution.hpp>

#include "paradox/error.hpp"

namespace paradox {

// std::mt19937_64 is fully specified by the standard; the Boost distributions
// are used because their std:: counterparts may differ between library
// implementations.
using Engine = std::mt19937_64;

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

template <typename T>
void fisher_yates(std::vector<T>& items, Engine& engine) {
  for (std::size_t k = items.size(); k > 1; --k) {
    boost::random::uniform_int_distribution<std::size_t> pick(0, k - 1);
    std::swap(items[k - 1], items[pick(engine)]);
  }
}

std::vector<bool> largest_component(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<int> component(n, -1);
  std::vector<std::size_t> sizes;
  for (NodeId start = 0; start < n; ++start) {
    if (component[start] >= 0) continue;
    const int id = static_cast<int>(sizes.size());
    std::size_t size = 0;
    std::queue<NodeId> frontier;
    frontier.push(start);
    component[start] = id;
    while (!frontier.empty()) {
      const NodeId cur = frontier.front();
      frontier.pop();
      ++size;
      for (const Neighbor& nb : g.neighbors(cur)) {
        if (component[nb.node] < 0) {
          component[nb.node] = id;
          frontier.push(nb.node);
        }
      }
    }
    sizes.push_back(size);
  }
  const int best = static_cast<int>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  std::vector<bool> keep(n);
  for (std::size_t i = 0; i < n; ++i) keep[i] = component[i] == best;
  return keep;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index, Stream stream) {
  return splitmix64(splitmix64(splitmix64(master) ^ index) ^ static_cast<std::uint64_t>(stream));
}

std::string_view to_string(RejectReason r) {
  switch (r) {
    case RejectReason::None: return "None";
    case RejectReason::Disconnected: return "Disconnected";
    case RejectReason::Regular: return "Regular";
    case RejectReason::WeightedRegular: return "WeightedRegular";
  }
  return "";
}

Graph generate_gnp(const GnpSpec& spec) {
  if (spec.n == 0) throw Error(ErrorCode::InvalidArgument, "G(n,p) needs n >= 1");
  if (!(spec.p > 0.0 && spec.p <= 1.0)) throw Error(ErrorCode::InvalidArgument, "G(n,p) needs p in (0, 1]");
  if (spec.max_weight < 1) throw Error(ErrorCode::InvalidArgument, "max weight must be >= 1");

  Engine topology(derive_seed(spec.seed, 0, Stream::Topology));
  Engine weights(derive_seed(spec.seed, 0, Stream::Weights));
  boost::random::bernoulli_distribution<double> coin(spec.p);
  boost::random::uniform_int_distribution<int> weight(1, spec.max_weight);

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(spec.p * static_cast<double>(spec.n) * static_cast<double>(spec.n) / 2.0 * 1.2) + 16);
  for (NodeId i = 0; i < spec.n; ++i) {
    for (NodeId j = i + 1; j < spec.n; ++j) {
      if (coin(topology)) edges.push_back({i, j, 0.0});
    }
  }
  for (Edge& e : edges) e.weight = weight(weights);
  return Graph::build(spec.n, edges);
}

Acceptance accept_graph(const Graph& g) {
  const GraphClass c = classify(g);
  if (!c.connected) return {false, RejectReason::Disconnected};
  if (c.regular) return {false, RejectReason::Regular};
  if (c.weighted_regular) return {false, RejectReason::WeightedRegular};
  return {true, RejectReason::None};
}

std::vector<double> draw_standard_normal(std::size_t n, std::uint64_t seed) {
  Engine engine(derive_seed(seed, 0, Stream::Attributes));
  boost::random::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> z(n);
  for (double& v : z) v = normal(engine);
  return z;
}

std::vector<double> shift_attributes(std::span<const double> z, std::span<const std::size_t> degree, int condition) {
  if (z.size() != degree.size()) throw Error(ErrorCode::LengthMismatch, "base draws and degrees differ in length");
  if (condition < -100 || condition > 100) {
    throw Error(ErrorCode::InvalidArgument, "condition " + std::to_string(condition) + " outside [-100, 100]");
  }
  const double slope = static_cast<double>(condition) / 100.0;
  std::vector<double> a(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) a[i] = z[i] + slope * static_cast<double>(degree[i]);
  return a;
}

std::vector<double> synthesize_attributes(const NodeQuantities& q, ConditionSpec cond, std::uint64_t seed) {
  return shift_attributes(draw_standard_normal(q.size(), seed), q.degree, cond.j);
}

Graph configuration_rewire(const Graph& g, std::uint64_t seed, int max_attempts) {
  const std::size_t n = g.node_count();
  std::vector<NodeId> stubs;
  for (NodeId i = 0; i < n; ++i) stubs.insert(stubs.end(), g.degree(i), i);

  Engine engine(derive_seed(seed, 0, Stream::Rewire));
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    fisher_yates(stubs, engine);
    std::set<std::pair<NodeId, NodeId>> seen;
    std::vector<Edge> edges;
    edges.reserve(stubs.size() / 2);
    for (std::size_t k = 0; k + 1 < stubs.size(); k += 2) {
      NodeId u = stubs[k];
      NodeId v = stubs[k + 1];
      if (u == v) continue;
      if (u > v) std::swap(u, v);
      if (seen.emplace(u, v).second) edges.push_back({u, v, 1.0});
    }
    Graph rewired = Graph::build(n, edges, g.attributes(), g.labels());
    if (is_connected(rewired)) return rewired;
  }
  throw Error(ErrorCode::RetryLimitExceeded,
              "configuration model stayed disconnected after " + std::to_string(max_attempts) + " attempts");
}

Graph assign_bernoulli_weights(const Graph& g, double p2, std::uint64_t seed) {
  if (!(p2 >= 0.0 && p2 <= 1.0)) throw Error(ErrorCode::InvalidArgument, "p2 must lie in [0, 1]");
  Engine engine(derive_seed(seed, 0, Stream::Weights));
  boost::random::bernoulli_distribution<double> heavy(p2);
  std::vector<double> weights(g.edge_count());
  for (double& w : weights) w = heavy(engine) ? 2.0 : 1.0;
  return g.with_weights(weights);
}

CampusNetwork generate_campus(const CampusSpec& spec) {
  if (spec.n < 4) throw Error(ErrorCode::InvalidArgument, "campus network needs at least 4 nodes");
  if (spec.years < 1) throw Error(ErrorCode::InvalidArgument, "campus network needs at least one year");
  if (!(spec.activity_shape > 0.0)) throw Error(ErrorCode::InvalidArgument, "activity shape must be positive");
  if (!(spec.cross_share > 0.0 && spec.cross_share < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "cross share must lie in (0, 1)");
  }

  Engine topology(derive_seed(spec.seed, 0, Stream::Topology));
  Engine metadata(derive_seed(spec.seed, 0, Stream::Metadata));

  const std::size_t size0 = std::clamp<std::size_t>(
      static_cast<std::size_t>(spec.block_fraction * static_cast<double>(spec.n) + 0.5), 2, spec.n - 2);
  auto block = [&](NodeId i) { return i < size0 ? 0 : 1; };

  // Activity s_i sets the expected in-block degree; the cross-block
  // propensity t_i grows like s_i^cross_exponent.
  boost::random::gamma_distribution<double> spread(spec.activity_shape, 1.0 / spec.activity_shape);
  std::vector<double> activity(spec.n);
  double total_activity = 0.0;
  double block_activity[2] = {0.0, 0.0};
  for (NodeId i = 0; i < spec.n; ++i) {
    activity[i] = spec.mean_degree_in[block(i)] * spread(topology);
    total_activity += activity[i];
    block_activity[block(i)] += activity[i];
  }
  const double mean_activity = total_activity / static_cast<double>(spec.n);
  const double cross_scale = spec.cross_share / (1.0 - spec.cross_share) * mean_activity;
  std::vector<double> propensity(spec.n);
  double block_propensity[2] = {0.0, 0.0};
  for (NodeId i = 0; i < spec.n; ++i) {
    propensity[i] = cross_scale * std::pow(activity[i] / mean_activity, spec.cross_exponent);
    block_propensity[block(i)] += propensity[i];
  }
  const double cross_norm = std::sqrt(block_propensity[0] * block_propensity[1]);

  std::vector<Edge> edges;
  boost::random::uniform_real_distribution<double> unit(0.0, 1.0);
  for (NodeId i = 0; i < spec.n; ++i) {
    for (NodeId j = i + 1; j < spec.n; ++j) {
      const double p = block(i) == block(j) ? activity[i] * activity[j] / block_activity[block(i)]
                                            : propensity[i] * propensity[j] / cross_norm;
      if (unit(topology) < p) edges.push_back({i, j, 1.0});
    }
  }
  const Graph full = Graph::build(spec.n, edges);

  NodeTable table(spec.n, {"gender", "year"});
  static constexpr const char* kGender[2] = {"F", "M"};
  boost::random::uniform_int_distribution<int> any_year(0, spec.years - 1);
  for (NodeId i = 0; i < spec.n; ++i) {
    const int b = block(i);
    if (unit(metadata) >= spec.gender_missing) {
      table.set(i, "gender", std::string(kGender[unit(metadata) < spec.gender_alignment ? b : 1 - b]));
    }
    if (unit(metadata) >= spec.year_missing) {
      const int offset = unit(metadata) < spec.year_alignment ? b % spec.years : any_year(metadata);
      table.set(i, "year", std::to_string(2005 + offset));
    }
  }

  const std::vector<bool> keep = largest_component(full);
  std::vector<NodeId> kept;
  std::vector<NodeId> remap(spec.n, 0);
  for (NodeId i = 0; i < spec.n; ++i) {
    if (keep[i]) {
      remap[i] = static_cast<NodeId>(kept.size());
      kept.push_back(i);
    }
  }
  std::vector<Edge> kept_edges;
  for (const Edge& e : full.edges()) {
    if (keep[e.u]) kept_edges.push_back({remap[e.u], remap[e.v], e.weight});
  }
  std::vector<std::string> labels;
  labels.reserve(kept.size());
  for (NodeId i : kept) labels.push_back("v" + std::to_string(i));
  return {Graph::build(kept.size(), kept_edges, std::nullopt, std::move(labels)), table.select_rows(kept)};
}

std::vector<CampusSpec> campus_corpus(std::size_t count, std::uint64_t seed) {
  std::vector<CampusSpec> specs;
  specs.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    Engine engine(derive_seed(seed, k, Stream::Parameters));
    boost::random::uniform_real_distribution<double> u(0.0, 1.0);
    CampusSpec s;
    s.n = 300 + static_cast<std::size_t>(300.0 * u(engine));
    s.block_fraction = 0.3 + 0.4 * u(engine);
    s.mean_degree_in[0] = 12.0 + 10.0 * u(engine);
    s.mean_degree_in[1] = 4.0 + 3.0 * u(engine);
    if (u(engine) < 0.5) std::swap(s.mean_degree_in[0], s.mean_degree_in[1]);
    s.activity_shape = 2.0 + 4.0 * u(engine);
    s.cross_share = 0.1 + 0.2 * u(engine);
    s.cross_exponent = -0.5 + 3.0 * u(engine);
    s.gender_alignment = 0.7 + 0.25 * u(engine);
    s.year_alignment = 0.1 + 0.5 * u(engine);
    s.seed = derive_seed(seed, k, Stream::Topology);
    specs.push_back(s);
  }
  return specs;
}

}  // namespace paradox
