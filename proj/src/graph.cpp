#include "paradox/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>

#include "paradox/error.hpp"

namespace paradox {

namespace {

std::string describe(const Edge& e) {
  return "(" + std::to_string(e.u) + ", " + std::to_string(e.v) + ", " + std::to_string(e.weight) + ")";
}

// All values equal up to a relative tolerance that absorbs summation-order
// rounding in weighted degrees built from real weights.
template <typename T>
bool all_equal(const std::vector<T>& values) {
  if (values.empty()) return true;
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  const double scale = std::max(std::abs(static_cast<double>(*lo)), std::abs(static_cast<double>(*hi)));
  return static_cast<double>(*hi) - static_cast<double>(*lo) <= 1e-12 * scale;
}

}  // namespace

Graph Graph::build(std::size_t node_count, std::span<const Edge> edges,
                   std::optional<std::vector<double>> attributes,
                   std::vector<std::string> labels) {
  if (attributes && attributes->size() != node_count) {
    throw Error(ErrorCode::AttributeLengthMismatch,
                "attribute vector has " + std::to_string(attributes->size()) +
                    " entries for " + std::to_string(node_count) + " nodes");
  }
  if (!labels.empty() && labels.size() != node_count) {
    throw Error(ErrorCode::LengthMismatch, "label count does not match node count");
  }

  Graph g;
  g.edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= node_count || e.v >= node_count) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "edge " + describe(e) + " references a node outside 0.." +
                      std::to_string(node_count == 0 ? 0 : node_count - 1));
    }
    if (e.u == e.v) throw Error(ErrorCode::SelfLoop, "edge " + describe(e));
    if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
      throw Error(ErrorCode::NonPositiveWeight, "edge " + describe(e));
    }
    g.edges_.push_back(e.u < e.v ? e : Edge{e.v, e.u, e.weight});
  }
  std::sort(g.edges_.begin(), g.edges_.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (std::size_t k = 1; k < g.edges_.size(); ++k) {
    if (g.edges_[k].u == g.edges_[k - 1].u && g.edges_[k].v == g.edges_[k - 1].v) {
      throw Error(ErrorCode::DuplicateEdge, "edge " + describe(g.edges_[k]) + " appears more than once");
    }
  }

  std::vector<std::size_t> degree(node_count, 0);
  for (const Edge& e : g.edges_) {
    ++degree[e.u];
    ++degree[e.v];
  }
  g.offsets_.assign(node_count + 1, 0);
  std::partial_sum(degree.begin(), degree.end(), g.offsets_.begin() + 1);
  g.adjacency_.resize(g.offsets_.back());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : g.edges_) {
    g.adjacency_[cursor[e.u]++] = {e.v, e.weight};
    g.adjacency_[cursor[e.v]++] = {e.u, e.weight};
  }
  for (std::size_t i = 0; i < node_count; ++i) {
    std::sort(g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i]),
              g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i + 1]),
              [](const Neighbor& a, const Neighbor& b) { return a.node < b.node; });
  }

  g.attributes_ = std::move(attributes);
  g.labels_ = std::move(labels);
  return g;
}

std::span<const Neighbor> Graph::neighbors(NodeId node) const {
  if (node >= node_count()) {
    throw Error(ErrorCode::IndexOutOfRange, "node " + std::to_string(node));
  }
  return {adjacency_.data() + offsets_[node], offsets_[node + 1] - offsets_[node]};
}

double Graph::weight(NodeId i, NodeId j) const {
  const auto row = neighbors(i);
  const auto it = std::lower_bound(row.begin(), row.end(), j,
                                   [](const Neighbor& nb, NodeId id) { return nb.node < id; });
  return it != row.end() && it->node == j ? it->weight : 0.0;
}

std::string Graph::label(NodeId node) const {
  return labels_.empty() ? std::to_string(node) : labels_.at(node);
}

bool Graph::unit_weights() const noexcept {
  return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.weight == 1.0; });
}

Graph Graph::with_unit_weights() const {
  return with_weights(std::vector<double>(edges_.size(), 1.0));
}

Graph Graph::with_weights(std::span<const double> weights) const {
  if (weights.size() != edges_.size()) {
    throw Error(ErrorCode::LengthMismatch, "weight vector does not match edge count");
  }
  std::vector<Edge> edges(edges_);
  for (std::size_t k = 0; k < edges.size(); ++k) edges[k].weight = weights[k];
  return build(node_count(), edges, attributes_, labels_);
}

Graph Graph::with_attributes(std::optional<std::vector<double>> attributes) const {
  if (attributes && attributes->size() != node_count()) {
    throw Error(ErrorCode::AttributeLengthMismatch,
                "attribute vector has " + std::to_string(attributes->size()) +
                    " entries for " + std::to_string(node_count()) + " nodes");
  }
  Graph g = *this;
  g.attributes_ = std::move(attributes);
  return g;
}

std::vector<double> NodeQuantities::degree_real() const {
  return {degree.begin(), degree.end()};
}

NodeQuantities node_quantities(const Graph& g) {
  const std::size_t n = g.node_count();
  NodeQuantities q;
  q.degree.resize(n);
  q.weighted_degree.assign(n, 0.0);
  for (NodeId i = 0; i < n; ++i) {
    const auto row = g.neighbors(i);
    if (row.empty()) {
      throw Error(ErrorCode::IsolatePresent, "node " + g.label(i) + " has no neighbors; drop isolates first");
    }
    q.degree[i] = row.size();
    for (const Neighbor& nb : row) q.weighted_degree[i] += nb.weight;
  }
  q.delta.assign(n, 0.0);
  q.gamma.assign(n, 0.0);
  for (NodeId i = 0; i < n; ++i) {
    for (const Neighbor& nb : g.neighbors(i)) {
      q.delta[i] += 1.0 / static_cast<double>(q.degree[nb.node]);
      q.gamma[i] += nb.weight / q.weighted_degree[nb.node];
    }
  }
  return q;
}

bool is_connected(const Graph& g) {
  const std::size_t n = g.node_count();
  if (n == 0) return false;
  std::vector<bool> seen(n, false);
  std::queue<NodeId> frontier;
  frontier.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const NodeId cur = frontier.front();
    frontier.pop();
    for (const Neighbor& nb : g.neighbors(cur)) {
      if (!seen[nb.node]) {
        seen[nb.node] = true;
        ++reached;
        frontier.push(nb.node);
      }
    }
  }
  return reached == n;
}

GraphClass classify(const Graph& g) {
  const std::size_t n = g.node_count();
  GraphClass c;
  c.connected = is_connected(g);
  std::vector<std::size_t> degree(n);
  std::vector<double> weighted(n, 0.0);
  for (NodeId i = 0; i < n; ++i) {
    const auto row = g.neighbors(i);
    degree[i] = row.size();
    for (const Neighbor& nb : row) weighted[i] += nb.weight;
    if (row.empty()) ++c.isolate_count;
  }
  c.has_isolates = c.isolate_count > 0;
  c.regular = all_equal(degree);
  c.weighted_regular = all_equal(weighted);
  return c;
}

IsolateFilter drop_isolates(const Graph& g) {
  const std::size_t n = g.node_count();
  IsolateFilter out;
  std::vector<NodeId> remap(n, 0);
  for (NodeId i = 0; i < n; ++i) {
    if (!g.neighbors(i).empty()) {
      remap[i] = static_cast<NodeId>(out.original_ids.size());
      out.original_ids.push_back(i);
    }
  }
  if (out.original_ids.empty()) {
    throw Error(ErrorCode::EmptyGraph, "every node of the " + std::to_string(n) + "-node graph is isolated");
  }
  out.dropped = n - out.original_ids.size();
  if (out.dropped == 0) {
    out.graph = g;
    return out;
  }

  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) edges.push_back({remap[e.u], remap[e.v], e.weight});
  std::optional<std::vector<double>> attrs;
  if (g.attributes()) {
    attrs.emplace();
    for (NodeId old : out.original_ids) attrs->push_back((*g.attributes())[old]);
  }
  std::vector<std::string> labels;
  if (!g.labels().empty()) {
    for (NodeId old : out.original_ids) labels.push_back(g.labels()[old]);
  }
  out.graph = Graph::build(out.original_ids.size(), edges, std::move(attrs), std::move(labels));
  return out;
}

}  // namespace paradox
