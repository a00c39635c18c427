#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace paradox {

using NodeId = std::uint32_t;

/// Undirected weighted edge. Stored canonically with `u < v`.
struct Edge {
  NodeId u;
  NodeId v;
  double weight;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
  NodeId node;
  double weight;
};

/// Weighted undirected simple graph with an optional numeric node attribute.
///
/// Nodes are dense indices 0..n-1. Optional string labels map indices back to
/// the identifiers used by an input file. Instances are immutable once built;
/// the `with_*` members return modified copies.
class Graph {
 public:
  Graph() = default;

  /// Validates and builds a graph from an edge list. Edges may be given in
  /// either orientation. Throws `Error` with SelfLoop, DuplicateEdge,
  /// NonPositiveWeight, IndexOutOfRange or AttributeLengthMismatch, naming the
  /// offending entry.
  static Graph build(std::size_t node_count, std::span<const Edge> edges,
                     std::optional<std::vector<double>> attributes = std::nullopt,
                     std::vector<std::string> labels = {});

  std::size_t node_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  /// Neighbors of `node`, sorted by neighbor id.
  std::span<const Neighbor> neighbors(NodeId node) const;
  std::size_t degree(NodeId node) const { return neighbors(node).size(); }

  /// Weight of {i, j}, or 0 when the pair is not an edge.
  double weight(NodeId i, NodeId j) const;

  /// Canonical edge list (u < v), sorted lexicographically.
  std::span<const Edge> edges() const noexcept { return edges_; }

  const std::optional<std::vector<double>>& attributes() const noexcept { return attributes_; }
  bool has_attributes() const noexcept { return attributes_.has_value(); }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// Label for `node`, or its decimal index when the graph is unlabeled.
  std::string label(NodeId node) const;

  bool unit_weights() const noexcept;

  Graph with_unit_weights() const;
  /// Replaces weights; `weights[k]` applies to `edges()[k]`.
  Graph with_weights(std::span<const double> weights) const;
  Graph with_attributes(std::optional<std::vector<double>> attributes) const;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Neighbor> adjacency_;
  std::vector<Edge> edges_;
  std::optional<std::vector<double>> attributes_;
  std::vector<std::string> labels_;
};

/// Per-node first-order quantities consumed by every gap and correlation.
struct NodeQuantities {
  std::vector<std::size_t> degree;     // d_i = |N(i)|
  std::vector<double> weighted_degree; // w_i = sum_j e_ij
  std::vector<double> delta;           // sum_j 1 / d_j
  std::vector<double> gamma;           // sum_j e_ij / w_j

  std::size_t size() const noexcept { return degree.size(); }
  std::vector<double> degree_real() const;
};

/// Throws IsolatePresent when some node has no neighbors.
NodeQuantities node_quantities(const Graph& g);

struct GraphClass {
  bool connected = false;
  bool regular = false;
  bool weighted_regular = false;
  bool has_isolates = false;
  std::size_t isolate_count = 0;
};

GraphClass classify(const Graph& g);

bool is_connected(const Graph& g);

struct IsolateFilter {
  Graph graph;
  std::size_t dropped = 0;
  /// original_ids[k] is the index in the input graph of node k in `graph`.
  std::vector<NodeId> original_ids;
};

/// Induced subgraph on non-isolated nodes. Throws EmptyGraph if every node
/// is isolated.
IsolateFilter drop_isolates(const Graph& g);

}  // namespace paradox
