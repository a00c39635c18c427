#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "paradox/graph.hpp"
#include "paradox/node_table.hpp"

namespace paradox {

struct LoadOptions {
  /// Drop self-loops and repeated pairs (counting them) instead of failing,
  /// and treat metadata rows for unknown nodes as isolates.
  bool lenient = false;
  /// Metadata cells equal to this token are missing. Empty cells always are.
  std::string missing_token;
};

struct LoadedGraph {
  Graph graph;  // labeled; no isolates
  NodeTable metadata;  // one row per graph node; empty when no file was given
  std::size_t dropped_isolates = 0;
  std::size_t dropped_duplicates = 0;
  std::size_t dropped_self_loops = 0;
};

/// Edge list: one edge per line, "source target [weight]" separated by tabs,
/// commas or whitespace (detected from the first data line). Blank lines and
/// lines starting with '#' are skipped. Metadata: a header row naming the
/// label column and the value columns, then one row per node.
///
/// Errors: ParseError (with line number), SelfLoop / DuplicateEdge in strict
/// mode, NonPositiveWeight, UnknownNodeInMetadata in strict mode.
LoadedGraph load_graph(const std::filesystem::path& edge_file,
                       const std::optional<std::filesystem::path>& metadata_file,
                       const LoadOptions& options = {});

LoadedGraph parse_graph(std::istream& edges, std::istream* metadata, const LoadOptions& options = {});

/// Numeric column as an attribute vector. Throws MissingColumn, or ParseError
/// naming the node whose cell is missing or not a number.
std::vector<double> numeric_column(const Graph& g, const NodeTable& table, std::string_view column);

/// Share of each node's neighbors whose `column` value equals its own, a
/// missing value matching only another missing value. Edge weights are
/// ignored.
std::vector<double> derive_prop_own(const Graph& g, const NodeTable& table, std::string_view column);

struct HomophilyWeights {
  Graph graph;
  double p2 = 0.0;  // fraction of edges that received weight 2
};

/// Weight 2 when both endpoints have the same reported `column` value, else 1
/// (two missing values do not count as a match).
HomophilyWeights derive_homophily_weights(const Graph& g, const NodeTable& table, std::string_view column);

/// Tab-separated "source target weight" lines in canonical edge order.
void write_edge_list(std::ostream& out, const Graph& g);
/// Tab-separated header "node" + columns, one row per node; missing cells
/// are written as `missing_token` (empty by default).
void write_metadata(std::ostream& out, const Graph& g, const NodeTable& table, std::string_view missing_token = "");

/// {"n", "nodes": [labels], "edges": [[u, v, w]...], "attributes": [...] | null}
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

}  // namespace paradox
