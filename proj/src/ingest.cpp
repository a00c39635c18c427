#include "paradox/ingest.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_map>
#include <utility>

#include "paradox/error.hpp"

namespace paradox {

namespace {

enum class Delimiter { Tab, Comma, Whitespace };

Delimiter detect(std::string_view line) {
  if (line.find('\t') != std::string_view::npos) return Delimiter::Tab;
  if (line.find(',') != std::string_view::npos) return Delimiter::Comma;
  return Delimiter::Whitespace;
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(const std::string& line, Delimiter d) {
  std::vector<std::string> fields;
  if (d == Delimiter::Whitespace) {
    std::istringstream in(line);
    std::string f;
    while (in >> f) fields.push_back(f);
    return fields;
  }
  const char sep = d == Delimiter::Tab ? '\t' : ',';
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    fields.push_back(trim(std::string_view(line).substr(start, pos == std::string::npos ? std::string::npos : pos - start)));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return fields;
}

bool skippable(const std::string& line) {
  const std::string t = trim(line);
  return t.empty() || t.front() == '#';
}

std::optional<double> parse_number(const std::string& s) {
  if (s.empty()) return std::nullopt;
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v)) return std::nullopt;
  return v;
}

std::string at_line(std::size_t line) { return "line " + std::to_string(line) + ": "; }

}  // namespace

LoadedGraph parse_graph(std::istream& edge_stream, std::istream* metadata_stream, const LoadOptions& options) {
  LoadedGraph out;
  std::unordered_map<std::string, NodeId> ids;
  std::vector<std::string> labels;
  auto intern = [&](const std::string& label) {
    const auto [it, inserted] = ids.emplace(label, static_cast<NodeId>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  };

  std::vector<Edge> edges;
  std::set<std::pair<NodeId, NodeId>> seen;
  std::optional<Delimiter> delimiter;
  std::string line;
  for (std::size_t number = 1; std::getline(edge_stream, line); ++number) {
    if (skippable(line)) continue;
    if (!delimiter) delimiter = detect(line);
    const std::vector<std::string> fields = split(line, *delimiter);
    if (fields.size() < 2 || fields.size() > 3 || fields[0].empty() || fields[1].empty()) {
      throw Error(ErrorCode::ParseError, at_line(number) + "expected 'source target [weight]', got '" + trim(line) + "'");
    }
    double weight = 1.0;
    if (fields.size() == 3) {
      const auto parsed = parse_number(fields[2]);
      if (!parsed) throw Error(ErrorCode::ParseError, at_line(number) + "weight '" + fields[2] + "' is not a number");
      weight = *parsed;
    }
    if (!(weight > 0.0)) {
      throw Error(ErrorCode::NonPositiveWeight, at_line(number) + "weight " + fields[2] + " must be positive");
    }
    if (fields[0] == fields[1]) {
      if (!options.lenient) throw Error(ErrorCode::SelfLoop, at_line(number) + "'" + fields[0] + "' links to itself");
      ++out.dropped_self_loops;
      intern(fields[0]);
      continue;
    }
    const NodeId u = intern(fields[0]);
    const NodeId v = intern(fields[1]);
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second) {
      if (!options.lenient) {
        throw Error(ErrorCode::DuplicateEdge,
                    at_line(number) + "pair '" + fields[0] + "' - '" + fields[1] + "' appears more than once");
      }
      ++out.dropped_duplicates;
      continue;
    }
    edges.push_back({u, v, weight});
  }

  Graph graph = Graph::build(labels.size(), edges, std::nullopt, labels);

  NodeTable table;
  if (metadata_stream != nullptr) {
    std::optional<Delimiter> mdelim;
    std::vector<std::string> header;
    std::vector<bool> filled(labels.size(), false);
    for (std::size_t number = 1; std::getline(*metadata_stream, line); ++number) {
      if (skippable(line)) continue;
      if (!mdelim) {
        mdelim = detect(line);
        header = split(line, *mdelim);
        if (header.size() < 2) throw Error(ErrorCode::ParseError, at_line(number) + "metadata header needs a label column and at least one value column");
        table = NodeTable(labels.size(), std::vector<std::string>(header.begin() + 1, header.end()));
        continue;
      }
      std::vector<std::string> fields = split(line, *mdelim);
      // Whitespace splitting drops trailing empty cells; pad them as missing.
      if (*mdelim == Delimiter::Whitespace && fields.size() < header.size()) fields.resize(header.size());
      if (fields.size() != header.size()) {
        throw Error(ErrorCode::ParseError, at_line(number) + "expected " + std::to_string(header.size()) +
                                               " fields, got " + std::to_string(fields.size()));
      }
      const auto it = ids.find(fields[0]);
      if (it == ids.end()) {
        if (!options.lenient) {
          throw Error(ErrorCode::UnknownNodeInMetadata, at_line(number) + "node '" + fields[0] + "' is not in the edge list");
        }
        ++out.dropped_isolates;
        continue;
      }
      if (filled[it->second]) throw Error(ErrorCode::ParseError, at_line(number) + "node '" + fields[0] + "' listed twice");
      filled[it->second] = true;
      for (std::size_t c = 1; c < header.size(); ++c) {
        const std::string& cell = fields[c];
        const bool missing = cell.empty() || (!options.missing_token.empty() && cell == options.missing_token);
        table.set(it->second, header[c], missing ? NodeTable::Cell{} : NodeTable::Cell{cell});
      }
    }
    if (!mdelim) throw Error(ErrorCode::ParseError, "metadata file has no header row");
  }

  if (labels.empty()) throw Error(ErrorCode::EmptyGraph, "edge list contains no edges");
  if (classify(graph).has_isolates) {
    IsolateFilter filtered = drop_isolates(graph);
    out.dropped_isolates += filtered.dropped;
    graph = std::move(filtered.graph);
    if (metadata_stream != nullptr) table = table.select_rows(filtered.original_ids);
  }
  out.graph = std::move(graph);
  out.metadata = std::move(table);
  return out;
}

LoadedGraph load_graph(const std::filesystem::path& edge_file,
                       const std::optional<std::filesystem::path>& metadata_file, const LoadOptions& options) {
  std::ifstream edges(edge_file);
  if (!edges) throw Error(ErrorCode::IoError, "cannot open edge file " + edge_file.string());
  if (!metadata_file) return parse_graph(edges, nullptr, options);
  std::ifstream metadata(*metadata_file);
  if (!metadata) throw Error(ErrorCode::IoError, "cannot open metadata file " + metadata_file->string());
  return parse_graph(edges, &metadata, options);
}

std::vector<double> numeric_column(const Graph& g, const NodeTable& table, std::string_view column) {
  const auto cells = table.column(column);
  std::vector<double> values(g.node_count());
  for (NodeId i = 0; i < g.node_count(); ++i) {
    const auto parsed = cells[i] ? parse_number(*cells[i]) : std::nullopt;
    if (!parsed) {
      throw Error(ErrorCode::ParseError, "node '" + g.label(i) + "' has no numeric value in column '" +
                                             std::string(column) + "'");
    }
    values[i] = *parsed;
  }
  return values;
}

std::vector<double> derive_prop_own(const Graph& g, const NodeTable& table, std::string_view column) {
  const auto cells = table.column(column);
  std::vector<double> share(g.node_count());
  for (NodeId i = 0; i < g.node_count(); ++i) {
    const auto row = g.neighbors(i);
    if (row.empty()) throw Error(ErrorCode::IsolatePresent, "node '" + g.label(i) + "'");
    std::size_t same = 0;
    for (const Neighbor& nb : row) same += cells[nb.node] == cells[i] ? 1 : 0;
    share[i] = static_cast<double>(same) / static_cast<double>(row.size());
  }
  return share;
}

HomophilyWeights derive_homophily_weights(const Graph& g, const NodeTable& table, std::string_view column) {
  const auto cells = table.column(column);
  std::vector<double> weights(g.edge_count());
  std::size_t heavy = 0;
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    const Edge& e = g.edges()[k];
    const bool match = cells[e.u] && cells[e.v] && *cells[e.u] == *cells[e.v];
    weights[k] = match ? 2.0 : 1.0;
    heavy += match ? 1 : 0;
  }
  HomophilyWeights out{g.with_weights(weights), 0.0};
  out.p2 = g.edge_count() == 0 ? 0.0 : static_cast<double>(heavy) / static_cast<double>(g.edge_count());
  return out;
}

void write_edge_list(std::ostream& out, const Graph& g) {
  const auto old_precision = out.precision(17);
  for (const Edge& e : g.edges()) out << g.label(e.u) << '\t' << g.label(e.v) << '\t' << e.weight << '\n';
  out.precision(old_precision);
}

void write_metadata(std::ostream& out, const Graph& g, const NodeTable& table, std::string_view missing_token) {
  out << "node";
  for (const auto& c : table.columns()) out << '\t' << c;
  out << '\n';
  for (NodeId i = 0; i < g.node_count(); ++i) {
    out << g.label(i);
    for (const auto& c : table.columns()) {
      const auto& cell = table.column(c)[i];
      out << '\t' << (cell ? std::string_view(*cell) : missing_token);
    }
    out << '\n';
  }
}

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.node_count();
  nlohmann::json nodes = nlohmann::json::array();
  for (NodeId i = 0; i < g.node_count(); ++i) nodes.push_back(g.label(i));
  j["nodes"] = std::move(nodes);
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v, e.weight});
  j["edges"] = std::move(edges);
  j["attributes"] = g.attributes() ? nlohmann::json(*g.attributes()) : nlohmann::json(nullptr);
  return j;
}

Graph graph_from_json(const nlohmann::json& j) {
  try {
    const std::size_t n = j.at("n").get<std::size_t>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) edges.push_back({e.at(0).get<NodeId>(), e.at(1).get<NodeId>(), e.at(2).get<double>()});
    std::optional<std::vector<double>> attrs;
    if (j.contains("attributes") && !j["attributes"].is_null()) attrs = j["attributes"].get<std::vector<double>>();
    std::vector<std::string> labels;
    if (j.contains("nodes")) labels = j["nodes"].get<std::vector<std::string>>();
    return Graph::build(n, edges, std::move(attrs), std::move(labels));
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::ParseError, std::string("graph JSON: ") + ex.what());
  }
}

}  // namespace paradox
