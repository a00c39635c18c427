#include <doctest.h>

#include <sstream>

#include "paradox/error.hpp"
#include "paradox/ingest.hpp"

using namespace paradox;

namespace {

LoadedGraph parse(const std::string& edges, const std::string& meta = {}, LoadOptions options = {}) {
  std::istringstream e(edges);
  if (meta.empty()) return parse_graph(e, nullptr, options);
  std::istringstream m(meta);
  return parse_graph(e, &m, options);
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InternalInconsistency;
}

}  // namespace

TEST_CASE("fixture round trip with an attribute column") {
  const LoadedGraph l = parse("A B 1\nB C 2\n", "node a\nA 2\nB 0\nC 1\n");
  const Graph& g = l.graph;
  CHECK(g.node_count() == 3);
  CHECK(g.weight(1, 2) == 2.0);
  CHECK(g.label(0) == "A");
  CHECK(numeric_column(g, l.metadata, "a") == std::vector<double>{2.0, 0.0, 1.0});
}

TEST_CASE("delimiters, comments and default weights") {
  const LoadedGraph tab = parse("# comment\n\nx\ty\t2.5\ny\tz\n");
  CHECK(tab.graph.edge_count() == 2);
  CHECK(tab.graph.weight(0, 1) == 2.5);
  CHECK(tab.graph.weight(1, 2) == 1.0);
  const LoadedGraph comma = parse("x,y,3\ny,z,1\n");
  CHECK(comma.graph.weight(0, 1) == 3.0);
  const LoadedGraph spaces = parse("one   two\n");
  CHECK(spaces.graph.label(1) == "two");
}

TEST_CASE("strict and lenient error handling") {
  CHECK(code_of([] { parse("A A 1\n"); }) == ErrorCode::SelfLoop);
  CHECK(code_of([] { parse("A B 1\nB A 1\n"); }) == ErrorCode::DuplicateEdge);
  CHECK(code_of([] { parse("A B -1\n"); }) == ErrorCode::NonPositiveWeight);
  CHECK(code_of([] { parse("A B x\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse("A\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse("# only comments\n"); }) == ErrorCode::EmptyGraph);

  LoadOptions lenient;
  lenient.lenient = true;
  const LoadedGraph dup = parse("A B 1\nB A 1\n", {}, lenient);
  CHECK(dup.graph.edge_count() == 1);
  CHECK(dup.dropped_duplicates == 1);
  const LoadedGraph loop = parse("A A 1\nA B 1\n", {}, lenient);
  CHECK(loop.dropped_self_loops == 1);
  CHECK(loop.graph.edge_count() == 1);
}

TEST_CASE("parse errors report the line") {
  try {
    parse("A B 1\n\nC D 1 9\n");
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("metadata handling") {
  CHECK(code_of([] { parse("A B\n", "node g\nZ F\n"); }) == ErrorCode::UnknownNodeInMetadata);
  LoadOptions lenient;
  lenient.lenient = true;
  const LoadedGraph l = parse("A B\n", "node g\nZ F\nA M\n", lenient);
  CHECK(l.dropped_isolates == 1);
  CHECK(l.metadata.column("g")[0] == std::optional<std::string>("M"));
  CHECK_FALSE(l.metadata.column("g")[1]);
  CHECK(code_of([] { parse("A B\n", "node g\nA F\nA M\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([&] { l.metadata.column("year"); }) == ErrorCode::MissingColumn);

  LoadOptions token;
  token.missing_token = "0";
  const LoadedGraph t = parse("A B\n", "node g\nA 0\nB F\n", token);
  CHECK_FALSE(t.metadata.column("g")[0]);
}

TEST_CASE("prop_own counts same-valued neighbors") {
  // Node A with friends valued F, F, M and own value F.
  const LoadedGraph l = parse("A B\nA C\nA D\n", "node g\nA F\nB F\nC F\nD M\n");
  const std::vector<double> a = derive_prop_own(l.graph, l.metadata, "g");
  CHECK(a[0] == doctest::Approx(2.0 / 3.0));
  CHECK(a[3] == 0.0);
  for (double v : a) {
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
  }
  // Missing matches missing.
  const LoadedGraph m = parse("A B\n", "node g\nA\t\nB\t\n");
  CHECK(derive_prop_own(m.graph, m.metadata, "g") == std::vector<double>{1.0, 1.0});
  CHECK(code_of([&] { derive_prop_own(l.graph, l.metadata, "nope"); }) == ErrorCode::MissingColumn);
}

TEST_CASE("prop_own on a two-block graph with block-aligned values") {
  // Two 10-cliques; every node has 9 in-block neighbors and one cross edge: 90% in-block.
  std::ostringstream edges;
  std::ostringstream meta;
  meta << "node g\n";
  for (int b = 0; b < 2; ++b) {
    for (int i = 0; i < 10; ++i) {
      meta << "n" << b << "_" << i << ' ' << (b == 0 ? 'F' : 'M') << '\n';
      for (int j = i + 1; j < 10; ++j) edges << "n" << b << "_" << i << " n" << b << "_" << j << '\n';
    }
  }
  for (int i = 0; i < 10; ++i) edges << "n0_" << i << " n1_" << i << '\n';
  const LoadedGraph l = parse(edges.str(), meta.str());
  const std::vector<double> a = derive_prop_own(l.graph, l.metadata, "g");
  double mean = 0.0;
  for (double v : a) mean += v / static_cast<double>(a.size());
  CHECK(mean == doctest::Approx(0.9));
}

TEST_CASE("homophily weights") {
  const LoadedGraph l = parse("A B\nB C\nC D\n", "node year\nA 2005\nB 2005\nC\nD\n");
  const HomophilyWeights h = derive_homophily_weights(l.graph, l.metadata, "year");
  CHECK(h.graph.weight(0, 1) == 2.0);
  CHECK(h.graph.weight(1, 2) == 1.0);
  CHECK(h.graph.weight(2, 3) == 1.0);
  CHECK(h.p2 == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("edge list and metadata round trip") {
  const LoadedGraph l = parse("A B 1.5\nB C 2\n", "node g year\nA F 2005\nB\tM\t\nC F 2006\n");
  std::ostringstream edges;
  std::ostringstream meta;
  write_edge_list(edges, l.graph);
  write_metadata(meta, l.graph, l.metadata);
  const LoadedGraph r = parse(edges.str(), meta.str());
  CHECK(r.graph.node_count() == l.graph.node_count());
  CHECK(std::equal(r.graph.edges().begin(), r.graph.edges().end(), l.graph.edges().begin(), l.graph.edges().end()));
  CHECK(r.metadata.column("year")[1] == l.metadata.column("year")[1]);
  CHECK(r.metadata.column("g")[2] == std::optional<std::string>("F"));
}

TEST_CASE("graph JSON round trip") {
  const LoadedGraph l = parse("A B 0.1\nB C 2\n");
  const Graph g = l.graph.with_attributes(std::vector<double>{1.0 / 3.0, 2.0, -1.0});
  const Graph back = graph_from_json(nlohmann::json::parse(graph_to_json(g).dump()));
  CHECK(std::equal(back.edges().begin(), back.edges().end(), g.edges().begin(), g.edges().end()));
  CHECK(back.attributes() == g.attributes());
  CHECK(back.labels() == g.labels());
  CHECK(code_of([] { graph_from_json(nlohmann::json::parse(R"({"n": 2})")); }) == ErrorCode::ParseError);
}
