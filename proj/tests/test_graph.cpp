#include <doctest.h>

#include "fixtures.hpp"
#include "paradox/error.hpp"
#include "paradox/graph.hpp"

using namespace paradox;

namespace {

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

TEST_CASE("build rejects malformed edge lists") {
  CHECK(code_of([] { std::vector<Edge> e{{0, 0, 1.0}}; Graph::build(2, e); }) == ErrorCode::SelfLoop);
  CHECK(code_of([] { std::vector<Edge> e{{0, 1, 1.0}, {1, 0, 2.0}}; Graph::build(2, e); }) == ErrorCode::DuplicateEdge);
  CHECK(code_of([] { std::vector<Edge> e{{0, 1, 0.0}}; Graph::build(2, e); }) == ErrorCode::NonPositiveWeight);
  CHECK(code_of([] { std::vector<Edge> e{{0, 1, -1.0}}; Graph::build(2, e); }) == ErrorCode::NonPositiveWeight);
  CHECK(code_of([] { std::vector<Edge> e{{0, 5, 1.0}}; Graph::build(2, e); }) == ErrorCode::IndexOutOfRange);
  CHECK(code_of([] {
          std::vector<Edge> e{{0, 1, 1.0}};
          Graph::build(2, e, std::vector<double>{1.0});
        }) == ErrorCode::AttributeLengthMismatch);
}

TEST_CASE("error messages name the offending entry") {
  try {
    std::vector<Edge> e{{0, 1, 1.0}, {1, 0, 2.0}};
    Graph::build(2, e);
    FAIL("no throw");
  } catch (const Error& ex) {
    CHECK(std::string(ex.what()).find("DuplicateEdge") != std::string::npos);
  }
}

TEST_CASE("adjacency is canonical and symmetric") {
  const Graph g = testing::path3();
  CHECK(g.node_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.degree(1) == 2);
  CHECK(g.weight(0, 1) == 1.0);
  CHECK(g.weight(1, 0) == 1.0);
  CHECK(g.weight(2, 1) == 2.0);
  CHECK(g.weight(0, 2) == 0.0);
  CHECK(g.edges()[1] == Edge{1, 2, 2.0});
  CHECK(g.label(2) == "C");
  const auto row = g.neighbors(1);
  REQUIRE(row.size() == 2);
  CHECK(row[0].node == 0);
  CHECK(row[1].node == 2);
  std::vector<Edge> reversed{{2, 1, 2.0}, {1, 0, 1.0}};
  CHECK(Graph::build(3, reversed).edges()[0] == Edge{0, 1, 1.0});
}

TEST_CASE("node quantities of the path fixture") {
  const NodeQuantities q = node_quantities(testing::path3());
  CHECK(q.degree == std::vector<std::size_t>{1, 2, 1});
  CHECK(q.weighted_degree == std::vector<double>{1.0, 3.0, 2.0});
  CHECK(q.delta[0] == doctest::Approx(0.5));
  CHECK(q.delta[1] == doctest::Approx(2.0));
  CHECK(q.delta[2] == doctest::Approx(0.5));
  CHECK(q.gamma[0] == doctest::Approx(1.0 / 3.0));
  CHECK(q.gamma[1] == doctest::Approx(2.0));
  CHECK(q.gamma[2] == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("node quantities refuse isolates") {
  std::vector<Edge> e{{0, 1, 1.0}};
  CHECK(code_of([&] { node_quantities(Graph::build(3, e)); }) == ErrorCode::IsolatePresent);
}

TEST_CASE("classification") {
  const GraphClass path = classify(testing::path3());
  CHECK(path.connected);
  CHECK_FALSE(path.regular);
  CHECK_FALSE(path.weighted_regular);

  const GraphClass ring = classify(testing::cycle(5));
  CHECK(ring.regular);
  CHECK(ring.weighted_regular);

  // Degree-regular but not weighted-regular.
  std::vector<Edge> e{{0, 1, 1.0}, {1, 2, 2.0}, {2, 3, 1.0}, {3, 0, 1.0}};
  const GraphClass mixed = classify(Graph::build(4, e));
  CHECK(mixed.regular);
  CHECK_FALSE(mixed.weighted_regular);

  // Weighted-regular but not degree-regular: every weighted degree is 4.
  std::vector<Edge> f{{0, 1, 1.0}, {0, 2, 1.0}, {0, 3, 1.0}, {0, 4, 1.0}, {1, 2, 3.0}, {3, 4, 3.0}};
  const GraphClass wr = classify(Graph::build(5, f));
  CHECK_FALSE(wr.regular);
  CHECK(wr.weighted_regular);

  std::vector<Edge> split{{0, 1, 1.0}, {2, 3, 1.0}};
  const GraphClass two = classify(Graph::build(5, split));
  CHECK_FALSE(two.connected);
  CHECK(two.has_isolates);
  CHECK(two.isolate_count == 1);
}

TEST_CASE("drop_isolates keeps labels and attributes") {
  std::vector<Edge> e{{0, 2, 1.0}};
  const Graph g = Graph::build(3, e, std::vector<double>{5.0, 6.0, 7.0}, {"x", "y", "z"});
  const IsolateFilter f = drop_isolates(g);
  CHECK(f.dropped == 1);
  CHECK(f.graph.node_count() == 2);
  CHECK(f.original_ids == std::vector<NodeId>{0, 2});
  CHECK(f.graph.label(1) == "z");
  CHECK((*f.graph.attributes())[1] == 7.0);
  CHECK(code_of([] { drop_isolates(Graph::build(2, std::vector<Edge>{})); }) == ErrorCode::EmptyGraph);
}

TEST_CASE("with_* return modified copies") {
  const Graph g = testing::path3();
  CHECK_FALSE(g.unit_weights());
  const Graph u = g.with_unit_weights();
  CHECK(u.unit_weights());
  CHECK(u.attributes() == g.attributes());
  const std::vector<double> w{4.0, 5.0};
  CHECK(g.with_weights(w).weight(1, 2) == 5.0);
  CHECK_FALSE(g.with_attributes(std::nullopt).has_attributes());
  CHECK(g.weight(1, 2) == 2.0);
}
