#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "paradox/error.hpp"
#include "paradox/generators.hpp"

using namespace paradox;

TEST_CASE("seed derivation") {
  CHECK(derive_seed(1, 2, Stream::Topology) == derive_seed(1, 2, Stream::Topology));
  std::set<std::uint64_t> seen;
  for (std::uint64_t m = 0; m < 4; ++m) {
    for (std::uint64_t i = 0; i < 4; ++i) {
      for (Stream s : {Stream::Topology, Stream::Weights, Stream::Attributes, Stream::Rewire}) {
        seen.insert(derive_seed(m, i, s));
      }
    }
  }
  CHECK(seen.size() == 64);
}

TEST_CASE("G(n,p) is deterministic in its seed") {
  const GnpSpec spec{80, 0.1, 10, 99};
  const Graph a = generate_gnp(spec);
  const Graph b = generate_gnp(spec);
  REQUIRE(a.edge_count() == b.edge_count());
  CHECK(std::equal(a.edges().begin(), a.edges().end(), b.edges().begin()));
  GnpSpec other = spec;
  other.seed = 100;
  const Graph c = generate_gnp(other);
  CHECK_FALSE((c.edge_count() == a.edge_count() && std::equal(a.edges().begin(), a.edges().end(), c.edges().begin())));
  for (const Edge& e : a.edges()) {
    CHECK(e.weight >= 1.0);
    CHECK(e.weight <= 10.0);
    CHECK(e.weight == std::floor(e.weight));
  }
}

TEST_CASE("G(n,p) mean degree within 4 sigma of (n-1)p") {
  const std::size_t n = 200;
  const double p = 0.05;
  double total = 0.0;
  const int seeds = 20;
  for (int s = 0; s < seeds; ++s) {
    total += 2.0 * static_cast<double>(generate_gnp({n, p, 10, static_cast<std::uint64_t>(s)}).edge_count()) / n;
  }
  const double mean = total / seeds;
  // Edge count is Binomial(n(n-1)/2, p); mean degree is 2|E|/n.
  const double pairs = n * (n - 1) / 2.0;
  const double sigma = 2.0 * std::sqrt(pairs * p * (1 - p)) / n / std::sqrt(static_cast<double>(seeds));
  CHECK(std::abs(mean - (n - 1) * p) <= 4 * sigma);
}

TEST_CASE("G(n,p) argument checks") {
  CHECK_THROWS_AS(generate_gnp({10, 0.0, 10, 0}), Error);
  CHECK_THROWS_AS(generate_gnp({10, 1.5, 10, 0}), Error);
  CHECK_THROWS_AS(generate_gnp({10, 0.5, 0, 0}), Error);
}

TEST_CASE("acceptance rule") {
  std::vector<Edge> ring;
  for (NodeId i = 0; i < 5; ++i) ring.push_back({i, static_cast<NodeId>((i + 1) % 5), 1.0});
  CHECK(accept_graph(Graph::build(5, ring)).reason == RejectReason::Regular);
  std::vector<Edge> split{{0, 1, 1.0}, {2, 3, 1.0}};
  CHECK(accept_graph(Graph::build(4, split)).reason == RejectReason::Disconnected);
  std::vector<Edge> wr{{0, 1, 1.0}, {0, 2, 1.0}, {0, 3, 1.0}, {0, 4, 1.0}, {1, 2, 3.0}, {3, 4, 3.0}};
  CHECK(accept_graph(Graph::build(5, wr)).reason == RejectReason::WeightedRegular);
  std::vector<Edge> path{{0, 1, 1.0}, {1, 2, 2.0}};
  CHECK(accept_graph(Graph::build(3, path)).accepted);
}

TEST_CASE("attribute conditions") {
  const std::vector<double> z{0.5, -1.0, 2.0};
  const std::vector<std::size_t> d{1, 2, 3};
  CHECK(shift_attributes(z, d, 0) == z);
  const std::vector<double> up = shift_attributes(z, d, 50);
  CHECK(up[2] == doctest::Approx(2.0 + 1.5));
  const std::vector<double> down = shift_attributes(z, d, -100);
  CHECK(down[1] == doctest::Approx(-3.0));
  CHECK_THROWS_AS(shift_attributes(z, d, 101), Error);
  CHECK(draw_standard_normal(5, 3) == draw_standard_normal(5, 3));
  CHECK(draw_standard_normal(5, 3) != draw_standard_normal(5, 4));
}

TEST_CASE("configuration rewiring") {
  const Graph g = generate_gnp({120, 0.08, 3, 5}).with_attributes(std::vector<double>(120, 1.25));
  const Graph r = configuration_rewire(g, 17);
  CHECK(r.node_count() == g.node_count());
  CHECK(is_connected(r));
  CHECK(r.unit_weights());
  CHECK(r.attributes() == g.attributes());
  for (NodeId i = 0; i < g.node_count(); ++i) CHECK(r.degree(i) <= g.degree(i));
  const Graph again = configuration_rewire(g, 17);
  CHECK(std::equal(r.edges().begin(), r.edges().end(), again.edges().begin(), again.edges().end()));

  // A perfect matching can never be rewired into a connected graph.
  std::vector<Edge> matching{{0, 1, 1.0}, {2, 3, 1.0}};
  try {
    configuration_rewire(Graph::build(4, matching), 1, 5);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RetryLimitExceeded);
  }
}

TEST_CASE("Bernoulli weights") {
  const Graph g = generate_gnp({300, 0.05, 1, 8});
  CHECK(assign_bernoulli_weights(g, 0.0, 1).unit_weights());
  for (const Edge& e : assign_bernoulli_weights(g, 1.0, 1).edges()) CHECK(e.weight == 2.0);
  const Graph h = assign_bernoulli_weights(g, 0.457, 2);
  double heavy = 0;
  for (const Edge& e : h.edges()) heavy += e.weight == 2.0 ? 1 : 0;
  const double m = static_cast<double>(h.edge_count());
  CHECK(std::abs(heavy - 0.457 * m) <= 4 * std::sqrt(m * 0.457 * 0.543));
  CHECK_THROWS_AS(assign_bernoulli_weights(g, 1.5, 1), Error);
}

TEST_CASE("campus networks") {
  const std::vector<CampusSpec> specs = campus_corpus(3, 11);
  REQUIRE(specs.size() == 3);
  CHECK(specs[0].seed != specs[1].seed);
  const CampusNetwork a = generate_campus(specs[0]);
  const CampusNetwork b = generate_campus(specs[0]);
  CHECK(is_connected(a.graph));
  CHECK(a.graph.unit_weights());
  CHECK(a.metadata.rows() == a.graph.node_count());
  CHECK(a.metadata.has_column("gender"));
  CHECK(a.metadata.has_column("year"));
  CHECK(std::equal(a.graph.edges().begin(), a.graph.edges().end(), b.graph.edges().begin(), b.graph.edges().end()));
  std::size_t missing = 0;
  for (const auto& cell : a.metadata.column("gender")) missing += cell ? 0 : 1;
  CHECK(missing > 0);
  CHECK(missing < a.graph.node_count() / 3);
  CampusSpec bad = specs[0];
  bad.cross_share = 1.0;
  CHECK_THROWS_AS(generate_campus(bad), Error);
}
