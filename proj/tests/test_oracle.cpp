#include <doctest.h>

#include "fixtures.hpp"
#include "paradox/error.hpp"
#include "paradox/oracle.hpp"

using namespace paradox;
using oracle::Rational;

TEST_CASE("exact gaps of the path fixture") {
  const oracle::ExactGaps e = oracle::exact(testing::path3());
  CHECK(e[Paradox::LFP] == Rational(1, 6));
  CHECK(e[Paradox::SFP] == Rational(1, 3));
  CHECK(e[Paradox::LWFP] == Rational(1, 3));
  CHECK(e[Paradox::SWFP] == Rational(5, 9));
  CHECK(e[Paradox::LAFP] == Rational(-1, 4));
  CHECK(e[Paradox::SAFP] == Rational(-1, 2));
  CHECK(e[Paradox::LWAFP] == Rational(-1, 3));
  CHECK(e[Paradox::SWAFP] == Rational(-5, 9));
}

TEST_CASE("exact fallback matches the degree versions") {
  const oracle::ExactGaps e = oracle::exact(testing::path3(false));
  CHECK(e[Paradox::LAFP] == e[Paradox::LFP]);
  CHECK(e[Paradox::SAFP] == e[Paradox::SFP]);
  CHECK(e[Paradox::LWAFP] == e[Paradox::LWFP]);
  CHECK(e[Paradox::SWAFP] == e[Paradox::SWFP]);
}

TEST_CASE("list oracles on the fixture") {
  const Graph g = testing::path3();
  const std::vector<double> a = *g.attributes();
  CHECK(oracle::list_gap(g, a, false) == doctest::Approx(-0.25));
  CHECK(oracle::list_gap(g, a, true) == doctest::Approx(-1.0 / 3.0));
  CHECK(oracle::singular_gap(g, a, false) == doctest::Approx(-0.5));
  CHECK(oracle::singular_gap(g, a, true) == doctest::Approx(-5.0 / 9.0));
}

TEST_CASE("list oracles accept real weights") {
  const std::vector<Edge> edges{{0, 1, 0.5}, {1, 2, 1.5}};
  const Graph g = Graph::build(3, edges);
  const std::vector<double> a{2.0, 0.0, 1.0};
  // Weighted list: A's list [B] weight 0.5, B's [A x0.5, C x1.5], C's [B x1.5].
  const double list = (0.5 * 0 + 0.5 * 2 + 1.5 * 1 + 1.5 * 0) / 4.0 - 1.0;
  CHECK(oracle::list_gap(g, a, true) == doctest::Approx(list));
  CHECK(oracle::to_double(oracle::exact(Graph::build(3, std::vector<Edge>{{0, 1, 1.0}, {1, 2, 3.0}}))[Paradox::LFP]) ==
        doctest::Approx(1.0 / 6.0));
}

TEST_CASE("oracle limits") {
  const std::vector<Edge> real{{0, 1, 0.5}, {1, 2, 1.0}};
  CHECK_THROWS_AS(oracle::exact(Graph::build(3, real)), Error);
  std::vector<Edge> big;
  for (NodeId i = 0; i + 1 < 150; ++i) big.push_back({i, i + 1, 1.0});
  try {
    oracle::exact(Graph::build(150, big));
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SizeLimitExceeded);
  }
}
