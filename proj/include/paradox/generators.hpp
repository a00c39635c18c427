#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "paradox/graph.hpp"
#include "paradox/node_table.hpp"

namespace paradox {

/// Independent RNG streams. Each purpose draws from its own engine so that,
/// for example, changing a condition's attributes never perturbs topology.
enum class Stream : std::uint64_t {
  Topology = 1,
  Weights = 2,
  Attributes = 3,
  Rewire = 4,
  Metadata = 5,
  Parameters = 6,
};

/// Deterministic 64-bit seed for (master, index, stream), via SplitMix64
/// finalization.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index, Stream stream);

struct GnpSpec {
  std::size_t n = 1000;
  double p = 1.0 / 50.0;
  int max_weight = 10;  // weights uniform on 1..max_weight
  std::uint64_t seed = 0;
};

/// G(n, p) with integer weights uniform on [1, max_weight]. Topology and
/// weights use separate streams derived from spec.seed.
Graph generate_gnp(const GnpSpec& spec);

enum class RejectReason { None, Disconnected, Regular, WeightedRegular };

std::string_view to_string(RejectReason r);

struct Acceptance {
  bool accepted = false;
  RejectReason reason = RejectReason::None;
};

/// Accepts connected graphs that are neither regular nor weighted-regular.
Acceptance accept_graph(const Graph& g);

/// n iid standard normal draws.
std::vector<double> draw_standard_normal(std::size_t n, std::uint64_t seed);

/// a_i = z_i + (j / 100) d_i.
std::vector<double> shift_attributes(std::span<const double> z, std::span<const std::size_t> degree, int condition);

struct ConditionSpec {
  int j = 0;  // in [-100, 100]
};

/// shift_attributes applied to fresh standard normal draws.
std::vector<double> synthesize_attributes(const NodeQuantities& q, ConditionSpec cond, std::uint64_t seed);

inline constexpr int kRewireAttempts = 100;

/// Configuration-model rewiring by random stub matching on g's degree
/// sequence. Self-loops and repeated pairs are removed; the draw is repeated
/// until the result is connected. Edges get weight 1; the attribute and labels
/// are carried over. Throws RetryLimitExceeded after `max_attempts`.
Graph configuration_rewire(const Graph& g, std::uint64_t seed, int max_attempts = kRewireAttempts);

/// Each edge independently gets weight 2 with probability p2, else 1.
Graph assign_bernoulli_weights(const Graph& g, double p2, std::uint64_t seed);

/// Two-community "campus" network with categorical metadata, a synthetic
/// stand-in for a university friendship network.
struct CampusSpec {
  std::size_t n = 400;
  double block_fraction = 0.5;  // share of nodes in block 0
  double mean_degree_in[2] = {14.0, 6.0};  // mean in-block degree per block
  double activity_shape = 4.0;  // Gamma shape of the per-node activity factor
  double cross_share = 0.15;    // approximate share of cross-block edges
  /// Cross-block propensity grows like activity^cross_exponent; below 1 the
  /// busiest nodes are the most block-bound.
  double cross_exponent = 1.0;
  double gender_alignment = 0.9;  // P(gender matches block label)
  double gender_missing = 0.08;
  double year_missing = 0.14;
  int years = 4;
  double year_alignment = 0.3;  // P(year is the block's home year)
  std::uint64_t seed = 0;
};

struct CampusNetwork {
  Graph graph;  // unit weights, isolates removed
  NodeTable metadata;  // columns "gender" and "year"
};

CampusNetwork generate_campus(const CampusSpec& spec);

/// `count` campus specs with per-network parameters drawn from `seed`.
std::vector<CampusSpec> campus_corpus(std::size_t count, std::uint64_t seed);

}  // namespace paradox
