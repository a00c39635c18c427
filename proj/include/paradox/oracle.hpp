#pragma once

// Brute-force reference implementations of the eight gaps. Each one builds
// the friend lists literally (friend j appended e_ij times under integer
// weights) and averages them, never touching the closed forms in gaps.hpp.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "paradox/gaps.hpp"
#include "paradox/graph.hpp"

namespace paradox::oracle {

using Rational = boost::multiprecision::cpp_rational;

inline constexpr std::size_t kMaxListNodes = 10'000;
inline constexpr std::size_t kMaxListLength = 50'000'000;
inline constexpr std::size_t kMaxExactNodes = 100;

/// Mean of the concatenated second-order lists minus mean(a). With
/// `weighted`, friend j appears e_ij times in i's list (integer weights) or
/// carries weight e_ij (real weights); otherwise once. Throws
/// SizeLimitExceeded beyond kMaxListNodes nodes or kMaxListLength entries.
double list_gap(const Graph& g, std::span<const double> a, bool weighted);

/// Mean over nodes of each node's own second-order list mean, minus mean(a).
double singular_gap(const Graph& g, std::span<const double> a, bool weighted);

/// All eight gaps as exact rationals, indexed like kAllParadoxes.
struct ExactGaps {
  std::array<Rational, 8> values;
  const Rational& operator[](Paradox p) const { return values[static_cast<std::size_t>(p)]; }
};

/// Exact gaps of a graph with integer weights. The attribute defaults to the
/// graph's own (each double converted exactly) and falls back to weighted
/// degree per version when unset. Throws SizeLimitExceeded for n > 100 and
/// InvalidArgument for non-integer weights.
ExactGaps exact(const Graph& g, std::optional<std::vector<Rational>> attributes = std::nullopt);

double to_double(const Rational& r);

}  // namespace paradox::oracle
