#include "paradox/oracle.hpp"

#include <cmath>
#include <string>

#include "paradox/error.hpp"

namespace paradox::oracle {

namespace {

bool integer_weights(const Graph& g) {
  for (const Edge& e : g.edges()) {
    if (e.weight != std::floor(e.weight)) return false;
  }
  return true;
}

void check_size(const Graph& g, std::span<const double> a, bool weighted) {
  if (a.size() != g.node_count()) {
    throw Error(ErrorCode::AttributeLengthMismatch, "attribute length does not match node count");
  }
  if (g.node_count() > kMaxListNodes) {
    throw Error(ErrorCode::SizeLimitExceeded,
                std::to_string(g.node_count()) + " nodes exceeds the oracle limit of " +
                    std::to_string(kMaxListNodes));
  }
  double length = 0.0;
  for (const Edge& e : g.edges()) length += 2.0 * (weighted ? e.weight : 1.0);
  if (length > static_cast<double>(kMaxListLength)) {
    throw Error(ErrorCode::SizeLimitExceeded, "materialized friend lists would hold " +
                                                  std::to_string(length) + " entries");
  }
  for (NodeId i = 0; i < g.node_count(); ++i) {
    if (g.neighbors(i).empty()) throw Error(ErrorCode::IsolatePresent, "node " + g.label(i));
  }
}

long double plain_mean(std::span<const double> a) {
  long double s = 0.0L;
  for (double v : a) s += v;
  return s / static_cast<long double>(a.size());
}

// One node's second-order list. Under integer weights friend j is appended
// e_ij times; `multiplicity` carries the residual weight for real weights.
struct FriendList {
  std::vector<double> values;
  std::vector<double> multiplicity;
};

FriendList friend_list(const Graph& g, NodeId i, std::span<const double> a, bool weighted, bool replicate) {
  FriendList list;
  for (const Neighbor& nb : g.neighbors(i)) {
    if (!weighted) {
      list.values.push_back(a[nb.node]);
      list.multiplicity.push_back(1.0);
    } else if (replicate) {
      for (long k = 0; k < static_cast<long>(nb.weight); ++k) {
        list.values.push_back(a[nb.node]);
        list.multiplicity.push_back(1.0);
      }
    } else {
      list.values.push_back(a[nb.node]);
      list.multiplicity.push_back(nb.weight);
    }
  }
  return list;
}

}  // namespace

double list_gap(const Graph& g, std::span<const double> a, bool weighted) {
  check_size(g, a, weighted);
  const bool replicate = integer_weights(g);
  std::vector<double> concatenated;
  std::vector<double> multiplicity;
  for (NodeId i = 0; i < g.node_count(); ++i) {
    FriendList list = friend_list(g, i, a, weighted, replicate);
    concatenated.insert(concatenated.end(), list.values.begin(), list.values.end());
    multiplicity.insert(multiplicity.end(), list.multiplicity.begin(), list.multiplicity.end());
  }
  long double sum = 0.0L;
  long double length = 0.0L;
  for (std::size_t k = 0; k < concatenated.size(); ++k) {
    sum += static_cast<long double>(multiplicity[k]) * concatenated[k];
    length += multiplicity[k];
  }
  return static_cast<double>(sum / length - plain_mean(a));
}

double singular_gap(const Graph& g, std::span<const double> a, bool weighted) {
  check_size(g, a, weighted);
  const bool replicate = integer_weights(g);
  long double total = 0.0L;
  for (NodeId i = 0; i < g.node_count(); ++i) {
    const FriendList list = friend_list(g, i, a, weighted, replicate);
    long double sum = 0.0L;
    long double length = 0.0L;
    for (std::size_t k = 0; k < list.values.size(); ++k) {
      sum += static_cast<long double>(list.multiplicity[k]) * list.values[k];
      length += list.multiplicity[k];
    }
    total += sum / length;
  }
  return static_cast<double>(total / static_cast<long double>(g.node_count()) - plain_mean(a));
}

namespace {

struct ExactLists {
  // lists[i] is node i's second-order list, friends replicated by weight.
  std::vector<std::vector<Rational>> lists;
};

ExactLists exact_lists(const Graph& g, const std::vector<Rational>& a, bool weighted) {
  ExactLists out;
  out.lists.resize(g.node_count());
  for (NodeId i = 0; i < g.node_count(); ++i) {
    for (const Neighbor& nb : g.neighbors(i)) {
      const long copies = weighted ? static_cast<long>(nb.weight) : 1;
      for (long k = 0; k < copies; ++k) out.lists[i].push_back(a[nb.node]);
    }
  }
  return out;
}

Rational exact_mean(const std::vector<Rational>& values) {
  Rational s = 0;
  for (const Rational& v : values) s += v;
  return s / static_cast<long>(values.size());
}

Rational exact_list_gap(const Graph& g, const std::vector<Rational>& a, bool weighted) {
  const ExactLists lists = exact_lists(g, a, weighted);
  Rational sum = 0;
  long length = 0;
  for (const auto& list : lists.lists) {
    for (const Rational& v : list) sum += v;
    length += static_cast<long>(list.size());
  }
  return sum / length - exact_mean(a);
}

Rational exact_singular_gap(const Graph& g, const std::vector<Rational>& a, bool weighted) {
  const ExactLists lists = exact_lists(g, a, weighted);
  Rational total = 0;
  for (const auto& list : lists.lists) total += exact_mean(list);
  return total / static_cast<long>(g.node_count()) - exact_mean(a);
}

}  // namespace

ExactGaps exact(const Graph& g, std::optional<std::vector<Rational>> attributes) {
  const std::size_t n = g.node_count();
  if (n > kMaxExactNodes) {
    throw Error(ErrorCode::SizeLimitExceeded,
                std::to_string(n) + " nodes exceeds the exact oracle limit of " + std::to_string(kMaxExactNodes));
  }
  if (!integer_weights(g)) throw Error(ErrorCode::InvalidArgument, "exact oracle needs integer weights");
  for (NodeId i = 0; i < n; ++i) {
    if (g.neighbors(i).empty()) throw Error(ErrorCode::IsolatePresent, "node " + g.label(i));
  }

  std::vector<Rational> d(n);
  std::vector<Rational> w(n);
  for (NodeId i = 0; i < n; ++i) {
    d[i] = static_cast<long>(g.degree(i));
    w[i] = 0;
    for (const Neighbor& nb : g.neighbors(i)) w[i] += static_cast<long>(nb.weight);
  }
  if (!attributes && g.attributes()) {
    attributes.emplace();
    for (double v : *g.attributes()) attributes->emplace_back(v);
  }
  if (attributes && attributes->size() != n) {
    throw Error(ErrorCode::AttributeLengthMismatch, "attribute length does not match node count");
  }
  const std::vector<Rational>& a_unit = attributes ? *attributes : d;
  const std::vector<Rational>& a_weighted = attributes ? *attributes : w;

  ExactGaps out;
  auto set = [&](Paradox p, Rational v) { out.values[static_cast<std::size_t>(p)] = std::move(v); };
  set(Paradox::LFP, exact_list_gap(g, d, false));
  set(Paradox::SFP, exact_singular_gap(g, d, false));
  set(Paradox::LWFP, exact_list_gap(g, w, true));
  set(Paradox::SWFP, exact_singular_gap(g, w, true));
  set(Paradox::LAFP, exact_list_gap(g, a_unit, false));
  set(Paradox::SAFP, exact_singular_gap(g, a_unit, false));
  set(Paradox::LWAFP, exact_list_gap(g, a_weighted, true));
  set(Paradox::SWAFP, exact_singular_gap(g, a_weighted, true));
  return out;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace paradox::oracle
