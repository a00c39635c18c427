#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "paradox/graph.hpp"

namespace paradox {

/// The eight versions of the paradox. "L" versions aggregate friend lists
/// network-wide, "S" versions average per node first. "W" versions use edge
/// weights, "A" versions use an arbitrary node attribute.
enum class Paradox { LFP, SFP, LWFP, SWFP, LAFP, SAFP, LWAFP, SWAFP };

inline constexpr std::array<Paradox, 8> kAllParadoxes = {
    Paradox::LFP, Paradox::SFP, Paradox::LWFP, Paradox::SWFP,
    Paradox::LAFP, Paradox::SAFP, Paradox::LWAFP, Paradox::SWAFP};

/// The four versions that can fail, in the order their sign-rule
/// correlations appear in CorrelationReport.
inline constexpr std::array<Paradox, 4> kAttributeParadoxes = {
    Paradox::LAFP, Paradox::SAFP, Paradox::LWAFP, Paradox::SWAFP};

/// Lower-case key ("lfp", "lwafp", ...).
std::string_view key(Paradox p);
/// Upper-case display name ("LFP", "LWAFP", ...).
std::string_view name(Paradox p);
bool is_singular(Paradox p);
bool is_weighted(Paradox p);
bool uses_attribute(Paradox p);

/// Gaps whose magnitude, divided by the mean absolute first-order value, is at
/// most this are reported as zero.
inline constexpr double kGapZeroTolerance = 1e-9;

enum class Verdict { Holds, Fails };

std::string_view to_string(Verdict v);

struct GapEntry {
  double value = 0.0;
  /// Mean absolute first-order value used to normalize the zero test.
  double scale = 1.0;
  Verdict verdict = Verdict::Holds;
  bool zero = false;
};

/// Builds an entry: zero iff |value| <= tol * scale, Fails iff value is
/// negative and not zero.
GapEntry make_gap_entry(double value, double scale);

struct GapReport {
  std::array<GapEntry, 8> entries{};
  /// True when the attribute versions used the node attribute rather than
  /// falling back to weighted degree.
  bool attributes_used = false;

  GapEntry& operator[](Paradox p) { return entries[static_cast<std::size_t>(p)]; }
  const GapEntry& operator[](Paradox p) const { return entries[static_cast<std::size_t>(p)]; }
  double value(Paradox p) const { return (*this)[p].value; }
};

// Closed-form gaps. All require a graph without isolates; `q` must come from
// `node_quantities(g)` on the same graph.

/// sum d^2 / sum d - mean d.
double gap_lfp(const NodeQuantities& q);
/// (1/n) sum over edges of (d_x/d_y + d_y/d_x) - mean d.
double gap_sfp(const Graph& g, const NodeQuantities& q);
/// sum_i sum_j e_ij w_j / sum w - mean w.
double gap_lwfp(const NodeQuantities& q, const Graph& g);
/// (1/n) sum_i (1/w_i) sum_j e_ij w_j - mean w.
double gap_swfp(const Graph& g, const NodeQuantities& q);
/// List gap for attribute `a` under g's weights. Throws AttributeLengthMismatch.
double gap_lefp(const Graph& g, const NodeQuantities& q, std::span<const double> a);
/// Singular gap for attribute `a` under g's weights, via (1/n) sum gamma_i a_i - mean a.
double gap_sefp(const Graph& g, const NodeQuantities& q, std::span<const double> a);

/// All eight gaps of `g`. Attribute versions use g's attribute when set;
/// otherwise the attribute of each version is the weighted degree under that
/// version's weights (w for LWAFP/SWAFP, d for LAFP/SAFP). Unweighted versions
/// are evaluated on g with every weight replaced by 1.
GapReport full_report(const Graph& g);

/// Same as full_report with precomputed inputs. `unit` are the quantities of
/// g.with_unit_weights(); `attributes` overrides g's own attribute.
GapReport gap_report(const Graph& g, const NodeQuantities& weighted, const NodeQuantities& unit,
                     std::optional<std::span<const double>> attributes);

/// Alternative algebraic routes to the same gaps, kept for cross-checking the
/// closed forms.
namespace reformulations {

/// Seed sums: sum_i sum_{j in N(i)} e_ij a_j / sum_i w_i - mean a.
double lefp_seed_sum(const Graph& g, std::span<const double> a);
/// Friend counts: sum_j a_j w_j / sum w - mean a (no centering).
double lefp_friend_count(const NodeQuantities& q, std::span<const double> a);
/// Seed means: (1/n) sum_i (sum_j e_ij a_j / w_i) - mean a.
double sefp_seed_mean(const Graph& g, std::span<const double> a);
/// Edge sums: (1/n) sum_{(x,y)} e_xy (a_y/w_x + a_x/w_y) - mean a.
double sefp_edge_sum(const Graph& g, std::span<const double> a);

}  // namespace reformulations

}  // namespace paradox
