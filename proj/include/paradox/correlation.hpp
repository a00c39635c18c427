#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>

#include "paradox/gaps.hpp"
#include "paradox/graph.hpp"

namespace paradox {

/// A sequence is treated as constant when max - min <= this * max|x|.
inline constexpr double kConstantTolerance = 1e-12;
/// Correlations with |r| <= this are treated as exactly zero.
inline constexpr double kCorrelationZeroTolerance = 1e-12;

enum class UndefinedReason { ConstantFirst, ConstantSecond, Both };

std::string_view to_string(UndefinedReason r);

/// Pearson correlation, or the reason it is undefined.
class Correlation {
 public:
  static Correlation defined(double value) { return Correlation(value, std::nullopt); }
  static Correlation undefined(UndefinedReason reason) { return Correlation(0.0, reason); }

  bool is_defined() const noexcept { return !reason_; }
  /// Raw value; 0 when undefined.
  double value() const noexcept { return value_; }
  std::optional<double> value_if_defined() const {
    return is_defined() ? std::optional<double>(value_) : std::nullopt;
  }
  std::optional<UndefinedReason> reason() const noexcept { return reason_; }

  /// -1, 0 or +1, with |r| <= kCorrelationZeroTolerance mapped to 0.
  /// Undefined correlations have sign 0.
  int sign() const noexcept;

 private:
  Correlation(double value, std::optional<UndefinedReason> reason) : value_(value), reason_(reason) {}

  double value_;
  std::optional<UndefinedReason> reason_;
};

/// Two-pass Pearson correlation. Throws LengthMismatch when sizes differ or
/// fewer than two samples are given.
Correlation pearson(std::span<const double> x, std::span<const double> y);

enum class Prediction { PredictHolds, PredictFails, PredictZeroGap };

std::string_view to_string(Prediction p);

/// PredictFails iff defined and negative; PredictZeroGap iff defined and zero;
/// PredictHolds otherwise (positive or undefined).
Prediction predict(const Correlation& r);

struct CorrelationReport {
  Correlation r_da = Correlation::undefined(UndefinedReason::Both);
  Correlation r_delta_a = Correlation::undefined(UndefinedReason::Both);
  Correlation r_wa = Correlation::undefined(UndefinedReason::Both);
  Correlation r_gamma_a = Correlation::undefined(UndefinedReason::Both);
  Correlation r_d_delta = Correlation::undefined(UndefinedReason::Both);
  Correlation r_w_gamma = Correlation::undefined(UndefinedReason::Both);
  Correlation r_dw = Correlation::undefined(UndefinedReason::Both);
  /// Indexed like kAttributeParadoxes: LAFP, SAFP, LWAFP, SWAFP.
  std::array<Prediction, 4> predictions{};

  /// Sign-rule correlation that governs `p` (must be an attribute version).
  const Correlation& governing(Paradox p) const;
  Prediction prediction(Paradox p) const;
};

/// Correlations for the sign rules. `q` are the weighted quantities of a graph
/// without isolates. Without an attribute, the unweighted correlations use
/// a := d and the weighted ones a := w, matching full_report's fallback.
CorrelationReport sign_rule_report(const NodeQuantities& q, std::optional<std::span<const double>> a);

struct SignConsistency {
  /// Indexed like kAttributeParadoxes.
  std::array<bool, 4> consistent{};
  bool ok() const noexcept { return consistent[0] && consistent[1] && consistent[2] && consistent[3]; }
};

/// Gap and correlation magnitudes below this (normalized gap, raw r) are
/// accepted as agreeing with a zero on the other side.
inline constexpr double kSignBorderline = 1e-6;

/// Runtime check of the sign rules: an undefined correlation requires a zero
/// gap, a defined one requires sign(gap) == sign(correlation), each side's
/// near-zero band counting as zero.
SignConsistency check_sign_consistency(const GapReport& gaps, const CorrelationReport& corrs);

}  // namespace paradox
