#include "paradox/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "paradox/detail/moments.hpp"
#include "paradox/error.hpp"

namespace paradox {

std::string_view to_string(UndefinedReason r) {
  switch (r) {
    case UndefinedReason::ConstantFirst: return "ConstantFirst";
    case UndefinedReason::ConstantSecond: return "ConstantSecond";
    case UndefinedReason::Both: return "Both";
  }
  return "";
}

std::string_view to_string(Prediction p) {
  switch (p) {
    case Prediction::PredictHolds: return "PredictHolds";
    case Prediction::PredictFails: return "PredictFails";
    case Prediction::PredictZeroGap: return "PredictZeroGap";
  }
  return "";
}

int Correlation::sign() const noexcept {
  if (!is_defined() || std::abs(value_) <= kCorrelationZeroTolerance) return 0;
  return value_ > 0.0 ? 1 : -1;
}

namespace {

bool is_constant(std::span<const double> x) {
  const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  return *hi - *lo <= kConstantTolerance * std::max(std::abs(*lo), std::abs(*hi));
}

}  // namespace

Correlation pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::LengthMismatch,
                "sequences of length " + std::to_string(x.size()) + " and " + std::to_string(y.size()));
  }
  if (x.size() < 2) throw Error(ErrorCode::LengthMismatch, "correlation needs at least two samples");

  const bool cx = is_constant(x);
  const bool cy = is_constant(y);
  if (cx && cy) return Correlation::undefined(UndefinedReason::Both);
  if (cx) return Correlation::undefined(UndefinedReason::ConstantFirst);
  if (cy) return Correlation::undefined(UndefinedReason::ConstantSecond);

  const double sxy = detail::centered_cross(x, y);
  const double sxx = detail::centered_cross(x, x);
  const double syy = detail::centered_cross(y, y);
  const double r = sxy / std::sqrt(sxx * syy);
  return Correlation::defined(std::clamp(r, -1.0, 1.0));
}

Prediction predict(const Correlation& r) {
  switch (r.sign()) {
    case -1: return Prediction::PredictFails;
    case 1: return Prediction::PredictHolds;
    default: return r.is_defined() ? Prediction::PredictZeroGap : Prediction::PredictHolds;
  }
}

const Correlation& CorrelationReport::governing(Paradox p) const {
  switch (p) {
    case Paradox::LAFP: return r_da;
    case Paradox::SAFP: return r_delta_a;
    case Paradox::LWAFP: return r_wa;
    case Paradox::SWAFP: return r_gamma_a;
    default: throw Error(ErrorCode::InvalidArgument, std::string(name(p)) + " has no governing correlation");
  }
}

Prediction CorrelationReport::prediction(Paradox p) const {
  for (std::size_t k = 0; k < kAttributeParadoxes.size(); ++k) {
    if (kAttributeParadoxes[k] == p) return predictions[k];
  }
  throw Error(ErrorCode::InvalidArgument, std::string(name(p)) + " has no prediction");
}

CorrelationReport sign_rule_report(const NodeQuantities& q, std::optional<std::span<const double>> a) {
  const std::vector<double> d = q.degree_real();
  const auto& w = q.weighted_degree;
  if (a && a->size() != q.size()) {
    throw Error(ErrorCode::AttributeLengthMismatch,
                "attribute vector has " + std::to_string(a->size()) + " entries for " +
                    std::to_string(q.size()) + " nodes");
  }
  const std::span<const double> a_unit = a ? *a : std::span<const double>(d);
  const std::span<const double> a_weighted = a ? *a : std::span<const double>(w);

  CorrelationReport r;
  r.r_da = pearson(d, a_unit);
  r.r_delta_a = pearson(q.delta, a_unit);
  r.r_wa = pearson(w, a_weighted);
  r.r_gamma_a = pearson(q.gamma, a_weighted);
  r.r_d_delta = pearson(d, q.delta);
  r.r_w_gamma = pearson(w, q.gamma);
  r.r_dw = pearson(d, w);
  for (std::size_t k = 0; k < kAttributeParadoxes.size(); ++k) {
    r.predictions[k] = predict(r.governing(kAttributeParadoxes[k]));
  }
  return r;
}

SignConsistency check_sign_consistency(const GapReport& gaps, const CorrelationReport& corrs) {
  SignConsistency out;
  for (std::size_t k = 0; k < kAttributeParadoxes.size(); ++k) {
    const Paradox p = kAttributeParadoxes[k];
    const GapEntry& gap = gaps[p];
    const Correlation& r = corrs.governing(p);
    if (!r.is_defined()) {
      out.consistent[k] = gap.zero;
      continue;
    }
    const int gap_sign = gap.zero ? 0 : (gap.value > 0.0 ? 1 : -1);
    if (gap_sign == r.sign()) {
      out.consistent[k] = true;
    } else if (gap_sign == 0 || r.sign() == 0) {
      // One side rounded to zero; the other must be borderline too.
      out.consistent[k] = std::abs(gap.value) <= kSignBorderline * gap.scale &&
                          std::abs(r.value()) <= kSignBorderline;
    } else {
      out.consistent[k] = false;
    }
  }
  return out;
}

}  // namespace paradox
