#pragma once

#include <cstddef>
#include <span>

namespace paradox::detail {

// Sums run in long double so that small closed forms round once, at the end.
inline long double mean_ext(std::span<const double> x) {
  long double s = 0.0L;
  for (double v : x) s += v;
  return s / static_cast<long double>(x.size());
}

inline double mean(std::span<const double> x) { return static_cast<double>(mean_ext(x)); }

/// sum (x_i - mean x)(y_i - mean y). Shared by the list/singular gaps and the
/// Pearson numerator so that a gap and its governing correlation take their
/// sign from the same sum.
inline long double centered_cross_ext(std::span<const double> x, std::span<const double> y) {
  const long double mx = mean_ext(x);
  const long double my = mean_ext(y);
  long double s = 0.0L;
  for (std::size_t i = 0; i < x.size(); ++i) s += (x[i] - mx) * (y[i] - my);
  return s;
}

inline double centered_cross(std::span<const double> x, std::span<const double> y) {
  return static_cast<double>(centered_cross_ext(x, y));
}

}  // namespace paradox::detail
