#pragma once

#include <cmath>
#include <limits>
#include <span>
#include <vector>

namespace metabf {

inline constexpr double kLog10E = 0.434294481903251827651128918917;  // log10(e)
inline constexpr double kLn10 = 2.30258509299404568401799145468;     // ln(10)
inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();
inline constexpr double kInf = std::numeric_limits<double>::infinity();

inline double ln_to_log10(double x) { return x * kLog10E; }
inline double log10_to_ln(double x) { return x * kLn10; }

// ln(sum_i exp(v_i)), stable for any magnitude.
inline double log_sum_exp(std::span<const double> v) {
  double m = kNegInf;
  for (double x : v)
    if (x > m) m = x;
  if (!std::isfinite(m)) return m;
  double s = 0.0;
  for (double x : v) s += std::exp(x - m);
  return m + std::log(s);
}

// ln(sum_i w_i exp(v_i)) with w_i > 0.
inline double log_sum_exp_weighted(std::span<const double> v,
                                   std::span<const double> w) {
  double m = kNegInf;
  for (double x : v)
    if (x > m) m = x;
  if (!std::isfinite(m)) return m;
  double s = 0.0;
  for (size_t i = 0; i < v.size(); ++i) s += w[i] * std::exp(v[i] - m);
  return m + std::log(s);
}

// ln(exp(a) + exp(b))
inline double log_add(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  double m = a > b ? a : b;
  return m + std::log1p(std::exp(-(a > b ? a - b : b - a)));
}

}  // namespace metabf
