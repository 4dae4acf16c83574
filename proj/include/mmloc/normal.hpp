#pragma once

#include <cmath>

namespace mmloc::stdnormal {

inline constexpr double kInvSqrt2Pi = 0.3989422804014326779;
inline constexpr double kSqrt2 = 1.4142135623730950488;

inline double pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

inline double cdf(double x) { return 0.5 * std::erfc(-x / kSqrt2); }

/// Inverse of cdf(). Accurate to a few ulp on (0, 1); returns +-inf at 1/0.
double quantile(double p);

}  // namespace mmloc::stdnormal
