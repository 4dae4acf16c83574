#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

namespace mmloc {

namespace detail {

// 15-point Kronrod nodes with the embedded 7-point Gauss rule at the odd
// indices and the midpoint.
inline constexpr double kKronrodNodes[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
inline constexpr double kKronrodWeights[8] = {
    0.0229353220105292, 0.0630920926299786, 0.1047900103222502,
    0.1406532597155259, 0.1690047266392679, 0.1903505780647854,
    0.2044329400752989, 0.2094821410847278};
inline constexpr double kGaussWeights[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189,
    0.4179591836734694};

struct Segment {
  double a, b, value, error;
};

template <typename F>
Segment gauss_kronrod_15(F& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(mid);
  if (!std::isfinite(fc))
    throw std::domain_error("integrate: non-finite integrand value");
  double kronrod = kKronrodWeights[7] * fc;
  double gauss = kGaussWeights[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kKronrodNodes[j];
    const double f1 = f(mid - dx);
    const double f2 = f(mid + dx);
    if (!std::isfinite(f1) || !std::isfinite(f2))
      throw std::domain_error("integrate: non-finite integrand value");
    kronrod += kKronrodWeights[j] * (f1 + f2);
    if (j % 2 == 1) gauss += kGaussWeights[(j - 1) / 2] * (f1 + f2);
  }
  return {a, b, kronrod * half, std::abs(kronrod - gauss) * half};
}

}  // namespace detail

/// Adaptive Gauss-Kronrod integration of f over [a, b]. The interval is
/// pre-split at the interior breakpoints, then the segment with the largest
/// error estimate is bisected until the total estimate falls below abs_tol.
template <typename F>
double integrate(F&& f, double a, double b,
                 std::span<const double> interior_breakpoints,
                 double abs_tol = 1e-10, int max_splits = 2000) {
  if (!(b > a)) return 0.0;

  std::vector<double> cuts;
  cuts.push_back(a);
  for (double x : interior_breakpoints)
    if (x > a && x < b) cuts.push_back(x);
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());

  std::vector<detail::Segment> segs;
  segs.reserve(cuts.size() + 16);
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    if (cuts[i + 1] > cuts[i])
      segs.push_back(detail::gauss_kronrod_15(f, cuts[i], cuts[i + 1]));

  double total_error = 0.0;
  for (const auto& s : segs) total_error += s.error;

  const double min_width = 1e-14 * (b - a);
  for (int split = 0; split < max_splits && total_error > abs_tol; ++split) {
    std::size_t worst = 0;
    for (std::size_t i = 1; i < segs.size(); ++i)
      if (segs[i].error > segs[worst].error) worst = i;
    const detail::Segment seg = segs[worst];
    if (seg.b - seg.a < min_width) break;
    const double mid = 0.5 * (seg.a + seg.b);
    detail::Segment left = detail::gauss_kronrod_15(f, seg.a, mid);
    detail::Segment right = detail::gauss_kronrod_15(f, mid, seg.b);
    total_error += left.error + right.error - seg.error;
    segs[worst] = left;
    segs.push_back(right);
  }
  if (total_error > 100.0 * abs_tol)
    throw std::runtime_error("integrate: failed to reach requested accuracy");

  double value = 0.0;
  for (const auto& s : segs) value += s.value;
  return value;
}

}  // namespace mmloc
