#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mmloc {

struct RootResult {
  double x = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Brent's method on [a, b]. Requires f(a) and f(b) of opposite sign
/// (either may be zero). Stops when the bracket is below
/// abs_tol + rel_tol * |x|.
template <typename F>
RootResult find_root(F&& f, double a, double b, double rel_tol = 1e-12,
                     double abs_tol = 0.0, int max_iter = 200) {
  double fa = f(a);
  double fb = f(b);
  if (fa == 0.0) return {a, 0, true};
  if (fb == 0.0) return {b, 0, true};
  if ((fa > 0.0) == (fb > 0.0))
    throw std::invalid_argument("find_root: endpoints do not bracket a root");

  double c = a, fc = fa;
  double d = b - a, e = d;
  for (int iter = 1; iter <= max_iter; ++iter) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double tol1 =
        2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) +
        0.5 * (abs_tol + rel_tol * std::abs(b));
    const double xm = 0.5 * (c - b);
    if (std::abs(xm) <= tol1 || fb == 0.0) return {b, iter, true};
    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      // Inverse quadratic / secant step.
      const double s = fb / fa;
      double p, q;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        const double qq = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
        q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += (std::abs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
    fb = f(b);
  }
  return {b, max_iter, false};
}

struct MinResult {
  double x = 0.0;
  double value = 0.0;
};

/// Golden-section minimization on [a, b]; stops when the interval width is
/// below tol_x.
template <typename F>
MinResult golden_minimize(F&& f, double a, double b, double tol_x,
                          int max_iter = 400) {
  constexpr double kInvPhi = 0.6180339887498948482;
  double u = b - kInvPhi * (b - a);
  double v = a + kInvPhi * (b - a);
  double fu = f(u);
  double fv = f(v);
  for (int i = 0; i < max_iter && (b - a) > tol_x; ++i) {
    if (fu <= fv) {
      b = v;
      v = u;
      fv = fu;
      u = b - kInvPhi * (b - a);
      fu = f(u);
    } else {
      a = u;
      u = v;
      fu = fv;
      v = a + kInvPhi * (b - a);
      fv = f(v);
    }
  }
  return fu <= fv ? MinResult{u, fu} : MinResult{v, fv};
}

}  // namespace mmloc
