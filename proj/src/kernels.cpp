#include "mmloc/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace mmloc {

namespace {

// Quartic bridge of the psi family and its derivatives, by Horner with the
// exact published coefficients.
inline double p4(double v) {
  return ((62.5 * v - 225.0) * v + 300.0) * v * v - 175.0 * v + 38.4;
}
inline double p4_d1(double v) {
  return ((250.0 * v - 675.0) * v + 600.0) * v - 175.0;
}
inline double p4_d2(double v) { return (750.0 * v - 1350.0) * v + 600.0; }

inline double sign_of(double u) { return u > 0.0 ? 1.0 : (u < 0.0 ? -1.0 : 0.0); }

void check_order(int order) {
  if (order != 1 && order != 2)
    throw std::invalid_argument("derivative order must be 1 or 2");
}

}  // namespace

TuningPsi::TuningPsi(double c_in) : c(c_in) {
  if (!(c > 0.0) || !std::isfinite(c))
    throw std::invalid_argument("TuningPsi: c must be positive");
}

TuningRho::TuningRho(double d_in, double b_in) : d(d_in), b(b_in) {
  if (!(d > 0.0) || !std::isfinite(d))
    throw std::invalid_argument("TuningRho: d must be positive");
  if (!(b > 0.0 && b < 1.0))
    throw std::invalid_argument("TuningRho: b must lie in (0, 1)");
}

double TuningRho::breakdown_point() const { return std::min(b, 1.0 - b); }

double psi(const TuningPsi& tune, double u) {
  const double v = std::abs(u) / tune.c;
  if (v <= 0.8) return u / tune.c;
  if (v <= 1.0) return sign_of(u) * p4(v);
  return sign_of(u) * p4(1.0);
}

double psi_deriv(const TuningPsi& tune, double u, int order) {
  check_order(order);
  const double v = std::abs(u) / tune.c;
  if (order == 1) {
    if (v <= 0.8) return 1.0 / tune.c;
    if (v <= 1.0) return p4_d1(v) / tune.c;
    return 0.0;
  }
  if (v <= 0.8 || v > 1.0) return 0.0;
  return sign_of(u) * p4_d2(v) / (tune.c * tune.c);
}

double rho(const TuningRho& tune, double u) {
  const double v = u / tune.d;
  const double w = v * v;
  if (w <= 1.0) return w * (3.0 + w * (w - 3.0));
  return 1.0;
}

double rho_deriv(const TuningRho& tune, double u, int order) {
  check_order(order);
  const double v = u / tune.d;
  const double w = v * v;
  if (w > 1.0) return 0.0;
  if (order == 1) {
    const double one_m_w = 1.0 - w;
    return 6.0 * v * one_m_w * one_m_w / tune.d;
  }
  return ((30.0 * w - 36.0) * w + 6.0) / (tune.d * tune.d);
}

double rho_second_deriv_neg_sup(const TuningRho& tune) {
  // rho'' = (6 - 36 w + 30 w^2) / d^2 with w = (u/d)^2; its minimum over
  // w in [0, 1] sits at w = 0.6 with value -4.8 / d^2.
  return 4.8 / (tune.d * tune.d);
}

double psi_saturation(const TuningPsi&) { return p4(1.0); }

std::array<double, 2> psi_breakpoint_radii(const TuningPsi& tune) {
  return {0.8 * tune.c, tune.c};
}

std::array<double, 1> rho_breakpoint_radii(const TuningRho& tune) {
  return {tune.d};
}

Eigen::ArrayXd psi(const TuningPsi& tune,
                   const Eigen::Ref<const Eigen::ArrayXd>& u) {
  Eigen::ArrayXd out(u.size());
  for (Eigen::Index i = 0; i < u.size(); ++i) out[i] = psi(tune, u[i]);
  return out;
}

Eigen::ArrayXd psi_deriv(const TuningPsi& tune,
                         const Eigen::Ref<const Eigen::ArrayXd>& u, int order) {
  check_order(order);
  Eigen::ArrayXd out(u.size());
  for (Eigen::Index i = 0; i < u.size(); ++i) out[i] = psi_deriv(tune, u[i], order);
  return out;
}

Eigen::ArrayXd rho(const TuningRho& tune,
                   const Eigen::Ref<const Eigen::ArrayXd>& u) {
  const Eigen::ArrayXd w = (u / tune.d).square().min(1.0);
  return w * (3.0 + w * (w - 3.0));
}

Eigen::ArrayXd rho_deriv(const TuningRho& tune,
                         const Eigen::Ref<const Eigen::ArrayXd>& u, int order) {
  check_order(order);
  Eigen::ArrayXd out(u.size());
  for (Eigen::Index i = 0; i < u.size(); ++i) out[i] = rho_deriv(tune, u[i], order);
  return out;
}

}  // namespace mmloc
