#pragma once

#include <Eigen/Core>

#include <array>

namespace mmloc {

/// Tuning constant of the smooth redescending score family psi.
struct TuningPsi {
  double c;
  explicit TuningPsi(double c_in);
};

/// Tuning constants of the Tukey-type loss family rho: cutoff d and the
/// right-hand side b of the scale equation.
struct TuningRho {
  double d;
  double b;
  TuningRho(double d_in, double b_in);

  /// min(b, 1-b), the asymptotic breakdown point of the associated scale.
  double breakdown_point() const;
};

// Scalar evaluation. psi is odd, nondecreasing, constant beyond |u| = c;
// rho is even, in [0, 1], equal to 1 beyond |u| = d. Both are twice
// continuously differentiable.
double psi(const TuningPsi& tune, double u);
double psi_deriv(const TuningPsi& tune, double u, int order);
double rho(const TuningRho& tune, double u);
double rho_deriv(const TuningRho& tune, double u, int order);

/// sup over x of the negative part of rho''(x); closed form 4.8 / d^2.
double rho_second_deriv_neg_sup(const TuningRho& tune);

/// Value |psi| takes once saturated (not 1; about 0.9 for this family).
double psi_saturation(const TuningPsi& tune);
/// |u| beyond which psi is constant.
inline double psi_saturation_radius(const TuningPsi& tune) { return tune.c; }
/// |u| beyond which rho equals 1.
inline double rho_saturation_radius(const TuningRho& tune) { return tune.d; }

/// Radii (in |u|) where the piecewise definitions change branch.
std::array<double, 2> psi_breakpoint_radii(const TuningPsi& tune);
std::array<double, 1> rho_breakpoint_radii(const TuningRho& tune);

// Elementwise forms.
Eigen::ArrayXd psi(const TuningPsi& tune,
                   const Eigen::Ref<const Eigen::ArrayXd>& u);
Eigen::ArrayXd psi_deriv(const TuningPsi& tune,
                         const Eigen::Ref<const Eigen::ArrayXd>& u, int order);
Eigen::ArrayXd rho(const TuningRho& tune,
                   const Eigen::Ref<const Eigen::ArrayXd>& u);
Eigen::ArrayXd rho_deriv(const TuningRho& tune,
                         const Eigen::Ref<const Eigen::ArrayXd>& u, int order);

}  // namespace mmloc
