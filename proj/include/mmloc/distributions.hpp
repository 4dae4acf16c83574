#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mmloc/rng.hpp"

namespace mmloc {

/// Symmetric unimodal central model with positive density on the reals.
/// The standard normal is the built-in law.
class CentralModel {
 public:
  static CentralModel normal();

  double pdf(double x) const;
  double cdf(double x) const;
  double quantile(double p) const;

  /// Fisher information for location at the model (1 for the normal).
  double fisher_information() const;

  /// |x| beyond which the remaining mass is negligible for absolute
  /// accuracy targets around 1e-10 (10 for the normal).
  double support_radius() const;

  const char* name() const;

 private:
  enum class Kind { kNormal };
  explicit CentralModel(Kind kind) : kind_(kind) {}
  Kind kind_;
};

struct Atom {
  double x;
  double weight;
};

/// Contaminating distribution H: a point mass, a finite list of atoms, a
/// normal, or a uniform.
class Contaminant {
 public:
  static Contaminant point(double x0);
  static Contaminant atoms(std::vector<Atom> atoms);
  static Contaminant normal(double mean, double sd);
  static Contaminant uniform(double a, double b);

  /// Parses `point:<x0>`, `atoms:<x1>:<w1>,<x2>:<w2>,...`,
  /// `normal:<mean>:<sd>`, `uniform:<a>:<b>`.
  static Contaminant parse(const std::string& spec);

  bool is_discrete() const;
  const std::vector<Atom>& atom_list() const;  // discrete kinds only

  double cdf(double x) const;
  double pdf(double x) const;  // 0 for discrete kinds
  double quantile(double p) const;

  /// Points where the density jumps (the edges of a uniform).
  std::vector<double> density_breakpoints() const;

  /// Interval outside of which the contaminant mass is negligible.
  double support_lo() const;
  double support_hi() const;

  /// Round-trips through parse().
  std::string describe() const;

 private:
  enum class Kind { kPoint, kAtoms, kNormal, kUniform };
  Contaminant(Kind kind) : kind_(kind) {}
  Kind kind_;
  std::vector<Atom> atoms_;  // kPoint/kAtoms
  double a_ = 0.0, b_ = 0.0;  // kNormal: mean/sd; kUniform: endpoints
};

/// An integrand g together with the structure the expectation engine
/// exploits: g is constant on each side of [center - radius, center + radius]
/// and piecewise smooth inside, with the listed interior breakpoints.
struct Integrand {
  std::function<double(double)> f;
  double center = 0.0;
  double radius = 0.0;
  double tail_left = 0.0;
  double tail_right = 0.0;
  std::vector<double> breakpoints;
};

/// A member of the contamination neighborhood: mixture of a located/scaled
/// central model (weight 1 - eps) and a contaminant (weight eps). Immutable.
class MixtureDistribution {
 public:
  MixtureDistribution(double eps, double mu, double sigma, CentralModel central,
                      Contaminant contaminant);

  static MixtureDistribution central_only(double mu, double sigma);

  double eps() const { return eps_; }
  double mu() const { return mu_; }
  double sigma() const { return sigma_; }
  const CentralModel& central() const { return central_; }
  const Contaminant& contaminant() const { return contaminant_; }

  double cdf(double x) const;

  /// n i.i.d. draws; deterministic given the generator state.
  Eigen::ArrayXd sample(Eigen::Index n, SplitRng& rng) const;
  Eigen::ArrayXd sample(Eigen::Index n, std::uint64_t seed) const;

  /// E[g(X)] with exact atom and tail contributions and adaptive quadrature
  /// of the absolutely continuous part, to about 1e-10 absolute.
  double expect(const Integrand& g) const;

 private:
  double eps_, mu_, sigma_;
  CentralModel central_;
  Contaminant contaminant_;
};

}  // namespace mmloc
