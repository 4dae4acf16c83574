#include "mmloc/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "mmloc/normal.hpp"
#include "mmloc/quadrature.hpp"

namespace mmloc {

// ---------------------------------------------------------------------------
// CentralModel

CentralModel CentralModel::normal() { return CentralModel(Kind::kNormal); }

double CentralModel::pdf(double x) const { return stdnormal::pdf(x); }
double CentralModel::cdf(double x) const { return stdnormal::cdf(x); }
double CentralModel::quantile(double p) const { return stdnormal::quantile(p); }
double CentralModel::fisher_information() const { return 1.0; }
double CentralModel::support_radius() const { return 10.0; }
const char* CentralModel::name() const { return "normal"; }

// ---------------------------------------------------------------------------
// Contaminant

namespace {

constexpr double kWeightTol = 1e-12;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

double parse_number(const std::string& token, const std::string& what) {
  std::size_t pos = 0;
  double value = 0.0;
  try {
    value = std::stod(token, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("contaminant: bad " + what + " '" + token + "'");
  }
  if (pos != token.size() || !std::isfinite(value))
    throw std::invalid_argument("contaminant: bad " + what + " '" + token + "'");
  return value;
}

}  // namespace

Contaminant Contaminant::point(double x0) {
  if (!std::isfinite(x0))
    throw std::invalid_argument("contaminant: point location must be finite");
  Contaminant c(Kind::kPoint);
  c.atoms_ = {{x0, 1.0}};
  return c;
}

Contaminant Contaminant::atoms(std::vector<Atom> atoms) {
  if (atoms.empty())
    throw std::invalid_argument("contaminant: atom list must be nonempty");
  double total = 0.0;
  for (const auto& a : atoms) {
    if (!std::isfinite(a.x) || !(a.weight >= 0.0))
      throw std::invalid_argument("contaminant: atoms need finite locations and nonnegative weights");
    total += a.weight;
  }
  if (std::abs(total - 1.0) > kWeightTol)
    throw std::invalid_argument("contaminant: atom weights must sum to 1");
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& l, const Atom& r) { return l.x < r.x; });
  Contaminant c(Kind::kAtoms);
  c.atoms_ = std::move(atoms);
  return c;
}

Contaminant Contaminant::normal(double mean, double sd) {
  if (!std::isfinite(mean) || !(sd > 0.0))
    throw std::invalid_argument("contaminant: normal needs finite mean and sd > 0");
  Contaminant c(Kind::kNormal);
  c.a_ = mean;
  c.b_ = sd;
  return c;
}

Contaminant Contaminant::uniform(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b))
    throw std::invalid_argument("contaminant: uniform needs a < b");
  Contaminant c(Kind::kUniform);
  c.a_ = a;
  c.b_ = b;
  return c;
}

Contaminant Contaminant::parse(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("contaminant: expected '<kind>:<args>', got '" + spec + "'");
  const std::string kind = spec.substr(0, colon);
  const std::string args = spec.substr(colon + 1);
  if (kind == "point") return point(parse_number(args, "point location"));
  if (kind == "atoms") {
    std::vector<Atom> list;
    for (const auto& entry : split(args, ',')) {
      const auto parts = split(entry, ':');
      if (parts.size() != 2)
        throw std::invalid_argument("contaminant: bad atom entry '" + entry + "'");
      list.push_back({parse_number(parts[0], "atom location"),
                      parse_number(parts[1], "atom weight")});
    }
    return atoms(std::move(list));
  }
  if (kind == "normal" || kind == "uniform") {
    const auto parts = split(args, ':');
    if (parts.size() != 2)
      throw std::invalid_argument("contaminant: '" + kind + "' takes two arguments");
    const double first = parse_number(parts[0], kind + " argument");
    const double second = parse_number(parts[1], kind + " argument");
    return kind == "normal" ? normal(first, second) : uniform(first, second);
  }
  throw std::invalid_argument("contaminant: unknown kind '" + kind + "'");
}

bool Contaminant::is_discrete() const {
  return kind_ == Kind::kPoint || kind_ == Kind::kAtoms;
}

const std::vector<Atom>& Contaminant::atom_list() const {
  if (!is_discrete())
    throw std::logic_error("contaminant: atom_list on a continuous kind");
  return atoms_;
}

double Contaminant::cdf(double x) const {
  switch (kind_) {
    case Kind::kPoint:
    case Kind::kAtoms: {
      double total = 0.0;
      for (const auto& a : atoms_)
        if (a.x <= x) total += a.weight;
      return total;
    }
    case Kind::kNormal:
      return stdnormal::cdf((x - a_) / b_);
    case Kind::kUniform:
      if (x <= a_) return 0.0;
      if (x >= b_) return 1.0;
      return (x - a_) / (b_ - a_);
  }
  return 0.0;
}

double Contaminant::pdf(double x) const {
  switch (kind_) {
    case Kind::kPoint:
    case Kind::kAtoms:
      return 0.0;
    case Kind::kNormal:
      return stdnormal::pdf((x - a_) / b_) / b_;
    case Kind::kUniform:
      return (x >= a_ && x <= b_) ? 1.0 / (b_ - a_) : 0.0;
  }
  return 0.0;
}

double Contaminant::quantile(double p) const {
  switch (kind_) {
    case Kind::kPoint:
      return atoms_.front().x;
    case Kind::kAtoms: {
      double cum = 0.0;
      for (const auto& a : atoms_) {
        cum += a.weight;
        if (p <= cum) return a.x;
      }
      return atoms_.back().x;
    }
    case Kind::kNormal:
      return a_ + b_ * stdnormal::quantile(p);
    case Kind::kUniform:
      return a_ + p * (b_ - a_);
  }
  return 0.0;
}

std::vector<double> Contaminant::density_breakpoints() const {
  if (kind_ == Kind::kUniform) return {a_, b_};
  return {};
}

double Contaminant::support_lo() const {
  switch (kind_) {
    case Kind::kPoint:
    case Kind::kAtoms:
      return atoms_.front().x;
    case Kind::kNormal:
      return a_ - 10.0 * b_;
    case Kind::kUniform:
      return a_;
  }
  return 0.0;
}

double Contaminant::support_hi() const {
  switch (kind_) {
    case Kind::kPoint:
    case Kind::kAtoms:
      return atoms_.back().x;
    case Kind::kNormal:
      return a_ + 10.0 * b_;
    case Kind::kUniform:
      return b_;
  }
  return 0.0;
}

std::string Contaminant::describe() const {
  std::ostringstream out;
  out.precision(12);
  switch (kind_) {
    case Kind::kPoint:
      out << "point:" << atoms_.front().x;
      break;
    case Kind::kAtoms: {
      out << "atoms:";
      bool first = true;
      for (const auto& a : atoms_) {
        if (!first) out << ',';
        out << a.x << ':' << a.weight;
        first = false;
      }
      break;
    }
    case Kind::kNormal:
      out << "normal:" << a_ << ':' << b_;
      break;
    case Kind::kUniform:
      out << "uniform:" << a_ << ':' << b_;
      break;
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// MixtureDistribution

MixtureDistribution::MixtureDistribution(double eps, double mu, double sigma,
                                         CentralModel central,
                                         Contaminant contaminant)
    : eps_(eps),
      mu_(mu),
      sigma_(sigma),
      central_(central),
      contaminant_(std::move(contaminant)) {
  if (!(eps >= 0.0 && eps < 0.5))
    throw std::invalid_argument("mixture: eps must lie in [0, 1/2)");
  if (!std::isfinite(mu) || !(sigma > 0.0) || !std::isfinite(sigma))
    throw std::invalid_argument("mixture: need finite mu and sigma > 0");
}

MixtureDistribution MixtureDistribution::central_only(double mu, double sigma) {
  return MixtureDistribution(0.0, mu, sigma, CentralModel::normal(),
                             Contaminant::point(0.0));
}

double MixtureDistribution::cdf(double x) const {
  double value = (1.0 - eps_) * central_.cdf((x - mu_) / sigma_);
  if (eps_ > 0.0) value += eps_ * contaminant_.cdf(x);
  return value;
}

Eigen::ArrayXd MixtureDistribution::sample(Eigen::Index n, SplitRng& rng) const {
  if (n < 1) throw std::invalid_argument("sample: n must be at least 1");
  Eigen::ArrayXd out(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (rng.next_uniform() < eps_) {
      out[i] = contaminant_.quantile(rng.next_uniform());
    } else {
      out[i] = mu_ + sigma_ * central_.quantile(rng.next_uniform());
    }
  }
  return out;
}

Eigen::ArrayXd MixtureDistribution::sample(Eigen::Index n,
                                           std::uint64_t seed) const {
  SplitRng rng(seed, 0);
  return sample(n, rng);
}

namespace {

// Quadrature plus exact tails of one absolutely continuous component.
template <typename Pdf, typename Cdf>
double component_expect(const Integrand& g, Pdf&& pdf, Cdf&& cdf,
                        double support_lo, double support_hi,
                        const std::vector<double>& pdf_breaks, double tol) {
  const double a = g.center - g.radius;
  const double b = g.center + g.radius;
  double total = g.tail_left * cdf(a) + g.tail_right * (1.0 - cdf(b));
  const double lo = std::max(a, support_lo);
  const double hi = std::min(b, support_hi);
  if (hi > lo) {
    std::vector<double> breaks = g.breakpoints;
    breaks.insert(breaks.end(), pdf_breaks.begin(), pdf_breaks.end());
    total += integrate([&](double x) { return g.f(x) * pdf(x); }, lo, hi,
                       breaks, tol);
  }
  return total;
}

}  // namespace

double MixtureDistribution::expect(const Integrand& g) const {
  if (!(g.radius >= 0.0))
    throw std::invalid_argument("expect: integrand radius must be >= 0");
  double total = 0.0;
  const double tol = 0.5e-10;

  if (eps_ > 0.0 && contaminant_.is_discrete()) {
    for (const auto& atom : contaminant_.atom_list()) {
      const double value = g.f(atom.x);
      if (!std::isfinite(value))
        throw std::domain_error("expect: non-finite integrand value at atom");
      total += eps_ * atom.weight * value;
    }
  }

  const double central_lo = mu_ - sigma_ * central_.support_radius();
  const double central_hi = mu_ + sigma_ * central_.support_radius();
  total += (1.0 - eps_) *
           component_expect(
               g, [&](double x) { return central_.pdf((x - mu_) / sigma_) / sigma_; },
               [&](double x) { return central_.cdf((x - mu_) / sigma_); },
               central_lo, central_hi, {}, tol);

  if (eps_ > 0.0 && !contaminant_.is_discrete()) {
    total += eps_ * component_expect(
                        g, [&](double x) { return contaminant_.pdf(x); },
                        [&](double x) { return contaminant_.cdf(x); },
                        contaminant_.support_lo(), contaminant_.support_hi(),
                        contaminant_.density_breakpoints(), tol);
  }
  return total;
}

}  // namespace mmloc
