#include "hlab/potentials.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "hlab/quadrature.hpp"

namespace hlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

RadialPotential RadialPotential::hard_core(double core_radius) {
  require(core_radius > 0.0, "hard_core: core radius must be positive");
  RadialPotential p;
  p.kind_ = PotentialKind::HardCore;
  p.core_ = core_radius;
  p.support_ = core_radius;
  return p;
}

RadialPotential RadialPotential::soft_disc(double height, double radius) {
  require(height >= 0.0, "soft_disc: height must be nonnegative");
  require(radius > 0.0, "soft_disc: radius must be positive");
  RadialPotential p;
  p.kind_ = PotentialKind::SoftDisc;
  p.height_ = height;
  p.support_ = radius;
  return p;
}

RadialPotential RadialPotential::gaussian(double height, double width,
                                          double support_factor) {
  require(height >= 0.0, "gaussian: height must be nonnegative");
  require(width > 0.0, "gaussian: width must be positive");
  require(support_factor > 0.0, "gaussian: support factor must be positive");
  RadialPotential p;
  p.kind_ = PotentialKind::Gaussian;
  p.height_ = height;
  p.width_ = width;
  p.support_ = support_factor * width;
  return p;
}

RadialPotential RadialPotential::tabulated(const std::vector<double>& r,
                                           const std::vector<double>& v) {
  require(r.size() == v.size(), "tabulated: sample arrays differ in length");
  require(r.size() >= 2, "tabulated: need at least two samples");
  require(r.front() == 0.0, "tabulated: radii must start at 0");
  for (std::size_t i = 1; i < r.size(); ++i)
    require(r[i] > r[i - 1], "tabulated: radii must be strictly increasing");

  RadialPotential p;
  p.kind_ = PotentialKind::Tabulated;
  p.tab_r_ = r;
  p.tab_v_ = v;
  for (double& y : p.tab_v_)
    if (y < 0.0) y = 0.0;  // interaction is repulsive by contract
  p.support_ = r.back();

  // Fritsch-Carlson monotone cubic slopes: no overshoot between samples, so
  // the clamp above is enough to keep the interpolant nonnegative.
  const std::size_t n = r.size();
  std::vector<double> h(n - 1), delta(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    h[i] = r[i + 1] - r[i];
    delta[i] = (p.tab_v_[i + 1] - p.tab_v_[i]) / h[i];
  }
  p.tab_d_.assign(n, 0.0);
  p.tab_d_[0] = delta[0];
  p.tab_d_[n - 1] = delta[n - 2];
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (delta[i - 1] * delta[i] <= 0.0) {
      p.tab_d_[i] = 0.0;
    } else {
      double w1 = 2.0 * h[i] + h[i - 1];
      double w2 = h[i] + 2.0 * h[i - 1];
      p.tab_d_[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
    }
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (delta[i] == 0.0) {
      p.tab_d_[i] = p.tab_d_[i + 1] = 0.0;
    } else {
      double alpha = p.tab_d_[i] / delta[i];
      double beta = p.tab_d_[i + 1] / delta[i];
      double s = alpha * alpha + beta * beta;
      if (s > 9.0) {
        double tau = 3.0 / std::sqrt(s);
        p.tab_d_[i] = tau * alpha * delta[i];
        p.tab_d_[i + 1] = tau * beta * delta[i];
      }
    }
  }
  return p;
}

RadialPotential RadialPotential::with_coupling(double coupling) const {
  require(coupling >= 0.0, "coupling must be nonnegative");
  require(kind_ != PotentialKind::HardCore,
          "coupling does not apply to a hard core");
  RadialPotential p = *this;
  p.coupling_ = coupling;
  return p;
}

bool RadialPotential::is_zero() const {
  if (core_ > 0.0) return false;
  if (coupling_ == 0.0) return true;
  switch (kind_) {
    case PotentialKind::SoftDisc:
    case PotentialKind::Gaussian:
      return height_ == 0.0;
    case PotentialKind::Tabulated:
      for (double y : tab_v_)
        if (y > 0.0) return false;
      return true;
    default:
      return false;
  }
}

double RadialPotential::operator()(double r) const {
  if (r < 0.0) throw std::domain_error("potential evaluated at negative radius");
  switch (kind_) {
    case PotentialKind::HardCore:
      return r < core_ ? kInf : 0.0;
    case PotentialKind::SoftDisc:
      return r < support_ ? coupling_ * height_ : 0.0;
    case PotentialKind::Gaussian: {
      if (r >= support_) return 0.0;
      double q = r / width_;
      return coupling_ * height_ * std::exp(-q * q);
    }
    case PotentialKind::Tabulated: {
      if (r >= support_) return 0.0;
      auto it = std::upper_bound(tab_r_.begin(), tab_r_.end(), r);
      std::size_t hi = std::max<std::size_t>(it - tab_r_.begin(), 1);
      std::size_t lo = hi - 1;
      double h = tab_r_[hi] - tab_r_[lo];
      double t = (r - tab_r_[lo]) / h;
      double t2 = t * t, t3 = t2 * t;
      double val = (2 * t3 - 3 * t2 + 1) * tab_v_[lo] +
                   (t3 - 2 * t2 + t) * h * tab_d_[lo] +
                   (-2 * t3 + 3 * t2) * tab_v_[hi] +
                   (t3 - t2) * h * tab_d_[hi];
      return coupling_ * std::max(val, 0.0);
    }
  }
  return 0.0;
}

ScaledPotential::ScaledPotential(RadialPotential base_p, double scale)
    : base(std::move(base_p)), a(scale) {
  require(scale > 0.0, "scale parameter must be positive");
  require(scale <= 1.0, "scale parameter must not exceed 1");
}

double radial_moment(const ScaledPotential& p, int k, int dim) {
  require(k >= 0, "radial_moment: order must be nonnegative");
  require(dim == 2 || dim == 3, "radial_moment: dim must be 2 or 3");
  if (p.has_hard_core()) return kInf;
  if (p.is_zero()) return 0.0;

  const double R = p.support_radius();
  const double angular =
      dim == 2 ? 2.0 * std::numbers::pi : 4.0 * std::numbers::pi;
  const int rad_pow = k + dim - 1;
  auto integrand = [&](double r) { return std::pow(r, rad_pow) * p(r); };
  return angular * integrate(integrand, 0.0, R);
}

}
