#pragma once

#include <vector>

namespace hlab {

enum class PotentialKind { HardCore, SoftDisc, Gaussian, Tabulated };

// Repulsive radial pair interaction of compact support.  The profile is
// fixed at construction; an overall nonnegative coupling multiplies the
// finite part.  Inside a hard core the value is +infinity.
class RadialPotential {
 public:
  // v(r) = +inf for r < core_radius, 0 beyond.
  static RadialPotential hard_core(double core_radius);
  // v(r) = height for r < radius, 0 beyond.
  static RadialPotential soft_disc(double height, double radius);
  // v(r) = height * exp(-(r/width)^2), truncated to 0 at support_factor*width.
  static RadialPotential gaussian(double height, double width,
                                  double support_factor = 3.0);
  // Monotone-cubic interpolation of (r, v) samples, clamped to v >= 0;
  // r must start at 0 and be strictly increasing, v(last) defines the edge.
  static RadialPotential tabulated(const std::vector<double>& r,
                                   const std::vector<double>& v);

  RadialPotential with_coupling(double coupling) const;

  PotentialKind kind() const { return kind_; }
  double coupling() const { return coupling_; }
  double support_radius() const { return support_; }
  double core_radius() const { return core_; }
  bool has_hard_core() const { return core_ > 0.0; }
  // True when the finite part vanishes identically and there is no core.
  bool is_zero() const;

  // Value at radius r >= 0; throws std::domain_error for r < 0.
  double operator()(double r) const;

 private:
  RadialPotential() = default;

  PotentialKind kind_ = PotentialKind::SoftDisc;
  double coupling_ = 1.0;
  double support_ = 0.0;
  double core_ = 0.0;
  double height_ = 0.0;
  double width_ = 0.0;
  std::vector<double> tab_r_, tab_v_, tab_d_;  // breakpoints, values, slopes
};

// v_a(r) = a^-2 v(r/a): same profile shrunk to support a*R0 and strengthened
// so that channel scattering parameters scale by powers of a.  a = 1 embeds
// the unscaled potential, hence the implicit conversion.
struct ScaledPotential {
  RadialPotential base;
  double a = 1.0;

  ScaledPotential(RadialPotential base_p, double scale);
  ScaledPotential(const RadialPotential& base_p) : base(base_p) {}  // a = 1

  double operator()(double r) const { return base(r / a) / (a * a); }
  double support_radius() const { return a * base.support_radius(); }
  double core_radius() const { return a * base.core_radius(); }
  bool has_hard_core() const { return base.has_hard_core(); }
  bool is_zero() const { return base.is_zero(); }
};

inline ScaledPotential scaled(const RadialPotential& p, double a) {
  return ScaledPotential(p, a);
}

// Moment integral over R^dim of |x|^k v(|x|), dim in {2, 3}.  Returns
// +infinity when the potential has a hard core.
double radial_moment(const ScaledPotential& p, int k, int dim);

}
