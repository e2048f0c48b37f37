#include "hlab/scattering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "hlab/quadrature.hpp"

namespace hlab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTailResidualMax = 1e-9;
constexpr int kMaxRefinements = 2;

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

int drift_coefficient(int ell, int dim) {
  return dim == 2 ? 2 * ell + 1 : 2 * ell + 2;
}

// Outward Numerov integration of the zero-energy equation on a logarithmic
// grid t = log r.  Substituting f = r^{-beta} g with beta = (c - 1) / 2
// removes the first derivative: g'' = (beta^2 + r^2 v / 2) g.  The desired
// branch grows relative to the discarded r^{-2 beta} one, so the forward
// recursion is stable.
struct LogGridSolution {
  std::vector<double> r;
  std::vector<double> f;
};

LogGridSolution integrate_outward(const ScaledPotential& p, int c,
                                  double r_lo, double r_hi, int n) {
  const double beta = 0.5 * (c - 1);

  // Potential edges (support boundary, soft-disc step) must fall on a grid
  // node: a jump crossing the interior of a step costs an O(h) kick to the
  // log-derivative.  The start point is shifted slightly so the edge is a
  // node; v at nodes is the mean of one-sided limits, which keeps the
  // one-node defect at O(h^2) and the global error at O(h^4).
  const double edge = p.support_radius();
  double h;
  if (edge > r_lo * (1.0 + 1e-9) && edge < r_hi * (1.0 - 1e-9)) {
    double frac = std::log(edge / r_lo) / std::log(r_hi / r_lo);
    int k = std::clamp(static_cast<int>(std::lround(frac * (n - 1))), 1, n - 2);
    h = std::log(r_hi / edge) / (n - 1 - k);
    r_lo = edge * std::exp(-k * h);
  } else {
    h = std::log(r_hi / r_lo) / (n - 1);
  }
  const double t0 = std::log(r_lo);

  // The recursion runs in extended precision: the Born-regime signal in f can
  // sit ten orders below f itself, and double rounding noise accumulated over
  // the free stretch would leak into the fitted tail coefficient.
  std::vector<double> r(n);
  std::vector<long double> g(n);
  for (int i = 0; i < n; ++i) r[i] = std::exp(t0 + i * h);

  const bool pure_wall = p.has_hard_core();  // no finite part outside
  auto q_at = [&](int i) -> long double {
    if (pure_wall) return static_cast<long double>(beta) * beta;
    long double ri = r[i];
    long double v = 0.5L * (p(r[i] * (1.0 - 1e-9)) + p(r[i] * (1.0 + 1e-9)));
    return static_cast<long double>(beta) * beta + 0.5L * ri * ri * v;
  };

  const bool wall = p.has_hard_core();
  long double f0, f1;
  if (wall) {
    // Taylor start outside the wall where the potential vanishes:
    // f = d - (c / 2 r0) d^2 + (c (c + 1) / 6 r0^2) d^3, d = r - r0.
    long double r0 = r[0];
    long double d = (long double)r[1] - r0;
    f0 = 0.0L;
    f1 = d * (1.0L - 0.5L * c * d / r0 + c * (c + 1.0L) / 6.0L * d * d / (r0 * r0));
  } else {
    // Regular branch f = 1 + v(0) r^2 / (4 (1 + c)) near the origin.
    long double alpha = p(0.0) / (4.0L * (1.0L + c));
    f0 = 1.0L + alpha * r[0] * r[0];
    f1 = 1.0L + alpha * r[1] * r[1];
  }
  const long double lbeta = beta;
  g[0] = f0 * std::pow((long double)r[0], lbeta);
  g[1] = f1 * std::pow((long double)r[1], lbeta);

  const long double h2 = (long double)h * h;
  long double qm = q_at(0), q0 = q_at(1);
  for (int i = 2; i < n; ++i) {
    long double qp = q_at(i);
    long double num = 2.0L * g[i - 1] * (1.0L + 5.0L * h2 * q0 / 12.0L) -
                      g[i - 2] * (1.0L - h2 * qm / 12.0L);
    g[i] = num / (1.0L - h2 * qp / 12.0L);
    qm = q0;
    q0 = qp;
    if (std::abs(g[i]) > 1e250L) {  // rescale both carriers, f is a ratio
      for (int j = 0; j <= i; ++j) g[j] *= 1e-100L;
    }
  }

  LogGridSolution sol;
  sol.r = std::move(r);
  sol.f.resize(n);
  for (int i = 0; i < n; ++i)
    sol.f[i] = static_cast<double>(g[i] * std::pow((long double)sol.r[i], -lbeta));
  return sol;
}

struct TailFit {
  double A = 0.0;
  double B = 0.0;
  double residual = 0.0;
};

// Least-squares fit of f against {1, w(r)} over [i0, end) in long double;
// residual is rms misfit relative to the asymptotic coefficient scale.
TailFit fit_tail(const std::vector<double>& r, const std::vector<double>& f,
                 std::size_t i0, const std::function<double(double)>& w) {
  long double s11 = 0, s1w = 0, sww = 0, s1f = 0, swf = 0;
  std::size_t m = 0;
  for (std::size_t i = i0; i < r.size(); ++i, ++m) {
    long double wi = w(r[i]);
    long double fi = f[i];
    s11 += 1;
    s1w += wi;
    sww += wi * wi;
    s1f += fi;
    swf += wi * fi;
  }
  long double det = s11 * sww - s1w * s1w;
  TailFit fit;
  fit.A = static_cast<double>((s1f * sww - swf * s1w) / det);
  fit.B = static_cast<double>((s11 * swf - s1w * s1f) / det);
  long double rss = 0;
  long double scale = 0;
  for (std::size_t i = i0; i < r.size(); ++i) {
    long double e = f[i] - (fit.A + fit.B * w(r[i]));
    rss += e * e;
    scale = std::max<long double>(scale, std::abs((long double)f[i]));
  }
  if (scale == 0) scale = 1;
  fit.residual = static_cast<double>(std::sqrt((double)(rss / m)) / (double)scale);
  return fit;
}

// First index strictly beyond the interaction region, where the solution
// follows the analytic tail form exactly.
std::size_t tail_window_start(const std::vector<double>& r, double support) {
  auto it = std::upper_bound(r.begin(), r.end(), support * 1.25);
  std::size_t i0 = static_cast<std::size_t>(it - r.begin());
  if (r.size() - i0 < 8)
    throw std::invalid_argument(
        "scattering grid does not leave a force-free tail window beyond the "
        "support");
  return i0;
}

struct PowerTailExtraction {
  RadialProfile profile;
  double b = 0.0;
  double residual = 0.0;
};

PowerTailExtraction extract_power_tail(const ScaledPotential& p, int ell,
                                       int dim, const GridSpec& grid, int n) {
  const double support = p.support_radius();
  const double wall = p.core_radius();
  const double r_hi = grid.match_factor * support;
  const double r_lo = wall > 0.0 ? wall : grid.inner_cut * support;
  require(r_hi > r_lo, "matching radius must exceed the inner radius");

  const int c = drift_coefficient(ell, dim);
  LogGridSolution sol = integrate_outward(p, c, r_lo, r_hi, n);

  const int q = dim == 2 ? 2 * ell : 2 * ell + 1;
  std::size_t i0 = tail_window_start(sol.r, support);
  auto w = [q](double r) { return std::pow(r, -q); };
  TailFit fit = fit_tail(sol.r, sol.f, i0, w);
  if (fit.A == 0.0)
    throw std::runtime_error("zero-energy profile has no asymptotic constant");

  PowerTailExtraction out;
  out.b = -fit.B / fit.A;
  out.residual = fit.residual;
  out.profile.r = std::move(sol.r);
  out.profile.f = std::move(sol.f);
  for (double& v : out.profile.f) v /= fit.A;
  out.profile.ell = ell;
  out.profile.dim = dim;
  out.profile.inner_radius = wall;
  return out;
}

struct LogTailExtraction {
  RadialProfile profile;
  double b = 0.0;
  double residual = 0.0;
  bool degenerate = false;
};

LogTailExtraction extract_log_tail(const ScaledPotential& p, double R,
                                   const GridSpec& grid, int n) {
  const double support = p.support_radius();
  const double wall = p.core_radius();
  require(R > support, "outer radius must exceed the support");
  const double r_lo = wall > 0.0 ? wall : grid.inner_cut * support;

  LogGridSolution sol = integrate_outward(p, 1, r_lo, R, n);

  std::size_t i0 = tail_window_start(sol.r, support);
  auto w = [](double r) { return std::log(r); };
  TailFit fit = fit_tail(sol.r, sol.f, i0, w);  // f = A + B log r

  LogTailExtraction out;
  out.residual = fit.residual;
  double scale = 0.0;
  for (std::size_t i = i0; i < sol.f.size(); ++i)
    scale = std::max(scale, std::abs(sol.f[i]));
  if (std::abs(fit.B) <= 1e-13 * scale) {
    out.degenerate = true;  // flat tail: the potential does not scatter
    out.b = 0.0;
    double fR = sol.f.back();
    for (double& v : sol.f) v /= fR;
  } else {
    out.b = std::exp(-fit.A / fit.B);
    double fR = fit.A + fit.B * std::log(R);
    for (double& v : sol.f) v /= fR;
  }
  out.profile.r = std::move(sol.r);
  out.profile.f = std::move(sol.f);
  out.profile.ell = 0;
  out.profile.dim = 2;
  out.profile.inner_radius = wall;
  return out;
}

RadialProfile trivial_profile(int ell, int dim, double r_hi, int n) {
  RadialProfile prof;
  prof.r.resize(n);
  prof.f.assign(n, 1.0);
  double h = r_hi / n;
  for (int i = 0; i < n; ++i) prof.r[i] = h * (i + 1);
  prof.ell = ell;
  prof.dim = dim;
  return prof;
}

void validate_channel(int ell, int dim) {
  require(dim == 2 || dim == 3, "dim must be 2 or 3");
  require(ell >= 0, "channel index must be nonnegative");
}

}  // namespace

double RadialProfile::value_at(double radius) const {
  if (radius <= inner_radius) return 0.0;
  if (r.empty()) return 1.0;
  if (radius >= r.back()) return f.back();
  if (radius <= r.front()) return f.front();
  auto it = std::upper_bound(r.begin(), r.end(), radius);
  std::size_t hi = static_cast<std::size_t>(it - r.begin());
  std::size_t lo = hi - 1;
  double t = (radius - r[lo]) / (r[hi] - r[lo]);
  return (1.0 - t) * f[lo] + t * f[hi];
}

RadialProfile zero_energy_profile(const ScaledPotential& p, int ell, int dim,
                                  const GridSpec& grid) {
  validate_channel(ell, dim);
  require(dim == 3 || ell >= 1,
          "the 2D ell = 0 channel uses swave_log_profile");
  if (p.is_zero())
    return trivial_profile(ell, dim, grid.match_factor, grid.points);
  return extract_power_tail(p, ell, dim, grid, grid.points).profile;
}

RadialProfile swave_log_profile(const ScaledPotential& p, double R,
                                const GridSpec& grid) {
  if (p.is_zero()) return trivial_profile(0, 2, R, grid.points);
  return extract_log_tail(p, R, grid, grid.points).profile;
}

ScatteringResult scattering_length(const ScaledPotential& p, int ell, int dim,
                                   const GridSpec& grid) {
  validate_channel(ell, dim);

  ScatteringResult res;
  res.ell = ell;
  res.dim = dim;

  if (p.is_zero()) {
    res.degenerate = (dim == 2 && ell == 0);
    res.matching_radius = dim == 2 && ell == 0
                              ? grid.log_radius_factor
                              : grid.match_factor;
    res.profile = trivial_profile(ell, dim, res.matching_radius, grid.points);
    return res;
  }

  const bool log_channel = (dim == 2 && ell == 0);
  int n = grid.points;
  for (int attempt = 0;; ++attempt) {
    if (log_channel) {
      const double R = grid.log_radius_factor * p.support_radius();
      LogTailExtraction ext = extract_log_tail(p, R, grid, n);
      res.b = ext.b;
      res.fit_residual = ext.residual;
      res.degenerate = ext.degenerate;
      res.matching_radius = R;
      res.profile = std::move(ext.profile);
    } else {
      PowerTailExtraction ext = extract_power_tail(p, ell, dim, grid, n);
      res.b = ext.b;
      res.fit_residual = ext.residual;
      res.matching_radius = grid.match_factor * p.support_radius();
      res.profile = std::move(ext.profile);
    }
    if (res.fit_residual <= kTailResidualMax) break;
    if (attempt == kMaxRefinements)
      throw std::runtime_error(
          "tail fit residual above 1e-9 after grid refinement");
    n *= 2;  // refine and retry before refusing the result
  }

  res.variational_energy = variational_energy(res.profile, p, ell, dim);
  return res;
}

double born_scattering_length(const ScaledPotential& p, int ell, int dim) {
  validate_channel(ell, dim);
  require(dim == 3 || ell >= 1,
          "the logarithmic 2D channel has no Born length");
  if (p.has_hard_core()) return std::numeric_limits<double>::infinity();
  double denom = dim == 2 ? 8.0 * kPi * ell : 8.0 * kPi * (2 * ell + 1);
  return radial_moment(p, 2 * ell, dim) / denom;
}

double variational_energy(const RadialProfile& profile,
                          const ScaledPotential& p, int ell, int dim) {
  validate_channel(ell, dim);
  require(profile.r.size() == profile.f.size() && profile.r.size() >= 2,
          "profile must carry matching radius/value arrays");

  const bool log_channel = (dim == 2 && ell == 0);
  const double angular = dim == 2 ? 2.0 * kPi : 4.0 * kPi;
  const int pw = dim == 2 ? 2 * ell + 1 : 2 * ell + 2;  // radial weight power

  auto power_int = [pw](double a, double b) {
    // integral of r^pw over [a, b]
    return (std::pow(b, pw + 1) - std::pow(a, pw + 1)) / (pw + 1);
  };

  const auto& r = profile.r;
  const auto& f = profile.f;
  double total = 0.0;

  // Region below the first node: constant f (regular branch) or excluded
  // (hard wall, where f = 0 and the potential region is unreachable).
  if (profile.inner_radius == 0.0 && r.front() > 0.0) {
    double f0 = f.front();
    total += integrate(
        [&](double x) { return 0.5 * p(x) * f0 * f0 * std::pow(x, pw); }, 0.0,
        r.front());
  }

  for (std::size_t i = 0; i + 1 < r.size(); ++i) {
    double a = r[i], b = r[i + 1];
    double s = (f[i + 1] - f[i]) / (b - a);
    total += s * s * power_int(a, b);
    // Potential part by Simpson with linear f on the interval.
    double m = 0.5 * (a + b);
    double fm = 0.5 * (f[i] + f[i + 1]);
    auto g = [&](double x, double fx) {
      if (fx == 0.0) return 0.0;  // wall node: v may be infinite there
      return 0.5 * p(x) * fx * fx * std::pow(x, pw);
    };
    total += (b - a) / 6.0 *
             (g(a, f[i]) + 4.0 * g(m, fm) + g(b, f[i + 1]));
  }

  if (!log_channel) {
    // Analytic tail beyond the last node from the fitted power form.
    std::size_t i0 = tail_window_start(r, p.support_radius());
    const int q = dim == 2 ? 2 * ell : 2 * ell + 1;
    auto w = [q](double x) { return std::pow(x, -q); };
    TailFit fit = fit_tail(r, f, i0, w);
    double b_tail = fit.A != 0.0 ? -fit.B / fit.A : 0.0;
    double R = r.back();
    total += q * b_tail * b_tail * std::pow(R, -q);
  }
  return angular * total;
}

Rational c_factor_exact(int ell) {
  require(ell >= 0, "channel index must be nonnegative");
  require(ell <= 15, "c_factor_exact overflows past ell = 15");
  Rational c{1, 1};
  for (int j = 1; j <= ell; ++j) {
    c.num *= 2 * j;
    c.den *= 2 * j + 1;
  }
  std::int64_t g = std::gcd(c.num, c.den);
  c.num /= g;
  c.den /= g;
  return c;
}

EffectiveCoupling effective_coupling(const ScatteringResult& res, double a,
                                     std::optional<double> chi4) {
  require(a > 0.0 && a <= 1.0, "scale parameter must lie in (0, 1]");
  EffectiveCoupling out;
  if (res.dim == 2 && res.ell == 0) {
    require(a < 1.0, "the logarithmic channel needs a < 1");
    out.coupling = 8.0 * kPi;
    out.scale_factor = 1.0 / std::log(1.0 / (a * a));
  } else if (res.dim == 2) {
    out.coupling = 8.0 * kPi * res.ell * res.b;
    out.scale_factor = std::pow(a, 2 * res.ell);
  } else {
    require(chi4.has_value(),
            "3D coupling needs the transverse quartic integral");
    out.coupling = 8.0 * kPi * (2 * res.ell + 1) * c_factor(res.ell) *
                   res.b * chi4.value();
    out.scale_factor = std::pow(a, 2 * res.ell + 1);
  }
  return out;
}

}
