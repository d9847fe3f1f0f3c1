#include "fcd/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "fcd/quadrature.hpp"

namespace fcd {

namespace {

constexpr double kPi = std::numbers::pi;

void require_alpha(double alpha, const char* who) {
  if (!(alpha > 0.0 && alpha < 2.0)) {
    throw std::invalid_argument(std::string(who) + ": alpha must lie in (0, 2), got " +
                                std::to_string(alpha));
  }
}

void require_time(double t, const char* who) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw std::invalid_argument(std::string(who) + ": time must be positive, got " +
                                std::to_string(t));
  }
}

}  // namespace

double profile_value(double alpha, double r) {
  require_alpha(alpha, "profile_value");
  const QuadResult q = oscillatory_integral(Oscillator::cosine, std::abs(r), 0.0, alpha, 1.0);
  return q.value / kPi;
}

double kernel_value(double alpha, double t, double x) {
  require_time(t, "kernel_value");
  const double stretch = std::pow(t, -1.0 / alpha);
  return stretch * profile_value(alpha, std::abs(x) * stretch);
}

double kernel_deriv_value(double alpha, double s, double t, double x, bool with_x_derivative) {
  require_alpha(alpha, "kernel_deriv_value");
  require_time(t, "kernel_deriv_value");
  if (!(s >= 0.0)) throw std::invalid_argument("kernel_deriv_value: s must be >= 0");
  const double r = std::abs(x);
  if (with_x_derivative) {
    if (x == 0.0) return 0.0;  // odd integrand
    const QuadResult q = oscillatory_integral(Oscillator::sine, r, s + 1.0, alpha, t);
    const double sgn = x > 0.0 ? 1.0 : -1.0;
    return -sgn * q.value / kPi;
  }
  const QuadResult q = oscillatory_integral(Oscillator::cosine, r, s, alpha, t);
  return q.value / kPi;
}

Field kernel_deriv_samples(double alpha, double s, double t, const GridSpec& grid,
                           bool with_x_derivative) {
  Field out = make_field(grid, t);
  for (std::size_t i = 0; i < grid.n_points; ++i) {
    out.samples[i] = kernel_deriv_value(alpha, s, t, grid.node(i), with_x_derivative);
  }
  return out;
}

namespace {

// Graded abscissae for norm quadrature, in units of the self-similar width
// t^(1/alpha): uniform through the core, log-spaced through the near tail.
std::vector<double> norm_abscissae() {
  std::vector<double> xs;
  for (int i = 0; i <= 120; ++i) xs.push_back(6.0 * i / 120.0);
  const double ratio = std::pow(10.0, 1.0 / 32.0);
  for (double x = 6.0 * ratio; x < 60.0; x *= ratio) xs.push_back(x);
  xs.push_back(60.0);
  return xs;
}

}  // namespace

double kernel_lp_norm(double alpha, double s, double p, double t, bool with_x_derivative) {
  require_alpha(alpha, "kernel_lp_norm");
  require_time(t, "kernel_lp_norm");
  if (!(p >= 1.0)) throw std::invalid_argument("kernel_lp_norm: p must be >= 1 or infinity");

  const double scale = std::pow(t, 1.0 / alpha);
  static const std::vector<double> unit_xs = norm_abscissae();
  std::vector<double> xs(unit_xs.size());
  std::vector<double> gs(unit_xs.size());
  for (std::size_t i = 0; i < unit_xs.size(); ++i) {
    xs[i] = unit_xs[i] * scale;
    gs[i] = kernel_deriv_value(alpha, s, t, xs[i], with_x_derivative);
  }
  const PchipInterpolant shape(xs, gs);

  if (std::isinf(p)) {
    double best = 0.0;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
      for (int j = 0; j < 8; ++j) {
        const double x = xs[i] + (xs[i + 1] - xs[i]) * j / 8.0;
        best = std::max(best, std::abs(shape(x)));
      }
    }
    return std::max(best, std::abs(gs.back()));
  }

  // Bulk integral of |G|^p by dense sub-sampling of the interpolant.
  double bulk = 0.0;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const double h = (xs[i + 1] - xs[i]) / 16.0;
    double prev = std::pow(std::abs(shape(xs[i])), p);
    for (int j = 1; j <= 16; ++j) {
      const double cur = std::pow(std::abs(shape(xs[i] + h * j)), p);
      bulk += 0.5 * (prev + cur) * h;
      prev = cur;
    }
  }

  // Power-law continuation past the window. The fitted exponent should track
  // 1 + alpha + s (+1 with the x-derivative); clamp against wild fits when
  // the boundary samples sit near a sign change.
  const double nominal = 1.0 + alpha + s + (with_x_derivative ? 1.0 : 0.0);
  double tail = 0.0;
  const double g_hi = gs.back();
  const double g_lo = shape(0.85 * xs.back());
  if (std::abs(g_hi) > 1e-300 && g_lo * g_hi > 0.0) {
    double d_fit = std::log(std::abs(g_lo) / std::abs(g_hi)) / std::log(1.0 / 0.85);
    d_fit = std::clamp(d_fit, 1.5, nominal + 3.0);
    if (d_fit * p > 1.1) {
      tail = std::pow(std::abs(g_hi), p) * xs.back() / (d_fit * p - 1.0);
    }
  }
  return std::pow(2.0 * (bulk + tail), 1.0 / p);
}

double profile_tail_coefficient(double alpha) {
  require_alpha(alpha, "profile_tail_coefficient");
  return std::tgamma(1.0 + alpha) * std::sin(kPi * alpha / 2.0) / kPi;
}

double kernel_mass(double alpha) {
  require_alpha(alpha, "kernel_mass");
  const double bulk_radius = 100.0;
  const QuadResult bulk = integrate([alpha](double r) { return profile_value(alpha, r); }, 0.0,
                                    bulk_radius, 1e-9, 400);
  // Large-r series of the profile: F(r) = sum_k c_k r^(-k alpha - 1) with
  // c_k = (-1)^(k+1) Gamma(k alpha + 1) sin(k pi alpha / 2) / (pi k!).
  double tail = 0.0;
  double factorial = 1.0;
  for (int k = 1; k <= 3; ++k) {
    factorial *= k;
    const double ck = (k % 2 == 1 ? 1.0 : -1.0) * std::tgamma(k * alpha + 1.0) *
                      std::sin(k * kPi * alpha / 2.0) / (kPi * factorial);
    tail += ck * std::pow(bulk_radius, -k * alpha) / (k * alpha);
  }
  return 2.0 * (bulk.value + tail);
}

double fit_decay_exponent(double alpha, double s, double p, bool with_x_derivative,
                          const std::vector<double>& times) {
  std::vector<double> distinct = times;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (distinct.size() < 2) {
    throw std::invalid_argument("fit_decay_exponent: need at least two distinct times");
  }
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (double t : distinct) {
    const double lx = std::log(t);
    const double ly = std::log(kernel_lp_norm(alpha, s, p, t, with_x_derivative));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double n = static_cast<double>(distinct.size());
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

KernelProfile::KernelProfile(double alpha, double r_max, int points_per_decade)
    : alpha_(alpha), r_max_(r_max) {
  require_alpha(alpha, "KernelProfile");
  if (!(r_max >= 100.0)) {
    throw std::invalid_argument("KernelProfile: r_max must be >= 100 so the tail fit has room");
  }
  if (points_per_decade < 8) {
    throw std::invalid_argument("KernelProfile: need at least 8 points per decade");
  }

  const double r_min = 1e-2;
  radii_.push_back(0.0);
  const double ratio = std::pow(10.0, 1.0 / points_per_decade);
  for (double r = r_min; r < r_max; r *= ratio) radii_.push_back(r);
  radii_.push_back(r_max);

  values_.reserve(radii_.size());
  for (double r : radii_) values_.push_back(profile_value(alpha, r));

  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!(values_[i] > 0.0)) {
      throw std::runtime_error("KernelProfile: profile not positive at r = " +
                               std::to_string(radii_[i]));
    }
    if (i > 0 && !(values_[i] < values_[i - 1] + 1e-12)) {
      throw std::runtime_error("KernelProfile: profile not decreasing at r = " +
                               std::to_string(radii_[i]));
    }
  }

  // Fit the tail constant over the last half decade of the table.
  double acc = 0.0;
  int count = 0;
  for (std::size_t i = 0; i < radii_.size(); ++i) {
    if (radii_[i] >= r_max / std::sqrt(10.0)) {
      acc += values_[i] * std::pow(radii_[i], 1.0 + alpha_);
      ++count;
    }
  }
  tail_constant_ = acc / count;

  interp_ = PchipInterpolant(radii_, values_);
}

double KernelProfile::value(double r) const {
  r = std::abs(r);
  if (r <= r_max_) return interp_(r);
  return tail_constant_ * std::pow(r, -(1.0 + alpha_));
}

KernelProfile build_kernel_profile(double alpha, double r_max, int points_per_decade) {
  return KernelProfile(alpha, r_max, points_per_decade);
}

}  // namespace fcd
