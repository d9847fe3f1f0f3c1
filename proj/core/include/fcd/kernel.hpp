#ifndef FCD_KERNEL_HPP
#define FCD_KERNEL_HPP

#include <vector>

#include "fcd/grid.hpp"
#include "fcd/interp.hpp"

namespace fcd {

// Self-similar profile F_alpha of the alpha-stable semigroup kernel,
//   F_alpha(r) = (1/pi) int_0^inf cos(r xi) exp(-xi^alpha) dxi,
// so that K_t(x) = t^(-1/alpha) F_alpha(|x| t^(-1/alpha)). Absolute accuracy
// target 1e-9; alpha must lie in (0, 2).
double profile_value(double alpha, double r);

// Kernel at time t > 0 via exact self-similar rescaling of the profile.
double kernel_value(double alpha, double t, double x);

// Pointwise fractional derivative of the kernel,
//   |D|^s K_t(x)        = (1/pi) int_0^inf cos(x xi) exp(-t xi^alpha) xi^s dxi
//   d/dx |D|^s K_t(x)   = -(1/pi) int_0^inf sin(x xi) exp(-t xi^alpha) xi^(s+1) dxi
// evaluated with t in the exponent directly, not by profile rescaling; the
// time-decay fits below would otherwise test a tautology.
double kernel_deriv_value(double alpha, double s, double t, double x, bool with_x_derivative);

Field kernel_deriv_samples(double alpha, double s, double t, const GridSpec& grid,
                           bool with_x_derivative);

// L^p norm of |D|^s K_t (optionally with the extra d/dx), p >= 1 or infinity.
// Quadrature over a window sized from the x^-(1+alpha+s) decay, with an
// explicit fitted power-law tail correction beyond it.
double kernel_lp_norm(double alpha, double s, double p, double t, bool with_x_derivative);

// int_R K_t dx at t = 1, to high accuracy: adaptive quadrature of the profile
// over the bulk plus the analytic large-r series for the tail.
double kernel_mass(double alpha);

// Leading large-r tail coefficient: F_alpha(r) ~ tail_coefficient * r^-(1+alpha).
double profile_tail_coefficient(double alpha);

// Least-squares slope of log ||.||_p against log t over the given times.
// Rejects fewer than two distinct times.
double fit_decay_exponent(double alpha, double s, double p, bool with_x_derivative,
                          const std::vector<double>& times);

// Tabulated profile for bulk use: log-spaced radii, monotone cubic between
// them, fitted power tail beyond the table.
class KernelProfile {
 public:
  KernelProfile(double alpha, double r_max, int points_per_decade);

  double alpha() const { return alpha_; }
  double r_max() const { return r_max_; }
  double tail_constant() const { return tail_constant_; }
  const std::vector<double>& radii() const { return radii_; }
  const std::vector<double>& values() const { return values_; }

  double value(double r) const;

 private:
  double alpha_;
  double r_max_;
  double tail_constant_;
  std::vector<double> radii_;
  std::vector<double> values_;
  PchipInterpolant interp_;
};

KernelProfile build_kernel_profile(double alpha, double r_max = 400.0, int points_per_decade = 32);

}  // namespace fcd

#endif
