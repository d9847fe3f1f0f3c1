#ifndef FCD_DIAGNOSTICS_HPP
#define FCD_DIAGNOSTICS_HPP

#include <map>
#include <string>
#include <vector>

#include "fcd/grid.hpp"
#include "fcd/params.hpp"

namespace fcd {

// One time-slice of every tracked estimate. Slope functionals use forward
// differences; the Oleinik product keeps only the positive part, matching the
// one-sided continuum inequality.
struct DiagnosticsRecord {
  double time = 0.0;
  double dx = 0.0;
  double mass = 0.0;
  std::map<double, double> lp_norms;  // keys 1, 2, q, 2q, infinity
  double oleinik_product = 0.0;       // t * sup_i max(D+ u^(q-1), 0)
  double max_slope = 0.0;             // sup_i D+ u
  double w11_local = 0.0;             // sum over |x_i| <= R_local of |D+ u| dx
  double energy_density = 0.0;        // discrete integral of |(-lap)^(a/4) u|^2
  double tail_mass = 0.0;             // sum over |x_i| > R_tail of u dx
  double min_value = 0.0;
};

DiagnosticsRecord diagnose(const Field& u, const ModelParams& params, double r_local,
                           double r_tail);

// Constant C(p) in the decay bound ||u(t)||_p <= C(p) t^(-(1/q)(1-1/p)).
// Interpolates mass against the sup bound; p may be infinity.
double lp_decay_constant(double q, double m, double p);

struct BoundCheck {
  std::string name;
  double observed = 0.0;
  double allowed = 0.0;
  bool pass = false;
};

struct BoundsReport {
  std::vector<BoundCheck> checks;
  bool all_pass = true;
};

// Checks the record against the decay bounds with the exact constants, the
// Oleinik bound with a 2 dx/t discretization allowance, mass drift, and
// nonnegativity. Every check is reported, not just the first failure.
BoundsReport assert_bounds(const DiagnosticsRecord& record, const ModelParams& params,
                           double slack);

// Smooth space-time bump phi(t,x) = psi((t-tc)/tr) psi((x-xc)/xr) with
// psi(s) = exp(1 - 1/(1-s^2)) for |s| < 1 and zero outside.
struct KruzhkovBump {
  double time_center = 0.0;
  double time_radius = 0.0;
  double x_center = 0.0;
  double x_radius = 0.0;
};

// Space-time quadrature of the entropy pairing
//   |u-k| phi_t + sgn(u-k) (f(u) - f(k)) phi_x
// over the snapshot sequence. Entropy solutions of the pure convection flow
// make this nonnegative for every k and every nonnegative bump.
double kruzhkov_residual(const std::vector<Field>& snapshots, double q, double k,
                         const KruzhkovBump& bump);

}  // namespace fcd

#endif
