#ifndef FCD_NWAVE_HPP
#define FCD_NWAVE_HPP

#include "fcd/grid.hpp"

namespace fcd {

// Self-similar N-wave: (x/t)^(1/(q-1)) on 0 < x < support_radius(t), zero
// elsewhere. Carries mass M exactly at every time.
struct NWave {
  double mass = 1.0;
  double q = 2.0;

  double support_radius(double t) const;
};

NWave make_nwave(double mass, double q);

double nwave_value(double t, double x, double mass, double q);

// Samples the profile by exact cell averages (the closed-form primitive over
// each cell, clipped to the support), so the discrete mass is M to rounding
// and the shock cell carries its true partial content.
Field nwave_field(double t, double mass, double q, const GridSpec& grid);

// Closed-form norm: ||U||_p^p = t^(-p b) r^(p b + 1) / (p b + 1) with
// b = 1/(q-1); p may be infinity.
double nwave_lp_norm(double t, double mass, double q, double p);

// t * sup over the interior of d/dx (U^(q-1)); equals 1 identically since
// U^(q-1) = x/t on the support.
double nwave_oleinik_product(double t, double mass, double q);

}  // namespace fcd

#endif
