#ifndef FCD_OPERATORS_HPP
#define FCD_OPERATORS_HPP

#include <cstddef>
#include <vector>

#include "fcd/grid.hpp"

namespace fcd {

// Convection flux f(u) = |u|^(q-1) u / q. Monotone nondecreasing in u for
// every q > 1, with f'(0) = 0.
double flux(double u, double q);
double flux_derivative(double u, double q);  // |u|^(q-1)

enum class FluxScheme { godunov, rusanov };

struct FluxParams {
  double q = 2.0;
  FluxScheme scheme = FluxScheme::godunov;
};

// Interface flux for the Riemann problem (u_left, u_right). The Godunov
// value reduces to an endpoint min/max because f is monotone; Rusanov adds
// local Lax-Friedrichs dissipation.
double numerical_flux(double u_left, double u_right, const FluxParams& params);

// Normalization making the singular-integral operator match the |xi|^alpha
// symbol. Written with Gamma(1 - alpha/2) to keep tgamma off negative
// arguments; equals Gamma(1 + alpha) sin(pi alpha / 2) / pi in one dimension.
double frac_lap_normalization(double alpha);

// (-Delta)^(alpha/2) u via the Fourier symbol |xi_k|^alpha. Exact on the
// periodic grid; annihilates constants identically.
Field frac_laplacian_spectral(const Field& u, double alpha);

// Same operator realized from the hypersingular integral with a split radius:
// inside it the second-difference form (the u'(x) z term cancels by
// symmetry), outside a midpoint lattice sum over the periodic images. The
// split radius is quantized to the grid; weights are cached per instance.
class SingularFracLaplacian {
 public:
  SingularFracLaplacian(const GridSpec& grid, double alpha, double split_radius);

  Field apply(const Field& u) const;
  double split_radius() const { return (static_cast<double>(near_cells_) + 0.5) * grid_.dx(); }

 private:
  GridSpec grid_;
  double alpha_ = 0.0;
  std::size_t near_cells_ = 0;          // knots inside the split radius
  std::vector<double> far_weight_;      // per residue class, image-summed
  double far_weight_total_ = 0.0;
  std::vector<double> near_m1_;         // per-piece moments of z^(1-alpha)
  std::vector<double> near_m2_;         // and of z^(2-alpha)
};

// One-shot convenience wrapper; split_radius defaults to four cells.
Field frac_laplacian_singular(const Field& u, double alpha, double split_radius = -1.0);

}  // namespace fcd

#endif
