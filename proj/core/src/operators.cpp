#include "fcd/operators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "fcd/spectral.hpp"

namespace fcd {

namespace {

void require_q(double q) {
  if (!(q > 1.0) || !std::isfinite(q)) {
    throw std::invalid_argument("flux exponent q must be finite and greater than 1, got " +
                                std::to_string(q));
  }
}

void require_alpha(double alpha) {
  if (!(alpha > 0.0) || !(alpha < 2.0)) {
    throw std::invalid_argument("order alpha must lie in (0, 2), got " + std::to_string(alpha));
  }
}

}  // namespace

double flux(double u, double q) {
  require_q(q);
  return std::copysign(std::pow(std::abs(u), q), u) / q;
}

double flux_derivative(double u, double q) {
  require_q(q);
  return std::pow(std::abs(u), q - 1.0);
}

double numerical_flux(double u_left, double u_right, const FluxParams& params) {
  require_q(params.q);
  const double f_left = flux(u_left, params.q);
  const double f_right = flux(u_right, params.q);
  switch (params.scheme) {
    case FluxScheme::godunov:
      // Endpoint rule, exact because f has no interior extremum.
      return u_left <= u_right ? std::min(f_left, f_right) : std::max(f_left, f_right);
    case FluxScheme::rusanov: {
      const double speed =
          std::max(flux_derivative(u_left, params.q), flux_derivative(u_right, params.q));
      return 0.5 * (f_left + f_right) - 0.5 * speed * (u_right - u_left);
    }
  }
  throw std::invalid_argument("unknown flux scheme");
}

double frac_lap_normalization(double alpha) {
  require_alpha(alpha);
  const double pi = std::numbers::pi;
  return 0.5 * alpha * std::pow(2.0, alpha) * std::tgamma(0.5 * (1.0 + alpha)) /
         (std::sqrt(pi) * std::tgamma(1.0 - 0.5 * alpha));
}

Field frac_laplacian_spectral(const Field& u, double alpha) {
  require_alpha(alpha);
  SpectralField hat = to_spectral(u);
  const std::size_t n = hat.coeffs.size();
  for (std::size_t k = 0; k < n; ++k) {
    hat.coeffs[k] *= std::pow(std::abs(hat.xi(k)), alpha);
  }
  return from_spectral(hat);
}

SingularFracLaplacian::SingularFracLaplacian(const GridSpec& grid, double alpha,
                                             double split_radius)
    : grid_(grid), alpha_(alpha) {
  require_alpha(alpha);
  if (!(split_radius > 0.0) || !std::isfinite(split_radius)) {
    throw std::invalid_argument("split radius must be positive and finite");
  }
  const double dx = grid_.dx();
  const std::size_t n = grid_.n_points;
  const auto cells = static_cast<std::size_t>(std::llround(split_radius / dx));
  near_cells_ = std::max<std::size_t>(cells, 2);
  if (near_cells_ > n / 8) {
    throw std::invalid_argument("split radius covers more than an eighth of the domain");
  }

  const double c_alpha = frac_lap_normalization(alpha);
  const std::size_t first_far = near_cells_ + 1;

  // Midpoint weights dx |j dx|^(-1-alpha) folded onto residue classes mod n.
  // Offsets j = p + m n split into the m >= 0 branch and the mirrored
  // |j| = m n - p branch; each sums explicit images and closes with the
  // integral tail from the last midpoint.
  constexpr std::size_t kImages = 200;
  const double period = static_cast<double>(n);
  const auto branch_sum = [&](double offset, std::size_t m_start) {
    double total = 0.0;
    for (std::size_t m = m_start; m <= kImages; ++m) {
      const double j = offset + static_cast<double>(m) * period;
      if (j >= static_cast<double>(first_far)) {
        total += std::pow(j, -1.0 - alpha);
      }
    }
    const double edge = offset + (static_cast<double>(kImages) + 0.5) * period;
    return total + std::pow(edge, -alpha) / (alpha * period);
  };

  far_weight_.assign(n, 0.0);
  far_weight_total_ = 0.0;
  const double lattice_scale = c_alpha * std::pow(dx, -alpha);
  for (std::size_t p = 0; p < n; ++p) {
    const double offset = static_cast<double>(p);
    const double classes = branch_sum(offset, 0) + branch_sum(-offset, 1);
    far_weight_[p] = lattice_scale * classes;
    far_weight_total_ += far_weight_[p];
  }

  // Per-piece moments of z^(1-alpha) and z^(2-alpha) for the near quadrature.
  near_m1_.assign(near_cells_ + 1, 0.0);
  near_m2_.assign(near_cells_ + 1, 0.0);
  const double boundary = (static_cast<double>(near_cells_) + 0.5) * dx;
  for (std::size_t k = 0; k <= near_cells_; ++k) {
    const double za = static_cast<double>(k) * dx;
    const double zb = k == near_cells_ ? boundary : za + dx;
    near_m1_[k] = (std::pow(zb, 2.0 - alpha) - std::pow(za, 2.0 - alpha)) / (2.0 - alpha);
    near_m2_[k] = (std::pow(zb, 3.0 - alpha) - std::pow(za, 3.0 - alpha)) / (3.0 - alpha);
  }
}

Field SingularFracLaplacian::apply(const Field& u) const {
  if (!(u.grid == grid_)) {
    throw std::invalid_argument("field grid does not match the operator grid");
  }
  check_finite(u, "singular fractional Laplacian input");

  const std::size_t n = grid_.n_points;
  const double dx = grid_.dx();
  const double c_alpha = frac_lap_normalization(alpha_);

  Field out = make_field(grid_, u.time);
  std::vector<double> second_ratio(near_cells_ + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double far_sum = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      far_sum += far_weight_[p] * u.samples[(i + p) % n];
    }
    const double far_part = u.samples[i] * far_weight_total_ - far_sum;

    // h(z) = (u(x+z) + u(x-z) - 2 u(x)) / z^2 sampled at lattice knots,
    // extended to z = 0 by Richardson and to the split boundary linearly.
    for (std::size_t k = 1; k <= near_cells_; ++k) {
      const double fwd = u.samples[(i + k) % n];
      const double bwd = u.samples[(i + n - k) % n];
      const double z = static_cast<double>(k) * dx;
      second_ratio[k] = (fwd + bwd - 2.0 * u.samples[i]) / (z * z);
    }
    second_ratio[0] = (4.0 * second_ratio[1] - second_ratio[2]) / 3.0;

    double near_integral = 0.0;
    for (std::size_t k = 0; k <= near_cells_; ++k) {
      const std::size_t lo = k == near_cells_ ? k - 1 : k;
      const double slope = (second_ratio[lo + 1] - second_ratio[lo]) / dx;
      const double intercept = second_ratio[lo] - slope * static_cast<double>(lo) * dx;
      near_integral += intercept * near_m1_[k] + slope * near_m2_[k];
    }
    const double near_part = -c_alpha * near_integral;

    out.samples[i] = far_part + near_part;
  }
  return out;
}

Field frac_laplacian_singular(const Field& u, double alpha, double split_radius) {
  const double radius = split_radius > 0.0 ? split_radius : 4.0 * u.grid.dx();
  SingularFracLaplacian op(u.grid, alpha, radius);
  return op.apply(u);
}

}  // namespace fcd
