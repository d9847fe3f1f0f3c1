#include "fcd/nwave.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace fcd {

namespace {

void require_params(double mass, double q) {
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    throw std::invalid_argument("N-wave mass must be positive and finite");
  }
  if (!(q > 1.0) || !std::isfinite(q)) {
    throw std::invalid_argument("N-wave exponent q must be finite and greater than 1");
  }
}

void require_time(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw std::invalid_argument("N-wave time must be positive, got " + std::to_string(t));
  }
}

// Antiderivative of (x/t)^b on x >= 0, vanishing at 0.
double profile_primitive(double x, double t, double b) {
  if (x <= 0.0) return 0.0;
  return std::pow(x / t, b) * x / (b + 1.0);
}

}  // namespace

double NWave::support_radius(double t) const {
  require_params(mass, q);
  require_time(t);
  const double ratio = q / (q - 1.0);
  return std::pow(ratio, (q - 1.0) / q) * std::pow(mass, (q - 1.0) / q) * std::pow(t, 1.0 / q);
}

NWave make_nwave(double mass, double q) {
  require_params(mass, q);
  return NWave{mass, q};
}

double nwave_value(double t, double x, double mass, double q) {
  require_params(mass, q);
  require_time(t);
  const double radius = NWave{mass, q}.support_radius(t);
  if (!(x > 0.0) || !(x < radius)) return 0.0;
  return std::pow(x / t, 1.0 / (q - 1.0));
}

Field nwave_field(double t, double mass, double q, const GridSpec& grid) {
  require_params(mass, q);
  require_time(t);
  const double radius = NWave{mass, q}.support_radius(t);
  const double b = 1.0 / (q - 1.0);
  const double dx = grid.dx();

  Field out = make_field(grid, t);
  for (std::size_t i = 0; i < grid.n_points; ++i) {
    const double left = grid.node(i) - 0.5 * dx;
    const double right = left + dx;
    if (right <= 0.0 || left >= radius) continue;
    const double hi = std::min(right, radius);
    out.samples[i] = (profile_primitive(hi, t, b) - profile_primitive(left, t, b)) / dx;
  }
  return out;
}

double nwave_lp_norm(double t, double mass, double q, double p) {
  require_params(mass, q);
  require_time(t);
  if (!(p >= 1.0)) {
    throw std::invalid_argument("norm exponent p must be at least 1");
  }
  const double radius = NWave{mass, q}.support_radius(t);
  const double b = 1.0 / (q - 1.0);
  if (p == std::numeric_limits<double>::infinity()) {
    return std::pow(radius / t, b);
  }
  const double power = p * b + 1.0;
  return std::pow(std::pow(t, -p * b) * std::pow(radius, power) / power, 1.0 / p);
}

double nwave_oleinik_product(double t, double mass, double q) {
  require_params(mass, q);
  require_time(t);
  return 1.0;
}

}  // namespace fcd
