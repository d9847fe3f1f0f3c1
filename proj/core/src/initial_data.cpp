#include "fcd/initial_data.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fcd/nwave.hpp"

namespace fcd {

Field box_data(const GridSpec& grid, double mass, double half_extent) {
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    throw std::invalid_argument("box mass must be positive and finite");
  }
  if (!(half_extent > 0.0) || !(half_extent <= 0.5 * grid.half_width)) {
    throw std::invalid_argument("box half extent must lie in (0, L/2]");
  }
  const double dx = grid.dx();
  const double height = mass / (2.0 * half_extent);
  Field out = make_field(grid, 0.0);
  for (std::size_t i = 0; i < grid.n_points; ++i) {
    const double left = grid.node(i) - 0.5 * dx;
    const double overlap =
        std::max(0.0, std::min(left + dx, half_extent) - std::max(left, -half_extent));
    out.samples[i] = height * overlap / dx;
  }
  return out;
}

Field bump_data(const GridSpec& grid, double mass, double width) {
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    throw std::invalid_argument("bump mass must be positive and finite");
  }
  if (!(width > 0.0) || !(width <= 0.5 * grid.half_width)) {
    throw std::invalid_argument("bump width must lie in (0, L/2]");
  }
  Field out = make_field(grid, 0.0);
  for (std::size_t i = 0; i < grid.n_points; ++i) {
    const double r = grid.node(i) / width;
    out.samples[i] = std::exp(-r * r);
  }
  const double raw_mass = fcd::mass(out);
  for (auto& s : out.samples) s *= mass / raw_mass;
  return out;
}

Field nwave_data(const GridSpec& grid, double mass, double q, double t0) {
  return nwave_field(t0, mass, q, grid);
}

}  // namespace fcd
