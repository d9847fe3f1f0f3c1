#include "fcd/grid.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace fcd {

GridSpec make_grid(double half_width, std::size_t n_points) {
  if (!(half_width > 0.0) || !std::isfinite(half_width)) {
    throw std::invalid_argument("make_grid: half_width must be positive and finite, got " +
                                std::to_string(half_width));
  }
  if (n_points < 16 || !std::has_single_bit(n_points)) {
    throw std::invalid_argument("make_grid: n_points must be a power of two >= 16, got " +
                                std::to_string(n_points));
  }
  return GridSpec{half_width, n_points};
}

Field make_field(const GridSpec& grid, double time) {
  Field u;
  u.grid = grid;
  u.time = time;
  u.samples.assign(grid.n_points, 0.0);
  return u;
}

double mass(const Field& u) {
  double acc = 0.0;
  for (double v : u.samples) acc += v;
  return acc * u.grid.dx();
}

double lp_norm(const Field& u, double p) {
  if (std::isinf(p)) {
    double m = 0.0;
    for (double v : u.samples) m = std::max(m, std::abs(v));
    return m;
  }
  if (!(p >= 1.0)) {
    throw std::invalid_argument("lp_norm: p must be >= 1 or infinity");
  }
  double acc = 0.0;
  if (p == 1.0) {
    for (double v : u.samples) acc += std::abs(v);
  } else if (p == 2.0) {
    for (double v : u.samples) acc += v * v;
  } else {
    for (double v : u.samples) acc += std::pow(std::abs(v), p);
  }
  return std::pow(acc * u.grid.dx(), 1.0 / p);
}

double min_value(const Field& u) {
  double m = std::numeric_limits<double>::infinity();
  for (double v : u.samples) m = std::min(m, v);
  return m;
}

double max_value(const Field& u) {
  double m = -std::numeric_limits<double>::infinity();
  for (double v : u.samples) m = std::max(m, v);
  return m;
}

void check_finite(const Field& u, const char* context) {
  if (u.samples.size() != u.grid.n_points) {
    throw std::runtime_error(std::string(context) + ": sample count " +
                             std::to_string(u.samples.size()) + " does not match grid n_points " +
                             std::to_string(u.grid.n_points));
  }
  for (std::size_t i = 0; i < u.samples.size(); ++i) {
    if (!std::isfinite(u.samples[i])) {
      throw std::runtime_error(std::string(context) + ": non-finite sample at index " +
                               std::to_string(i));
    }
  }
}

}  // namespace fcd
