#ifndef FCD_GRID_HPP
#define FCD_GRID_HPP

#include <cstddef>
#include <vector>

namespace fcd {

// Uniform periodic grid on [-half_width, half_width). Node i sits at
// -half_width + i * dx, so the right endpoint is excluded.
struct GridSpec {
  double half_width = 0.0;
  std::size_t n_points = 0;

  double dx() const { return 2.0 * half_width / static_cast<double>(n_points); }
  double node(std::size_t i) const {
    return -half_width + static_cast<double>(i) * dx();
  }
  bool operator==(const GridSpec&) const = default;
};

// Validates and builds a grid. n_points must be a power of two, at least 16,
// so the transform layer never needs a mixed-radix path.
GridSpec make_grid(double half_width, std::size_t n_points);

// Real-valued samples on a grid at a fixed time.
struct Field {
  GridSpec grid;
  double time = 0.0;
  std::vector<double> samples;
};

Field make_field(const GridSpec& grid, double time = 0.0);

// Grid quadrature: sum of samples times dx.
double mass(const Field& u);

// Discrete L^p norm, (sum |u_i|^p dx)^(1/p); p = infinity gives max |u_i|.
double lp_norm(const Field& u, double p);

double min_value(const Field& u);
double max_value(const Field& u);

// Throws if sizes disagree with the grid or any sample is NaN/Inf.
void check_finite(const Field& u, const char* context);

}  // namespace fcd

#endif
