#ifndef FCD_INITIAL_DATA_HPP
#define FCD_INITIAL_DATA_HPP

#include "fcd/grid.hpp"

namespace fcd {

// Box of height mass/(2a) on [-a, a], sampled as exact cell averages so the
// discrete mass equals the requested mass to rounding.
Field box_data(const GridSpec& grid, double mass, double half_extent);

// Gaussian bump exp(-(x/width)^2), rescaled so the discrete mass matches.
Field bump_data(const GridSpec& grid, double mass, double width);

// The N-wave at time t0, for exactness and fixed-point experiments.
Field nwave_data(const GridSpec& grid, double mass, double q, double t0);

}  // namespace fcd

#endif
