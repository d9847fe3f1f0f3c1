#include "fcd/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "fcd/interp.hpp"
#include "fcd/nwave.hpp"

namespace fcd {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double scaling_exponent(double q, double p) {
  return (p == kInf) ? 1.0 / q : (1.0 - 1.0 / p) / q;
}

}  // namespace

Field rescale(const Field& u, double lambda, const ModelParams& params) {
  check_finite(u, "rescale");
  validate_model_params(params);
  if (!(std::isfinite(lambda) && lambda > 0.0)) {
    throw std::invalid_argument("rescale: lambda must be positive and finite");
  }

  const GridSpec& grid = u.grid;
  const double dx = grid.dx();

  // Zooming out (lambda < 1) maps content near the edges beyond the domain.
  double lost = 0.0;
  for (std::size_t i = 0; i < grid.n_points; ++i) {
    if (std::abs(grid.node(i)) >= lambda * grid.half_width) lost += std::abs(u.samples[i]) * dx;
  }
  if (lost > 1e-6 * std::max(1.0, std::abs(mass(u)))) {
    std::ostringstream msg;
    msg << "rescale: lambda = " << lambda << " would truncate mass " << lost
        << " at the domain edge";
    throw std::invalid_argument(msg.str());
  }

  std::vector<double> nodes(grid.n_points);
  for (std::size_t i = 0; i < grid.n_points; ++i) nodes[i] = grid.node(i);
  PchipInterpolant interp(std::move(nodes), u.samples);

  Field out = make_field(grid, u.time / std::pow(lambda, params.q));
  for (std::size_t i = 0; i < grid.n_points; ++i) {
    const double y = lambda * grid.node(i);
    out.samples[i] = (y < interp.front() || y > interp.back()) ? 0.0 : lambda * interp(y);
  }
  return out;
}

double scaled_error(const Field& u, const ModelParams& params, double p) {
  check_finite(u, "scaled_error");
  validate_model_params(params);
  if (!(u.time > 0.0)) throw std::invalid_argument("scaled_error: field time must be positive");

  Field profile = nwave_field(u.time, params.mass, params.q, u.grid);
  for (std::size_t i = 0; i < profile.samples.size(); ++i) {
    profile.samples[i] = u.samples[i] - profile.samples[i];
  }
  return std::pow(u.time, scaling_exponent(params.q, p)) * lp_norm(profile, p);
}

ConvergenceStudy run_convergence_study(const Field& u0, const ModelParams& params,
                                       const SolverConfig& base_config,
                                       const std::vector<double>& times,
                                       const std::vector<double>& p_values,
                                       double tail_budget) {
  if (times.empty()) throw std::invalid_argument("convergence study needs at least one time");
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!(std::isfinite(times[i]) && times[i] > 0.0)) {
      throw std::invalid_argument("study times must be positive and finite");
    }
    if (i > 0 && !(times[i] > times[i - 1])) {
      throw std::invalid_argument("study times must be strictly increasing");
    }
  }
  if (p_values.empty()) throw std::invalid_argument("convergence study needs at least one p");
  for (double p : p_values) {
    if (!(p >= 1.0)) throw std::invalid_argument("study p values must be >= 1 or infinity");
  }
  if (!(std::isfinite(tail_budget) && tail_budget > 0.0)) {
    throw std::invalid_argument("tail budget must be positive and finite");
  }

  SolverConfig config = base_config;
  config.record_times = times;
  config.end_time = times.back();
  std::vector<Field> snaps = solve(u0, params, config);

  ConvergenceStudy study;
  study.params = params;
  study.times = times;
  study.p_values = p_values;

  const GridSpec& grid = u0.grid;
  const double r_tail = grid.half_width / 2.0;
  const double dx = grid.dx();
  for (const Field& snap : snaps) {
    double tail = 0.0;
    for (std::size_t i = 0; i < grid.n_points; ++i) {
      if (std::abs(grid.node(i)) > r_tail) tail += snap.samples[i] * dx;
    }
    if (tail > tail_budget * params.mass) {
      const double ratio = tail / (tail_budget * params.mass);
      const double needed = grid.half_width * std::pow(ratio, 1.0 / params.alpha);
      std::ostringstream msg;
      msg << "tail mass " << tail << " at t = " << snap.time << " exceeds the budget "
          << tail_budget * params.mass << "; increase the half width to at least ~" << needed;
      throw std::runtime_error(msg.str());
    }
    study.tail_history.push_back(tail);
    study.mass_history.push_back(mass(snap));

    std::vector<double> row;
    for (double p : p_values) row.push_back(scaled_error(snap, params, p));
    study.errors.push_back(std::move(row));
  }

  // Log-log least-squares trend per p; a single time yields no slope.
  for (std::size_t j = 0; j < p_values.size(); ++j) {
    if (times.size() < 2) {
      study.trend_slopes.push_back(0.0);
      continue;
    }
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < times.size(); ++i) {
      const double lx = std::log(times[i]);
      const double ly = std::log(std::max(study.errors[i][j], 1e-300));
      sx += lx;
      sy += ly;
      sxx += lx * lx;
      sxy += lx * ly;
    }
    const double n = static_cast<double>(times.size());
    study.trend_slopes.push_back((n * sxy - sx * sy) / (n * sxx - sx * sx));
  }
  return study;
}

}  // namespace fcd
