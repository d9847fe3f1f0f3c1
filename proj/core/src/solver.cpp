#include "fcd/solver.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fcd/spectral.hpp"

namespace fcd {

namespace {

void require_step_args(double dt, double speed_factor) {
  if (!(dt >= 0.0) || !std::isfinite(dt)) {
    throw std::invalid_argument("step length must be nonnegative and finite");
  }
  if (!(speed_factor > 0.0) || !std::isfinite(speed_factor)) {
    throw std::invalid_argument("speed factor must be positive and finite");
  }
}

void require_diffusion_order(double alpha) {
  if (!(alpha > 0.0) || !(alpha <= 2.0)) {
    throw std::invalid_argument("diffusion order alpha must lie in (0, 2]");
  }
}

std::vector<double> symbol_powers(const GridSpec& grid, double alpha) {
  SpectralField probe{grid, 0.0, {}};
  std::vector<double> a(grid.n_points);
  for (std::size_t k = 0; k < grid.n_points; ++k) {
    a[k] = std::pow(std::abs(probe.xi(k)), alpha);
  }
  return a;
}

Field apply_spectral_decay(const Field& u, const std::vector<double>& decay) {
  SpectralField hat = to_spectral(u);
  for (std::size_t k = 0; k < decay.size(); ++k) hat.coeffs[k] *= decay[k];
  return from_spectral(hat);
}

void check_initial_state(const Field& u0, const ModelParams& params) {
  check_finite(u0, "initial data");
  const double peak = lp_norm(u0, std::numeric_limits<double>::infinity());
  if (min_value(u0) < -1e-12 * peak) {
    throw std::invalid_argument("initial data must be nonnegative");
  }
  const double m = mass(u0);
  if (std::abs(m - params.mass) > 1e-10 * std::max(1.0, std::abs(params.mass))) {
    throw std::invalid_argument("initial data mass " + std::to_string(m) +
                                " does not match the declared mass " +
                                std::to_string(params.mass));
  }
}

// Event-driven time marching: uniform segments of length delta, truncated at
// record times and at end_time. Segment boundaries are computed as products
// so they never drift. advance(state, dt, segment) performs one sub-advance
// entirely inside the given segment.
std::vector<Field> march(const Field& u0, const SolverConfig& config,
                         const std::function<Field(const Field&, double, long long)>& advance) {
  const double horizon = config.end_time;
  const auto& stops = config.record_times;
  std::vector<Field> snapshots;
  std::size_t ridx = 0;
  Field cur = u0;
  cur.time = 0.0;

  const auto emit_due = [&](double now) {
    while (ridx < stops.size() && stops[ridx] <= now) {
      snapshots.push_back(cur);
      snapshots.back().time = stops[ridx];
      ++ridx;
    }
  };
  emit_due(0.0);

  for (long long segment = 0;; ++segment) {
    const double seg_start = static_cast<double>(segment) * config.delta;
    if (seg_start >= horizon) break;
    const double seg_end = std::min(static_cast<double>(segment + 1) * config.delta, horizon);
    double now = seg_start;
    while (now < seg_end) {
      double target = seg_end;
      if (ridx < stops.size() && stops[ridx] > now && stops[ridx] < seg_end) {
        target = stops[ridx];
      }
      cur = advance(cur, target - now, segment);
      now = target;
      cur.time = now;
      if (target < seg_end) emit_due(now);
    }
    emit_due(seg_end);
    if (seg_end >= horizon) break;
  }
  emit_due(horizon);
  return snapshots;
}

Field flux_field(const Field& u, double q) {
  Field out = make_field(u.grid, u.time);
  for (std::size_t i = 0; i < u.samples.size(); ++i) out.samples[i] = flux(u.samples[i], q);
  return out;
}

// Exact integrals of e^{-a (s - sigma)} {1, sigma} over [0, s]; series
// branches keep the cancellation-prone small a s regime accurate.
double phi1(double a, double s) {
  const double z = a * s;
  if (z < 1e-3) return s * (1.0 - z / 2.0 + z * z / 6.0 - z * z * z / 24.0);
  return -std::expm1(-z) / a;
}

double phi2(double a, double s) {
  const double z = a * s;
  if (z < 1e-3) return s * s * (0.5 - z / 3.0 + z * z / 8.0 - z * z * z / 30.0);
  return (-std::expm1(-z) - z * std::exp(-z)) / (a * a);
}

}  // namespace

void validate_solver_config(const SolverConfig& config) {
  if (!(config.end_time > 0.0) || !std::isfinite(config.end_time)) {
    throw std::invalid_argument("end time must be positive and finite");
  }
  if (!(config.delta > 0.0) || !(config.delta <= config.end_time)) {
    throw std::invalid_argument("delta must satisfy 0 < delta <= end_time");
  }
  if (!(config.cfl > 0.0) || !(config.cfl <= 1.0)) {
    throw std::invalid_argument("cfl must lie in (0, 1]");
  }
  if (!(config.picard_tol > 0.0) || config.picard_max_iters < 1) {
    throw std::invalid_argument("picard_tol must be positive and picard_max_iters at least 1");
  }
  for (std::size_t i = 0; i < config.record_times.size(); ++i) {
    const double t = config.record_times[i];
    if (!(t >= 0.0) || !(t <= config.end_time)) {
      throw std::invalid_argument("record time " + std::to_string(t) +
                                  " lies outside [0, end_time]");
    }
    if (i > 0 && t < config.record_times[i - 1]) {
      throw std::invalid_argument("record times must be sorted ascending");
    }
  }
}

Field diffusion_step(const Field& u, double alpha, double dt, double speed_factor) {
  require_diffusion_order(alpha);
  require_step_args(dt, speed_factor);
  const std::vector<double> a = symbol_powers(u.grid, alpha);
  std::vector<double> decay(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) decay[k] = std::exp(-speed_factor * dt * a[k]);
  Field out = apply_spectral_decay(u, decay);
  out.time = u.time + dt;
  return out;
}

Field convection_step(const Field& u, double q, double dt, double speed_factor, double cfl,
                      FluxScheme flux_scheme) {
  require_step_args(dt, speed_factor);
  if (!(cfl > 0.0) || !(cfl <= 1.0)) {
    throw std::invalid_argument("cfl must lie in (0, 1]");
  }
  check_finite(u, "convection step input");

  const std::size_t n = u.grid.n_points;
  const double dx = u.grid.dx();
  Field out = u;
  out.time = u.time + dt;
  std::vector<double> flux_at(n);
  std::vector<double> interface(n);

  double remaining = dt;
  while (remaining > 0.0) {
    double peak = 0.0;
    for (double v : out.samples) peak = std::max(peak, std::abs(v));
    const double speed = peak > 0.0 ? flux_derivative(peak, q) : 0.0;
    const double dt_sub =
        speed > 0.0 ? std::min(remaining, cfl * dx / (speed_factor * speed)) : remaining;

    for (std::size_t i = 0; i < n; ++i) flux_at[i] = flux(out.samples[i], q);
    if (flux_scheme == FluxScheme::godunov) {
      // f is monotone, so the Riemann value is an endpoint extremum.
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = (i + 1) % n;
        interface[i] = out.samples[i] <= out.samples[j] ? std::min(flux_at[i], flux_at[j])
                                                        : std::max(flux_at[i], flux_at[j]);
      }
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = (i + 1) % n;
        const double local_speed = std::max(flux_derivative(out.samples[i], q),
                                            flux_derivative(out.samples[j], q));
        interface[i] = 0.5 * (flux_at[i] + flux_at[j]) -
                       0.5 * local_speed * (out.samples[j] - out.samples[i]);
      }
    }
    const double ratio = speed_factor * dt_sub / dx;
    std::vector<double> next(n);
    for (std::size_t i = 0; i < n; ++i) {
      next[i] = out.samples[i] - ratio * (interface[i] - interface[(i + n - 1) % n]);
    }
    out.samples.swap(next);
    remaining -= dt_sub;
  }
  return out;
}

std::vector<Field> split_solve(const Field& u0, const ModelParams& params,
                               const SolverConfig& config) {
  validate_model_params(params);
  validate_solver_config(config);
  check_initial_state(u0, params);

  const std::vector<double> a = symbol_powers(u0.grid, params.alpha);
  std::map<double, std::vector<double>> decay_cache;
  const auto diffuse = [&](const Field& f, double dt) {
    auto it = decay_cache.find(dt);
    if (it == decay_cache.end()) {
      std::vector<double> decay(a.size());
      for (std::size_t k = 0; k < a.size(); ++k) decay[k] = std::exp(-2.0 * dt * a[k]);
      it = decay_cache.emplace(dt, std::move(decay)).first;
    }
    return apply_spectral_decay(f, it->second);
  };

  return march(u0, config, [&](const Field& f, double dt, long long segment) {
    if (segment % 2 == 0) return diffuse(f, dt);
    return convection_step(f, params.q, dt, 2.0, config.cfl, config.flux_scheme);
  });
}

std::vector<Field> duhamel_solve(const Field& u0, const ModelParams& params,
                                 const SolverConfig& config) {
  validate_model_params(params);
  validate_solver_config(config);
  check_initial_state(u0, params);

  const GridSpec grid = u0.grid;
  const std::size_t n = grid.n_points;
  const std::vector<double> a = symbol_powers(grid, params.alpha);
  SpectralField probe{grid, 0.0, {}};
  std::vector<std::complex<double>> deriv(n);
  for (std::size_t k = 0; k < n; ++k) {
    // The unpaired highest mode cannot carry an odd-symbol multiply.
    const bool nyquist = probe.mode(k) == -static_cast<long long>(n) / 2;
    deriv[k] = nyquist ? 0.0 : std::complex<double>(0.0, probe.xi(k));
  }

  const auto macro_step = [&](const Field& state, double h) {
    const double offset = 0.5 / std::sqrt(3.0);
    const double sigma1 = h * (0.5 - offset);
    const double sigma2 = h * (0.5 + offset);

    SpectralField hat0 = to_spectral(state);
    std::vector<double> e1(n), e2(n), eh(n);
    std::vector<double> p11(n), p21(n), p12(n), p22(n), p1h(n), p2h(n);
    for (std::size_t k = 0; k < n; ++k) {
      e1[k] = std::exp(-a[k] * sigma1);
      e2[k] = std::exp(-a[k] * sigma2);
      eh[k] = std::exp(-a[k] * h);
      p11[k] = phi1(a[k], sigma1);
      p21[k] = phi2(a[k], sigma1);
      p12[k] = phi1(a[k], sigma2);
      p22[k] = phi2(a[k], sigma2);
      p1h[k] = phi1(a[k], h);
      p2h[k] = phi2(a[k], h);
    }

    SpectralField node1 = hat0;
    SpectralField node2 = hat0;
    for (std::size_t k = 0; k < n; ++k) {
      node1.coeffs[k] = hat0.coeffs[k] * e1[k];
      node2.coeffs[k] = hat0.coeffs[k] * e2[k];
    }
    Field v1 = from_spectral(node1);
    Field v2 = from_spectral(node2);

    SpectralField f1 = to_spectral(flux_field(v1, params.q));
    SpectralField f2 = to_spectral(flux_field(v2, params.q));
    double residual = std::numeric_limits<double>::infinity();
    for (int iter = 0; iter < config.picard_max_iters; ++iter) {
      for (std::size_t k = 0; k < n; ++k) {
        const std::complex<double> slope = (f2.coeffs[k] - f1.coeffs[k]) / (sigma2 - sigma1);
        const std::complex<double> base = f1.coeffs[k] - slope * sigma1;
        node1.coeffs[k] = hat0.coeffs[k] * e1[k] -
                          deriv[k] * ((base + slope * sigma1) * p11[k] - slope * p21[k]);
        node2.coeffs[k] = hat0.coeffs[k] * e2[k] -
                          deriv[k] * ((base + slope * sigma2) * p12[k] - slope * p22[k]);
      }
      Field v1_next = from_spectral(node1);
      Field v2_next = from_spectral(node2);
      residual = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        residual = std::max(residual, std::abs(v1_next.samples[i] - v1.samples[i]));
        residual = std::max(residual, std::abs(v2_next.samples[i] - v2.samples[i]));
      }
      v1 = std::move(v1_next);
      v2 = std::move(v2_next);
      if (residual < config.picard_tol) break;
      f1 = to_spectral(flux_field(v1, params.q));
      f2 = to_spectral(flux_field(v2, params.q));
    }
    if (!(residual < config.picard_tol)) {
      throw std::runtime_error("Picard iteration did not converge: residual " +
                               std::to_string(residual) + " after " +
                               std::to_string(config.picard_max_iters) +
                               " iterations; reduce the macro step delta");
    }

    f1 = to_spectral(flux_field(v1, params.q));
    f2 = to_spectral(flux_field(v2, params.q));
    SpectralField result = hat0;
    for (std::size_t k = 0; k < n; ++k) {
      const std::complex<double> slope = (f2.coeffs[k] - f1.coeffs[k]) / (sigma2 - sigma1);
      const std::complex<double> base = f1.coeffs[k] - slope * sigma1;
      result.coeffs[k] = hat0.coeffs[k] * eh[k] -
                         deriv[k] * ((base + slope * h) * p1h[k] - slope * p2h[k]);
    }
    return from_spectral(result);
  };

  return march(u0, config,
               [&](const Field& f, double dt, long long) { return macro_step(f, dt); });
}

std::vector<Field> solve(const Field& u0, const ModelParams& params, const SolverConfig& config) {
  return config.scheme == Scheme::splitting ? split_solve(u0, params, config)
                                            : duhamel_solve(u0, params, config);
}

double epsilon_shift_test(const Field& u0, double eps, const ModelParams& params,
                          const SolverConfig& config) {
  if (!(eps >= 0.0) || !std::isfinite(eps)) {
    throw std::invalid_argument("epsilon must be nonnegative and finite");
  }
  SolverConfig run_config = config;
  if (run_config.record_times.empty()) run_config.record_times = {config.end_time};

  Field shifted = u0;
  for (auto& s : shifted.samples) s += eps;
  ModelParams shifted_params = params;
  shifted_params.mass = mass(shifted);

  const std::vector<Field> base = solve(u0, params, run_config);
  const std::vector<Field> moved = solve(shifted, shifted_params, run_config);
  double worst = 0.0;
  for (std::size_t s = 0; s < base.size(); ++s) {
    for (std::size_t i = 0; i < base[s].samples.size(); ++i) {
      worst = std::max(worst, std::abs(moved[s].samples[i] - base[s].samples[i]));
    }
  }
  return worst;
}

}  // namespace fcd
