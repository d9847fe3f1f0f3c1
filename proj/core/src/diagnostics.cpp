#include "fcd/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "fcd/operators.hpp"
#include "fcd/spectral.hpp"

namespace fcd {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double positive_power(double value, double exponent) {
  return std::pow(std::max(value, 0.0), exponent);
}

// Bump factor psi(s) = exp(1 - 1/(1-s^2)) and its derivative; both vanish
// identically outside |s| < 1.
double bump(double s) {
  if (std::abs(s) >= 1.0) return 0.0;
  const double denom = 1.0 - s * s;
  return std::exp(1.0 - 1.0 / denom);
}

double bump_deriv(double s) {
  if (std::abs(s) >= 1.0) return 0.0;
  const double denom = 1.0 - s * s;
  return bump(s) * (-2.0 * s / (denom * denom));
}

int sign_of(double value) { return (value > 0.0) - (value < 0.0); }

}  // namespace

DiagnosticsRecord diagnose(const Field& u, const ModelParams& params, double r_local,
                           double r_tail) {
  check_finite(u, "diagnose");
  validate_model_params(params);
  if (!(std::isfinite(r_local) && r_local > 0.0) || !(std::isfinite(r_tail) && r_tail > 0.0)) {
    throw std::invalid_argument("diagnostics radii must be positive and finite");
  }

  const GridSpec& grid = u.grid;
  const std::size_t n = grid.n_points;
  const double dx = grid.dx();

  DiagnosticsRecord record;
  record.time = u.time;
  record.dx = dx;
  record.mass = mass(u);
  for (double p : {1.0, 2.0, params.q, 2.0 * params.q, kInf}) {
    record.lp_norms[p] = lp_norm(u, p);
  }
  record.min_value = min_value(u);

  double sup_oleinik = 0.0;
  double sup_slope = -kInf;
  double variation = 0.0;
  double tail = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t next = (i + 1 == n) ? 0 : i + 1;
    const double du = u.samples[next] - u.samples[i];
    const double dw = positive_power(u.samples[next], params.q - 1.0) -
                      positive_power(u.samples[i], params.q - 1.0);
    sup_oleinik = std::max(sup_oleinik, dw / dx);
    sup_slope = std::max(sup_slope, du / dx);
    if (std::abs(grid.node(i)) <= r_local) variation += std::abs(du);
    if (std::abs(grid.node(i)) > r_tail) tail += u.samples[i] * dx;
  }
  record.oleinik_product = u.time * sup_oleinik;
  record.max_slope = sup_slope;
  record.w11_local = variation;
  record.tail_mass = tail;

  SpectralField hat = to_spectral(u);
  double energy = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    energy += std::pow(std::abs(hat.xi(k)), params.alpha) * std::norm(hat.coeffs[k]);
  }
  record.energy_density = 2.0 * grid.half_width * energy;
  return record;
}

double lp_decay_constant(double q, double m, double p) {
  if (!(std::isfinite(q) && q > 1.0) || !(std::isfinite(m) && m > 0.0)) {
    throw std::invalid_argument("decay constant requires q > 1 and positive mass");
  }
  if (!(p >= 1.0)) throw std::invalid_argument("decay constant requires p >= 1");
  const double ratio = q / (q - 1.0);
  if (p == kInf) return std::pow(ratio * m, 1.0 / q);
  const double corner = (p - 1.0) / (p * q);
  return std::pow(ratio, corner) * std::pow(m, corner + 1.0 / p);
}

BoundsReport assert_bounds(const DiagnosticsRecord& record, const ModelParams& params,
                           double slack) {
  if (!(std::isfinite(slack) && slack >= 0.0)) {
    throw std::invalid_argument("slack must be nonnegative and finite");
  }
  validate_model_params(params);

  BoundsReport report;
  auto add = [&report](std::string name, double observed, double allowed, bool pass) {
    report.checks.push_back({std::move(name), observed, allowed, pass});
    report.all_pass = report.all_pass && pass;
  };

  const double drift = std::abs(record.mass - params.mass) / params.mass;
  add("mass drift", drift, 1e-8, drift <= 1e-8);

  const double t = record.time;
  const double decay_rate = 1.0 / params.q;
  for (const auto& [p, norm] : record.lp_norms) {
    const double exponent = (p == kInf) ? decay_rate : decay_rate * (1.0 - 1.0 / p);
    const double allowed =
        (1.0 + slack) * lp_decay_constant(params.q, params.mass, p) * std::pow(t, -exponent);
    std::ostringstream name;
    name << "L^" << p << " decay";
    add(name.str(), norm, allowed, norm <= allowed);
  }

  const double oleinik_allowed = 1.0 + slack + 2.0 * record.dx / t;
  add("oleinik", record.oleinik_product, oleinik_allowed,
      record.oleinik_product <= oleinik_allowed);

  const double floor = -slack * record.lp_norms.at(kInf);
  add("min value", record.min_value, floor, record.min_value >= floor);
  return report;
}

double kruzhkov_residual(const std::vector<Field>& snapshots, double q, double k,
                         const KruzhkovBump& bump_params) {
  if (!(std::isfinite(q) && q > 1.0)) throw std::invalid_argument("q must exceed 1");
  if (!std::isfinite(k)) throw std::invalid_argument("entropy level k must be finite");
  if (!(std::isfinite(bump_params.time_radius) && bump_params.time_radius > 0.0) ||
      !(std::isfinite(bump_params.x_radius) && bump_params.x_radius > 0.0)) {
    throw std::invalid_argument("bump radii must be positive and finite");
  }
  if (snapshots.size() < 3) {
    throw std::invalid_argument("entropy pairing needs at least three snapshots");
  }
  const GridSpec& grid = snapshots.front().grid;
  for (const auto& s : snapshots) {
    if (s.grid.n_points != grid.n_points || s.grid.half_width != grid.half_width) {
      throw std::invalid_argument("snapshots must share one grid");
    }
  }
  for (std::size_t j = 1; j < snapshots.size(); ++j) {
    if (!(snapshots[j].time > snapshots[j - 1].time)) {
      throw std::invalid_argument("snapshot times must be strictly increasing");
    }
  }
  const double t_lo = bump_params.time_center - bump_params.time_radius;
  const double t_hi = bump_params.time_center + bump_params.time_radius;
  if (t_lo < snapshots.front().time || t_hi > snapshots.back().time) {
    std::ostringstream msg;
    msg << "bump time support [" << t_lo << ", " << t_hi << "] exceeds the snapshot window ["
        << snapshots.front().time << ", " << snapshots.back().time << "]";
    throw std::invalid_argument(msg.str());
  }
  if (std::abs(bump_params.x_center) + bump_params.x_radius > grid.half_width) {
    throw std::invalid_argument("bump spatial support exceeds the domain");
  }

  const double dx = grid.dx();
  const double fk = flux(k, q);
  std::vector<double> slices(snapshots.size(), 0.0);
  for (std::size_t j = 0; j < snapshots.size(); ++j) {
    const double st = (snapshots[j].time - bump_params.time_center) / bump_params.time_radius;
    if (std::abs(st) >= 1.0) continue;
    const double psi_t = bump(st);
    const double dpsi_t = bump_deriv(st) / bump_params.time_radius;
    double total = 0.0;
    for (std::size_t i = 0; i < grid.n_points; ++i) {
      const double sx = (grid.node(i) - bump_params.x_center) / bump_params.x_radius;
      if (std::abs(sx) >= 1.0) continue;
      const double w = snapshots[j].samples[i];
      const double phi_t = dpsi_t * bump(sx);
      const double phi_x = psi_t * bump_deriv(sx) / bump_params.x_radius;
      total += std::abs(w - k) * phi_t + sign_of(w - k) * (flux(w, q) - fk) * phi_x;
    }
    slices[j] = total * dx;
  }

  double residual = 0.0;
  for (std::size_t j = 1; j < snapshots.size(); ++j) {
    residual += 0.5 * (slices[j] + slices[j - 1]) * (snapshots[j].time - snapshots[j - 1].time);
  }
  return residual;
}

}  // namespace fcd
