#include "fcd/interp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fcd {

namespace {

double sign(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

// Integrals of the cubic Hermite basis from 0 to t.
double ih00(double t) { return ((0.5 * t - 1.0) * t * t * t) + t; }
double ih10(double t) { return ((0.25 * t - 2.0 / 3.0) * t + 0.5) * t * t; }
double ih01(double t) { return (1.0 - 0.5 * t) * t * t * t; }
double ih11(double t) { return (0.25 * t - 1.0 / 3.0) * t * t * t; }

}  // namespace

PchipInterpolant::PchipInterpolant(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
  const std::size_t n = x_.size();
  if (n < 2 || y_.size() != n) {
    throw std::invalid_argument("PchipInterpolant: need >= 2 nodes and matching values");
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!(x_[i] < x_[i + 1])) {
      throw std::invalid_argument("PchipInterpolant: nodes must be strictly increasing");
    }
  }

  std::vector<double> h(n - 1), d(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    h[i] = x_[i + 1] - x_[i];
    d[i] = (y_[i + 1] - y_[i]) / h[i];
  }

  slope_.assign(n, 0.0);
  if (n == 2) {
    slope_[0] = slope_[1] = d[0];
    return;
  }
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (d[i - 1] * d[i] <= 0.0) {
      slope_[i] = 0.0;
    } else {
      const double w1 = 2.0 * h[i] + h[i - 1];
      const double w2 = h[i] + 2.0 * h[i - 1];
      slope_[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
    }
  }
  // One-sided ends with the usual monotonicity clamps.
  auto end_slope = [](double h0, double h1, double d0, double d1) {
    double m = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
    if (sign(m) != sign(d0)) {
      m = 0.0;
    } else if (sign(d0) != sign(d1) && std::abs(m) > 3.0 * std::abs(d0)) {
      m = 3.0 * d0;
    }
    return m;
  };
  slope_[0] = end_slope(h[0], h[1], d[0], d[1]);
  slope_[n - 1] = end_slope(h[n - 2], h[n - 3], d[n - 2], d[n - 3]);
}

double PchipInterpolant::operator()(double x) const {
  if (!(x >= x_.front() && x <= x_.back())) {
    throw std::domain_error("PchipInterpolant: evaluation outside node range");
  }
  const auto it = std::upper_bound(x_.begin(), x_.end(), x);
  std::size_t i = static_cast<std::size_t>(it - x_.begin());
  i = std::min(std::max<std::size_t>(i, 1), x_.size() - 1) - 1;
  const double h = x_[i + 1] - x_[i];
  const double t = (x - x_[i]) / h;
  const double h00 = (1.0 + 2.0 * t) * (1.0 - t) * (1.0 - t);
  const double h10 = t * (1.0 - t) * (1.0 - t);
  const double h01 = t * t * (3.0 - 2.0 * t);
  const double h11 = t * t * (t - 1.0);
  return h00 * y_[i] + h * h10 * slope_[i] + h01 * y_[i + 1] + h * h11 * slope_[i + 1];
}

double PchipInterpolant::piece_integral(std::size_t i, double a, double b) const {
  const double h = x_[i + 1] - x_[i];
  const double ta = (a - x_[i]) / h;
  const double tb = (b - x_[i]) / h;
  return h * ((ih00(tb) - ih00(ta)) * y_[i] + (ih01(tb) - ih01(ta)) * y_[i + 1] +
              h * ((ih10(tb) - ih10(ta)) * slope_[i] + (ih11(tb) - ih11(ta)) * slope_[i + 1]));
}

double PchipInterpolant::integrate(double a, double b) const {
  if (a > b) return -integrate(b, a);
  if (!(a >= x_.front() && b <= x_.back())) {
    throw std::domain_error("PchipInterpolant: integration range outside nodes");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < x_.size(); ++i) {
    const double lo = std::max(a, x_[i]);
    const double hi = std::min(b, x_[i + 1]);
    if (lo < hi) acc += piece_integral(i, lo, hi);
  }
  return acc;
}

}  // namespace fcd
