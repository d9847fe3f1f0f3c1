#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "fcd/grid.hpp"
#include "fcd/operators.hpp"

namespace {

constexpr double kPi = std::numbers::pi;

struct Mode {
  int k = 0;
  double amplitude = 0.0;
  bool sine = false;
};

// Field built from a few Fourier modes together with the exact image of
// (-Delta)^(alpha/2), which is diagonal on modes.
void trig_field(const fcd::GridSpec& grid, const std::vector<Mode>& modes, double alpha,
                fcd::Field& u, fcd::Field& exact) {
  u = fcd::make_field(grid, 0.0);
  exact = fcd::make_field(grid, 0.0);
  for (std::size_t i = 0; i < grid.n_points; ++i) {
    const double x = grid.node(i);
    for (const auto& m : modes) {
      const double xi = m.k * kPi / grid.half_width;
      const double base = m.sine ? std::sin(xi * x) : std::cos(xi * x);
      u.samples[i] += m.amplitude * base;
      exact.samples[i] += m.amplitude * std::pow(xi, alpha) * base;
    }
  }
}

double max_abs_diff(const fcd::Field& a, const fcd::Field& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    worst = std::max(worst, std::abs(a.samples[i] - b.samples[i]));
  }
  return worst;
}

double max_abs(const fcd::Field& a) {
  double worst = 0.0;
  for (double v : a.samples) worst = std::max(worst, std::abs(v));
  return worst;
}

}  // namespace

TEST_SUITE("operators") {

TEST_CASE("flux closed forms") {
  CHECK(fcd::flux(1.0, 2.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(fcd::flux(-1.0, 2.0) == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(fcd::flux(2.0, 3.0) == doctest::Approx(8.0 / 3.0).epsilon(1e-14));
  CHECK(fcd::flux(-2.0, 3.0) == doctest::Approx(-8.0 / 3.0).epsilon(1e-14));
  CHECK(fcd::flux(0.0, 1.5) == 0.0);
  CHECK(fcd::flux_derivative(2.0, 3.0) == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(fcd::flux_derivative(-2.0, 3.0) == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(fcd::flux_derivative(0.0, 2.0) == 0.0);
  CHECK(fcd::flux_derivative(0.5, 1.2) == doctest::Approx(0.870550563296124).epsilon(1e-13));
}

TEST_CASE("flux is nondecreasing in u") {
  for (double q : {1.2, 2.0, 3.0}) {
    double prev = fcd::flux(-3.0, q);
    for (int i = 1; i <= 60; ++i) {
      const double u = -3.0 + 0.1 * i;
      const double cur = fcd::flux(u, q);
      CHECK(cur >= prev);
      prev = cur;
    }
  }
}

TEST_CASE("Godunov flux upwinds a monotone flux") {
  fcd::FluxParams params{2.0, fcd::FluxScheme::godunov};
  CHECK(fcd::numerical_flux(1.0, 0.2, params) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(fcd::numerical_flux(0.2, 1.0, params) == doctest::Approx(0.02).epsilon(1e-14));
  CHECK(fcd::numerical_flux(0.0, 1.0, params) == 0.0);
  CHECK(fcd::numerical_flux(-1.0, 1.0, params) == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(fcd::numerical_flux(1.0, -1.0, params) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(fcd::numerical_flux(0.7, 0.7, params) == doctest::Approx(fcd::flux(0.7, 2.0)).epsilon(1e-14));
}

TEST_CASE("Rusanov flux equals the central value plus dissipation") {
  fcd::FluxParams params{2.0, fcd::FluxScheme::rusanov};
  CHECK(fcd::numerical_flux(1.0, 0.2, params) == doctest::Approx(0.66).epsilon(1e-14));
  CHECK(fcd::numerical_flux(-1.0, 1.0, params) == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(fcd::numerical_flux(0.7, 0.7, params) == doctest::Approx(fcd::flux(0.7, 2.0)).epsilon(1e-14));
}

TEST_CASE("numerical flux is monotone in each argument on nonnegative states") {
  for (auto scheme : {fcd::FluxScheme::godunov, fcd::FluxScheme::rusanov}) {
    fcd::FluxParams params{1.5, scheme};
    for (int fixed = 0; fixed <= 8; ++fixed) {
      const double v = 0.25 * fixed;
      double prev_left = fcd::numerical_flux(0.0, v, params);
      double prev_right = fcd::numerical_flux(v, 0.0, params);
      for (int i = 1; i <= 8; ++i) {
        const double u = 0.25 * i;
        const double by_left = fcd::numerical_flux(u, v, params);
        const double by_right = fcd::numerical_flux(v, u, params);
        CHECK(by_left >= prev_left - 1e-15);
        CHECK(by_right <= prev_right + 1e-15);
        prev_left = by_left;
        prev_right = by_right;
      }
    }
  }
}

TEST_CASE("interface flux differences telescope on the periodic grid") {
  fcd::GridSpec grid = fcd::make_grid(5.0, 64);
  fcd::FluxParams params{1.3, fcd::FluxScheme::godunov};
  std::vector<double> u(grid.n_points);
  for (std::size_t i = 0; i < u.size(); ++i) {
    u[i] = 0.5 + 0.4 * std::sin(2.0 * kPi * static_cast<double>(i) / 7.0);
  }
  std::vector<double> interface(u.size());
  double scale = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    interface[i] = fcd::numerical_flux(u[i], u[(i + 1) % u.size()], params);
    scale += std::abs(interface[i]);
  }
  double total = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    total += interface[i] - interface[(i + u.size() - 1) % u.size()];
  }
  CHECK(std::abs(total) <= 1e-14 * scale);
}

TEST_CASE("normalization constant matches the tail identity") {
  CHECK(fcd::frac_lap_normalization(1.0) == doctest::Approx(1.0 / kPi).epsilon(1e-14));
  for (double alpha : {0.3, 0.7, 1.1, 1.5, 1.9}) {
    const double tail_form = std::tgamma(1.0 + alpha) * std::sin(0.5 * kPi * alpha) / kPi;
    CHECK(fcd::frac_lap_normalization(alpha) == doctest::Approx(tail_form).epsilon(1e-13));
  }
}

TEST_CASE("spectral realization is diagonal on Fourier modes") {
  fcd::GridSpec grid = fcd::make_grid(10.0, 256);
  fcd::Field u, exact;
  trig_field(grid, {{3, 1.0, false}}, 1.5, u, exact);
  CHECK(max_abs_diff(fcd::frac_laplacian_spectral(u, 1.5), exact) <= 1e-11);
  trig_field(grid, {{5, 0.8, true}}, 1.1, u, exact);
  CHECK(max_abs_diff(fcd::frac_laplacian_spectral(u, 1.1), exact) <= 1e-11);
}

TEST_CASE("spectral realization annihilates constants") {
  fcd::GridSpec grid = fcd::make_grid(10.0, 128);
  fcd::Field u = fcd::make_field(grid, 0.0);
  for (auto& s : u.samples) s = 2.3;
  CHECK(max_abs(fcd::frac_laplacian_spectral(u, 1.5)) <= 1e-14);
}

TEST_CASE("singular realization matches spectral on band-limited fields") {
  const std::vector<Mode> modes = {{3, 1.0, false}, {7, 0.25, true}, {0, 0.4, false}};
  for (double alpha : {1.1, 1.5, 1.9}) {
    double coarse_err = 0.0;
    for (std::size_t n : {std::size_t{1024}, std::size_t{4096}}) {
      fcd::GridSpec grid = fcd::make_grid(10.0, n);
      fcd::Field u, exact;
      trig_field(grid, modes, alpha, u, exact);
      const fcd::Field by_symbol = fcd::frac_laplacian_spectral(u, alpha);
      const fcd::Field by_integral = fcd::frac_laplacian_singular(u, alpha);
      const double rel = max_abs_diff(by_integral, by_symbol) / max_abs(by_symbol);
      if (n == 1024) {
        coarse_err = rel;
        CHECK(rel <= 1e-3);
      } else {
        CHECK(rel <= 0.95 * coarse_err);
      }
    }
  }
}

TEST_CASE("singular realization on the fundamental mode") {
  fcd::GridSpec grid = fcd::make_grid(10.0, 1024);
  fcd::Field u, exact;
  trig_field(grid, {{1, 1.0, false}}, 1.5, u, exact);
  const double rel = max_abs_diff(fcd::frac_laplacian_singular(u, 1.5), exact) / max_abs(exact);
  CHECK(rel <= 1e-3);
}

TEST_CASE("singular realization annihilates constants and respects odd symmetry") {
  fcd::GridSpec grid = fcd::make_grid(10.0, 512);
  fcd::Field c = fcd::make_field(grid, 0.0);
  for (auto& s : c.samples) s = 2.3;
  CHECK(max_abs(fcd::frac_laplacian_singular(c, 1.5)) <= 1e-13);

  fcd::Field odd = fcd::make_field(grid, 0.0);
  for (std::size_t i = 0; i < grid.n_points; ++i) {
    odd.samples[i] = std::sin(3.0 * kPi * grid.node(i) / grid.half_width);
  }
  const fcd::Field out = fcd::frac_laplacian_singular(odd, 1.3);
  CHECK(std::abs(out.samples[grid.n_points / 2]) <= 1e-12);  // node at x = 0
}

TEST_CASE("operator argument validation") {
  fcd::GridSpec grid = fcd::make_grid(10.0, 64);
  fcd::Field u = fcd::make_field(grid, 0.0);
  CHECK_THROWS_AS(fcd::flux(1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(fcd::flux_derivative(1.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(fcd::numerical_flux(0.0, 1.0, fcd::FluxParams{0.9, fcd::FluxScheme::godunov}),
                  std::invalid_argument);
  CHECK_THROWS_AS(fcd::frac_lap_normalization(0.0), std::invalid_argument);
  CHECK_THROWS_AS(fcd::frac_lap_normalization(2.0), std::invalid_argument);
  CHECK_THROWS_AS(fcd::frac_laplacian_spectral(u, 2.5), std::invalid_argument);
  CHECK_THROWS_AS(fcd::SingularFracLaplacian(grid, 1.5, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(fcd::SingularFracLaplacian(grid, 1.5, 9.9), std::invalid_argument);

  fcd::SingularFracLaplacian op(grid, 1.5, 4.0 * grid.dx());
  fcd::Field other = fcd::make_field(fcd::make_grid(10.0, 128), 0.0);
  CHECK_THROWS_AS(op.apply(other), std::invalid_argument);
  u.samples[3] = std::nan("");
  CHECK_THROWS_AS(op.apply(u), std::runtime_error);
}

}
