#include <cmath>
#include <cstddef>
#include <limits>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "fcd/grid.hpp"
#include "fcd/nwave.hpp"
#include "fcd/quadrature.hpp"

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Forward-difference sup of u^(q-1), optionally restricted to node pairs
// strictly inside the given window.
double discrete_oleinik_sup(const fcd::Field& u, double q, double lo, double hi) {
  const double dx = u.grid.dx();
  double sup = -kInf;
  for (std::size_t i = 0; i + 1 < u.grid.n_points; ++i) {
    const double xa = u.grid.node(i);
    const double xb = u.grid.node(i + 1);
    if (lo > -kInf && !(xa > lo && xb < hi)) continue;
    const double za = std::pow(std::max(u.samples[i], 0.0), q - 1.0);
    const double zb = std::pow(std::max(u.samples[i + 1], 0.0), q - 1.0);
    sup = std::max(sup, (zb - za) / dx);
  }
  return sup;
}

}  // namespace

TEST_SUITE("nwave") {

TEST_CASE("support radius closed form and time scaling") {
  fcd::NWave wave = fcd::make_nwave(1.0, 2.0);
  CHECK(wave.support_radius(1.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(wave.support_radius(16.0) / wave.support_radius(1.0) ==
        doctest::Approx(4.0).epsilon(1e-13));

  fcd::NWave steep = fcd::make_nwave(2.5, 1.2);
  for (double lambda : {0.5, 2.0, 7.0}) {
    const double scaled = steep.support_radius(std::pow(lambda, steep.q) * 3.0);
    CHECK(scaled == doctest::Approx(lambda * steep.support_radius(3.0)).epsilon(1e-13));
  }
}

TEST_CASE("pointwise values inside and outside the support") {
  const double r = std::sqrt(2.0);
  CHECK(fcd::nwave_value(1.0, 1.0, 1.0, 2.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(fcd::nwave_value(1.0, 2.0, 1.0, 2.0) == 0.0);
  CHECK(fcd::nwave_value(1.0, -0.3, 1.0, 2.0) == 0.0);
  CHECK(fcd::nwave_value(1.0, 0.0, 1.0, 2.0) == 0.0);
  CHECK(fcd::nwave_value(1.0, r - 1e-9, 1.0, 2.0) > 1.414);
  CHECK(fcd::nwave_value(1.0, r + 1e-9, 1.0, 2.0) == 0.0);
  CHECK(fcd::nwave_value(2.0, 1.0, 1.0, 1.2) == doctest::Approx(0.03125).epsilon(1e-13));
}

TEST_CASE("unit L1 norm is the mass, confirmed by quadrature") {
  struct Case { double t, mass, q; };
  for (auto c : {Case{1.0, 1.0, 2.0}, Case{3.0, 2.0, 1.2}, Case{0.5, 0.7, 1.5}}) {
    CHECK(fcd::nwave_lp_norm(c.t, c.mass, c.q, 1.0) == doctest::Approx(c.mass).epsilon(1e-12));
  }
  for (auto c : {Case{1.0, 1.0, 2.0}, Case{2.0, 1.3, 1.4}}) {
    const double r = fcd::make_nwave(c.mass, c.q).support_radius(c.t);
    const auto quad = fcd::integrate(
        [&](double x) { return fcd::nwave_value(c.t, x, c.mass, c.q); }, 0.0, r, 1e-10);
    CHECK(quad.converged);
    CHECK(quad.value == doctest::Approx(c.mass).epsilon(1e-8));
  }
}

TEST_CASE("sup norm attains the decay-rate constant") {
  CHECK(fcd::nwave_lp_norm(1.0, 1.0, 2.0, kInf) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-13));
  struct Case { double t, mass, q; };
  for (auto c : {Case{0.7, 2.0, 1.3}, Case{5.0, 0.4, 1.8}}) {
    const double bound =
        std::pow(c.q * c.mass / (c.q - 1.0), 1.0 / c.q) * std::pow(c.t, -1.0 / c.q);
    CHECK(fcd::nwave_lp_norm(c.t, c.mass, c.q, kInf) == doctest::Approx(bound).epsilon(1e-12));
  }
}

TEST_CASE("L2 norm frozen value") {
  CHECK(fcd::nwave_lp_norm(1.0, 1.0, 2.0, 2.0) ==
        doctest::Approx(0.9709835434146469).epsilon(1e-13));
}

TEST_CASE("sampling preserves discrete mass") {
  for (double q : {1.2, 2.0}) {
    fcd::Field fine = fcd::nwave_field(1.0, 1.0, q, fcd::make_grid(10.0, 4096));
    CHECK(std::abs(fcd::mass(fine) - 1.0) <= 1e-12);
    fcd::Field coarse = fcd::nwave_field(1.0, 1.0, q, fcd::make_grid(10.0, 1024));
    CHECK(std::abs(fcd::mass(coarse) - 1.0) <= 1e-12);
  }
}

TEST_CASE("sampled norms track the closed forms") {
  fcd::Field u = fcd::nwave_field(1.0, 1.0, 2.0, fcd::make_grid(10.0, 4096));
  const double l2 = fcd::lp_norm(u, 2.0);
  CHECK(std::abs(l2 - fcd::nwave_lp_norm(1.0, 1.0, 2.0, 2.0)) <= 5e-2);
  CHECK(fcd::lp_norm(u, kInf) <= fcd::nwave_lp_norm(1.0, 1.0, 2.0, kInf) + 1e-12);
  CHECK(fcd::min_value(u) >= 0.0);
}

TEST_CASE("rescaling fixed point") {
  std::mt19937 rng(20240818);
  std::uniform_real_distribution<double> lam_dist(0.5, 8.0);
  std::uniform_real_distribution<double> t_dist(0.2, 5.0);
  std::uniform_real_distribution<double> frac_dist(0.05, 0.95);
  for (double q : {1.2, 2.0}) {
    for (int trial = 0; trial < 100; ++trial) {
      const double lambda = lam_dist(rng);
      const double t = t_dist(rng);
      const double r = fcd::make_nwave(1.3, q).support_radius(t);
      const double x = frac_dist(rng) * r;
      const double direct = fcd::nwave_value(t, x, 1.3, q);
      const double zoomed =
          lambda * fcd::nwave_value(std::pow(lambda, q) * t, lambda * x, 1.3, q);
      CHECK(zoomed == doctest::Approx(direct).epsilon(1e-11));
    }
  }
}

TEST_CASE("discrete Oleinik slope is the interior value") {
  // Cell averaging perturbs u by O(dx^2 u''/u), so the sampled slope of
  // u^(q-1) sits within O(dx^2/x^2) of 1/t; exact for q = 2 where cells
  // average a linear profile.
  for (double q : {1.2, 2.0}) {
    const double t = 1.0;
    fcd::Field u = fcd::nwave_field(t, 1.0, q, fcd::make_grid(10.0, 2048));
    const double r = fcd::make_nwave(1.0, q).support_radius(t);
    const double interior = discrete_oleinik_sup(u, q, 0.2 * r, 0.9 * r);
    const double interior_tol = q == 2.0 ? 1e-11 : 1e-4;
    CHECK(std::abs(t * interior - 1.0) <= interior_tol);
    const double everywhere = discrete_oleinik_sup(u, q, -kInf, kInf);
    CHECK(t * everywhere >= 1.0 - 1e-4);
    CHECK(t * everywhere <= 1.0 + 5.0 * u.grid.dx());
  }
  CHECK(fcd::nwave_oleinik_product(3.7, 0.2, 1.6) == 1.0);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(fcd::nwave_value(0.0, 1.0, 1.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(fcd::nwave_value(-1.0, 1.0, 1.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(fcd::make_nwave(0.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(fcd::make_nwave(1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(fcd::nwave_lp_norm(1.0, 1.0, 2.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(fcd::nwave_field(0.0, 1.0, 2.0, fcd::make_grid(10.0, 64)),
                  std::invalid_argument);
  CHECK_THROWS_AS(fcd::nwave_oleinik_product(-2.0, 1.0, 2.0), std::invalid_argument);
}

}
