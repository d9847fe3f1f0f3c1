#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "fcd/interp.hpp"
#include "fcd/quadrature.hpp"

using namespace fcd;

TEST_SUITE("quadrature_interp") {

TEST_CASE("adaptive rule on polynomials and smooth functions") {
  auto sq = [](double x) { return x * x; };
  CHECK(integrate(sq, 0.0, 1.0, 1e-12).value == doctest::Approx(1.0 / 3.0).epsilon(1e-13));

  auto sn = [](double x) { return std::sin(x); };
  CHECK(integrate(sn, 0.0, std::numbers::pi, 1e-12).value == doctest::Approx(2.0).epsilon(1e-13));

  auto gauss = [](double x) { return std::exp(-x * x); };
  const double expected = 0.5 * std::sqrt(std::numbers::pi) * std::erf(5.0);
  CHECK(integrate(gauss, 0.0, 5.0, 1e-12).value == doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("adaptive rule resolves an endpoint cusp") {
  auto root = [](double x) { return std::sqrt(x); };
  const QuadResult r = integrate(root, 0.0, 1.0, 1e-10);
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
}

TEST_CASE("oscillatory integral against Laplace transforms of cos and sin") {
  // int_0^inf cos(r x) e^-x dx = 1 / (1 + r^2)
  for (double r : {0.0, 0.5, 5.0, 50.0, 180.0}) {
    const QuadResult got = oscillatory_integral(Oscillator::cosine, r, 0.0, 1.0, 1.0);
    CHECK(got.value == doctest::Approx(1.0 / (1.0 + r * r)).epsilon(1e-9));
  }
  // int_0^inf x sin(r x) e^-x dx = 2 r / (1 + r^2)^2
  for (double r : {0.5, 5.0, 50.0}) {
    const QuadResult got = oscillatory_integral(Oscillator::sine, r, 1.0, 1.0, 1.0);
    const double denom = (1.0 + r * r) * (1.0 + r * r);
    CHECK(got.value == doctest::Approx(2.0 * r / denom).epsilon(1e-8));
  }
}

TEST_CASE("zero-frequency moments match the gamma closed form") {
  // int_0^inf x^s exp(-c x^a) dx = Gamma((s+1)/a) / (a c^((s+1)/a))
  struct Case {
    double s, a, c;
  };
  for (const Case& k : {Case{0.0, 1.5, 1.0}, Case{0.5, 1.5, 1.0}, Case{1.5, 1.5, 2.0},
                        Case{0.5, 1.1, 0.7}, Case{2.5, 1.9, 3.0}}) {
    const double expo = (k.s + 1.0) / k.a;
    const double expected = std::tgamma(expo) / (k.a * std::pow(k.c, expo));
    const QuadResult got = oscillatory_integral(Oscillator::cosine, 0.0, k.s, k.a, k.c);
    CHECK(got.value == doctest::Approx(expected).epsilon(1e-10));
  }
}

TEST_CASE("monotone cubic reproduces nodes and straight lines") {
  std::vector<double> x{0.0, 1.0, 2.5, 4.0, 7.0};
  std::vector<double> y;
  for (double v : x) y.push_back(3.0 * v - 1.0);
  const PchipInterpolant p(x, y);
  for (double probe : {0.0, 0.3, 1.7, 3.9, 6.2, 7.0}) {
    CHECK(p(probe) == doctest::Approx(3.0 * probe - 1.0).epsilon(1e-14));
  }
  CHECK(p.integrate(0.0, 7.0) == doctest::Approx(3.0 * 24.5 - 7.0).epsilon(1e-14));
}

TEST_CASE("monotone data stays monotone between nodes") {
  // Steep step-like data, the classic overshoot trap for plain cubic splines.
  std::vector<double> x{0.0, 1.0, 2.0, 3.0, 4.0, 5.0};
  std::vector<double> y{0.0, 0.01, 0.02, 0.98, 0.99, 1.0};
  const PchipInterpolant p(x, y);
  double prev = p(0.0);
  for (int i = 1; i <= 500; ++i) {
    const double value = p(5.0 * i / 500.0);
    CHECK(value >= prev - 1e-12);
    CHECK(value >= -1e-12);
    CHECK(value <= 1.0 + 1e-12);
    prev = value;
  }
}

TEST_CASE("interpolant integral agrees with a fine Riemann sum") {
  std::vector<double> x, y;
  for (int i = 0; i <= 20; ++i) {
    const double xi = 0.1 * i;
    x.push_back(xi);
    y.push_back(std::exp(-xi) * (1.0 + 0.5 * xi));
  }
  const PchipInterpolant p(x, y);
  double riemann = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    riemann += p((i + 0.5) * 2.0 / n) * (2.0 / n);
  }
  CHECK(p.integrate(0.0, 2.0) == doctest::Approx(riemann).epsilon(1e-8));
}

TEST_CASE("interpolant rejects bad input") {
  std::vector<double> x{0.0, 1.0, 1.0};
  std::vector<double> y{0.0, 1.0, 2.0};
  CHECK_THROWS_AS(PchipInterpolant(x, y), std::invalid_argument);
  const PchipInterpolant p({0.0, 1.0}, {0.0, 1.0});
  CHECK_THROWS_AS(p(1.5), std::domain_error);
  CHECK_THROWS_AS(p.integrate(-0.5, 1.0), std::domain_error);
}

}  // TEST_SUITE
