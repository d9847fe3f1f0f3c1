#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "fcd/asymptotics.hpp"
#include "fcd/grid.hpp"
#include "fcd/initial_data.hpp"
#include "fcd/params.hpp"
#include "fcd/solver.hpp"

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double linf_diff(const fcd::Field& a, const fcd::Field& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    worst = std::max(worst, std::abs(a.samples[i] - b.samples[i]));
  }
  return worst;
}

double l1_diff(const fcd::Field& a, const fcd::Field& b) {
  double total = 0.0;
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    total += std::abs(a.samples[i] - b.samples[i]);
  }
  return total * a.grid.dx();
}

}  // namespace

TEST_SUITE("asymptotics") {

TEST_CASE("rescale identity and time stamp") {
  fcd::GridSpec grid = fcd::make_grid(20.0, 1024);
  fcd::Field u = fcd::bump_data(grid, 1.0, 1.5);
  u.time = 2.0;
  fcd::ModelParams params = fcd::make_model_params(1.5, 1.2, 1.0);

  fcd::Field same = fcd::rescale(u, 1.0, params);
  CHECK(linf_diff(same, u) == 0.0);
  CHECK(same.time == 2.0);

  fcd::Field zoomed = fcd::rescale(u, 2.0, params);
  CHECK(zoomed.time == doctest::Approx(2.0 / std::pow(2.0, 1.2)).epsilon(1e-14));
}

TEST_CASE("rescale conserves mass of smooth fields") {
  fcd::GridSpec grid = fcd::make_grid(20.0, 2048);
  fcd::Field u = fcd::bump_data(grid, 1.0, 1.5);
  u.time = 1.0;
  fcd::ModelParams params = fcd::make_model_params(1.5, 1.2, 1.0);
  for (double lambda : {1.3, 2.0, 5.0, 10.0}) {
    fcd::Field v = fcd::rescale(u, lambda, params);
    CHECK(std::abs(fcd::mass(v) - 1.0) <= 1e-6);
    CHECK(fcd::min_value(v) >= 0.0);
  }
}

TEST_CASE("rescale fixes the profile up to sampling error") {
  for (double q : {1.2, 2.0}) {
    fcd::ModelParams params = fcd::make_model_params(1.95, q, 1.0, q >= 1.95);
    for (double lambda : {1.3, 1.7}) {
      double coarse = kInf;
      for (std::size_t n : {std::size_t{1024}, std::size_t{4096}}) {
        fcd::GridSpec grid = fcd::make_grid(10.0, n);
        fcd::Field u = fcd::nwave_data(grid, 1.0, q, 2.0);
        fcd::Field v = fcd::rescale(u, lambda, params);
        fcd::Field want = fcd::nwave_data(grid, 1.0, q, 2.0 / std::pow(lambda, q));
        CHECK(v.time == doctest::Approx(want.time).epsilon(1e-14));
        const double err = l1_diff(v, want);
        if (n == 1024) {
          coarse = err;
          CHECK(err <= 1e-2);
          CHECK(std::abs(fcd::mass(v) - 1.0) <= 6e-3);
        } else {
          CHECK(err <= 2.5e-3);
          CHECK(err <= coarse);
          CHECK(std::abs(fcd::mass(v) - 1.0) <= 1.5e-3);
        }
      }
    }
  }
}

TEST_CASE("rescale rejects edge truncation") {
  fcd::GridSpec grid = fcd::make_grid(10.0, 512);
  fcd::Field u = fcd::box_data(grid, 1.0, 4.0);
  u.time = 1.0;
  fcd::ModelParams params = fcd::make_model_params(1.5, 1.2, 1.0);
  CHECK_THROWS_AS(fcd::rescale(u, 0.3, params), std::invalid_argument);
  CHECK_NOTHROW(fcd::rescale(u, 0.9, params));
  CHECK_THROWS_AS(fcd::rescale(u, 0.0, params), std::invalid_argument);
}

TEST_CASE("scaled error vanishes on the profile and matches plain norms") {
  fcd::GridSpec grid = fcd::make_grid(10.0, 1024);
  fcd::ModelParams params = fcd::make_model_params(1.5, 1.2, 1.0);
  fcd::Field exact = fcd::nwave_data(grid, 1.0, 1.2, 1.0);
  for (double p : {1.0, 2.0, kInf}) CHECK(fcd::scaled_error(exact, params, p) == 0.0);

  fcd::Field bump = fcd::bump_data(grid, 1.0, 1.5);
  bump.time = 2.0;
  fcd::Field profile = fcd::nwave_data(grid, 1.0, 1.2, 2.0);
  CHECK(fcd::scaled_error(bump, params, 1.0) ==
        doctest::Approx(l1_diff(bump, profile)).epsilon(1e-13));
  CHECK(fcd::scaled_error(bump, params, kInf) ==
        doctest::Approx(std::pow(2.0, 1.0 / 1.2) * linf_diff(bump, profile)).epsilon(1e-13));

  fcd::Field stale = bump;
  stale.time = 0.0;
  CHECK_THROWS_AS(fcd::scaled_error(stale, params, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(fcd::scaled_error(bump, params, 0.5), std::invalid_argument);
}

TEST_CASE("convergence study tabulates a falling L1 trend") {
  fcd::GridSpec grid = fcd::make_grid(60.0, 2048);
  fcd::Field u0 = fcd::box_data(grid, 1.0, 1.0);
  fcd::ModelParams params = fcd::make_model_params(1.5, 1.2, 1.0);
  fcd::SolverConfig config;
  config.delta = 2e-3;
  const std::vector<double> times{0.5, 1.0, 2.0, 4.0};
  fcd::ConvergenceStudy study =
      fcd::run_convergence_study(u0, params, config, times, {1.0, 2.0, kInf}, 0.05);

  REQUIRE(study.errors.size() == times.size());
  REQUIRE(study.errors.front().size() == 3);
  CHECK(study.times == times);
  for (std::size_t i = 0; i < times.size(); ++i) {
    for (double e : study.errors[i]) CHECK(std::isfinite(e));
    CHECK(std::abs(study.mass_history[i] - 1.0) <= 1e-10);
    CHECK(study.tail_history[i] <= 0.05);
    if (i > 0) CHECK(study.errors[i][0] < study.errors[i - 1][0]);
  }
  CHECK(study.trend_slopes[0] < 0.0);
}

TEST_CASE("convergence study aborts on tail budget violation") {
  fcd::GridSpec grid = fcd::make_grid(30.0, 1024);
  fcd::Field u0 = fcd::box_data(grid, 1.0, 1.0);
  fcd::ModelParams params = fcd::make_model_params(1.5, 1.2, 1.0);
  fcd::SolverConfig config;
  config.delta = 2e-3;
  CHECK_THROWS_WITH_AS(fcd::run_convergence_study(u0, params, config, {1.0, 3.0}, {1.0}, 1e-3),
                       doctest::Contains("increase the half width"), std::runtime_error);
}

TEST_CASE("convergence study validation") {
  fcd::GridSpec grid = fcd::make_grid(20.0, 256);
  fcd::Field u0 = fcd::box_data(grid, 1.0, 1.0);
  fcd::ModelParams params = fcd::make_model_params(1.5, 1.2, 1.0);
  fcd::SolverConfig config;
  config.delta = 1e-2;
  CHECK_THROWS_AS(fcd::run_convergence_study(u0, params, config, {}, {1.0}, 1e-3),
                  std::invalid_argument);
  CHECK_THROWS_AS(fcd::run_convergence_study(u0, params, config, {2.0, 1.0}, {1.0}, 1e-3),
                  std::invalid_argument);
  CHECK_THROWS_AS(fcd::run_convergence_study(u0, params, config, {1.0}, {0.9}, 1e-3),
                  std::invalid_argument);
  CHECK_THROWS_AS(fcd::run_convergence_study(u0, params, config, {1.0}, {1.0}, 0.0),
                  std::invalid_argument);
}

}
