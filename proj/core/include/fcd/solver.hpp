#ifndef FCD_SOLVER_HPP
#define FCD_SOLVER_HPP

#include <vector>

#include "fcd/grid.hpp"
#include "fcd/operators.hpp"
#include "fcd/params.hpp"

namespace fcd {

enum class Scheme { splitting, duhamel };

// delta is the splitting half-cycle length and doubles as the Duhamel
// macro-step. Sub-step stability is internal: the CFL number only shapes
// convection sub-stepping, never the accuracy parameter delta.
struct SolverConfig {
  Scheme scheme = Scheme::splitting;
  double delta = 1e-3;
  double cfl = 0.9;
  double end_time = 1.0;
  std::vector<double> record_times;
  FluxScheme flux_scheme = FluxScheme::godunov;
  double picard_tol = 1e-10;
  int picard_max_iters = 50;
};

void validate_solver_config(const SolverConfig& config);

// Exact semigroup of u_t + speed_factor (-Delta)^(alpha/2) u = 0 over dt,
// as a spectral multiplier. Preserves the mean mode exactly.
Field diffusion_step(const Field& u, double alpha, double dt, double speed_factor = 1.0);

// Finite-volume step of u_t + speed_factor f(u)_x = 0 over dt, sub-stepped
// so each sub-step satisfies speed_factor dt' max f'(u) / dx <= cfl.
Field convection_step(const Field& u, double q, double dt, double speed_factor, double cfl,
                      FluxScheme flux_scheme);

// Alternates the two sub-flows at doubled speed on half-cycles of length
// delta: diffusion on (2n delta, (2n+1) delta], convection on the next
// half-cycle, truncated to land exactly on record times and end_time.
std::vector<Field> split_solve(const Field& u0, const ModelParams& params,
                               const SolverConfig& config);

// Mild-solution integrator: per macro-step the linear semigroup plus the
// memory integral of (K_(t-sigma))_x applied to f(u), collocated at two
// Gauss points with the kernel factor integrated exactly in Fourier space.
std::vector<Field> duhamel_solve(const Field& u0, const ModelParams& params,
                                 const SolverConfig& config);

// Dispatch on config.scheme.
std::vector<Field> solve(const Field& u0, const ModelParams& params, const SolverConfig& config);

// Max over record times of ||u_eps(t) - u(t)||_inf for data shifted by the
// constant eps (the shifted run carries the enlarged mass).
double epsilon_shift_test(const Field& u0, double eps, const ModelParams& params,
                          const SolverConfig& config);

}  // namespace fcd

#endif
