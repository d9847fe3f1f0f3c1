#ifndef FCD_ASYMPTOTICS_HPP
#define FCD_ASYMPTOTICS_HPP

#include <vector>

#include "fcd/grid.hpp"
#include "fcd/params.hpp"
#include "fcd/solver.hpp"

namespace fcd {

// Mass-preserving zoom u_lambda(t, x) = lambda u(lambda^q t, lambda x),
// evaluated on the grid of u at the rescaled time stamp. Samples are resolved
// by shape-preserving cubic interpolation; points that map outside the domain
// read as zero. Rejects lambda that would truncate more than 1e-6 of the
// field's content at the domain edge.
Field rescale(const Field& u, double lambda, const ModelParams& params);

// t^((1/q)(1-1/p)) ||u(t) - U_M(t)||_p against the profile with the model's
// mass on the field's own grid; p = 1 gives the plain L1 distance.
double scaled_error(const Field& u, const ModelParams& params, double p);

struct ConvergenceStudy {
  ModelParams params;
  std::vector<double> times;
  std::vector<double> p_values;
  // errors[i][j] is the scaled error at times[i] for p_values[j].
  std::vector<std::vector<double>> errors;
  // Least-squares slope of log error against log time, one per p.
  std::vector<double> trend_slopes;
  // Mass beyond half the domain width, and total mass, per recorded time.
  std::vector<double> tail_history;
  std::vector<double> mass_history;
};

// Runs the solver on u0 with snapshots at the given times and tabulates the
// scaled errors. The domain must keep the outer-half tail below
// tail_budget * mass at every snapshot; a violation aborts with a recommended
// half width extrapolated from the measured tail decay.
ConvergenceStudy run_convergence_study(const Field& u0, const ModelParams& params,
                                       const SolverConfig& base_config,
                                       const std::vector<double>& times,
                                       const std::vector<double>& p_values,
                                       double tail_budget = 1e-3);

}  // namespace fcd

#endif
