#ifndef FCD_CONFIG_HPP
#define FCD_CONFIG_HPP

#include <string>
#include <vector>

#include "fcd/grid.hpp"
#include "fcd/params.hpp"
#include "fcd/solver.hpp"

namespace fcd {

enum class InitialKind { box, bump, nwave, file };

struct InitialDataConfig {
  InitialKind kind = InitialKind::box;
  double half_extent = 1.0;  // box
  double width = 1.0;        // bump
  double t0 = 1.0;           // nwave
  std::string path;          // file
};

struct DiagnosticsConfig {
  // Radii default to a quarter and half of the domain half width.
  double r_local = 0.0;
  double r_tail = 0.0;
  double slack = 0.02;
};

struct OutputConfig {
  std::string directory = ".";
  bool csv = true;
  bool json = false;
  bool snapshot = false;
};

struct ExperimentConfig {
  ModelParams model;
  GridSpec grid;
  SolverConfig solver;
  InitialDataConfig initial_data;
  DiagnosticsConfig diagnostics;
  OutputConfig outputs;
};

struct ConfigError {
  int line = 0;  // 0 when no single line is responsible
  std::string message;
};

struct ParseResult {
  ExperimentConfig config;
  std::vector<ConfigError> errors;
  bool ok() const { return errors.empty(); }
};

// Parses the line-oriented "key = value" format with [section] headers and
// "#" comments. Collects every violation instead of stopping at the first;
// a clean result is fully validated and safe to run. force_relaxed lifts the
// subcritical ordering as if the file had set model.relaxed = true.
ParseResult parse_config(const std::string& text, bool force_relaxed = false);

// Renders "line N: message" rows, one per error.
std::string describe_errors(const std::vector<ConfigError>& errors);

// Materializes the configured initial data on the configured grid.
Field build_initial_data(const ExperimentConfig& config);

}  // namespace fcd

#endif
