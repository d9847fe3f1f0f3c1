#include <atomic>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fcd/asymptotics.hpp"
#include "fcd/config.hpp"
#include "fcd/csv.hpp"
#include "fcd/diagnostics.hpp"
#include "fcd/kernel.hpp"
#include "fcd/snapshot.hpp"
#include "fcd/solver.hpp"

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

constexpr int kExitConfig = 1;
constexpr int kExitGate = 2;

fcd::ExperimentConfig load_config(const std::string& path, bool relaxed) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  fcd::ParseResult parsed = fcd::parse_config(buffer.str(), relaxed);
  if (!parsed.ok()) {
    throw std::runtime_error(path + " is invalid:\n" + fcd::describe_errors(parsed.errors));
  }
  return parsed.config;
}

// Precedence: --out flag, then FCD_OUT_DIR, then the config's directory.
std::string resolve_out_dir(const std::string& flag_value, const fcd::ExperimentConfig& config) {
  std::string dir = config.outputs.directory;
  if (const char* env = std::getenv("FCD_OUT_DIR"); env != nullptr && *env != '\0') dir = env;
  if (!flag_value.empty()) dir = flag_value;
  std::filesystem::create_directories(dir);
  return dir;
}

const std::vector<std::string>& diagnostics_columns() {
  static const std::vector<std::string> columns{
      "time",      "mass",        "l1",       "l2",        "lq",        "l2q",     "linf",
      "oleinik",   "max_slope",   "w11_local", "energy",   "tail_mass", "min_value"};
  return columns;
}

std::vector<double> diagnostics_row(const fcd::DiagnosticsRecord& rec, double q) {
  return {rec.time,
          rec.mass,
          rec.lp_norms.at(1.0),
          rec.lp_norms.at(2.0),
          rec.lp_norms.at(q),
          rec.lp_norms.at(2.0 * q),
          rec.lp_norms.at(kInf),
          rec.oleinik_product,
          rec.max_slope,
          rec.w11_local,
          rec.energy_density,
          rec.tail_mass,
          rec.min_value};
}

nlohmann::json record_json(const fcd::DiagnosticsRecord& rec, double q) {
  const std::vector<double> row = diagnostics_row(rec, q);
  nlohmann::json object;
  for (std::size_t j = 0; j < row.size(); ++j) {
    object[diagnostics_columns()[j]] = std::isfinite(row[j]) ? row[j] : 0.0;
  }
  return object;
}

void write_manifest(const fcd::ExperimentConfig& config, const std::string& out_dir,
                    const std::string& command, const std::vector<double>& times) {
  nlohmann::json manifest;
  manifest["command"] = command;
  manifest["model"] = {{"alpha", config.model.alpha},
                       {"q", config.model.q},
                       {"mass", config.model.mass},
                       {"relaxed", config.model.relaxed}};
  manifest["grid"] = {{"half_width", config.grid.half_width},
                      {"n_points", config.grid.n_points}};
  manifest["solver"] = {
      {"scheme", config.solver.scheme == fcd::Scheme::splitting ? "splitting" : "duhamel"},
      {"delta", config.solver.delta},
      {"cfl", config.solver.cfl},
      {"end_time", config.solver.end_time}};
  manifest["times"] = times;
  std::ofstream out(out_dir + "/manifest.json");
  out << manifest.dump(2) << "\n";
}

// Prints failed checks; true when every bound holds.
bool gate_records(const std::vector<fcd::DiagnosticsRecord>& records,
                  const fcd::ExperimentConfig& config, std::ostream& log) {
  bool all_pass = true;
  for (const auto& rec : records) {
    fcd::BoundsReport report = fcd::assert_bounds(rec, config.model, config.diagnostics.slack);
    for (const auto& check : report.checks) {
      if (!check.pass) {
        log << "gate FAIL t=" << rec.time << " " << check.name
            << ": observed=" << fcd::format_full(check.observed)
            << " allowed=" << fcd::format_full(check.allowed) << "\n";
      }
    }
    all_pass = all_pass && report.all_pass;
  }
  return all_pass;
}

int run_solve(const fcd::ExperimentConfig& config, const std::string& out_dir, bool gate,
              std::ostream& log) {
  fcd::Field u0 = fcd::build_initial_data(config);
  fcd::SolverConfig solver_config = config.solver;
  if (solver_config.record_times.empty()) {
    solver_config.record_times = {solver_config.end_time};
  }
  std::vector<fcd::Field> snaps = fcd::solve(u0, config.model, solver_config);

  std::vector<fcd::DiagnosticsRecord> records;
  std::vector<std::vector<double>> rows;
  std::vector<double> times;
  for (const auto& snap : snaps) {
    records.push_back(
        fcd::diagnose(snap, config.model, config.diagnostics.r_local, config.diagnostics.r_tail));
    rows.push_back(diagnostics_row(records.back(), config.model.q));
    times.push_back(snap.time);
  }

  if (config.outputs.csv) {
    fcd::write_csv(out_dir + "/diagnostics.csv", diagnostics_columns(), rows);
  }
  if (config.outputs.json) {
    nlohmann::json all = nlohmann::json::array();
    for (const auto& rec : records) all.push_back(record_json(rec, config.model.q));
    std::ofstream out(out_dir + "/diagnostics.json");
    out << all.dump(2) << "\n";
  }
  if (config.outputs.snapshot) {
    for (std::size_t i = 0; i < snaps.size(); ++i) {
      char name[32];
      std::snprintf(name, sizeof(name), "snapshot_%03zu.snap", i);
      fcd::write_snapshot(snaps[i], out_dir + "/" + name);
    }
  }
  write_manifest(config, out_dir, "solve", times);
  log << "solve: " << snaps.size() << " snapshots -> " << out_dir << "\n";

  if (gate && !gate_records(records, config, log)) return kExitGate;
  if (gate) log << "gate PASS (" << records.size() << " snapshots)\n";
  return 0;
}

int run_diagnose(const fcd::ExperimentConfig& config, const std::vector<std::string>& paths,
                 const std::string& out_dir, bool gate, std::ostream& log) {
  std::vector<fcd::DiagnosticsRecord> records;
  std::vector<std::vector<double>> rows;
  std::vector<double> times;
  for (const std::string& path : paths) {
    fcd::Field snap = fcd::read_snapshot(path);
    records.push_back(
        fcd::diagnose(snap, config.model, config.diagnostics.r_local, config.diagnostics.r_tail));
    rows.push_back(diagnostics_row(records.back(), config.model.q));
    times.push_back(snap.time);
  }
  fcd::write_csv(out_dir + "/diagnostics.csv", diagnostics_columns(), rows);
  write_manifest(config, out_dir, "diagnose", times);
  log << "diagnose: " << records.size() << " snapshots -> " << out_dir << "\n";
  if (gate && !gate_records(records, config, log)) return kExitGate;
  if (gate) log << "gate PASS (" << records.size() << " snapshots)\n";
  return 0;
}

int run_converge(const fcd::ExperimentConfig& config, const std::string& out_dir,
                 double tail_budget, bool gate, std::ostream& log) {
  if (config.solver.record_times.empty()) {
    throw std::runtime_error("converge requires solver.record_times in the config");
  }
  fcd::Field u0 = fcd::build_initial_data(config);
  const std::vector<double> p_values{1.0, 2.0, kInf};
  fcd::ConvergenceStudy study = fcd::run_convergence_study(
      u0, config.model, config.solver, config.solver.record_times, p_values, tail_budget);

  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < study.times.size(); ++i) {
    const double drift =
        std::abs(study.mass_history[i] - config.model.mass) / config.model.mass;
    for (std::size_t j = 0; j < p_values.size(); ++j) {
      rows.push_back({study.times[i], p_values[j], study.errors[i][j], study.tail_history[i],
                      drift});
    }
  }
  fcd::write_csv(out_dir + "/convergence.csv",
                 {"t", "p", "scaled_error", "tail_mass", "mass_drift"}, rows);
  write_manifest(config, out_dir, "converge", study.times);
  for (std::size_t j = 0; j < p_values.size(); ++j) {
    log << "converge: p=" << p_values[j] << " trend slope " << study.trend_slopes[j] << "\n";
  }

  if (gate) {
    for (std::size_t i = 1; i < study.times.size(); ++i) {
      if (!(study.errors[i][0] < study.errors[i - 1][0])) {
        log << "gate FAIL: E_1(" << study.times[i] << ") = "
            << fcd::format_full(study.errors[i][0]) << " did not decrease\n";
        return kExitGate;
      }
    }
    log << "gate PASS (E_1 strictly decreasing over " << study.times.size() << " times)\n";
  }
  return 0;
}

int run_sweep(const fcd::ExperimentConfig& base, const std::vector<double>& alphas,
              const std::vector<double>& qs, const std::string& out_dir, int jobs, bool gate,
              bool relaxed, std::ostream& log) {
  struct Combo {
    double alpha;
    double q;
    bool skipped;
    std::string label;
  };
  std::vector<Combo> combos;
  for (double alpha : alphas) {
    for (double q : qs) {
      std::ostringstream label;
      label << "alpha_" << alpha << "_q_" << q;
      const bool supercritical = !(q < alpha);
      combos.push_back({alpha, q, supercritical && !relaxed, label.str()});
    }
  }

  std::vector<std::string> logs(combos.size());
  std::vector<int> codes(combos.size(), 0);
  std::atomic<std::size_t> cursor{0};
  auto worker = [&]() {
    for (std::size_t i = cursor.fetch_add(1); i < combos.size(); i = cursor.fetch_add(1)) {
      std::ostringstream local;
      if (combos[i].skipped) {
        local << combos[i].label << ": skipped (q >= alpha; pass --relaxed to run it)\n";
        logs[i] = local.str();
        continue;
      }
      try {
        fcd::ExperimentConfig config = base;
        config.model.alpha = combos[i].alpha;
        config.model.q = combos[i].q;
        config.model.relaxed = config.model.relaxed || relaxed;
        fcd::validate_model_params(config.model);
        const std::string dir = out_dir + "/" + combos[i].label;
        std::filesystem::create_directories(dir);
        codes[i] = run_solve(config, dir, gate, local);
      } catch (const std::exception& error) {
        local << combos[i].label << ": error: " << error.what() << "\n";
        codes[i] = kExitConfig;
      }
      logs[i] = local.str();
    }
  };

  std::vector<std::thread> pool;
  const int width = std::max(1, std::min<int>(jobs, static_cast<int>(combos.size())));
  for (int t = 0; t < width; ++t) pool.emplace_back(worker);
  for (auto& thread : pool) thread.join();

  int status = 0;
  for (std::size_t i = 0; i < combos.size(); ++i) {
    log << logs[i];
    status = std::max(status, codes[i]);
  }
  return status;
}

int run_kernel(double alpha, double t, double half_width, int samples, bool table,
               const std::string& out_flag, std::ostream& log) {
  log << "kernel: alpha=" << alpha << " t=" << t << " mass=" << fcd::format_full(
      fcd::kernel_mass(alpha)) << "\n";
  if (!table) return 0;
  std::string dir = out_flag;
  if (dir.empty()) {
    if (const char* env = std::getenv("FCD_OUT_DIR"); env != nullptr && *env != '\0') dir = env;
  }
  if (dir.empty()) dir = ".";
  std::filesystem::create_directories(dir);
  std::vector<std::vector<double>> rows;
  for (int i = 0; i < samples; ++i) {
    const double x = -half_width + 2.0 * half_width * i / (samples - 1);
    rows.push_back({x, fcd::kernel_value(alpha, t, x)});
  }
  fcd::write_csv(dir + "/kernel_table.csv", {"x", "value"}, rows);
  log << "kernel: table -> " << dir << "/kernel_table.csv\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fractional convection-diffusion workbench"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_flag;
  bool gate = false;
  bool relaxed = false;

  double kernel_alpha = 1.0;
  double kernel_t = 1.0;
  double kernel_half_width = 20.0;
  int kernel_samples = 801;
  bool kernel_table = false;
  CLI::App* kernel_cmd = app.add_subcommand("kernel", "emit kernel profile tables");
  kernel_cmd->add_option("--alpha", kernel_alpha, "stability index in (0, 2]")
      ->required()
      ->check(CLI::Range(1e-9, 2.0));
  kernel_cmd->add_option("--t", kernel_t, "time")->check(CLI::PositiveNumber);
  kernel_cmd->add_option("--half-width", kernel_half_width, "table extent")
      ->check(CLI::PositiveNumber);
  kernel_cmd->add_option("--samples", kernel_samples, "table rows")->check(CLI::Range(2, 1000000));
  kernel_cmd->add_flag("--table", kernel_table, "write kernel_table.csv");
  kernel_cmd->add_option("--out", out_flag, "output directory");

  CLI::App* solve_cmd = app.add_subcommand("solve", "run one experiment");
  solve_cmd->add_option("--config", config_path, "experiment config")->required();
  solve_cmd->add_option("--out", out_flag, "output directory override");
  solve_cmd->add_flag("--gate", gate, "fail on any violated bound");
  solve_cmd->add_flag("--relaxed", relaxed, "allow q >= alpha");

  std::vector<std::string> snapshot_paths;
  CLI::App* diagnose_cmd = app.add_subcommand("diagnose", "re-run diagnostics on snapshots");
  diagnose_cmd->add_option("--config", config_path, "experiment config")->required();
  diagnose_cmd->add_option("snapshots", snapshot_paths, "snapshot files")->required();
  diagnose_cmd->add_option("--out", out_flag, "output directory override");
  diagnose_cmd->add_flag("--gate", gate, "fail on any violated bound");
  diagnose_cmd->add_flag("--relaxed", relaxed, "allow q >= alpha");

  double tail_budget = 1e-3;
  CLI::App* converge_cmd = app.add_subcommand("converge", "run the long-time convergence study");
  converge_cmd->add_option("--config", config_path, "experiment config")->required();
  converge_cmd->add_option("--out", out_flag, "output directory override");
  converge_cmd->add_option("--tail-budget", tail_budget, "tail mass budget relative to the mass")
      ->check(CLI::PositiveNumber);
  converge_cmd->add_flag("--gate", gate, "fail unless E_1 strictly decreases");
  converge_cmd->add_flag("--relaxed", relaxed, "allow q >= alpha");

  std::vector<double> sweep_alphas;
  std::vector<double> sweep_qs;
  int jobs = 1;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "fan out over an (alpha, q) grid");
  sweep_cmd->add_option("--config", config_path, "base experiment config")->required();
  sweep_cmd->add_option("--alphas", sweep_alphas, "alpha values")->required()->delimiter(',');
  sweep_cmd->add_option("--qs", sweep_qs, "q values")->required()->delimiter(',');
  sweep_cmd->add_option("--jobs", jobs, "concurrent experiments")->check(CLI::Range(1, 64));
  sweep_cmd->add_option("--out", out_flag, "output directory override");
  sweep_cmd->add_flag("--gate", gate, "fail on any violated bound");
  sweep_cmd->add_flag("--relaxed", relaxed, "run supercritical combinations too");

  CLI11_PARSE(app, argc, argv);

  try {
    if (kernel_cmd->parsed()) {
      return run_kernel(kernel_alpha, kernel_t, kernel_half_width, kernel_samples, kernel_table,
                        out_flag, std::cout);
    }
    const fcd::ExperimentConfig config = load_config(config_path, relaxed);
    const std::string out_dir = resolve_out_dir(out_flag, config);
    if (solve_cmd->parsed()) return run_solve(config, out_dir, gate, std::cout);
    if (diagnose_cmd->parsed()) {
      return run_diagnose(config, snapshot_paths, out_dir, gate, std::cout);
    }
    if (converge_cmd->parsed()) {
      return run_converge(config, out_dir, tail_budget, gate, std::cout);
    }
    if (sweep_cmd->parsed()) {
      return run_sweep(config, sweep_alphas, sweep_qs, out_dir, jobs, gate, relaxed, std::cout);
    }
  } catch (const std::exception& error) {
    std::cerr << "fcd: " << error.what() << "\n";
    return kExitConfig;
  }
  return 0;
}
