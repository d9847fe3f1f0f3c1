#include "fcd/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>

#include "fcd/initial_data.hpp"
#include "fcd/snapshot.hpp"

namespace fcd {

namespace {

struct Raw {
  std::string value;
  int line = 0;
};

// Parsed assignments keyed by "section.key"; duplicates are violations.
using RawMap = std::map<std::string, Raw>;

std::string trim(const std::string& text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  return text.substr(begin, end - begin);
}

bool parse_number(const std::string& text, double* out) {
  const std::string body = trim(text);
  if (body.empty()) return false;
  char* tail = nullptr;
  const double value = std::strtod(body.c_str(), &tail);
  if (tail != body.c_str() + body.size()) return false;
  *out = value;
  return true;
}

bool parse_count(const std::string& text, long long* out) {
  const std::string body = trim(text);
  if (body.empty()) return false;
  char* tail = nullptr;
  const long long value = std::strtoll(body.c_str(), &tail, 10);
  if (tail != body.c_str() + body.size()) return false;
  *out = value;
  return true;
}

std::vector<std::string> split_tokens(const std::string& text) {
  std::string separated = text;
  std::replace(separated.begin(), separated.end(), ',', ' ');
  std::vector<std::string> tokens;
  std::istringstream stream(separated);
  std::string token;
  while (stream >> token) tokens.push_back(token);
  return tokens;
}

class Reader {
 public:
  Reader(const RawMap& raw, std::vector<ConfigError>* errors) : raw_(raw), errors_(errors) {}

  void fail(int line, const std::string& message) { errors_->push_back({line, message}); }

  bool has(const std::string& key) const { return raw_.count(key) != 0; }

  int line_of(const std::string& key) const {
    auto it = raw_.find(key);
    return it == raw_.end() ? 0 : it->second.line;
  }

  // Each getter leaves *out untouched and records a violation on bad input.
  void number(const std::string& key, double* out) {
    auto it = raw_.find(key);
    if (it == raw_.end()) return;
    double value = 0.0;
    if (!parse_number(it->second.value, &value)) {
      fail(it->second.line, key + ": expected a number, got '" + it->second.value + "'");
      return;
    }
    *out = value;
  }

  void count(const std::string& key, long long* out) {
    auto it = raw_.find(key);
    if (it == raw_.end()) return;
    long long value = 0;
    if (!parse_count(it->second.value, &value)) {
      fail(it->second.line, key + ": expected an integer, got '" + it->second.value + "'");
      return;
    }
    *out = value;
  }

  void flag(const std::string& key, bool* out) {
    auto it = raw_.find(key);
    if (it == raw_.end()) return;
    const std::string body = trim(it->second.value);
    if (body == "true") {
      *out = true;
    } else if (body == "false") {
      *out = false;
    } else {
      fail(it->second.line, key + ": expected true or false, got '" + body + "'");
    }
  }

  void text(const std::string& key, std::string* out) {
    auto it = raw_.find(key);
    if (it != raw_.end()) *out = trim(it->second.value);
  }

  void number_list(const std::string& key, std::vector<double>* out) {
    auto it = raw_.find(key);
    if (it == raw_.end()) return;
    std::vector<double> values;
    for (const std::string& token : split_tokens(it->second.value)) {
      double value = 0.0;
      if (!parse_number(token, &value)) {
        fail(it->second.line, key + ": expected numbers, got '" + token + "'");
        return;
      }
      values.push_back(value);
    }
    *out = std::move(values);
  }

  void require(const std::string& key) {
    if (!has(key)) fail(0, "missing required key " + key);
  }

 private:
  const RawMap& raw_;
  std::vector<ConfigError>* errors_;
};

const std::map<std::string, std::vector<std::string>>& known_keys() {
  static const std::map<std::string, std::vector<std::string>> keys{
      {"model", {"alpha", "q", "mass", "relaxed"}},
      {"grid", {"half_width", "n_points"}},
      {"solver",
       {"scheme", "delta", "cfl", "end_time", "record_times", "flux", "picard_tol",
        "picard_max_iters"}},
      {"initial_data", {"kind", "half_extent", "width", "t0", "path"}},
      {"diagnostics", {"r_local", "r_tail", "slack"}},
      {"outputs", {"directory", "formats"}},
  };
  return keys;
}

bool key_known(const std::string& section, const std::string& key) {
  auto it = known_keys().find(section);
  if (it == known_keys().end()) return false;
  for (const std::string& candidate : it->second) {
    if (candidate == key) return true;
  }
  return false;
}

RawMap scan_lines(const std::string& text, std::vector<ConfigError>* errors) {
  RawMap raw;
  std::istringstream stream(text);
  std::string line;
  std::string section;
  bool section_known = true;
  int number = 0;
  while (std::getline(stream, line)) {
    ++number;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;

    if (body.front() == '[') {
      if (body.back() != ']') {
        errors->push_back({number, "unterminated section header '" + body + "'"});
        continue;
      }
      section = trim(body.substr(1, body.size() - 2));
      section_known = known_keys().count(section) != 0;
      if (!section_known) errors->push_back({number, "unknown section [" + section + "]"});
      continue;
    }

    const std::size_t eq = body.find('=');
    if (eq == std::string::npos) {
      errors->push_back({number, "expected 'key = value', got '" + body + "'"});
      continue;
    }
    if (section.empty()) {
      errors->push_back({number, "assignment before any [section] header"});
      continue;
    }
    if (!section_known) continue;  // already reported at the header

    const std::string key = trim(body.substr(0, eq));
    const std::string value = trim(body.substr(eq + 1));
    if (!key_known(section, key)) {
      errors->push_back({number, "unknown key '" + key + "' in [" + section + "]"});
      continue;
    }
    const std::string full = section + "." + key;
    if (raw.count(full) != 0) {
      errors->push_back({number, "duplicate key " + full + " (first set on line " +
                                     std::to_string(raw[full].line) + ")"});
      continue;
    }
    raw[full] = {value, number};
  }
  return raw;
}

}  // namespace

ParseResult parse_config(const std::string& text, bool force_relaxed) {
  ParseResult result;
  RawMap raw = scan_lines(text, &result.errors);
  Reader reader(raw, &result.errors);
  ExperimentConfig& config = result.config;

  for (const char* key : {"model.alpha", "model.q", "model.mass", "grid.half_width",
                          "grid.n_points", "solver.end_time"}) {
    reader.require(key);
  }

  reader.number("model.alpha", &config.model.alpha);
  reader.number("model.q", &config.model.q);
  reader.number("model.mass", &config.model.mass);
  reader.flag("model.relaxed", &config.model.relaxed);
  if (force_relaxed) config.model.relaxed = true;

  double half_width = 0.0;
  long long n_points = 0;
  reader.number("grid.half_width", &half_width);
  reader.count("grid.n_points", &n_points);

  std::string scheme = "splitting";
  std::string flux = "godunov";
  long long picard_iters = static_cast<long long>(config.solver.picard_max_iters);
  reader.text("solver.scheme", &scheme);
  reader.text("solver.flux", &flux);
  reader.number("solver.delta", &config.solver.delta);
  reader.number("solver.cfl", &config.solver.cfl);
  reader.number("solver.end_time", &config.solver.end_time);
  reader.number("solver.picard_tol", &config.solver.picard_tol);
  reader.count("solver.picard_max_iters", &picard_iters);
  reader.number_list("solver.record_times", &config.solver.record_times);

  std::string kind = "box";
  reader.text("initial_data.kind", &kind);
  reader.number("initial_data.half_extent", &config.initial_data.half_extent);
  reader.number("initial_data.width", &config.initial_data.width);
  reader.number("initial_data.t0", &config.initial_data.t0);
  reader.text("initial_data.path", &config.initial_data.path);

  reader.number("diagnostics.r_local", &config.diagnostics.r_local);
  reader.number("diagnostics.r_tail", &config.diagnostics.r_tail);
  reader.number("diagnostics.slack", &config.diagnostics.slack);

  reader.text("outputs.directory", &config.outputs.directory);

  if (scheme == "splitting") {
    config.solver.scheme = Scheme::splitting;
  } else if (scheme == "duhamel") {
    config.solver.scheme = Scheme::duhamel;
  } else {
    reader.fail(reader.line_of("solver.scheme"),
                "solver.scheme: expected splitting or duhamel, got '" + scheme + "'");
  }
  if (flux == "godunov") {
    config.solver.flux_scheme = FluxScheme::godunov;
  } else if (flux == "rusanov") {
    config.solver.flux_scheme = FluxScheme::rusanov;
  } else {
    reader.fail(reader.line_of("solver.flux"),
                "solver.flux: expected godunov or rusanov, got '" + flux + "'");
  }
  if (kind == "box") {
    config.initial_data.kind = InitialKind::box;
  } else if (kind == "bump") {
    config.initial_data.kind = InitialKind::bump;
  } else if (kind == "nwave") {
    config.initial_data.kind = InitialKind::nwave;
  } else if (kind == "file") {
    config.initial_data.kind = InitialKind::file;
  } else {
    reader.fail(reader.line_of("initial_data.kind"),
                "initial_data.kind: expected box, bump, nwave, or file, got '" + kind + "'");
  }

  if (raw.count("outputs.formats") != 0) {
    config.outputs.csv = config.outputs.json = config.outputs.snapshot = false;
    for (const std::string& token : split_tokens(raw.at("outputs.formats").value)) {
      if (token == "csv") {
        config.outputs.csv = true;
      } else if (token == "json") {
        config.outputs.json = true;
      } else if (token == "snapshot") {
        config.outputs.snapshot = true;
      } else {
        reader.fail(reader.line_of("outputs.formats"),
                    "outputs.formats: unknown format '" + token + "'");
      }
    }
  }

  // Cross-field validation below reuses the library validators but pins the
  // messages to the lines that caused them.
  const std::size_t scan_errors = result.errors.size();

  if (!(picard_iters >= 1 && picard_iters <= 1000000)) {
    reader.fail(reader.line_of("solver.picard_max_iters"),
                "solver.picard_max_iters must be in [1, 1000000]");
  } else {
    config.solver.picard_max_iters = static_cast<int>(picard_iters);
  }

  if (!(n_points >= 0)) {
    reader.fail(reader.line_of("grid.n_points"), "grid.n_points must be positive");
    n_points = 0;
  }
  try {
    config.grid = make_grid(half_width, static_cast<std::size_t>(n_points));
  } catch (const std::invalid_argument& error) {
    reader.fail(reader.line_of("grid.n_points"), error.what());
  }

  if (!config.model.relaxed && std::isfinite(config.model.q) &&
      std::isfinite(config.model.alpha) && !(config.model.q < config.model.alpha)) {
    std::ostringstream msg;
    msg << "subcritical requires q < alpha (q = " << config.model.q
        << ", alpha = " << config.model.alpha << "); set model.relaxed = true to override";
    reader.fail(reader.line_of("model.q"), msg.str());
  } else {
    try {
      validate_model_params(config.model);
    } catch (const std::invalid_argument& error) {
      reader.fail(reader.line_of("model.q"), error.what());
    }
  }

  const double horizon = config.solver.end_time;
  if (!(std::isfinite(horizon) && horizon > 0.0)) {
    reader.fail(reader.line_of("solver.end_time"), "solver.end_time must be positive and finite");
  } else {
    if (!(config.solver.delta > 0.0 && config.solver.delta <= horizon)) {
      reader.fail(reader.line_of("solver.delta"),
                  "solver.delta must lie in (0, end_time]");
    }
    for (double t : config.solver.record_times) {
      if (!(t >= 0.0 && t <= horizon)) {
        std::ostringstream msg;
        msg << "record time " << t << " lies outside [0, " << horizon << "]";
        reader.fail(reader.line_of("solver.record_times"), msg.str());
      }
    }
    for (std::size_t i = 1; i < config.solver.record_times.size(); ++i) {
      if (config.solver.record_times[i] < config.solver.record_times[i - 1]) {
        reader.fail(reader.line_of("solver.record_times"),
                    "record times must be sorted ascending");
        break;
      }
    }
  }
  if (!(config.solver.cfl > 0.0 && config.solver.cfl <= 1.0)) {
    reader.fail(reader.line_of("solver.cfl"), "solver.cfl must lie in (0, 1]");
  }
  if (!(config.solver.picard_tol > 0.0)) {
    reader.fail(reader.line_of("solver.picard_tol"), "solver.picard_tol must be positive");
  }

  const double half = config.grid.half_width;
  switch (config.initial_data.kind) {
    case InitialKind::box:
      if (half > 0.0 &&
          !(config.initial_data.half_extent > 0.0 && config.initial_data.half_extent <= half / 2.0)) {
        reader.fail(reader.line_of("initial_data.half_extent"),
                    "initial_data.half_extent must lie in (0, half_width/2]");
      }
      break;
    case InitialKind::bump:
      if (half > 0.0 &&
          !(config.initial_data.width > 0.0 && config.initial_data.width <= half / 2.0)) {
        reader.fail(reader.line_of("initial_data.width"),
                    "initial_data.width must lie in (0, half_width/2]");
      }
      break;
    case InitialKind::nwave:
      if (!(config.initial_data.t0 > 0.0)) {
        reader.fail(reader.line_of("initial_data.t0"), "initial_data.t0 must be positive");
      }
      break;
    case InitialKind::file:
      if (config.initial_data.path.empty()) {
        reader.fail(reader.line_of("initial_data.path"),
                    "initial_data.path is required for kind = file");
      }
      break;
  }

  if (half > 0.0) {
    if (config.diagnostics.r_local == 0.0 && !reader.has("diagnostics.r_local")) {
      config.diagnostics.r_local = half / 4.0;
    }
    if (config.diagnostics.r_tail == 0.0 && !reader.has("diagnostics.r_tail")) {
      config.diagnostics.r_tail = half / 2.0;
    }
    if (!(config.diagnostics.r_local > 0.0 && config.diagnostics.r_local <= half)) {
      reader.fail(reader.line_of("diagnostics.r_local"),
                  "diagnostics.r_local must lie in (0, half_width]");
    }
    if (!(config.diagnostics.r_tail > 0.0 && config.diagnostics.r_tail <= half)) {
      reader.fail(reader.line_of("diagnostics.r_tail"),
                  "diagnostics.r_tail must lie in (0, half_width]");
    }
  }
  if (!(config.diagnostics.slack >= 0.0)) {
    reader.fail(reader.line_of("diagnostics.slack"), "diagnostics.slack must be nonnegative");
  }
  if (config.outputs.directory.empty()) {
    reader.fail(reader.line_of("outputs.directory"), "outputs.directory must not be empty");
  }

  // A clean parse must also satisfy the runtime validators verbatim.
  if (result.errors.size() == scan_errors && result.errors.empty()) {
    try {
      validate_solver_config(config.solver);
    } catch (const std::invalid_argument& error) {
      reader.fail(0, error.what());
    }
  }
  return result;
}

std::string describe_errors(const std::vector<ConfigError>& errors) {
  std::ostringstream out;
  for (const ConfigError& error : errors) {
    if (error.line > 0) {
      out << "line " << error.line << ": " << error.message << "\n";
    } else {
      out << "config: " << error.message << "\n";
    }
  }
  return out.str();
}

Field build_initial_data(const ExperimentConfig& config) {
  switch (config.initial_data.kind) {
    case InitialKind::box:
      return box_data(config.grid, config.model.mass, config.initial_data.half_extent);
    case InitialKind::bump:
      return bump_data(config.grid, config.model.mass, config.initial_data.width);
    case InitialKind::nwave:
      return nwave_data(config.grid, config.model.mass, config.model.q, config.initial_data.t0);
    case InitialKind::file: {
      Field loaded = read_snapshot(config.initial_data.path);
      if (loaded.grid.n_points != config.grid.n_points ||
          loaded.grid.half_width != config.grid.half_width) {
        throw std::runtime_error("initial data file '" + config.initial_data.path +
                                 "' does not match the configured grid");
      }
      loaded.time = 0.0;
      return loaded;
    }
  }
  throw std::logic_error("unreachable initial data kind");
}

}  // namespace fcd
