#include "fcd/snapshot.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "fcd/csv.hpp"

namespace fcd {

namespace {

constexpr const char* kMagic = "fcd-snapshot 1";

[[noreturn]] void fail(const std::string& path, int line, const std::string& message) {
  std::ostringstream msg;
  msg << path << ":" << line << ": " << message;
  throw std::runtime_error(msg.str());
}

// Reads "<label> <number>" with nothing trailing.
double labeled_number(const std::string& path, int line, const std::string& text,
                      const std::string& label) {
  if (text.size() <= label.size() || text.compare(0, label.size(), label) != 0 ||
      text[label.size()] != ' ') {
    fail(path, line, "expected '" + label + " <value>', got '" + text + "'");
  }
  const std::string body = text.substr(label.size() + 1);
  char* tail = nullptr;
  const double value = std::strtod(body.c_str(), &tail);
  if (tail != body.c_str() + body.size() || body.empty()) {
    fail(path, line, label + ": malformed number '" + body + "'");
  }
  return value;
}

}  // namespace

void write_snapshot(const Field& u, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << kMagic << "\n";
  out << "n " << u.grid.n_points << "\n";
  out << "half_width " << format_full(u.grid.half_width) << "\n";
  out << "time " << format_full(u.time) << "\n";
  for (double sample : u.samples) {
    out << format_full(sample) << "\n";
  }
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

Field read_snapshot(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");

  std::string line;
  int number = 0;
  auto next_line = [&](const char* what) {
    if (!std::getline(in, line)) fail(path, number + 1, std::string("truncated: expected ") + what);
    ++number;
  };

  next_line("the format header");
  if (line != kMagic) fail(path, number, "unsupported header '" + line + "'");
  next_line("the point count");
  const double n_raw = labeled_number(path, number, line, "n");
  next_line("the half width");
  const double half_width = labeled_number(path, number, line, "half_width");
  next_line("the time stamp");
  const double time = labeled_number(path, number, line, "time");

  if (!(n_raw > 0.0 && n_raw == static_cast<double>(static_cast<std::size_t>(n_raw)))) {
    fail(path, 2, "point count must be a positive integer");
  }
  Field u;
  try {
    u = make_field(make_grid(half_width, static_cast<std::size_t>(n_raw)));
  } catch (const std::invalid_argument& error) {
    fail(path, 2, std::string("invalid grid in header: ") + error.what());
  }
  u.time = time;

  for (std::size_t i = 0; i < u.samples.size(); ++i) {
    next_line("a sample");
    char* tail = nullptr;
    const double value = std::strtod(line.c_str(), &tail);
    if (line.empty() || tail != line.c_str() + line.size()) {
      fail(path, number, "malformed sample '" + line + "'");
    }
    u.samples[i] = value;
  }
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty()) fail(path, number, "trailing content '" + line + "'");
  }
  return u;
}

}  // namespace fcd
