#ifndef FCD_SNAPSHOT_HPP
#define FCD_SNAPSHOT_HPP

#include <string>

#include "fcd/grid.hpp"

namespace fcd {

// Versioned text format: a four-line header (magic, point count, half width,
// time) followed by one full-precision sample per line. Reading a written
// file reproduces the field bit for bit.
void write_snapshot(const Field& u, const std::string& path);
Field read_snapshot(const std::string& path);

}  // namespace fcd

#endif
