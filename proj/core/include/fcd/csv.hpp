#ifndef FCD_CSV_HPP
#define FCD_CSV_HPP

#include <string>
#include <vector>

namespace fcd {

// Shortest decimal that parses back to the identical double.
std::string format_full(double value);

// Comma-separated table with a single header line. Identical input produces
// a byte-identical file.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

}  // namespace fcd

#endif
