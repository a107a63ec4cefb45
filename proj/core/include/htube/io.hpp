#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "htube/profile_curves.hpp"

namespace htube::io {

/// Shortest decimal string that parses back to exactly the same double.
std::string format_double(double x);

/// Parses a double written by format_double (also accepts nan/inf spellings).
double parse_double(const std::string& s);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  /// Index of a header column; throws std::out_of_range if absent.
  std::size_t column(const std::string& name) const;
};

void write_csv(std::ostream& os, const CsvTable& table);
CsvTable read_csv(std::istream& is);

CsvTable profile_table(const ProfileCurve& curve);

}  // namespace htube::io
