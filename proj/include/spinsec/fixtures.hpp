#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace spinsec {

// Upper-triangular integer table indexed by 0 <= i <= j <= size-1; row i
// lists the entries j = i..size-1.
struct TriangularTable {
  std::vector<std::vector<long long>> rows;

  int size() const { return static_cast<int>(rows.size()); }
  long long at(int i, int j) const;  // symmetric access
};

// Plain-text format: one row per line, whitespace separated, '#' comments.
TriangularTable parse_triangular(std::istream& in);
TriangularTable parse_triangular_file(const std::string& path);
std::string format_triangular(const TriangularTable& t);

// Reference tables: multiplicities of the two-theta components of the
// fourth symmetric power of a half-spin representation, and of the even
// part of the quartic ideal of the secant variety, both on 0 <= i,j <= 20.
const TriangularTable& reference_quartic_table();
const TriangularTable& reference_quartic_ideal_table();

// entry-by-entry comparison of the computable sub-triangle
std::vector<std::string> diff_tables(const TriangularTable& computed,
                                     const TriangularTable& reference,
                                     int bound);

}  // namespace spinsec
