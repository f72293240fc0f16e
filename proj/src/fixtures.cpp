#include "spinsec/fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace spinsec {

long long TriangularTable::at(int i, int j) const {
  if (i > j) std::swap(i, j);
  if (i < 0 || j >= size()) throw std::out_of_range("TriangularTable::at");
  return rows[i][j - i];
}

TriangularTable parse_triangular(std::istream& in) {
  TriangularTable t;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<long long> row;
    long long v;
    while (ls >> v) row.push_back(v);
    if (!row.empty()) t.rows.push_back(std::move(row));
  }
  for (size_t i = 0; i < t.rows.size(); ++i)
    if (t.rows[i].size() != t.rows.size() - i)
      throw std::runtime_error("parse_triangular: row " + std::to_string(i) +
                               " has wrong length");
  return t;
}

TriangularTable parse_triangular_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture file " + path);
  return parse_triangular(in);
}

std::string format_triangular(const TriangularTable& t) {
  std::ostringstream os;
  for (int i = 0; i < t.size(); ++i) {
    for (int k = 0; k < int(t.rows[i].size()); ++k) {
      if (k) os << ' ';
      os << t.rows[i][k];
    }
    os << '\n';
  }
  return os.str();
}

namespace {

TriangularTable from_literal(const char* text) {
  std::istringstream in(text);
  return parse_triangular(in);
}

const char* kQuarticTableText = R"(
1 0 0 0 1 0 1 0 2 0 1 0 3 0 2 0 4 0 3 0 5
0 0 0 0 0 0 0 0 1 0 1 0 2 0 2 0 3 0 4 0
0 0 0 0 1 0 0 0 2 0 1 0 3 0 2 0 5 0 3
0 0 0 0 1 0 1 0 1 0 2 0 3 0 3 0 4 0
1 0 0 0 1 0 1 0 3 0 1 0 4 0 3 0 6
0 0 0 0 1 0 0 0 2 0 2 0 3 0 3 0
1 0 0 0 2 0 1 0 3 0 2 0 5 0 3
0 0 0 0 1 0 1 0 2 0 2 0 4 0
1 0 0 0 2 0 1 0 4 0 2 0 5
1 0 0 0 2 0 1 0 3 0 3 0
1 0 0 0 2 0 1 0 4 0 2
0 0 0 0 2 0 1 0 3 0
2 0 0 0 3 0 2 0 5
1 0 0 0 2 0 1 0
1 0 0 0 3 0 1
1 0 0 0 3 0
2 0 0 0 3
1 0 0 0
2 0 0
1 0
2
)";

const char* kQuarticIdealTableText = R"(
0 0 0 0 0 0 0 0 1 0 0 0 2 0 1 0 3 0 2 0 4
0 0 0 0 0 0 0 0 1 0 1 0 2 0 2 0 3 0 4 0
0 0 0 0 0 0 0 0 1 0 1 0 2 0 2 0 4 0 3
0 0 0 0 1 0 1 0 1 0 2 0 3 0 3 0 4 0
0 0 0 0 0 0 1 0 2 0 1 0 3 0 3 0 5
0 0 0 0 1 0 0 0 2 0 2 0 3 0 3 0
0 0 0 0 1 0 1 0 2 0 2 0 4 0 3
0 0 0 0 1 0 1 0 2 0 2 0 4 0
0 0 0 0 1 0 1 0 3 0 2 0 4
1 0 0 0 2 0 1 0 3 0 3 0
0 0 0 0 1 0 1 0 3 0 2
0 0 0 0 2 0 1 0 3 0
1 0 0 0 2 0 2 0 4
1 0 0 0 2 0 1 0
0 0 0 0 2 0 1
1 0 0 0 3 0
1 0 0 0 2
1 0 0 0
1 0 0
1 0
1
)";

}  // namespace

const TriangularTable& reference_quartic_table() {
  static TriangularTable t = from_literal(kQuarticTableText);
  return t;
}

const TriangularTable& reference_quartic_ideal_table() {
  static TriangularTable t = from_literal(kQuarticIdealTableText);
  return t;
}

std::vector<std::string> diff_tables(const TriangularTable& computed,
                                     const TriangularTable& reference,
                                     int bound) {
  std::vector<std::string> diffs;
  for (int i = 0; i <= bound; ++i)
    for (int j = i; j <= bound; ++j) {
      long long a = computed.at(i, j);
      long long b = reference.at(i, j);
      if (a != b)
        diffs.push_back("(" + std::to_string(i) + "," + std::to_string(j) +
                        "): computed " + std::to_string(a) + ", reference " +
                        std::to_string(b));
    }
  return diffs;
}

}  // namespace spinsec
