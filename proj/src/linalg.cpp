#include "spinsec/linalg.hpp"

namespace spinsec {

namespace {

// Forward elimination to row echelon form; returns pivot column per row.
std::vector<int> echelon(QMatrix& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int p = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
    Rat inv = m.at(r, c);
    for (int j = c; j < m.cols; ++j) m.at(r, j) /= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Rat factor = m.at(i, c);
      for (int j = c; j < m.cols; ++j) m.at(i, j) -= factor * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank_exact(QMatrix m) { return static_cast<int>(echelon(m).size()); }

Rat determinant_exact(QMatrix m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant: not square");
  Rat det(1);
  for (int c = 0; c < m.cols; ++c) {
    int p = -1;
    for (int i = c; i < m.rows; ++i)
      if (m.at(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) return Rat(0);
    if (p != c) {
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(c, j));
      det = -det;
    }
    det *= m.at(c, c);
    Rat inv = m.at(c, c);
    for (int i = c + 1; i < m.rows; ++i) {
      if (m.at(i, c) == 0) continue;
      Rat factor = m.at(i, c) / inv;
      for (int j = c; j < m.cols; ++j) m.at(i, j) -= factor * m.at(c, j);
    }
  }
  return det;
}

std::vector<std::vector<Rat>> kernel_basis(QMatrix m) {
  const int cols = m.cols;
  std::vector<int> pivots = echelon(m);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;

  std::vector<std::vector<Rat>> basis;
  for (int free_c = 0; free_c < cols; ++free_c) {
    if (is_pivot[free_c]) continue;
    std::vector<Rat> v(cols, Rat(0));
    v[free_c] = 1;
    for (size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -m.at(static_cast<int>(r), free_c);
    basis.push_back(std::move(v));
  }
  return basis;
}

int rank_mod_p(std::vector<std::vector<std::uint64_t>> rows, std::uint64_t p) {
  if (rows.empty()) return 0;
  const size_t cols = rows[0].size();
  auto mulmod = [p](std::uint64_t x, std::uint64_t y) {
    return static_cast<std::uint64_t>((__uint128_t)x * y % p);
  };
  auto powmod = [&](std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mulmod(r, b);
      b = mulmod(b, b);
      e >>= 1;
    }
    return r;
  };
  size_t r = 0;
  int rank = 0;
  for (size_t c = 0; c < cols && r < rows.size(); ++c) {
    size_t piv = r;
    while (piv < rows.size() && rows[piv][c] % p == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    std::uint64_t inv = powmod(rows[r][c] % p, p - 2);
    for (size_t j = c; j < cols; ++j) rows[r][j] = mulmod(rows[r][j] % p, inv);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r) continue;
      std::uint64_t f = rows[i][c] % p;
      if (!f) continue;
      for (size_t j = c; j < cols; ++j) {
        std::uint64_t sub = mulmod(f, rows[r][j]);
        rows[i][j] = (rows[i][j] % p + p - sub) % p;
      }
    }
    ++r;
    ++rank;
  }
  return rank;
}

}  // namespace spinsec
