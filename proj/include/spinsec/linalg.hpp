#pragma once

#include <cstdint>
#include <vector>

#include "spinsec/exact.hpp"

namespace spinsec {

// Dense rational matrix, row major.
struct QMatrix {
  int rows = 0, cols = 0;
  std::vector<Rat> a;

  QMatrix(int r, int c) : rows(r), cols(c), a(size_t(r) * c, Rat(0)) {}
  Rat& at(int r, int c) { return a[size_t(r) * cols + c]; }
  const Rat& at(int r, int c) const { return a[size_t(r) * cols + c]; }
};

int rank_exact(QMatrix m);
Rat determinant_exact(QMatrix m);
// Basis of the right kernel {x : M x = 0}.
std::vector<std::vector<Rat>> kernel_basis(QMatrix m);

// Rank of an integer matrix modulo a prime (rows as vectors of residues).
int rank_mod_p(std::vector<std::vector<std::uint64_t>> rows, std::uint64_t p);

}  // namespace spinsec
