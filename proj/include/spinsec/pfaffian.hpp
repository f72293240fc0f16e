#pragma once

#include <random>
#include <unordered_map>

#include "spinsec/spin.hpp"

namespace spinsec {

// Exact skew-symmetric matrix; set() keeps a[j][i] = -a[i][j].
struct SkewMatrix {
  int n = 0;
  std::vector<Rat> a;

  explicit SkewMatrix(int size) : n(size), a(size_t(size) * size, Rat(0)) {}
  const Rat& at(int i, int j) const { return a[size_t(i - 1) * n + (j - 1)]; }
  void set(int i, int j, const Rat& v);

  // entries with numerator in [-num_bound, num_bound], denominator in
  // [1, den_bound]
  static SkewMatrix random(int n, std::mt19937_64& rng, long num_bound,
                           long den_bound = 1);
};

// Lazy table of all principal sub-Pfaffians of one matrix, keyed by the
// row/column subset. Pf of the empty set is 1; odd sets give 0.
class SubPfaffianTable {
 public:
  explicit SubPfaffianTable(const SkewMatrix& m) : m_(&m) {}
  const Rat& get(Mask K);

 private:
  const SkewMatrix* m_;
  std::unordered_map<Mask, Rat> memo_;
};

Rat sub_pfaffian(const SkewMatrix& m, Mask K);
Rat pfaffian(const SkewMatrix& m);

// Test oracle: sum over perfect matchings with the crossing sign.
Rat pfaffian_matching_oracle(const SkewMatrix& m, Mask K);

Rat determinant(const SkewMatrix& m);

// u_{E(u)} = sum over even K of Pf_K(u) e_{K^c}; the coefficient of
// e_1 ^ ... ^ e_n is 1.
SpinElem spinor_of_skew(const SkewMatrix& m);

// The isotropic frame spanning the subspace attached to the matrix by the
// parametrization, expressed in this basis convention (the f coordinates
// pick up a checkerboard sign relative to the raw entries).
std::vector<VVector> skew_frame(const SkewMatrix& m);

}  // namespace spinsec
