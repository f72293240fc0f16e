#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace spinsec {

// Subsets of {1,...,N} as bit masks; bit (i-1) stands for index i.
// Wedge monomials are always read in increasing index order.
using Mask = std::uint32_t;

inline Mask bit_of(int i) { return Mask(1u) << (i - 1); }
inline bool has(Mask m, int i) { return (m >> (i - 1)) & 1u; }
inline int set_size(Mask m) { return std::popcount(m); }

inline Mask full_mask(int n) { return (n >= 32) ? ~Mask(0) : ((Mask(1) << n) - 1); }

// number of set bits strictly below index i (1-based)
inline int bits_below(Mask m, int i) {
  return std::popcount(m & (bit_of(i) - 1));
}
// number of set bits strictly above index i
inline int bits_above(Mask m, int i) { return std::popcount(m & ~((bit_of(i) << 1) - 1)); }

std::vector<int> mask_to_indices(Mask m);
Mask indices_to_mask(const std::vector<int>& v);
std::string mask_to_string(Mask m);

// Lexicographic order on the sorted index sequences ({1,2} < {1,3} < {2}).
bool set_lex_less(Mask a, Mask b);

// Visits every subset of `universe` (including 0 and universe itself).
template <typename F>
void for_each_subset(Mask universe, F&& f) {
  Mask s = 0;
  while (true) {
    f(s);
    if (s == universe) break;
    s = (s - universe) & universe;
  }
}

// sign of the shuffle merging sorted blocks A then B into sorted(A|B);
// requires A, B disjoint. Counts inversions (a,b) with a>b.
inline int shuffle_sign(Mask a, Mask b) {
  int inv = 0;
  Mask bb = b;
  while (bb) {
    int j = std::countr_zero(bb) + 1;
    bb &= bb - 1;
    inv += bits_above(a, j);
  }
  return (inv % 2 == 0) ? 1 : -1;
}

}  // namespace spinsec
