#include "spinsec/indexset.hpp"

namespace spinsec {

std::vector<int> mask_to_indices(Mask m) {
  std::vector<int> v;
  while (m) {
    v.push_back(std::countr_zero(m) + 1);
    m &= m - 1;
  }
  return v;
}

Mask indices_to_mask(const std::vector<int>& v) {
  Mask m = 0;
  for (int i : v) m |= bit_of(i);
  return m;
}

std::string mask_to_string(Mask m) {
  std::string s = "{";
  bool first = true;
  for (int i : mask_to_indices(m)) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

bool set_lex_less(Mask a, Mask b) {
  while (a && b) {
    int ia = std::countr_zero(a), ib = std::countr_zero(b);
    if (ia != ib) return ia < ib;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

}  // namespace spinsec
