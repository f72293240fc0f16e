#pragma once

#include <map>
#include <optional>

#include "spinsec/extv.hpp"

namespace spinsec {

enum class SpinParity { Even, Odd, Mixed };

// Sparse exact element of /\E, the spinor module of so(2n), indexed by
// subsets of {1..n}. With eps = n mod 2, the even half-spin space D+ is
// spanned by the e_I with |I| = n (mod 2).
struct SpinElem {
  int rank = 0;
  std::map<Mask, Rat> terms;

  explicit SpinElem(int n) : rank(n) {}
  static SpinElem zero(int n) { return SpinElem(n); }
  static SpinElem vacuum(int n) { return monomial(n, 0); }
  static SpinElem monomial(int n, Mask m, const Rat& c = Rat(1));
  // e_1 ^ ... ^ e_n, the representative of E itself
  static SpinElem u_E(int n) { return monomial(n, full_mask(n)); }

  void add_term(Mask m, const Rat& c);
  bool is_zero() const { return terms.empty(); }
  SpinParity parity() const;
  // true when all |I| = n (mod 2), i.e. the element lies in D+
  bool in_plus_half() const;
  bool operator==(const SpinElem& o) const {
    return rank == o.rank && terms == o.terms;
  }
};

SpinElem operator+(const SpinElem& a, const SpinElem& b);
SpinElem operator-(const SpinElem& a, const SpinElem& b);
SpinElem operator*(const Rat& c, const SpinElem& a);

// Module action of v = v' + v'' on /\E: o(v') + 2 i(v'').
SpinElem clifford_act(const VVector& v, const SpinElem& s);

// Main anti-automorphism on spinors: e_I -> (-1)^{|I|(|I|-1)/2} e_I.
SpinElem alpha(const SpinElem& s);

// Invariant bilinear form on /\E: the e_1^...^e_n coefficient of
// alpha(u) ^ v. Nonzero only between complementary degrees.
Rat spin_pairing(const SpinElem& u, const SpinElem& v);

// u_G = prod_i (1 + e_{2i-1} ^ e_{2i}) at rank n = 2m.
SpinElem build_u_G(int m);

// beta(u,v) = u f alpha(v) in Cl(V) ~ /\V with f = f_1...f_n.
ExtVElem beta(const SpinElem& u, const SpinElem& v);
ExtVElem beta_k(const SpinElem& u, const SpinElem& v, int k);

// beta(e_I, e_J) for basis monomials, and a single coefficient of it.
ExtVElem beta_pair_mono(int n, Mask I, Mask J);
Int beta_pair_mono_coeff(int n, Mask I, Mask J, Mask target);

// Purity: beta_k(u,u) = 0 for every k < n.
bool is_pure(const SpinElem& u);

inline constexpr int kMaxPureSpinorRank = 12;

// The spinor line annihilated by a frame of a maximal isotropic subspace,
// by exact kernel computation over each half-spin block; normalized so the
// lexicographically least monomial has coefficient 1. Annihilation is
// taken in the plain-contraction normalization o(v') + i(v''), the one
// under which the frame e_i + sum_j u_ij f_j annihilates the sub-Pfaffian
// spinor of u itself.
SpinElem pure_spinor_of_subspace(const std::vector<VVector>& frame);

// Embeds a spinor into /\V (pure e-monomials).
ExtVElem embed_in_extv(const SpinElem& s);

}  // namespace spinsec
