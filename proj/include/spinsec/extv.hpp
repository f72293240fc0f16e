#pragma once

#include <map>

#include "spinsec/exact.hpp"
#include "spinsec/indexset.hpp"

namespace spinsec {

// Monomial of the exterior algebra on 2n symbols e_1<...<e_n<f_1<...<f_n,
// packed as a mask: bit i-1 is e_i, bit n+i-1 is f_i. Every element is
// stored on these increasing-order monomials; reordering signs are folded
// into the coefficients at insertion.
struct VMono {
  static Mask e(int i, int /*n*/) { return bit_of(i); }
  static Mask f(int i, int n) { return bit_of(n + i); }
  static Mask epart(Mask m, int n) { return m & full_mask(n); }
  static Mask fpart(Mask m, int n) { return m >> n; }  // as an e-style mask
  static int degree(Mask m) { return set_size(m); }
};

// A vector of V = E + F with rational coordinates in the e_i / f_i frame.
// The bilinear form is q(e_i, f_j) = delta_ij, both halves isotropic.
struct VVector {
  int rank = 0;
  std::vector<Rat> e, f;

  explicit VVector(int n) : rank(n), e(n, Rat(0)), f(n, Rat(0)) {}
  static VVector basis_e(int n, int i);
  static VVector basis_f(int n, int i);
};

Rat form_q(const VVector& v, const VVector& w);

// Sparse exact element of the exterior algebra on the 2n symbols.
struct ExtVElem {
  int rank = 0;
  std::map<Mask, Rat> terms;

  explicit ExtVElem(int n) : rank(n) {}
  static ExtVElem zero(int n) { return ExtVElem(n); }
  static ExtVElem one(int n);
  static ExtVElem monomial(int n, Mask m, const Rat& c = Rat(1));

  void add_term(Mask m, const Rat& c);
  bool is_zero() const { return terms.empty(); }
  ExtVElem grade(int k) const;  // degree-k component
  bool operator==(const ExtVElem& o) const {
    return rank == o.rank && terms == o.terms;
  }
};

ExtVElem operator+(const ExtVElem& a, const ExtVElem& b);
ExtVElem operator-(const ExtVElem& a, const ExtVElem& b);
ExtVElem operator*(const Rat& c, const ExtVElem& a);

// psi(v) = o(v) + i(v) applied to x; the Clifford representation of V on
// its own exterior algebra (no factor 2 here).
ExtVElem psi_apply(const VVector& v, const ExtVElem& x);

// Plain exterior product (no Clifford corrections).
ExtVElem wedge(const ExtVElem& a, const ExtVElem& b);
ExtVElem wedge(const VVector& v, const ExtVElem& x);

// Clifford product under the identification Cl(V) ~ /\V; associative,
// with v.v = q(v,v) for degree-one v.
ExtVElem clifford_mul(const ExtVElem& a, const ExtVElem& b);

// Main anti-automorphism: multiplies the degree-d component by
// (-1)^{d(d-1)/2} (reversal of a product of isotropic vectors).
ExtVElem alpha_ext(const ExtVElem& x);

// det(q(v_a, w_b)) pairing of two decomposable tensors of equal degree.
Rat ext_pairing(const ExtVElem& x, const ExtVElem& y);

}  // namespace spinsec
