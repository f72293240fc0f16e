#pragma once

#include <map>

#include "spinsec/spin.hpp"

namespace spinsec {

// Sparse element of (/\V) (x) S where the second slot is either a spinor
// monomial (an e-set) or another /\V monomial, depending on use. Keys pack
// both masks into 64 bits.
struct TensorElem {
  int rank = 0;
  std::map<std::uint64_t, Rat> terms;

  explicit TensorElem(int n) : rank(n) {}
  static std::uint64_t key(Mask left, Mask right) {
    return (std::uint64_t(left) << 32) | right;
  }
  static Mask left_of(std::uint64_t k) { return Mask(k >> 32); }
  static Mask right_of(std::uint64_t k) { return Mask(k & 0xffffffffu); }

  void add_term(Mask left, Mask right, const Rat& c);
  bool is_zero() const { return terms.empty(); }
  bool operator==(const TensorElem& o) const {
    return rank == o.rank && terms == o.terms;
  }
};

TensorElem operator+(const TensorElem& a, const TensorElem& b);
TensorElem operator-(const TensorElem& a, const TensorElem& b);
TensorElem operator*(const Rat& c, const TensorElem& a);

// If b == c * a termwise, returns the ratio c (a must be nonzero).
std::optional<Rat> proportionality_ratio(const TensorElem& a,
                                         const TensorElem& b);

// psi_{a,b} = sum over disjoint I, J with 2|I| + |J| = n - a and |J| = b of
// e_I ^ f_I ^ f_J (x) e_J, each such summand with coefficient one (stored
// on canonically ordered monomials, so the reordering sign of f_I ^ f_J is
// folded into the coefficient). For the classical indices use
// psi_tensor(n, i, j) = psi_{2i, 2j}.
TensorElem psi_general(int n, int vdeg, int spindeg);
TensorElem psi_tensor(int n, int i, int j);

// kappa_i: (/\^{n-2i-1} V) (x) D-  ->  (/\^{n-2i} V) (x) D+ given by
// sum_k (e_k ^ w) (x) i(f_k) s + (f_k ^ w) (x) e_k ^ s.
// `contraction_factor` selects the spin-slot contraction normalization
// (1 = plain, 2 = module-action convention).
TensorElem kappa_apply(int i, const TensorElem& x, int contraction_factor = 1);

// The two basic maps on (/\^p V) (x) (/\^q V): comultiply one vector off
// the first slot and either wedge it into the second (q -> q+1) or
// contract it there via the form (q -> q-1).
TensorElem alpha_step(const TensorElem& x, bool up);

// alpha_{p,q}^{r,s}: composite of basic steps; well defined whenever
// p+q-r-s is even and |q-s| <= p-r.
TensorElem alpha_pq_rs(const TensorElem& x, int r, int s);

// the (p, q) bidegree of a homogeneous tensor (throws if mixed)
std::pair<int, int> tensor_bidegree(const TensorElem& x);

// Unshuffle coproduct /\^a V -> /\^b V (x) /\^{a-b} V on each monomial.
TensorElem comult_split(const ExtVElem& x, int left_deg);

// Action of theta^{-1}(m), m a /\V monomial, on a spinor by the module
// action (factor two on contractions), with Clifford corrections for
// monomials that pair e_i with f_i. With `contraction_factor` = 1 the
// plain psi-style action is used instead.
SpinElem act_extmono_on_spin(int n, Mask m, const SpinElem& s,
                             int contraction_factor = 2);

// Full pairing of x in (/\^k V) (x) Delta against y1 (x) y2 of matching
// bidegree: the det-q pairing on the /\V slot, the spinor form on the
// spin slot.
Rat pair_tensor(const TensorElem& x, const ExtVElem& y1, const SpinElem& y2);

}  // namespace spinsec
