#pragma once

#include <string>

#include "spinsec/pfaffian.hpp"

namespace spinsec {

// A quadratic identity sum_t c_t Pf_{K1_t} Pf_{K2_t} = 0 among the
// sub-Pfaffians of a generic n x n skew matrix, in (R, S, T) normal form:
// S is the common index set of every term, R u T the symmetric-difference
// support, and every (K1, K2) is (S u A, S u B) with A u B = R u T.
struct PfaffianRelation {
  struct Term {
    Mask K1, K2;
    Int c;
  };

  int n = 0;
  Mask R = 0, S = 0, T = 0;
  int degree = 0;  // wedge degree of the source monomial
  std::vector<Term> terms;

  bool nontrivial() const { return !terms.empty(); }
  std::string to_json() const;
};

// The relation carried by one /\V basis monomial: the coefficient of that
// monomial in beta(u, u) with u the generic Pfaffian spinor, expanded
// bilinearly over pairs e_I, e_J. Signs come from the exact Clifford
// computation, never from a closed form. The relation is trivial (empty)
// unless |T| - |R| = n - degree is a positive multiple of 4.
PfaffianRelation quadratic_relations(int n, Mask monomial);

// All nontrivial relations of one rank, deduplicated by normal form.
std::vector<PfaffianRelation> all_quadratic_relations(int n);

// sum_t c_t Pf_{K1}(A) Pf_{K2}(A); zero certifies the relation on A.
Rat verify_relation(const PfaffianRelation& rel, const SkewMatrix& A);
Rat verify_relation(const PfaffianRelation& rel, SubPfaffianTable& table);

}  // namespace spinsec
