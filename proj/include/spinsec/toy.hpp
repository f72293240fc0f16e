#pragma once

#include <map>
#include <tuple>

#include "spinsec/exact.hpp"

namespace spinsec {

// Exact Laurent polynomial in (x, y).
struct BivariatePolynomial {
  std::map<std::pair<int, int>, Rat> terms;

  static BivariatePolynomial mono(int a, int b, const Rat& c = Rat(1));
  void add_term(int a, int b, const Rat& c);
  bool is_zero() const { return terms.empty(); }
  bool operator==(const BivariatePolynomial& o) const {
    return terms == o.terms;
  }
};

BivariatePolynomial operator+(const BivariatePolynomial& a,
                              const BivariatePolynomial& b);
BivariatePolynomial operator-(const BivariatePolynomial& a,
                              const BivariatePolynomial& b);
BivariatePolynomial operator*(const BivariatePolynomial& a,
                              const BivariatePolynomial& b);

// Exact division; throws when the remainder is nonzero.
BivariatePolynomial divide_x_minus_y(BivariatePolynomial p);
BivariatePolynomial divide_x_plus_y(BivariatePolynomial p);

// value at x = y = 1
Rat eval_at_one(const BivariatePolynomial& p);

// x^{p+q}y^q + x^{p+q-1}y^{q+1} + ... + x^q y^{p+q}
BivariatePolynomial gl2_irrep_char(int p, int q);

// sum of the degree-k monomials in x, y
BivariatePolynomial complete_homogeneous(int k, int stride = 1);

// {(p, q, mult)} sorted by the determinant twist q.
struct GLTwoDecomp {
  std::vector<std::tuple<int, int, long long>> entries;

  long long mult_of(int p, int q) const;
  BivariatePolynomial reconstruct() const;
  bool operator==(const GLTwoDecomp& o) const { return entries == o.entries; }
};

// Character of the degree-k part of the secant coordinate ring of the
// degree-n rational normal curve, extracted from the closed rational form
// by exact coefficient extraction and division.
BivariatePolynomial localization_char(int n, int k);
// Same value assembled per fixed point over a common denominator; the
// cross-check route.
BivariatePolynomial localization_char_fixedpoint(int n, int k);

GLTwoDecomp decompose_gl2(const BivariatePolynomial& p);

// min(floor(s/2), floor((k-eps)/2)) - floor((s-1)/n), floors toward -oo.
long long q_formula(int n, int s, int k);

// degree-k part of the tangent-surface ring: s <= k, s != 1
GLTwoDecomp tau_ring_gl2(int n, int k);

// brute-force character of S^k(S^n U) by weight enumeration
BivariatePolynomial plethysm_sym_sym(int n, int k);

}  // namespace spinsec
