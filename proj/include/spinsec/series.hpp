#pragma once

#include <vector>

#include "spinsec/exact.hpp"

namespace spinsec {

// Dense integer polynomial, coefficients in ascending degree.
using IntPoly = std::vector<Int>;

IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
IntPoly poly_one_minus_xk(int k);  // 1 - x^k

// First `count` coefficients of the power-series expansion numer/denom.
// The denominator must have constant term +-1 so the expansion stays
// integral; computed by the linear recurrence the denominator induces.
std::vector<Int> series_coeffs(const IntPoly& numer, const IntPoly& denom,
                               int count);

// A rational generating series numer/denom with cached expansion.
class IntegerSeries {
 public:
  IntegerSeries(IntPoly numer, IntPoly denom);

  const Int& at(int j) const;
  std::vector<Int> prefix(int count) const;

  const IntPoly& numer() const { return numer_; }
  const IntPoly& denom() const { return denom_; }

 private:
  IntPoly numer_, denom_;
  mutable std::vector<Int> cache_;
};

// The series 1/((1-x^2)(1-x^3)): 1,0,1,1,1,1,2,...
IntegerSeries cubic_mult_series();
// x^4/((1-x^2)(1-x^3)).
IntegerSeries cubic_mult_series_b();

}  // namespace spinsec
