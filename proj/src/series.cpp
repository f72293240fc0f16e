#include "spinsec/series.hpp"

namespace spinsec {

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly c(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

IntPoly poly_one_minus_xk(int k) {
  IntPoly p(k + 1, Int(0));
  p[0] = 1;
  p[k] = -1;
  return p;
}

std::vector<Int> series_coeffs(const IntPoly& numer, const IntPoly& denom,
                               int count) {
  if (count < 1) throw std::invalid_argument("series_coeffs: count must be >= 1");
  if (denom.empty() || !(denom[0] == 1 || denom[0] == -1))
    throw std::invalid_argument(
        "series_coeffs: denominator constant term must be +-1");
  std::vector<Int> c(count, Int(0));
  const Int d0 = denom[0];
  for (int j = 0; j < count; ++j) {
    Int s = (j < static_cast<int>(numer.size())) ? numer[j] : Int(0);
    for (size_t i = 1; i < denom.size() && static_cast<int>(i) <= j; ++i)
      s -= denom[i] * c[j - i];
    c[j] = (d0 == 1) ? s : Int(-s);
  }
  return c;
}

IntegerSeries::IntegerSeries(IntPoly numer, IntPoly denom)
    : numer_(std::move(numer)), denom_(std::move(denom)) {
  if (denom_.empty() || !(denom_[0] == 1 || denom_[0] == -1))
    throw std::invalid_argument(
        "IntegerSeries: denominator constant term must be +-1");
}

const Int& IntegerSeries::at(int j) const {
  if (j < 0) {
    static const Int zero(0);
    return zero;
  }
  if (static_cast<int>(cache_.size()) <= j)
    cache_ = series_coeffs(numer_, denom_, j + 1 + 16);
  return cache_[j];
}

std::vector<Int> IntegerSeries::prefix(int count) const {
  std::vector<Int> r(count);
  for (int j = 0; j < count; ++j) r[j] = at(j);
  return r;
}

IntegerSeries cubic_mult_series() {
  return IntegerSeries({Int(1)},
                       poly_mul(poly_one_minus_xk(2), poly_one_minus_xk(3)));
}

IntegerSeries cubic_mult_series_b() {
  IntPoly numer(5, Int(0));
  numer[4] = 1;
  return IntegerSeries(numer,
                       poly_mul(poly_one_minus_xk(2), poly_one_minus_xk(3)));
}

}  // namespace spinsec
