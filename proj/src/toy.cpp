#include "spinsec/toy.hpp"

#include <algorithm>

namespace spinsec {

BivariatePolynomial BivariatePolynomial::mono(int a, int b, const Rat& c) {
  BivariatePolynomial p;
  p.add_term(a, b, c);
  return p;
}

void BivariatePolynomial::add_term(int a, int b, const Rat& c) {
  if (c == 0) return;
  auto key = std::make_pair(a, b);
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(key, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

BivariatePolynomial operator+(const BivariatePolynomial& a,
                              const BivariatePolynomial& b) {
  BivariatePolynomial r = a;
  for (const auto& [k, c] : b.terms) r.add_term(k.first, k.second, c);
  return r;
}

BivariatePolynomial operator-(const BivariatePolynomial& a,
                              const BivariatePolynomial& b) {
  BivariatePolynomial r = a;
  for (const auto& [k, c] : b.terms) r.add_term(k.first, k.second, -c);
  return r;
}

BivariatePolynomial operator*(const BivariatePolynomial& a,
                              const BivariatePolynomial& b) {
  BivariatePolynomial r;
  for (const auto& [ka, ca] : a.terms)
    for (const auto& [kb, cb] : b.terms)
      r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return r;
}

namespace {

BivariatePolynomial divide_linear(BivariatePolynomial p, int sign_of_y) {
  // divide by (x + sign_of_y * y)
  BivariatePolynomial q;
  while (!p.is_zero()) {
    // leading term in x
    auto lead = p.terms.begin();
    for (auto it = p.terms.begin(); it != p.terms.end(); ++it)
      if (it->first.first > lead->first.first ||
          (it->first.first == lead->first.first &&
           it->first.second < lead->first.second))
        lead = it;
    const auto [a, b] = lead->first;
    const Rat c = lead->second;
    if (a == 0) throw std::logic_error("divide_linear: inexact division");
    q.add_term(a - 1, b, c);
    p.add_term(a, b, -c);
    p.add_term(a - 1, b + 1, Rat(-sign_of_y) * c);
  }
  return q;
}

}  // namespace

BivariatePolynomial divide_x_minus_y(BivariatePolynomial p) {
  return divide_linear(std::move(p), -1);
}

BivariatePolynomial divide_x_plus_y(BivariatePolynomial p) {
  return divide_linear(std::move(p), 1);
}

Rat eval_at_one(const BivariatePolynomial& p) {
  Rat s(0);
  for (const auto& [k, c] : p.terms) s += c;
  return s;
}

BivariatePolynomial gl2_irrep_char(int p, int q) {
  BivariatePolynomial r;
  for (int t = 0; t <= p; ++t) r.add_term(p + q - t, q + t, Rat(1));
  return r;
}

BivariatePolynomial complete_homogeneous(int k, int stride) {
  BivariatePolynomial r;
  for (int t = 0; t <= k; ++t) r.add_term(stride * (k - t), stride * t, Rat(1));
  return r;
}

long long GLTwoDecomp::mult_of(int p, int q) const {
  for (const auto& [pp, qq, m] : entries)
    if (pp == p && qq == q) return m;
  return 0;
}

BivariatePolynomial GLTwoDecomp::reconstruct() const {
  BivariatePolynomial r;
  for (const auto& [p, q, m] : entries)
    r = r + (gl2_irrep_char(p, q) * BivariatePolynomial::mono(0, 0, Rat(long(m))));
  return r;
}

BivariatePolynomial localization_char(int n, int k) {
  if (n < 1 || k < 0) throw std::invalid_argument("localization_char: bad args");
  // numerator of the t^k coefficient over (x-y)(x^2-y^2), assembled from
  // the three geometric factors of the closed expression
  BivariatePolynomial num;
  for (int b = 0; b <= k; ++b) {
    num.add_term(n * k - b + 3, b, Rat(1));   // x^3 / (1-t x^n)(1-t x^{n-1} y)
    num.add_term(b, n * k - b + 3, Rat(1));   // the mirror fixed point
  }
  for (int a = 0; a <= k; ++a) {
    const int bb = k - a;
    num.add_term(n * a + 2, n * bb + 1, Rat(-1));  // -xy(x+y)/(1-t x^n)(1-t y^n)
    num.add_term(n * a + 1, n * bb + 2, Rat(-1));
  }
  return divide_x_plus_y(divide_x_minus_y(divide_x_minus_y(std::move(num))));
}

BivariatePolynomial localization_char_fixedpoint(int n, int k) {
  // trace contributions at the three torus fixed points, each put over the
  // common denominator (x-y)(x^2-y^2)
  BivariatePolynomial hk = complete_homogeneous(k);
  BivariatePolynomial num =
      BivariatePolynomial::mono(k * (n - 1) + 3, 0) * hk +
      BivariatePolynomial::mono(0, k * (n - 1) + 3) * hk -
      (BivariatePolynomial::mono(2, 1) + BivariatePolynomial::mono(1, 2)) *
          complete_homogeneous(k, n);
  return divide_x_plus_y(divide_x_minus_y(divide_x_minus_y(std::move(num))));
}

GLTwoDecomp decompose_gl2(const BivariatePolynomial& p) {
  BivariatePolynomial work = p;
  GLTwoDecomp dec;
  while (!work.is_zero()) {
    auto lead = work.terms.begin();
    for (auto it = work.terms.begin(); it != work.terms.end(); ++it)
      if (it->first.first > lead->first.first) lead = it;
    const auto [a, b] = lead->first;
    const Rat c = lead->second;
    if (a < b || c.get_den() != 1 || c < 0)
      throw std::logic_error("decompose_gl2: input is not a character");
    const int q = b, pp = a - b;
    const long long m = c.get_num().get_si();
    dec.entries.emplace_back(pp, q, m);
    work = work - (gl2_irrep_char(pp, q) *
                   BivariatePolynomial::mono(0, 0, c));
  }
  std::sort(dec.entries.begin(), dec.entries.end(),
            [](const auto& x, const auto& y) {
              return std::get<1>(x) < std::get<1>(y);
            });
  return dec;
}

namespace {
long long floordiv(long long a, long long b) {
  long long q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}
}  // namespace

long long q_formula(int n, int s, int k) {
  if (s < 0 || 2 * s > n * k) throw std::invalid_argument("q_formula: out of range");
  const int eps = s % 2;
  const long long a = s / 2;
  const long long b = (k - eps) / 2;
  return std::min(a, b) - floordiv(s - 1, n);
}

GLTwoDecomp tau_ring_gl2(int n, int k) {
  if (n * k < 2 * k) throw std::invalid_argument("tau_ring_gl2: out of range");
  GLTwoDecomp dec;
  for (int s = 0; s <= k; ++s) {
    if (s == 1) continue;
    dec.entries.emplace_back(k * n - 2 * s, s, 1);
  }
  return dec;
}

BivariatePolynomial plethysm_sym_sym(int n, int k) {
  // multisets of size k from the weights x^{n-t} y^t of S^n U
  BivariatePolynomial r;
  std::vector<int> pick;
  auto rec = [&](auto&& self, int from, int left, int xdeg, int ydeg) -> void {
    if (left == 0) {
      r.add_term(xdeg, ydeg, Rat(1));
      return;
    }
    for (int t = from; t <= n; ++t)
      self(self, t, left - 1, xdeg + n - t, ydeg + t);
  };
  rec(rec, 0, k, 0, 0);
  return r;
}

}  // namespace spinsec
