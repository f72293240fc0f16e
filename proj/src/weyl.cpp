#include "spinsec/weyl.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>

namespace spinsec {

Weight weight_add(const Weight& a, const Weight& b) {
  Weight r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Weight weight_sub(const Weight& a, const Weight& b) {
  Weight r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Weight weight_scale(int k, const Weight& a) {
  Weight r = a;
  for (auto& x : r) x *= k;
  return r;
}

long long weight_ip(const Weight& a, const Weight& b) {
  long long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += (long long)a[i] * b[i];
  return s;
}

std::string weight_str(const Weight& w) {
  std::string s = "(";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    // print true coordinates, halves as k/2
    if (w[i] % 2 == 0)
      s += std::to_string(w[i] / 2);
    else
      s += std::to_string(w[i]) + "/2";
  }
  return s + ")";
}

Weight RootDatum::fundamental(int i) const {
  const int nc = ncoords();
  if (i < 1) throw std::invalid_argument("fundamental: bad index");
  Weight w(nc, 0);
  switch (family) {
    case Family::A:
      if (i > rank) throw std::invalid_argument("fundamental: bad index");
      for (int t = 0; t < i; ++t) w[t] = 2;
      return w;
    case Family::B:
    case Family::C:
      if (i > rank) throw std::invalid_argument("fundamental: bad index");
      if (family == Family::B && i == rank) {
        for (int t = 0; t < rank; ++t) w[t] = 1;
      } else {
        for (int t = 0; t < i; ++t) w[t] = 2;
      }
      return w;
    case Family::D:
      if (i > rank) throw std::invalid_argument("fundamental: bad index");
      if (i == rank) {
        for (int t = 0; t < rank; ++t) w[t] = 1;
      } else if (i == rank - 1) {
        for (int t = 0; t < rank; ++t) w[t] = 1;
        w[rank - 1] = -1;
      } else {
        for (int t = 0; t < i; ++t) w[t] = 2;
      }
      return w;
  }
  throw std::logic_error("unreachable");
}

Weight RootDatum::theta(int i) const {
  if (i < 0 || i > ncoords()) throw std::invalid_argument("theta: bad index");
  Weight w(ncoords(), 0);
  for (int t = 0; t < i; ++t) w[t] = 2;
  return w;
}

Weight RootDatum::rho() const {
  const int n = rank;
  Weight r(ncoords(), 0);
  switch (family) {
    case Family::A:
      for (int i = 0; i <= n; ++i) r[i] = 2 * (n - i);
      return r;
    case Family::B:
      for (int i = 0; i < n; ++i) r[i] = 2 * (n - i) - 1;
      return r;
    case Family::C:
      for (int i = 0; i < n; ++i) r[i] = 2 * (n - i);
      return r;
    case Family::D:
      for (int i = 0; i < n; ++i) r[i] = 2 * (n - 1 - i);
      return r;
  }
  throw std::logic_error("unreachable");
}

std::vector<Weight> RootDatum::positive_roots() const {
  const int nc = ncoords();
  std::vector<Weight> roots;
  auto mk = [&](int i, int vi, int j, int vj) {
    Weight w(nc, 0);
    w[i] = vi;
    if (j >= 0) w[j] = vj;
    roots.push_back(std::move(w));
  };
  for (int i = 0; i < nc; ++i)
    for (int j = i + 1; j < nc; ++j) {
      mk(i, 2, j, -2);  // e_i - e_j
      if (family == Family::B || family == Family::C || family == Family::D)
        mk(i, 2, j, 2);  // e_i + e_j
    }
  if (family == Family::B)
    for (int i = 0; i < nc; ++i) mk(i, 2, -1, 0);  // e_i
  if (family == Family::C)
    for (int i = 0; i < nc; ++i) mk(i, 4, -1, 0);  // 2 e_i
  return roots;
}

bool RootDatum::is_dominant(const Weight& w) const {
  const int nc = ncoords();
  for (int i = 0; i + 1 < nc; ++i)
    if (w[i] < w[i + 1]) return false;
  switch (family) {
    case Family::A:
      return true;
    case Family::B:
    case Family::C:
      return w[nc - 1] >= 0;
    case Family::D:
      return nc >= 2 ? w[nc - 2] >= std::abs(w[nc - 1]) : true;
  }
  return false;
}

Weight RootDatum::dominate(const Weight& w) const {
  Weight v = w;
  if (family == Family::A) {
    std::sort(v.begin(), v.end(), std::greater<int>());
    return v;
  }
  int negatives = 0;
  bool has_zero = false;
  for (auto& x : v) {
    if (x < 0) {
      ++negatives;
      x = -x;
    }
    if (x == 0) has_zero = true;
  }
  std::sort(v.begin(), v.end(), std::greater<int>());
  if (family == Family::D && !has_zero && (negatives & 1))
    v[v.size() - 1] = -v[v.size() - 1];
  return v;
}

Int RootDatum::orbit_size(const Weight& dominant) const {
  const int nc = ncoords();
  // permutations of the absolute-value pattern
  Int perms;
  mpz_fac_ui(perms.get_mpz_t(), nc);
  int i = 0;
  int zeros = 0, nonzeros = 0;
  while (i < nc) {
    int j = i;
    while (j < nc && std::abs(dominant[j]) == std::abs(dominant[i])) ++j;
    Int f;
    mpz_fac_ui(f.get_mpz_t(), j - i);
    perms /= f;
    if (dominant[i] == 0)
      zeros += j - i;
    else
      nonzeros += j - i;
    i = j;
  }
  switch (family) {
    case Family::A:
      return perms;
    case Family::B:
    case Family::C: {
      Int signs = 1;
      mpz_mul_2exp(signs.get_mpz_t(), signs.get_mpz_t(), nonzeros);
      return perms * signs;
    }
    case Family::D: {
      Int signs = 1;
      int bits = (zeros > 0) ? nonzeros : (nonzeros > 0 ? nonzeros - 1 : 0);
      mpz_mul_2exp(signs.get_mpz_t(), signs.get_mpz_t(), bits);
      return perms * signs;
    }
  }
  throw std::logic_error("unreachable");
}

std::vector<Weight> RootDatum::orbit(const Weight& dominant) const {
  const int nc = ncoords();
  // in type D the sign class (parity of negative entries) is an orbit
  // invariant when no coordinate vanishes
  const int neg_parity =
      std::count_if(dominant.begin(), dominant.end(), [](int x) { return x < 0; }) &
      1;
  std::vector<int> pattern(dominant.begin(), dominant.end());
  for (auto& x : pattern) x = std::abs(x);
  std::sort(pattern.begin(), pattern.end());

  std::vector<Weight> out;
  do {
    // assign signs to the nonzero entries
    std::vector<int> nz;
    for (int i = 0; i < nc; ++i)
      if (pattern[i] != 0) nz.push_back(i);
    if (family == Family::A) {
      out.emplace_back(pattern.begin(), pattern.end());
      continue;
    }
    const bool fixed_parity =
        family == Family::D &&
        std::none_of(pattern.begin(), pattern.end(), [](int x) { return x == 0; });
    const size_t count = size_t(1) << nz.size();
    for (size_t s = 0; s < count; ++s) {
      if (fixed_parity && (std::popcount(s) & 1) != neg_parity) continue;
      Weight w(pattern.begin(), pattern.end());
      for (size_t b = 0; b < nz.size(); ++b)
        if ((s >> b) & 1) w[nz[b]] = -w[nz[b]];
      out.push_back(std::move(w));
    }
  } while (std::next_permutation(pattern.begin(), pattern.end()));
  return out;
}

bool RootDatum::dominates(const Weight& lambda, const Weight& mu) const {
  const int nc = ncoords();
  std::vector<long long> S(nc + 1, 0);
  for (int i = 0; i < nc; ++i) S[i + 1] = S[i] + (lambda[i] - mu[i]);
  switch (family) {
    case Family::A: {
      for (int k = 1; k <= nc; ++k)
        if (S[k] < 0 || (S[k] & 1)) return false;
      return S[nc] == 0;
    }
    case Family::B: {
      for (int k = 1; k <= nc; ++k)
        if (S[k] < 0 || (S[k] & 1)) return false;
      return true;
    }
    case Family::C: {
      for (int k = 1; k <= nc; ++k)
        if (S[k] < 0 || (S[k] & 1)) return false;
      return S[nc] % 4 == 0;
    }
    case Family::D: {
      for (int k = 1; k <= nc - 1; ++k)
        if (S[k] < 0 || (S[k] & 1)) return false;
      long long dn = (long long)lambda[nc - 1] - mu[nc - 1];
      long long cn = S[nc];                 // 4 c_n
      long long cn1 = S[nc - 1] - dn;       // 4 c_{n-1}
      return cn >= 0 && cn % 4 == 0 && cn1 >= 0 && cn1 % 4 == 0;
    }
  }
  return false;
}

Weight RootDatum::mirror(const Weight& w) const {
  Weight v = w;
  if (family == Family::D && !v.empty()) v[v.size() - 1] = -v[v.size() - 1];
  return v;
}

}  // namespace spinsec
