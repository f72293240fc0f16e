#include "spinsec/secant.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace spinsec {

namespace {

Decomposition subtract_components(const Decomposition& a, const Decomposition& b,
                                  const std::string& label) {
  Decomposition r(a.datum, label);
  r.components = a.components;
  for (const auto& [w, m] : b.components) {
    auto it = r.components.find(w);
    long long have = (it == r.components.end()) ? 0 : it->second;
    if (have < m)
      throw std::logic_error(label + ": negative multiplicity at " +
                             weight_str(w));
    if (have == m) {
      if (it != r.components.end()) r.components.erase(it);
    } else {
      it->second = have - m;
    }
  }
  return r;
}

std::mutex& table_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

Decomposition s3_halfspin_formula(int n) {
  const RootDatum d{Family::D, n};
  IntegerSeries a = cubic_mult_series();
  Decomposition dec(d, "S3 half-spin closed form");
  dec.add(weight_scale(3, d.fundamental(n)), 1);
  for (int j = 1; 2 * j <= n; ++j) {
    long long aj = a.at(j).get_si();
    if (aj) dec.add(weight_add(d.fundamental(n), d.theta(n - 2 * j)), aj);
  }
  for (int j = 4; 2 * j + 1 <= n; ++j) {
    long long bj = a.at(j - 4).get_si();
    if (bj)
      dec.add(weight_add(d.fundamental(n - 1), d.theta(n - 2 * j - 1)), bj);
  }
  return dec;
}

Decomposition s3_halfspin(int n) {
  if (n < 4 || n > kS3RankCap)
    throw std::invalid_argument("s3_halfspin: rank out of range");
  static std::map<int, Decomposition> cache;
  {
    std::lock_guard<std::mutex> lock(table_mutex());
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  const RootDatum d{Family::D, n};
  Decomposition dec =
      decompose(power_op(spin_char(d, true), 3, PowerKind::Sym), "S3 half-spin");
  if (!dec.same_components(s3_halfspin_formula(n)))
    throw std::logic_error("s3_halfspin: decomposition disagrees with the "
                           "closed-form multiplicity series");
  std::lock_guard<std::mutex> lock(table_mutex());
  cache.emplace(n, dec);
  return dec;
}

Decomposition sigma_ring_deg3(int n) {
  if (n < 4) throw std::invalid_argument("sigma_ring_deg3: need n >= 4");
  const RootDatum d{Family::D, n};
  Decomposition dec(d, "secant ring degree 3");
  dec.add(weight_scale(3, d.fundamental(n)), 1);
  for (int i = 2; 2 * i <= n; ++i)
    dec.add(weight_add(d.fundamental(n), d.theta(n - 2 * i)), 1);
  return dec;
}

Decomposition cubic_ideal(int n) {
  return subtract_components(s3_halfspin(n), sigma_ring_deg3(n), "cubic ideal");
}

Decomposition cubic_ideal_formula(int n) {
  const RootDatum d{Family::D, n};
  IntegerSeries a = cubic_mult_series();
  Decomposition dec(d, "cubic ideal closed form");
  for (int j = 6; 2 * j <= n; ++j) {
    long long c = a.at(j - 6).get_si();
    if (c) dec.add(weight_add(d.fundamental(n), d.theta(n - 2 * j)), c);
  }
  for (int j = 4; 2 * j + 1 <= n; ++j) {
    long long c = a.at(j - 4).get_si();
    if (c) dec.add(weight_add(d.fundamental(n - 1), d.theta(n - 2 * j - 1)), c);
  }
  return dec;
}

Decomposition tangent_ring(int n, int d) {
  if (d != 3 && d != 4) throw std::invalid_argument("tangent_ring: d must be 3 or 4");
  if (n < 2 * d) throw std::invalid_argument("tangent_ring: need n >= 2d");
  const RootDatum datum{Family::D, n};
  Decomposition dec(datum, "tangent ring");
  const int r = n / 2;
  // tuples a_1..a_r with 2 sum(a) <= sum(p a_p) <= d; only p <= d matters
  std::vector<int> a(r + 1, 0);
  auto rec = [&](auto&& self, int p, int wsum, int asum) -> void {
    if (wsum > d) return;
    if (p > r || p > d) {
      if (2 * asum <= wsum) {
        Weight w = weight_scale(d - 2 * asum, datum.fundamental(n));
        for (int t = 1; t <= r && t <= d; ++t)
          if (a[t]) w = weight_add(w, weight_scale(a[t], datum.theta(n - 2 * t)));
        dec.add(w, 1);
      }
      return;
    }
    for (int v = 0; p * v + wsum <= d; ++v) {
      a[p] = v;
      self(self, p + 1, wsum + p * v, asum + v);
    }
    a[p] = 0;
  };
  rec(rec, 1, 0, 0);
  return dec;
}

Decomposition tangent_kernel(int n, int d) {
  const Decomposition sigma = (d == 3) ? sigma_ring_deg3(n) : sigma_ring_deg4(n);
  return subtract_components(sigma, tangent_ring(n, d), "tangent kernel");
}

Decomposition tangent_kernel_formula(int n, int d) {
  const RootDatum datum{Family::D, n};
  Decomposition dec(datum, "tangent kernel closed form");
  if (d == 3) {
    for (int p = 4; 2 * p <= n; ++p)
      dec.add(weight_add(datum.fundamental(n), datum.theta(n - 2 * p)), 1);
    return dec;
  }
  if (d != 4) throw std::invalid_argument("tangent_kernel_formula: d = 3 or 4");
  for (int p = 1; 2 * p <= n; ++p)
    for (int q = 1; q <= p; ++q) {
      if ((p - q) % 2 != 0 || p + q <= 4) continue;
      dec.add(weight_add(datum.theta(n - 2 * p), datum.theta(n - 2 * q)), 1);
    }
  for (int p = 5; 2 * p <= n; ++p)
    dec.add(weight_add(datum.theta(n), datum.theta(n - 2 * p)), 1);
  return dec;
}

long long QuarticTable::e_at(int i, int j) const {
  if (i > j) std::swap(i, j);
  auto it = e.find({i, j});
  return it == e.end() ? 0 : it->second;
}

long long QuarticTable::f_at(int i) const {
  auto it = f.find(i);
  return it == f.end() ? 0 : it->second;
}

Decomposition s4_halfspin_decomp(int n) {
  if (n < 4 || n > kS4RankCap)
    throw std::invalid_argument("s4_halfspin: rank out of range");
  static std::map<int, Decomposition> cache;
  {
    std::lock_guard<std::mutex> lock(table_mutex());
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  const RootDatum d{Family::D, n};
  Decomposition dec =
      decompose(power_op(spin_char(d, true), 4, PowerKind::Sym), "S4 half-spin");
  std::lock_guard<std::mutex> lock(table_mutex());
  cache.emplace(n, dec);
  return dec;
}

QuarticTable s4_halfspin(int n) {
  Decomposition dec = s4_halfspin_decomp(n);
  QuarticTable t;
  t.n = n;
  for (const auto& [w, m] : dec.components) {
    int fours = 0, twos = 0, zeros = 0;
    bool neg_last = !w.empty() && w.back() == -2;
    for (size_t idx = 0; idx < w.size(); ++idx) {
      int v = w[idx];
      if (idx + 1 == w.size() && neg_last) continue;
      if (v == 4)
        ++fours;
      else if (v == 2)
        ++twos;
      else if (v == 0)
        ++zeros;
      else
        throw std::logic_error("s4_halfspin: unexpected component " +
                               weight_str(w));
    }
    if (neg_last) {
      // mirror family: (2^{n-i}, 1^{i-1}, -1) in true coordinates
      if (twos != 0 && fours + twos + 1 != n)
        throw std::logic_error("s4_halfspin: unexpected mirror component " +
                               weight_str(w));
      const int i = n - fours;
      if (i % 2 != 0)
        throw std::logic_error("s4_halfspin: odd mirror index (parity rule)");
      t.f[i] += m;
    } else {
      const int j = n - fours;
      const int i = n - fours - twos;
      if (((i + j) % 2) != 0)
        throw std::logic_error("s4_halfspin: odd i+j (parity rule)");
      t.e[{i, j}] += m;
    }
  }
  return t;
}

RecursionReport quartic_recursion_check(const QuarticTable& t) {
  RecursionReport rep;
  const int n = t.n;
  IntegerSeries a = cubic_mult_series();
  IntegerSeries b = cubic_mult_series_b();
  auto fail = [&](const std::string& s) {
    rep.ok = false;
    rep.violations.push_back(s);
  };
  // diagonal: e_{i-1,i-1} + e_{i,i} + e_{i+1,i+1} = floor(i/4) + [i=0] + [i odd]
  for (int i = 0; i + 1 <= n; ++i) {
    long long lhs = (i > 0 ? t.e_at(i - 1, i - 1) : 0) + t.e_at(i, i) +
                    t.e_at(i + 1, i + 1);
    long long rhs = i / 4 + (i == 0 ? 1 : 0) + (i % 2);
    if (lhs != rhs) {
      std::ostringstream os;
      os << "diagonal relation fails at i=" << i << ": " << lhs << " != " << rhs;
      fail(os.str());
    }
  }
  // first row (with f folded in): e'_{0,2i} + e_{1,2i-1} + e_{1,2i+1} =
  // binom(floor(i/2)+1, 2)
  for (int i = 1; 2 * i + 1 <= n; ++i) {
    long long lhs = t.e_at(0, 2 * i) + t.f_at(2 * i) + t.e_at(1, 2 * i - 1) +
                    t.e_at(1, 2 * i + 1);
    long long rhs = binomial(i / 2 + 1, 2).get_si();
    if (lhs != rhs) {
      std::ostringstream os;
      os << "first-row relation fails at i=" << i << ": " << lhs << " != "
         << rhs;
      fail(os.str());
    }
  }
  // interior: e_{i-1,j} + e_{i,j-1} + e_{i+1,j} + e_{i,j+1} =
  // sum_{i<=2p<=j} a_p + sum_{i<=2p+1<=j} b_p, for j > i > 0 with i+j odd
  // (for i = 1 the first term folds f in)
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j + 1 <= n; ++j) {
      if (((i + j) % 2) == 0) continue;
      long long first = t.e_at(i - 1, j) + (i == 1 ? t.f_at(j) : 0);
      long long lhs =
          first + t.e_at(i, j - 1) + t.e_at(i + 1, j) + t.e_at(i, j + 1);
      long long rhs = 0;
      for (int p = 0; 2 * p <= j; ++p)
        if (i <= 2 * p) rhs += a.at(p).get_si();
      for (int p = 0; 2 * p + 1 <= j; ++p)
        if (i <= 2 * p + 1) rhs += b.at(p).get_si();
      if (lhs != rhs) {
        std::ostringstream os;
        os << "interior relation fails at (i,j)=(" << i << "," << j
           << "): " << lhs << " != " << rhs;
        fail(os.str());
      }
    }
  return rep;
}

Decomposition sigma_ring_deg4(int n) {
  const RootDatum datum{Family::D, n};
  Decomposition dec(datum, "secant ring degree 4");
  for (int p = 1; 2 * p <= n; ++p)
    for (int q = 1; q <= p; ++q) {
      if ((p - q) % 2 != 0 || (p == 1 && q == 1)) continue;
      dec.add(weight_add(datum.theta(n - 2 * p), datum.theta(n - 2 * q)), 1);
    }
  for (int p = 0; 2 * p <= n; ++p) {
    if (p == 1) continue;
    dec.add(weight_add(datum.theta(n), datum.theta(n - 2 * p)), 1);
  }
  return dec;
}

Decomposition quartic_ideal(int n) {
  return subtract_components(s4_halfspin_decomp(n), sigma_ring_deg4(n),
                             "quartic ideal");
}

bool ideal_times_spin_contains(int n, const Decomposition& ideal,
                               const Weight& target) {
  const RootDatum datum{Family::D, n};
  for (const auto& [lam, m] : ideal.components) {
    Decomposition prod = tensor_minuscule(datum, lam, true);
    if (prod.mult_of(target) > 0) return true;
  }
  return false;
}

NotInducedWitness not_induced_by_cubics(int n) {
  if (n < 10)
    throw std::invalid_argument("not_induced_by_cubics: need n >= 10");
  const RootDatum datum{Family::D, n};
  const Weight target =
      weight_add(datum.theta(n - 3), datum.theta(n - 7));
  NotInducedWitness w;
  Decomposition i3 = cubic_ideal(n);
  Decomposition i4 = quartic_ideal(n);
  const bool absent = !ideal_times_spin_contains(n, i3, target);
  const long long m4 = i4.mult_of(target);
  w.holds = absent && m4 == 1;
  std::ostringstream os;
  os << "target " << weight_str(target) << ": in cubic-ideal x spin: "
     << (absent ? "absent" : "present") << "; quartic-ideal multiplicity "
     << m4;
  w.detail = os.str();
  return w;
}

namespace {

struct Theorem5Setup {
  RootDatum datum;
  int freudenthal_rank;
  Weight omega;
  std::vector<Weight> Omega;  // Omega_0 = 2 omega, ..., Omega_rank = 0
};

Theorem5Setup theorem5_setup(Family family, int lie_rank) {
  switch (family) {
    case Family::C: {
      RootDatum d{Family::C, lie_rank};
      Theorem5Setup s{d, lie_rank, d.fundamental(lie_rank), {}};
      for (int i = 0; i <= lie_rank; ++i)
        s.Omega.push_back(weight_scale(2, d.theta(lie_rank - i)));
      return s;
    }
    case Family::A: {
      if (lie_rank % 2 == 0)
        throw std::invalid_argument("theorem5_check: type A rank must be odd");
      const int m = (lie_rank + 1) / 2;
      RootDatum d{Family::A, lie_rank};
      Theorem5Setup s{d, m, d.fundamental(m), {}};
      for (int i = 0; i <= m; ++i) {
        Weight w = d.zero();
        if (m - i >= 1) w = weight_add(w, d.fundamental(m - i));
        if (m + i <= lie_rank) {
          w = weight_add(w, d.fundamental(m + i));
        } else {
          // index 2m is the determinant column in the gl realization
          for (auto& x : w) x += 2;
        }
        s.Omega.push_back(w);
      }
      return s;
    }
    case Family::D: {
      if (lie_rank % 2 != 0)
        throw std::invalid_argument("theorem5_check: type D rank must be even");
      const int m = lie_rank / 2;
      RootDatum d{Family::D, lie_rank};
      Theorem5Setup s{d, m, d.fundamental(lie_rank), {}};
      for (int i = 0; i <= m; ++i) s.Omega.push_back(d.theta(lie_rank - 2 * i));
      return s;
    }
    default:
      throw std::invalid_argument("theorem5_check: family must be A, C or D");
  }
}

}  // namespace

Theorem5Report theorem5_check(Family family, int lie_rank) {
  Theorem5Setup s = theorem5_setup(family, lie_rank);
  Theorem5Report rep;
  rep.name = std::string(1, char(family)) + std::to_string(lie_rank);

  DominantCharacter ch_w = freudenthal_char(s.datum, s.omega);

  // 1. V_w (x) V_w
  {
    Decomposition dec = decompose(char_mul(ch_w, ch_w));
    Decomposition expect(s.datum);
    for (const Weight& O : s.Omega) expect.add(O, 1);
    rep.square_ok = dec.same_components(expect);
  }
  // V_2w (x) V_w
  {
    DominantCharacter ch_2w =
        freudenthal_char(s.datum, weight_scale(2, s.omega));
    Decomposition dec = decompose(char_mul(ch_2w, ch_w));
    Decomposition expect(s.datum);
    for (const Weight& O : s.Omega) expect.add(weight_add(s.omega, O), 1);
    rep.cartan_cube_ok = dec.same_components(expect);
  }
  // 2. multiplicities in S^3
  {
    Decomposition s3 = decompose(power_op(ch_w, 3, PowerKind::Sym));
    IntegerSeries series = cubic_mult_series();
    rep.series_ok = true;
    for (int i = 0; i <= s.freudenthal_rank; ++i) {
      long long got = s3.mult_of(weight_add(s.omega, s.Omega[i]));
      rep.m.push_back(got);
      if (got != series.at(i).get_si()) rep.series_ok = false;
    }
    // 3. the secant ring keeps exactly the i != 1 components, each once;
    // consistent iff m_1 = 0 and m_i >= 1 otherwise
    rep.sigma_consistent = rep.series_ok && rep.m.size() >= 2 && rep.m[1] == 0;
    for (size_t i = 0; i < rep.m.size(); ++i)
      if (i != 1 && rep.m[i] < 1) rep.sigma_consistent = false;
  }
  return rep;
}

namespace {

const Decomposition& s3_wedge_cached(int n) {
  static std::map<int, Decomposition> cache;
  std::lock_guard<std::mutex> lock(table_mutex());
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  RootDatum d{Family::A, 2 * n - 1};
  Decomposition dec =
      decompose(power_op(freudenthal_char(d, d.fundamental(n)), 3,
                         PowerKind::Sym),
                "S3 middle wedge");
  return cache.emplace(n, std::move(dec)).first->second;
}

}  // namespace

long long grassmannian_m_oracle(int a, int b, int n) {
  if (a < 0 || b < 0 || a > n || b > n || a > 2 * b || b > 2 * a)
    throw std::invalid_argument("grassmannian_m: indices outside support");
  RootDatum d{Family::A, 2 * n - 1};
  Weight w = d.zero();
  auto addf = [&](int idx) {
    if (idx >= 1 && idx <= 2 * n - 1) w = weight_add(w, d.fundamental(idx));
  };
  addf(n - a);
  addf(n + a - b);
  addf(n + b);
  // components of S^3 live in the 3n-trace slice; fundamental-weight sums
  // with index 2n contribute the full-determinant column
  if (n + b == 2 * n) {
    for (auto& x : w) x += 2;
  }
  if (n + a - b == 2 * n) {
    for (auto& x : w) x += 2;
  }
  return s3_wedge_cached(n).mult_of(w);
}

long long grassmannian_m_rule_printed(int a, int b) {
  const int x = (b >= a) ? (2 * a - b) : (2 * b - a);
  const bool both_even = (a % 2 == 0) && (b % 2 == 0);
  const bool res1 = ((x % 6) + 6) % 6 == 1;
  if (res1 || both_even) {
    // floor((x+1)/6) with floor toward -infinity
    int num = x + 1;
    return (num >= 0) ? num / 6 : -(((-num) + 5) / 6);
  }
  int num = x + 1;
  return (num >= 0) ? (num + 5) / 6 : -((-num) / 6);
}

long long grassmannian_m_diagonal_closed(int a) {
  const int r = a / 6, s = a % 6;
  return r + 1 - (s == 1 ? 1 : 0);
}

TriangularTable quartic_e_triangular(const QuarticTable& t) {
  TriangularTable tri;
  tri.rows.resize(t.n + 1);
  for (int i = 0; i <= t.n; ++i)
    for (int j = i; j <= t.n; ++j) tri.rows[i].push_back(t.e_at(i, j));
  return tri;
}

TriangularTable quartic_ideal_even_triangular(int n) {
  Decomposition ideal = quartic_ideal(n);
  TriangularTable tri;
  tri.rows.resize(n + 1);
  for (int i = 0; i <= n; ++i) tri.rows[i].assign(n + 1 - i, 0);
  for (const auto& [w, m] : ideal.components) {
    if (!w.empty() && w.back() < 0) continue;  // mirror family
    int fours = 0, twos = 0;
    for (int v : w) {
      if (v == 4) ++fours;
      else if (v == 2) ++twos;
      else if (v != 0)
        throw std::logic_error("quartic_ideal_even_triangular: bad component");
    }
    int j = n - fours, i = n - fours - twos;
    if (i > j) std::swap(i, j);
    tri.rows[i][j - i] += m;
  }
  return tri;
}

CAuditReport corollary_c_audit(int n_lo, int n_hi) {
  if (n_lo < 2 || n_hi < n_lo)
    throw std::invalid_argument("corollary_c_audit: bad range");
  CAuditReport rep;
  IntegerSeries printed(
      [] {
        IntPoly p(10, Int(0));
        p[0] = 1;
        p[9] = 1;
        return p;
      }(),
      poly_mul(poly_one_minus_xk(2), poly_one_minus_xk(3)));
  IntegerSeries derived(
      [] {
        IntPoly p(10, Int(0));
        p[0] = 1;
        p[9] = 1;
        return p;
      }(),
      poly_mul(poly_one_minus_xk(4), poly_one_minus_xk(6)));
  rep.derived = derived.prefix(n_hi + 1);

  auto lhs_of = [](int n) {
    Int a = (Int(1) << (n - 1)) + 1;
    Int b = (Int(1) << (n - 2)) + 1;
    Int prod = a * b;
    if (prod % 3 != 0) throw std::logic_error("c_audit: lhs not divisible by 3");
    return Int(prod / 3);
  };
  auto weight_of = [](int n, int p) -> Int {
    return binomial(2 * n, n - p) - binomial(2 * n, n - p - 1);
  };

  for (int n = n_lo; n <= n_hi; ++n) {
    CAuditEntry row{n, lhs_of(n), Int(0), Int(0)};
    for (int p = 0; p <= n; ++p) {
      row.printed_sum += printed.at(p) * weight_of(n, p);
      row.derived_sum += derived.at(p) * weight_of(n, p);
    }
    if (row.printed_sum != row.lhs) rep.printed_ok = false;
    if (row.derived_sum != row.lhs) rep.derived_ok = false;
    rep.rows.push_back(std::move(row));
  }

  // uniqueness under nonnegativity: enumerate nonnegative solutions of the
  // first identity, then each later identity forces the next coefficient
  std::vector<std::vector<Int>> partials;
  {
    const Int lhs = lhs_of(n_lo);
    const Int w0 = weight_of(n_lo, 0), w1 = weight_of(n_lo, 1),
              w2 = weight_of(n_lo, 2);
    for (Int c0 = 0; c0 * w0 <= lhs; ++c0)
      for (Int c1 = 0; c0 * w0 + c1 * w1 <= lhs; ++c1) {
        Int rem = lhs - c0 * w0 - c1 * w1;
        if (rem % w2 == 0) partials.push_back({c0, c1, Int(rem / w2)});
      }
  }
  for (int n = n_lo + 1; n <= n_hi; ++n) {
    std::vector<std::vector<Int>> next;
    for (auto& cand : partials) {
      Int acc = 0;
      for (int p = 0; p < n; ++p)
        acc += cand[size_t(p)] * weight_of(n, p);
      Int cn = lhs_of(n) - acc;  // weight_of(n, n) = 1
      if (cn >= 0) {
        cand.push_back(cn);
        next.push_back(std::move(cand));
      }
    }
    partials = std::move(next);
  }
  rep.unique_nonnegative = partials.size() == 1;
  if (!partials.empty()) rep.survivor = partials.front();
  return rep;
}

}  // namespace spinsec
