#include <limits>
#include <unordered_map>
#include <vector>

#include "spinsec/spin.hpp"

namespace spinsec {

namespace {

using ZMap = std::unordered_map<Mask, Int>;

void zadd(ZMap& acc, Mask m, const Int& c) {
  auto [it, fresh] = acc.try_emplace(m, c);
  if (!fresh) it->second += c;
}

// Integer-scaled terms: coefficients times the lcm of all denominators.
Int scale_terms(const SpinElem& s, std::vector<std::pair<Mask, Int>>& out) {
  Int l(1);
  for (const auto& [m, c] : s.terms)
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  out.reserve(s.terms.size());
  for (const auto& [m, c] : s.terms) {
    Rat scaled = c * Rat(l);
    out.emplace_back(m, Int(scaled.get_num()));
  }
  return l;
}

// w = f . alpha(v) with f = f_1...f_n. Every factor is a product of
// isotropic basis vectors, so the Clifford product is the plain psi chain
// psi(f_1)...psi(f_n) (rightmost acts first) on each e-monomial.
template <typename Z, typename Add>
std::unordered_map<Mask, Z> mul_f_alpha(
    int n, const std::vector<std::pair<Mask, Z>>& v, Add&& acc_add) {
  std::unordered_map<Mask, Z> w;
  std::vector<std::pair<Mask, int>> cur, next;
  for (const auto& [J, cJ] : v) {
    const int d = set_size(J);
    const bool neg = parity_sign((d * (d - 1)) / 2) < 0;
    cur.assign(1, {J, neg ? -1 : 1});
    for (int i = n; i >= 1; --i) {
      next.clear();
      for (const auto& [m, s] : cur) {
        next.emplace_back(m | bit_of(n + i),
                          s * parity_sign(bits_below(m, n + i)));
        if (has(m, i))
          next.emplace_back(m & ~bit_of(i), s * parity_sign(bits_below(m, i)));
      }
      cur.swap(next);
    }
    for (const auto& [m, s] : cur) acc_add(w, m, cJ, s);
  }
  return w;
}

// y += c * psi(e_I)(m): largest index acts first; o(e_i) wedges, i(e_i)
// contracts the partner f_i.
template <typename Emit>
void apply_eI_rec(int n, Mask todo, Mask m, int sign, Emit&& emit) {
  if (todo == 0) {
    emit(m, sign);
    return;
  }
  const int i = 32 - std::countl_zero(todo);
  const Mask rest = todo & ~bit_of(i);
  if (!has(m, i))
    apply_eI_rec(n, rest, m | bit_of(i),
                 (bits_below(m, i) & 1) ? -sign : sign, emit);
  if (has(m, n + i))
    apply_eI_rec(n, rest, m & ~bit_of(n + i),
                 (bits_below(m, n + i) & 1) ? -sign : sign, emit);
}

template <typename Emit>
void apply_eI(int n, Mask I, Mask m, Emit&& emit) {
  apply_eI_rec(n, I, m, 1, emit);
}

ZMap beta_engine(const SpinElem& u, const SpinElem& v, Int& scale) {
  const int n = u.rank;
  std::vector<std::pair<Mask, Int>> us, vs;
  Int lu = scale_terms(u, us);
  Int lv = scale_terms(v, vs);
  scale = lu * lv;
  ZMap w = mul_f_alpha<Int>(n, vs, [](ZMap& acc, Mask m, const Int& c, int s) {
    zadd(acc, m, s > 0 ? c : Int(-c));
  });
  ZMap y;
  y.reserve(w.size() * 4);
  for (const auto& [I, cI] : us)
    for (const auto& [m, cm] : w) {
      if (cm == 0) continue;
      const Int prod = cI * cm;
      apply_eI(n, I, m, [&](Mask out, int sign) {
        zadd(y, out, sign > 0 ? prod : Int(-prod));
      });
    }
  return y;
}

struct Int64Overflow {};

inline long long addc(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw Int64Overflow{};
  return r;
}
inline long long mulc(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw Int64Overflow{};
  return r;
}

// flat-array engine; usable when 4^n entries are affordable
bool is_pure_fast(int n, const std::vector<std::pair<Mask, long long>>& us) {
  using W64 = std::unordered_map<Mask, long long>;
  W64 w = mul_f_alpha<long long>(
      n, us, [](W64& acc, Mask m, long long c, int s) {
        auto [it, fresh] = acc.try_emplace(m, 0);
        it->second = addc(it->second, s > 0 ? c : -c);
      });
  std::vector<std::pair<Mask, long long>> wv;
  wv.reserve(w.size());
  for (const auto& [m, cm] : w)
    if (cm != 0) wv.emplace_back(m, cm);

  std::vector<long long> y(size_t(1) << (2 * n), 0);
  const Mask emask = full_mask(n);
  for (const auto& [I, cI] : us) {
    for (const auto& [m, cm] : wv) {
      // i in I with e_i present but f_i absent kills every branch
      const Mask m_e = m & emask;
      const Mask m_f = (m >> n) & emask;
      if (I & m_e & ~m_f) continue;
      const long long prod = mulc(cI, cm);
      apply_eI(n, I, m, [&](Mask out, int sign) {
        y[out] = addc(y[out], sign > 0 ? prod : -prod);
      });
    }
  }
  for (Mask mask = 0; mask < Mask(y.size()); ++mask)
    if (y[mask] != 0 && std::popcount(mask) < n) return false;
  return true;
}

void check_beta_inputs(const SpinElem& u, const SpinElem& v) {
  if (u.rank != v.rank) throw std::invalid_argument("beta: rank mismatch");
  if (u.parity() == SpinParity::Mixed || v.parity() == SpinParity::Mixed)
    throw std::invalid_argument("beta: inputs must have homogeneous parity");
}

}  // namespace

ExtVElem beta(const SpinElem& u, const SpinElem& v) {
  check_beta_inputs(u, v);
  Int scale;
  ZMap y = beta_engine(u, v, scale);
  ExtVElem r(u.rank);
  const Rat inv = Rat(1) / Rat(scale);
  for (const auto& [m, c] : y) {
    if (c == 0) continue;
    r.terms.emplace(m, Rat(c) * inv);
  }
  return r;
}

ExtVElem beta_k(const SpinElem& u, const SpinElem& v, int k) {
  return beta(u, v).grade(k);
}

ExtVElem beta_pair_mono(int n, Mask I, Mask J) {
  SpinElem u = SpinElem::monomial(n, I), v = SpinElem::monomial(n, J);
  return beta(u, v);
}

Int beta_pair_mono_coeff(int n, Mask I, Mask J, Mask target) {
  using W64 = std::unordered_map<Mask, long long>;
  std::vector<std::pair<Mask, long long>> vs{{J, 1}};
  W64 w = mul_f_alpha<long long>(
      n, vs, [](W64& acc, Mask m, long long c, int s) {
        auto [it, fresh] = acc.try_emplace(m, 0);
        it->second += s > 0 ? c : -c;
      });
  // bits outside {e_i, f_i : i in I} never change under psi(e_I)
  const Mask vary = I | (I << n);
  long long total = 0;
  for (const auto& [m, cm] : w) {
    if (cm == 0) continue;
    if ((m & ~vary) != (target & ~vary)) continue;
    apply_eI(n, I, m, [&](Mask out, int sign) {
      if (out == target) total += sign > 0 ? cm : -cm;
    });
  }
  return Int(long(total));
}

bool is_pure(const SpinElem& u) {
  if (u.is_zero()) throw std::invalid_argument("is_pure: zero input");
  if (u.parity() == SpinParity::Mixed)
    throw std::invalid_argument("is_pure: mixed parity input");
  const int n = u.rank;

  std::vector<std::pair<Mask, Int>> us;
  scale_terms(u, us);
  if (n <= 12) {
    std::vector<std::pair<Mask, long long>> us64;
    us64.reserve(us.size());
    bool fits = true;
    for (const auto& [m, c] : us) {
      if (!c.fits_slong_p()) {
        fits = false;
        break;
      }
      us64.emplace_back(m, c.get_si());
    }
    if (fits) {
      try {
        return is_pure_fast(n, us64);
      } catch (const Int64Overflow&) {
        // fall through to the big-integer path
      }
    }
  }
  Int scale;
  ZMap y = beta_engine(u, u, scale);
  for (const auto& [m, c] : y)
    if (c != 0 && VMono::degree(m) < n) return false;
  return true;
}

}  // namespace spinsec
