#include "spinsec/tensor.hpp"

namespace spinsec {

void TensorElem::add_term(Mask left, Mask right, const Rat& c) {
  if (c == 0) return;
  const auto k = key(left, right);
  auto it = terms.find(k);
  if (it == terms.end()) {
    terms.emplace(k, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

TensorElem operator+(const TensorElem& a, const TensorElem& b) {
  TensorElem r = a;
  for (const auto& [k, c] : b.terms)
    r.add_term(TensorElem::left_of(k), TensorElem::right_of(k), c);
  return r;
}

TensorElem operator-(const TensorElem& a, const TensorElem& b) {
  TensorElem r = a;
  for (const auto& [k, c] : b.terms)
    r.add_term(TensorElem::left_of(k), TensorElem::right_of(k), -c);
  return r;
}

TensorElem operator*(const Rat& c, const TensorElem& a) {
  TensorElem r(a.rank);
  if (c == 0) return r;
  for (const auto& [k, v] : a.terms) r.terms.emplace(k, c * v);
  return r;
}

std::optional<Rat> proportionality_ratio(const TensorElem& a,
                                         const TensorElem& b) {
  if (a.is_zero()) return std::nullopt;
  if (b.is_zero()) return Rat(0);
  if (a.terms.size() != b.terms.size()) return std::nullopt;
  Rat ratio = b.terms.begin()->second / a.terms.begin()->second;
  auto ia = a.terms.begin();
  auto ib = b.terms.begin();
  for (; ia != a.terms.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return std::nullopt;
    if (ib->second != ratio * ia->second) return std::nullopt;
  }
  return ratio;
}

namespace {

template <typename F>
void for_each_ksubset(const std::vector<int>& pool, int k, std::vector<int>& cur,
                      size_t from, F&& f) {
  if (k == 0) {
    f(cur);
    return;
  }
  for (size_t i = from; i + k <= pool.size(); ++i) {
    cur.push_back(pool[i]);
    for_each_ksubset(pool, k - 1, cur, i + 1, f);
    cur.pop_back();
  }
}

template <typename F>
void for_each_ksubset(const std::vector<int>& pool, int k, F&& f) {
  std::vector<int> cur;
  for_each_ksubset(pool, k, cur, 0, f);
}

}  // namespace

TensorElem psi_general(int n, int vdeg, int spindeg) {
  if (spindeg < 0 || vdeg < spindeg || ((vdeg - spindeg) & 1))
    throw std::invalid_argument("psi_general: index out of range");
  const int isize = (vdeg - spindeg) / 2;
  if (isize + spindeg > n) throw std::invalid_argument("psi_general: index out of range");
  TensorElem r(n);
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i + 1;
  for_each_ksubset(all, isize, [&](const std::vector<int>& iv) {
    Mask I = indices_to_mask(iv);
    std::vector<int> rest;
    for (int i = 1; i <= n; ++i)
      if (!has(I, i)) rest.push_back(i);
    for_each_ksubset(rest, spindeg, [&](const std::vector<int>& jv) {
      Mask J = indices_to_mask(jv);
      // e_I ^ f_I ^ f_J with the f block reordered into increasing order
      Mask ext = I | (Mask(I | J) << n);
      r.add_term(ext, J, Rat(shuffle_sign(I, J)));
    });
  });
  return r;
}

TensorElem psi_tensor(int n, int i, int j) {
  if (n % 2 != 0) throw std::invalid_argument("psi_tensor: rank must be even");
  const int m = n / 2;
  if (i < 0 || j < 0 || i + j > m)
    throw std::invalid_argument("psi_tensor: index out of range");
  return psi_general(n, n - 2 * i, 2 * j);
}

std::pair<int, int> tensor_bidegree(const TensorElem& x) {
  if (x.is_zero()) throw std::invalid_argument("tensor_bidegree: zero element");
  int p = -1, q = -1;
  for (const auto& [k, c] : x.terms) {
    int dp = set_size(TensorElem::left_of(k));
    int dq = set_size(TensorElem::right_of(k));
    if (p < 0) {
      p = dp;
      q = dq;
    } else if (p != dp || q != dq) {
      throw std::invalid_argument("tensor_bidegree: mixed bidegree");
    }
  }
  return {p, q};
}

TensorElem kappa_apply(int i, const TensorElem& x, int contraction_factor) {
  const int n = x.rank;
  TensorElem r(n);
  for (const auto& [key, c] : x.terms) {
    Mask L = TensorElem::left_of(key);
    Mask S = TensorElem::right_of(key);
    if (set_size(L) != n - 2 * i - 1)
      throw std::invalid_argument("kappa_apply: bidegree mismatch");
    for (int k = 1; k <= n; ++k) {
      // (e_k ^ w) (x) i(f_k) s
      if (!has(L, k) && has(S, k)) {
        int sign = parity_sign(bits_below(L, k)) * parity_sign(bits_below(S, k));
        r.add_term(L | bit_of(k), S & ~bit_of(k),
                   Rat(sign * contraction_factor) * c);
      }
      // (f_k ^ w) (x) e_k ^ s
      if (!has(L, n + k) && !has(S, k)) {
        int sign =
            parity_sign(bits_below(L, n + k)) * parity_sign(bits_below(S, k));
        r.add_term(L | bit_of(n + k), S | bit_of(k), Rat(sign) * c);
      }
    }
  }
  return r;
}

TensorElem alpha_step(const TensorElem& x, bool up) {
  const int n = x.rank;
  TensorElem r(n);
  for (const auto& [key, c] : x.terms) {
    Mask L = TensorElem::left_of(key);
    Mask R = TensorElem::right_of(key);
    int t = 0;
    for (int s : mask_to_indices(L)) {  // s is a 2n-symbol position
      const int csign = parity_sign(t++);
      const Mask rest = L & ~(Mask(1) << (s - 1));
      if (up) {
        // wedge the extracted vector into the second slot
        if (!((R >> (s - 1)) & 1)) {
          int wsign = parity_sign(bits_below(R, s));
          r.add_term(rest, R | (Mask(1) << (s - 1)), Rat(csign * wsign) * c);
        }
      } else {
        // contract: the form pairs e_i with f_i
        const int partner = (s <= n) ? s + n : s - n;
        if ((R >> (partner - 1)) & 1) {
          int ksign = parity_sign(bits_below(R, partner));
          r.add_term(rest, R & ~(Mask(1) << (partner - 1)),
                     Rat(csign * ksign) * c);
        }
      }
    }
  }
  return r;
}

TensorElem alpha_pq_rs(const TensorElem& x, int r, int s) {
  auto [p, q] = tensor_bidegree(x);
  if (r < 0 || s < 0 || ((p + q - r - s) & 1) || std::abs(q - s) > p - r)
    throw std::invalid_argument("alpha_pq_rs: parameters outside the cone");
  const int downs = ((p - r) - (s - q)) / 2;
  const int ups = (p - r) - downs;
  TensorElem cur = x;
  for (int i = 0; i < downs; ++i) cur = alpha_step(cur, false);
  for (int i = 0; i < ups; ++i) cur = alpha_step(cur, true);
  return cur;
}

TensorElem comult_split(const ExtVElem& x, int left_deg) {
  TensorElem r(x.rank);
  for (const auto& [m, c] : x.terms) {
    if (set_size(m) < left_deg) continue;
    for_each_subset(m, [&](Mask S) {
      if (set_size(S) != left_deg) return;
      r.add_term(S, m & ~S, Rat(shuffle_sign(S, m & ~S)) * c);
    });
  }
  return r;
}

SpinElem act_extmono_on_spin(int n, Mask m, const SpinElem& s,
                             int contraction_factor) {
  if (m == 0) return s;
  const int sym = std::countr_zero(m) + 1;
  const Mask rest = m & ~(Mask(1) << (sym - 1));
  SpinElem sub = act_extmono_on_spin(n, rest, s, contraction_factor);
  SpinElem out(n);
  // single-vector action on the spin slot
  for (const auto& [sm, c] : sub.terms) {
    if (sym <= n) {
      if (!has(sm, sym))
        out.add_term(sm | bit_of(sym),
                     Rat(parity_sign(bits_below(sm, sym))) * c);
    } else {
      const int i = sym - n;
      if (has(sm, i))
        out.add_term(sm & ~bit_of(i),
                     Rat(contraction_factor * parity_sign(bits_below(sm, i))) *
                         c);
    }
  }
  // Clifford correction: - theta^{-1}(i(v) rest) acting on s
  const int partner = (sym <= n) ? sym + n : sym - n;
  if ((rest >> (partner - 1)) & 1) {
    int ksign = parity_sign(bits_below(rest, partner));
    SpinElem corr = act_extmono_on_spin(
        n, rest & ~(Mask(1) << (partner - 1)), s, contraction_factor);
    out = out - Rat(ksign) * corr;
  }
  return out;
}

Rat pair_tensor(const TensorElem& x, const ExtVElem& y1, const SpinElem& y2) {
  Rat total(0);
  for (const auto& [key, c] : x.terms) {
    Mask L = TensorElem::left_of(key);
    Mask S = TensorElem::right_of(key);
    Rat pv = ext_pairing(ExtVElem::monomial(x.rank, L), y1);
    if (pv == 0) continue;
    Rat ps = spin_pairing(SpinElem::monomial(x.rank, S), y2);
    if (ps == 0) continue;
    total += c * pv * ps;
  }
  return total;
}

}  // namespace spinsec
