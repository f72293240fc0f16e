#include "spinsec/extv.hpp"

namespace spinsec {

VVector VVector::basis_e(int n, int i) {
  VVector v(n);
  v.e[i - 1] = 1;
  return v;
}

VVector VVector::basis_f(int n, int i) {
  VVector v(n);
  v.f[i - 1] = 1;
  return v;
}

Rat form_q(const VVector& v, const VVector& w) {
  if (v.rank != w.rank) throw std::invalid_argument("form_q: rank mismatch");
  Rat s(0);
  for (int i = 0; i < v.rank; ++i) s += v.e[i] * w.f[i] + v.f[i] * w.e[i];
  return s;
}

ExtVElem ExtVElem::one(int n) { return monomial(n, 0); }

ExtVElem ExtVElem::monomial(int n, Mask m, const Rat& c) {
  ExtVElem x(n);
  x.add_term(m, c);
  return x;
}

void ExtVElem::add_term(Mask m, const Rat& c) {
  if (c == 0) return;
  auto it = terms.find(m);
  if (it == terms.end()) {
    terms.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

ExtVElem ExtVElem::grade(int k) const {
  ExtVElem r(rank);
  for (const auto& [m, c] : terms)
    if (VMono::degree(m) == k) r.terms.emplace(m, c);
  return r;
}

ExtVElem operator+(const ExtVElem& a, const ExtVElem& b) {
  ExtVElem r = a;
  for (const auto& [m, c] : b.terms) r.add_term(m, c);
  return r;
}

ExtVElem operator-(const ExtVElem& a, const ExtVElem& b) {
  ExtVElem r = a;
  for (const auto& [m, c] : b.terms) r.add_term(m, -c);
  return r;
}

ExtVElem operator*(const Rat& c, const ExtVElem& a) {
  ExtVElem r(a.rank);
  if (c == 0) return r;
  for (const auto& [m, k] : a.terms) r.terms.emplace(m, c * k);
  return r;
}

namespace {

// The four basic operators on a single monomial. Each returns true and
// fills (out, sign) when the result is nonzero.
bool op_wedge_e(int n, Mask m, int i, Mask& out, int& sign) {
  (void)n;
  if (has(m, i)) return false;
  sign = parity_sign(bits_below(m, i));
  out = m | bit_of(i);
  return true;
}

bool op_wedge_f(int n, Mask m, int i, Mask& out, int& sign) {
  if (has(m, n + i)) return false;
  sign = parity_sign(bits_below(m, n + i));
  out = m | bit_of(n + i);
  return true;
}

// i(e_i): contracts the partner f_i.
bool op_contract_e(int n, Mask m, int i, Mask& out, int& sign) {
  if (!has(m, n + i)) return false;
  sign = parity_sign(bits_below(m, n + i));
  out = m & ~bit_of(n + i);
  return true;
}

// i(f_i): contracts the partner e_i.
bool op_contract_f(int n, Mask m, int i, Mask& out, int& sign) {
  (void)n;
  if (!has(m, i)) return false;
  sign = parity_sign(bits_below(m, i));
  out = m & ~bit_of(i);
  return true;
}

// Contraction of the single symbol s (a 2n-symbol bit position, 1-based)
// into monomial m; used by the Clifford recursion.
bool contract_symbol(int n, int s, Mask m, Mask& out, int& sign) {
  if (s <= n) return op_contract_e(n, m, s, out, sign);
  return op_contract_f(n, m, s - n, out, sign);
}

// theta^{-1}(mono)*theta^{-1}(b) mapped back to /\V, accumulated into acc
// with weight c. Peels the first symbol v of mono via
// theta^{-1}(v ^ x) = v . theta^{-1}(x) - theta^{-1}(i(v) x).
void clifford_mono_mul(int n, Mask mono, Mask b, const Rat& c, ExtVElem& acc) {
  if (mono == 0) {
    acc.add_term(b, c);
    return;
  }
  int s = std::countr_zero(mono) + 1;  // first symbol position
  Mask rest = mono & (mono - 1);

  ExtVElem sub(n);
  clifford_mono_mul(n, rest, b, c, sub);
  // apply psi(v) to sub
  for (const auto& [m, k] : sub.terms) {
    Mask out;
    int sign;
    if (s <= n) {
      if (op_wedge_e(n, m, s, out, sign)) acc.add_term(out, sign * k);
      if (op_contract_e(n, m, s, out, sign)) acc.add_term(out, sign * k);
    } else {
      if (op_wedge_f(n, m, s - n, out, sign)) acc.add_term(out, sign * k);
      if (op_contract_f(n, m, s - n, out, sign)) acc.add_term(out, sign * k);
    }
  }
  // correction term -theta^{-1}(i(v) rest) * theta^{-1}(b)
  Mask corr;
  int sign;
  if (contract_symbol(n, s, rest, corr, sign))
    clifford_mono_mul(n, corr, b, Rat(-sign) * c, acc);
}

}  // namespace

ExtVElem psi_apply(const VVector& v, const ExtVElem& x) {
  if (v.rank != x.rank) throw std::invalid_argument("psi_apply: rank mismatch");
  const int n = x.rank;
  ExtVElem r(n);
  for (const auto& [m, c] : x.terms) {
    for (int i = 1; i <= n; ++i) {
      Mask out;
      int sign;
      if (v.e[i - 1] != 0) {
        if (op_wedge_e(n, m, i, out, sign)) r.add_term(out, sign * v.e[i - 1] * c);
        if (op_contract_e(n, m, i, out, sign))
          r.add_term(out, sign * v.e[i - 1] * c);
      }
      if (v.f[i - 1] != 0) {
        if (op_wedge_f(n, m, i, out, sign)) r.add_term(out, sign * v.f[i - 1] * c);
        if (op_contract_f(n, m, i, out, sign))
          r.add_term(out, sign * v.f[i - 1] * c);
      }
    }
  }
  return r;
}

ExtVElem wedge(const ExtVElem& a, const ExtVElem& b) {
  if (a.rank != b.rank) throw std::invalid_argument("wedge: rank mismatch");
  ExtVElem r(a.rank);
  for (const auto& [m1, c1] : a.terms)
    for (const auto& [m2, c2] : b.terms) {
      if (m1 & m2) continue;
      r.add_term(m1 | m2, Rat(shuffle_sign(m1, m2)) * c1 * c2);
    }
  return r;
}

ExtVElem wedge(const VVector& v, const ExtVElem& x) {
  const int n = x.rank;
  ExtVElem r(n);
  for (const auto& [m, c] : x.terms)
    for (int i = 1; i <= n; ++i) {
      Mask out;
      int sign;
      if (v.e[i - 1] != 0 && op_wedge_e(n, m, i, out, sign))
        r.add_term(out, sign * v.e[i - 1] * c);
      if (v.f[i - 1] != 0 && op_wedge_f(n, m, i, out, sign))
        r.add_term(out, sign * v.f[i - 1] * c);
    }
  return r;
}

ExtVElem clifford_mul(const ExtVElem& a, const ExtVElem& b) {
  if (a.rank != b.rank)
    throw std::invalid_argument("clifford_mul: rank mismatch");
  ExtVElem r(a.rank);
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms)
      clifford_mono_mul(a.rank, ma, mb, ca * cb, r);
  return r;
}

ExtVElem alpha_ext(const ExtVElem& x) {
  ExtVElem r(x.rank);
  for (const auto& [m, c] : x.terms) {
    int d = VMono::degree(m);
    r.terms.emplace(m, parity_sign((d * (d - 1)) / 2) * c);
  }
  return r;
}

Rat ext_pairing(const ExtVElem& x, const ExtVElem& y) {
  if (x.rank != y.rank)
    throw std::invalid_argument("ext_pairing: rank mismatch");
  const int n = x.rank;
  Rat s(0);
  for (const auto& [m1, c1] : x.terms) {
    // partner monomial: swap the e and f halves
    Mask partner = (VMono::fpart(m1, n)) | (VMono::epart(m1, n) << n);
    auto it = y.terms.find(partner);
    if (it == y.terms.end()) continue;
    // parity of the matching permutation: symbol at position a of m1 pairs
    // with its partner inside the canonically ordered `partner` monomial
    auto syms = mask_to_indices(m1);
    int inv = 0;
    std::vector<int> pos;
    pos.reserve(syms.size());
    for (int s2 : syms) {
      int p = (s2 <= n) ? (n + s2) : (s2 - n);  // partner symbol position
      pos.push_back(bits_below(partner, p));
    }
    for (size_t a = 0; a < pos.size(); ++a)
      for (size_t b2 = a + 1; b2 < pos.size(); ++b2)
        if (pos[a] > pos[b2]) ++inv;
    s += Rat(parity_sign(inv)) * c1 * it->second;
  }
  return s;
}

}  // namespace spinsec
