#include "spinsec/spin.hpp"

#include <algorithm>

#include "spinsec/linalg.hpp"

namespace spinsec {

SpinElem SpinElem::monomial(int n, Mask m, const Rat& c) {
  SpinElem s(n);
  s.add_term(m, c);
  return s;
}

void SpinElem::add_term(Mask m, const Rat& c) {
  if (c == 0) return;
  auto it = terms.find(m);
  if (it == terms.end()) {
    terms.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

SpinParity SpinElem::parity() const {
  int p = -1;
  for (const auto& [m, c] : terms) {
    int q = set_size(m) & 1;
    if (p < 0)
      p = q;
    else if (p != q)
      return SpinParity::Mixed;
  }
  return p == 1 ? SpinParity::Odd : SpinParity::Even;
}

bool SpinElem::in_plus_half() const {
  for (const auto& [m, c] : terms)
    if ((set_size(m) & 1) != (rank & 1)) return false;
  return true;
}

SpinElem operator+(const SpinElem& a, const SpinElem& b) {
  SpinElem r = a;
  for (const auto& [m, c] : b.terms) r.add_term(m, c);
  return r;
}

SpinElem operator-(const SpinElem& a, const SpinElem& b) {
  SpinElem r = a;
  for (const auto& [m, c] : b.terms) r.add_term(m, -c);
  return r;
}

SpinElem operator*(const Rat& c, const SpinElem& a) {
  SpinElem r(a.rank);
  if (c == 0) return r;
  for (const auto& [m, k] : a.terms) r.terms.emplace(m, c * k);
  return r;
}

SpinElem clifford_act(const VVector& v, const SpinElem& s) {
  if (v.rank != s.rank)
    throw std::invalid_argument("clifford_act: rank mismatch");
  const int n = s.rank;
  SpinElem r(n);
  for (const auto& [m, c] : s.terms)
    for (int i = 1; i <= n; ++i) {
      if (v.e[i - 1] != 0 && !has(m, i))
        r.add_term(m | bit_of(i),
                   Rat(parity_sign(bits_below(m, i))) * v.e[i - 1] * c);
      if (v.f[i - 1] != 0 && has(m, i))
        r.add_term(m & ~bit_of(i),
                   Rat(2 * parity_sign(bits_below(m, i))) * v.f[i - 1] * c);
    }
  return r;
}

SpinElem alpha(const SpinElem& s) {
  SpinElem r(s.rank);
  for (const auto& [m, c] : s.terms) {
    int d = set_size(m);
    r.terms.emplace(m, parity_sign((d * (d - 1)) / 2) * c);
  }
  return r;
}

Rat spin_pairing(const SpinElem& u, const SpinElem& v) {
  if (u.rank != v.rank)
    throw std::invalid_argument("spin_pairing: rank mismatch");
  if (!u.is_zero() && !v.is_zero() &&
      (u.parity() == SpinParity::Mixed || v.parity() == SpinParity::Mixed ||
       ((set_size(u.terms.begin()->first) + set_size(v.terms.begin()->first) +
         u.rank) &
        1)))
    throw std::invalid_argument("spin_pairing: parity mismatch");
  const Mask top = full_mask(u.rank);
  Rat s(0);
  for (const auto& [m, c] : u.terms) {
    auto it = v.terms.find(top & ~m);
    if (it == v.terms.end()) continue;
    int d = set_size(m);
    s += Rat(parity_sign((d * (d - 1)) / 2) * shuffle_sign(m, top & ~m)) * c *
         it->second;
  }
  return s;
}

SpinElem build_u_G(int m) {
  if (m < 1) throw std::invalid_argument("build_u_G: m must be positive");
  const int n = 2 * m;
  SpinElem g = SpinElem::vacuum(n);
  for (int i = 1; i <= m; ++i) {
    SpinElem next(n);
    const Mask pair = bit_of(2 * i - 1) | bit_of(2 * i);
    for (const auto& [mask, c] : g.terms) {
      next.add_term(mask, c);
      next.add_term(mask | pair, c);  // disjoint from all previous pairs
    }
    g = next;
  }
  return g;
}

ExtVElem embed_in_extv(const SpinElem& s) {
  ExtVElem r(s.rank);
  for (const auto& [m, c] : s.terms) r.terms.emplace(m, c);
  return r;
}

namespace {

// Annihilation uses the plain contraction o(v') + i(v''): this is the
// normalization under which the frame e_i + sum_j u_ij f_j kills the
// sub-Pfaffian spinor of u exactly (the factor-two module action kills
// the spinor of u/2 instead).
SpinElem clifford_act_plain(const VVector& v, const SpinElem& s) {
  const int n = s.rank;
  SpinElem r(n);
  for (const auto& [m, c] : s.terms)
    for (int i = 1; i <= n; ++i) {
      if (v.e[i - 1] != 0 && !has(m, i))
        r.add_term(m | bit_of(i),
                   Rat(parity_sign(bits_below(m, i))) * v.e[i - 1] * c);
      if (v.f[i - 1] != 0 && has(m, i))
        r.add_term(m & ~bit_of(i),
                   Rat(parity_sign(bits_below(m, i))) * v.f[i - 1] * c);
    }
  return r;
}

}  // namespace

SpinElem pure_spinor_of_subspace(const std::vector<VVector>& frame) {
  if (frame.empty()) throw std::invalid_argument("empty frame");
  const int n = frame[0].rank;
  if (n > kMaxPureSpinorRank)
    throw std::invalid_argument("pure_spinor_of_subspace: rank above cap");
  if (static_cast<int>(frame.size()) != n)
    throw std::invalid_argument("frame must contain rank-many vectors");
  for (const auto& h : frame)
    if (h.rank != n) throw std::invalid_argument("frame rank mismatch");
  for (size_t i = 0; i < frame.size(); ++i)
    for (size_t j = i; j < frame.size(); ++j)
      if (form_q(frame[i], frame[j]) != 0)
        throw std::invalid_argument("frame is not isotropic");
  {
    QMatrix coords(2 * n, n);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) {
        coords.at(i, j) = frame[j].e[i];
        coords.at(n + i, j) = frame[j].f[i];
      }
    if (rank_exact(coords) != n)
      throw std::invalid_argument("frame is not of full rank");
  }

  std::vector<std::pair<SpinElem, int>> kernels;  // (element, count)
  for (int par = 0; par <= 1; ++par) {
    std::vector<Mask> cols, rows_idx;
    for (Mask m = 0; m <= full_mask(n); ++m) {
      if ((set_size(m) & 1) == par) cols.push_back(m);
      else rows_idx.push_back(m);
    }
    std::map<Mask, int> row_of;
    for (size_t i = 0; i < rows_idx.size(); ++i) row_of[rows_idx[i]] = int(i);

    QMatrix M(int(frame.size() * rows_idx.size()), int(cols.size()));
    for (size_t cj = 0; cj < cols.size(); ++cj) {
      SpinElem basis = SpinElem::monomial(n, cols[cj]);
      for (size_t hi = 0; hi < frame.size(); ++hi) {
        SpinElem img = clifford_act_plain(frame[hi], basis);
        for (const auto& [m, c] : img.terms)
          M.at(int(hi * rows_idx.size()) + row_of[m], int(cj)) = c;
      }
    }
    auto basis_vecs = kernel_basis(M);
    for (const auto& v : basis_vecs) {
      SpinElem s(n);
      for (size_t cj = 0; cj < cols.size(); ++cj) s.add_term(cols[cj], v[cj]);
      kernels.emplace_back(std::move(s), 1);
    }
  }
  if (kernels.size() != 1)
    throw std::runtime_error(
        "pure_spinor_of_subspace: kernel dimension != 1 (internal "
        "inconsistency)");

  SpinElem s = kernels[0].first;
  // normalize: lexicographically least monomial gets coefficient 1
  Mask best = 0;
  bool found = false;
  for (const auto& [m, c] : s.terms) {
    if (!found || set_lex_less(m, best)) {
      best = m;
      found = true;
    }
  }
  Rat lead = s.terms.at(best);
  return Rat(1) / lead * s;
}

}  // namespace spinsec
