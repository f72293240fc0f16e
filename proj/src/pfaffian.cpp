#include "spinsec/pfaffian.hpp"

#include "spinsec/linalg.hpp"

namespace spinsec {

void SkewMatrix::set(int i, int j, const Rat& v) {
  if (i == j && v != 0)
    throw std::invalid_argument("SkewMatrix: diagonal must stay zero");
  a[size_t(i - 1) * n + (j - 1)] = v;
  a[size_t(j - 1) * n + (i - 1)] = -v;
}

SkewMatrix SkewMatrix::random(int n, std::mt19937_64& rng, long num_bound,
                              long den_bound) {
  SkewMatrix m(n);
  std::uniform_int_distribution<long> num(-num_bound, num_bound);
  std::uniform_int_distribution<long> den(1, den_bound);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      Rat v(num(rng), den(rng));
      v.canonicalize();
      m.set(i, j, v);
    }
  return m;
}

const Rat& SubPfaffianTable::get(Mask K) {
  auto it = memo_.find(K);
  if (it != memo_.end()) return it->second;
  Rat value(0);
  const int sz = set_size(K);
  if (sz == 0) {
    value = 1;
  } else if (sz % 2 == 0) {
    // expansion along the first row of the submatrix
    auto idx = mask_to_indices(K);
    const int k0 = idx[0];
    for (size_t t = 1; t < idx.size(); ++t) {
      const Rat& entry = m_->at(k0, idx[t]);
      if (entry == 0) continue;
      Mask rest = K & ~bit_of(k0) & ~bit_of(idx[t]);
      // position t is 0-based here; the printed rule alternates +,-,+,...
      Rat term = entry * get(rest);
      if (t % 2 == 0) term = -term;
      value += term;
    }
  }
  return memo_.emplace(K, std::move(value)).first->second;
}

Rat sub_pfaffian(const SkewMatrix& m, Mask K) {
  SubPfaffianTable t(m);
  return t.get(K);
}

Rat pfaffian(const SkewMatrix& m) {
  if (m.n % 2 != 0) return Rat(0);
  return sub_pfaffian(m, full_mask(m.n));
}

Rat pfaffian_matching_oracle(const SkewMatrix& m, Mask K) {
  const int sz = set_size(K);
  if (sz % 2 != 0) return Rat(0);
  if (sz == 0) return Rat(1);
  auto idx = mask_to_indices(K);
  // enumerate perfect matchings; sign from the inversion count of the
  // flattened sequence (a_1 b_1 a_2 b_2 ...)
  Rat total(0);
  std::vector<int> seq;
  std::vector<bool> used(idx.size(), false);
  auto rec = [&](auto&& self) -> void {
    size_t first = 0;
    while (first < idx.size() && used[first]) ++first;
    if (first == idx.size()) {
      int inv = 0;
      for (size_t x = 0; x < seq.size(); ++x)
        for (size_t y = x + 1; y < seq.size(); ++y)
          if (seq[x] > seq[y]) ++inv;
      Rat prod(parity_sign(inv));
      for (size_t x = 0; x < seq.size(); x += 2)
        prod *= m.at(seq[x], seq[x + 1]);
      total += prod;
      return;
    }
    used[first] = true;
    seq.push_back(idx[first]);
    for (size_t j = first + 1; j < idx.size(); ++j) {
      if (used[j]) continue;
      used[j] = true;
      seq.push_back(idx[j]);
      self(self);
      seq.pop_back();
      used[j] = false;
    }
    seq.pop_back();
    used[first] = false;
  };
  rec(rec);
  return total;
}

Rat determinant(const SkewMatrix& m) {
  QMatrix q(m.n, m.n);
  for (int i = 1; i <= m.n; ++i)
    for (int j = 1; j <= m.n; ++j) q.at(i - 1, j - 1) = m.at(i, j);
  return determinant_exact(std::move(q));
}

SpinElem spinor_of_skew(const SkewMatrix& m) {
  const int n = m.n;
  SubPfaffianTable table(m);
  SpinElem s(n);
  const Mask top = full_mask(n);
  for_each_subset(top, [&](Mask K) {
    if (set_size(K) % 2 != 0) return;
    const Rat& pf = table.get(K);
    if (pf == 0) return;
    s.add_term(top & ~K, pf);
  });
  return s;
}

std::vector<VVector> skew_frame(const SkewMatrix& m) {
  // The checkerboard sign translates the parametrization into the
  // increasing-order contraction convention: with it the frame annihilates
  // spinor_of_skew(m) exactly (plain contraction).
  std::vector<VVector> frame;
  for (int i = 1; i <= m.n; ++i) {
    VVector v(m.n);
    v.e[i - 1] = 1;
    for (int j = 1; j <= m.n; ++j)
      v.f[j - 1] = ((i + j) % 2) ? m.at(i, j) : -m.at(i, j);
    frame.push_back(std::move(v));
  }
  return frame;
}

}  // namespace spinsec
