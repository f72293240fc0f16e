#include "spinsec/character.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <set>
#include <tuple>

namespace spinsec {

void DominantCharacter::add(const Weight& w, long long m) {
  if (m == 0) return;
  auto it = mults.find(w);
  if (it == mults.end()) {
    mults.emplace(w, m);
  } else {
    it->second += m;
    if (it->second == 0) mults.erase(it);
  }
}

long long DominantCharacter::value_at(const Weight& any) const {
  auto it = mults.find(datum.dominate(any));
  return it == mults.end() ? 0 : it->second;
}

Int DominantCharacter::dim() const {
  Int total = 0;
  for (const auto& [w, m] : mults) total += Int(long(m)) * datum.orbit_size(w);
  return total;
}

void Decomposition::add(const Weight& w, long long m) {
  if (m == 0) return;
  auto it = components.find(w);
  if (it == components.end()) {
    components.emplace(w, m);
  } else {
    it->second += m;
    if (it->second == 0) components.erase(it);
  }
}

long long Decomposition::mult_of(const Weight& w) const {
  auto it = components.find(w);
  return it == components.end() ? 0 : it->second;
}

Int Decomposition::dim() const {
  Int total = 0;
  for (const auto& [w, m] : components) total += Int(long(m)) * dim_irrep(datum, w);
  return total;
}

Int dim_irrep(const RootDatum& datum, const Weight& lambda) {
  if (!datum.is_dominant(lambda))
    throw std::invalid_argument("dim_irrep: weight not dominant");
  const Weight rho = datum.rho();
  const Weight lr = weight_add(lambda, rho);
  Rat prod(1);
  for (const Weight& a : datum.positive_roots()) {
    Rat factor(long(weight_ip(lr, a)), long(weight_ip(rho, a)));
    factor.canonicalize();
    prod *= factor;
  }
  if (prod.get_den() != 1)
    throw std::logic_error("dim_irrep: non-integral Weyl product");
  return Int(prod.get_num());
}

namespace {

// all dominant weights mu with lambda >= mu in the root order
std::vector<Weight> dominant_weights_below(const RootDatum& datum,
                                           const Weight& lambda) {
  const int nc = datum.ncoords();
  const int hi = *std::max_element(lambda.begin(), lambda.end());
  int lo_all = 0;
  if (datum.family == Family::A)
    lo_all = *std::min_element(lambda.begin(), lambda.end());
  // coordinate parity is constant across the coset
  const int par = ((lambda[0] % 2) + 2) % 2;
  std::vector<long long> lam_prefix(nc + 1, 0);
  for (int i = 0; i < nc; ++i) lam_prefix[i + 1] = lam_prefix[i] + lambda[i];

  std::vector<Weight> out;
  Weight cur(nc, 0);
  auto rec = [&](auto&& self, int pos, int prev, long long prefix) -> void {
    if (pos == nc) {
      if (datum.dominates(lambda, cur)) out.push_back(cur);
      return;
    }
    const bool last = pos == nc - 1;
    const int cap = std::min(prev, hi);
    int lo = lo_all;
    if (last && datum.family == Family::D) lo = -cap;
    for (int v = cap; v >= lo; --v) {
      if ((((v % 2) + 2) % 2) != par) continue;
      const long long p2 = prefix + v;
      // S_k >= 0 is necessary in every family except at the flexible
      // last coordinate of type D
      if (lam_prefix[pos + 1] - p2 < 0 && !(datum.family == Family::D && last))
        continue;
      cur[pos] = v;
      self(self, pos + 1, v, p2);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, hi, 0);
  return out;
}

struct FreudenthalKey {
  char fam;
  int rank;
  Weight lambda;
  bool operator<(const FreudenthalKey& o) const {
    return std::tie(fam, rank, lambda) < std::tie(o.fam, o.rank, o.lambda);
  }
};

std::map<FreudenthalKey, DominantCharacter>& freudenthal_cache() {
  static std::map<FreudenthalKey, DominantCharacter> cache;
  return cache;
}
std::mutex& freudenthal_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

bool weight_peel_less(const Weight& a, const Weight& b) {
  long long sa = 0, sb = 0;
  for (int x : a) sa += x;
  for (int x : b) sb += x;
  if (sa != sb) return sa < sb;
  return a < b;  // lexicographic tie-break
}

DominantCharacter freudenthal_char(const RootDatum& datum,
                                   const Weight& lambda) {
  if (!datum.is_dominant(lambda))
    throw std::invalid_argument("freudenthal_char: weight not dominant");
  {
    std::lock_guard<std::mutex> lock(freudenthal_mutex());
    auto it = freudenthal_cache().find({char(datum.family), datum.rank, lambda});
    if (it != freudenthal_cache().end()) return it->second;
  }

  std::vector<Weight> doms = dominant_weights_below(datum, lambda);
  std::sort(doms.begin(), doms.end(),
            [](const Weight& a, const Weight& b) { return weight_peel_less(b, a); });

  const Weight rho = datum.rho();
  const Weight lr = weight_add(lambda, rho);
  const long long lr2 = weight_ip(lr, lr);
  const auto roots = datum.positive_roots();

  DominantCharacter ch(datum);
  std::map<Weight, long long> table;
  for (const Weight& mu : doms) {
    if (mu == lambda) {
      table[mu] = 1;
      continue;
    }
    long long num = 0;
    for (const Weight& a : roots) {
      Weight w = mu;
      for (int k = 1;; ++k) {
        w = weight_add(w, a);
        auto it = table.find(datum.dominate(w));
        if (it == table.end()) break;
        num += it->second * weight_ip(w, a);
      }
    }
    const Weight mr = weight_add(mu, rho);
    const long long den = lr2 - weight_ip(mr, mr);
    if (den <= 0 || (2 * num) % den != 0)
      throw std::logic_error("freudenthal_char: inexact recursion step");
    long long m = 2 * num / den;
    if (m != 0) table[mu] = m;
  }
  for (auto& [w, m] : table) ch.add(w, m);

  std::lock_guard<std::mutex> lock(freudenthal_mutex());
  freudenthal_cache().emplace(
      FreudenthalKey{char(datum.family), datum.rank, lambda}, ch);
  return ch;
}

DominantCharacter char_mul(const DominantCharacter& a,
                           const DominantCharacter& b) {
  if (!(a.datum == b.datum)) throw std::invalid_argument("char_mul: datum mismatch");
  const RootDatum& datum = a.datum;

  // expand the smaller factor's orbits
  Int ta = a.dim(), tb = b.dim();
  const DominantCharacter& small = (ta <= tb) ? a : b;
  const DominantCharacter& big = (ta <= tb) ? b : a;

  std::vector<std::pair<Weight, long long>> full;
  for (const auto& [w, m] : small.mults)
    for (const Weight& x : datum.orbit(w)) full.emplace_back(x, m);

  std::set<Weight> cands;
  for (const auto& [x, m] : full)
    for (const auto& [mu, mb] : big.mults)
      cands.insert(datum.dominate(weight_add(x, mu)));

  DominantCharacter r(datum);
  for (const Weight& nu : cands) {
    long long acc = 0;
    for (const auto& [x, m] : full)
      acc += m * big.value_at(weight_sub(nu, x));
    if (acc != 0) r.mults.emplace(nu, acc);
  }
  return r;
}

DominantCharacter adams(const DominantCharacter& c, int k) {
  DominantCharacter r(c.datum);
  for (const auto& [w, m] : c.mults) r.mults.emplace(weight_scale(k, w), m);
  return r;
}

namespace {

DominantCharacter char_lincomb(
    const std::vector<std::pair<long long, const DominantCharacter*>>& parts,
    long long divisor) {
  DominantCharacter r(parts.front().second->datum);
  for (const auto& [coef, ch] : parts)
    for (const auto& [w, m] : ch->mults) r.add(w, coef * m);
  for (auto& [w, m] : r.mults) {
    if (m % divisor != 0)
      throw std::logic_error("power_op: non-integral division (corrupt input)");
    m /= divisor;
  }
  std::erase_if(r.mults, [](const auto& kv) { return kv.second == 0; });
  return r;
}

}  // namespace

DominantCharacter power_op(const DominantCharacter& c, int k, PowerKind kind) {
  const bool sym = kind == PowerKind::Sym;
  if (k == 2) {
    DominantCharacter c2 = char_mul(c, c);
    DominantCharacter a2 = adams(c, 2);
    return char_lincomb({{1, &c2}, {sym ? 1 : -1, &a2}}, 2);
  }
  if (k == 3) {
    DominantCharacter c2 = char_mul(c, c);
    DominantCharacter c3 = char_mul(c2, c);
    DominantCharacter a2 = adams(c, 2);
    DominantCharacter ca2 = char_mul(a2, c);
    DominantCharacter a3 = adams(c, 3);
    return char_lincomb({{1, &c3}, {sym ? 3 : -3, &ca2}, {2, &a3}}, 6);
  }
  if (k == 4) {
    DominantCharacter c2 = char_mul(c, c);
    DominantCharacter c3 = char_mul(c2, c);
    DominantCharacter c4 = char_mul(c3, c);
    DominantCharacter a2 = adams(c, 2);
    DominantCharacter a3 = adams(c, 3);
    DominantCharacter a4 = adams(c, 4);
    DominantCharacter c2a2 = char_mul(a2, c2);
    DominantCharacter a2a2 = char_mul(a2, a2);
    DominantCharacter ca3 = char_mul(a3, c);
    return char_lincomb({{1, &c4},
                         {sym ? 6 : -6, &c2a2},
                         {3, &a2a2},
                         {8, &ca3},
                         {sym ? 6 : -6, &a4}},
                        24);
  }
  throw std::invalid_argument("power_op: k must be 2..4");
}

Decomposition decompose(const DominantCharacter& c, const std::string& label) {
  DominantCharacter work = c;
  Decomposition dec(c.datum, label);
  while (!work.mults.empty()) {
    auto lead = work.mults.begin();
    for (auto it = work.mults.begin(); it != work.mults.end(); ++it)
      if (weight_peel_less(lead->first, it->first)) lead = it;
    const Weight lambda = lead->first;
    const long long m = lead->second;
    if (m < 0)
      throw std::logic_error(
          "decompose: negative multiplicity at " + weight_str(lambda) +
          " (input was not a module character)");
    dec.add(lambda, m);
    DominantCharacter irr = freudenthal_char(c.datum, lambda);
    for (const auto& [w, mw] : irr.mults) work.add(w, -m * mw);
  }
  return dec;
}

DominantCharacter spin_char(const RootDatum& datum, bool plus) {
  if (datum.family != Family::D)
    throw std::invalid_argument("spin_char: type D only");
  DominantCharacter c(datum);
  c.add(datum.fundamental(plus ? datum.rank : datum.rank - 1), 1);
  return c;
}

Decomposition tensor_minuscule(const RootDatum& datum, const Weight& lambda,
                               bool plus) {
  if (datum.family != Family::D)
    throw std::invalid_argument("tensor_minuscule: type D only");
  if (!datum.is_dominant(lambda))
    throw std::invalid_argument("tensor_minuscule: weight not dominant");
  const int n = datum.rank;
  Decomposition dec(datum);
  const std::uint32_t count = 1u << n;
  for (std::uint32_t s = 0; s < count; ++s) {
    const bool even = (std::popcount(s) % 2) == 0;
    if (even != plus) continue;
    Weight mu(n, 1);
    for (int b = 0; b < n; ++b)
      if ((s >> b) & 1) mu[b] = -1;
    Weight sum = weight_add(lambda, mu);
    if (datum.is_dominant(sum)) dec.add(sum, 1);
  }
  return dec;
}

}  // namespace spinsec
