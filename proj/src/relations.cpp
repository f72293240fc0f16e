#include "spinsec/relations.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

namespace spinsec {

namespace {

void normalize(PfaffianRelation& rel) {
  std::sort(rel.terms.begin(), rel.terms.end(),
            [](const PfaffianRelation::Term& a, const PfaffianRelation::Term& b) {
              return a.K1 != b.K1 ? a.K1 < b.K1 : a.K2 < b.K2;
            });
  Int g(0);
  for (const auto& t : rel.terms) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
  if (g > 1)
    for (auto& t : rel.terms) t.c /= g;
  if (!rel.terms.empty() && rel.terms.front().c < 0)
    for (auto& t : rel.terms) t.c = -t.c;
}

}  // namespace

PfaffianRelation quadratic_relations(int n, Mask monomial) {
  const Mask X = VMono::epart(monomial, n);
  const Mask Y = VMono::fpart(monomial, n);
  const int k = set_size(monomial);
  if (k >= n || ((n - k) & 1))
    throw std::invalid_argument(
        "quadratic_relations: monomial degree must satisfy k < n with n-k even");

  PfaffianRelation rel;
  rel.n = n;
  rel.degree = k;
  rel.R = X & Y;
  rel.S = Y & ~X;
  const Mask P = X & ~Y;
  const Mask D = full_mask(n) & ~(P | rel.S);
  rel.T = D & ~rel.R;

  if ((n - k) % 4 != 0) return rel;  // trivial by the skewness of beta_k

  for_each_subset(D, [&](Mask A) {
    const Mask I = P | A;
    const Mask J = P | (D & ~A);
    if ((set_size(I) & 1) != (n & 1)) return;  // Pf of an odd set vanishes
    Int c = beta_pair_mono_coeff(n, I, J, monomial);
    if (c == 0) return;
    const Mask top = full_mask(n);
    rel.terms.push_back({top & ~I, top & ~J, std::move(c)});
  });
  normalize(rel);
  return rel;
}

std::vector<PfaffianRelation> all_quadratic_relations(int n) {
  std::vector<PfaffianRelation> out;
  std::set<std::string> seen;
  const Mask top2n = full_mask(2 * n);
  for_each_subset(top2n, [&](Mask mono) {
    const int k = set_size(mono);
    if (k >= n) return;
    const int d = n - k;
    if (d % 4 != 0) return;
    PfaffianRelation rel = quadratic_relations(n, mono);
    if (!rel.nontrivial()) return;
    std::string sig = rel.to_json();
    if (seen.insert(std::move(sig)).second) out.push_back(std::move(rel));
  });
  return out;
}

Rat verify_relation(const PfaffianRelation& rel, SubPfaffianTable& table) {
  Rat total(0);
  for (const auto& t : rel.terms)
    total += Rat(t.c) * table.get(t.K1) * table.get(t.K2);
  return total;
}

Rat verify_relation(const PfaffianRelation& rel, const SkewMatrix& A) {
  if (A.n != rel.n) throw std::invalid_argument("verify_relation: size mismatch");
  SubPfaffianTable table(A);
  return verify_relation(rel, table);
}

std::string PfaffianRelation::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  j["S"] = mask_to_indices(S);
  j["R"] = mask_to_indices(R);
  j["T"] = mask_to_indices(T);
  auto terms_j = nlohmann::json::array();
  for (const auto& t : terms) {
    nlohmann::json tj;
    tj["K1"] = mask_to_indices(t.K1);
    tj["K2"] = mask_to_indices(t.K2);
    tj["c"] = t.c.get_str();
    terms_j.push_back(std::move(tj));
  }
  j["terms"] = std::move(terms_j);
  return j.dump();
}

}  // namespace spinsec
