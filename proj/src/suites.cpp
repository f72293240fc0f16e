#include "spinsec/suites.hpp"

#include <iostream>
#include <random>
#include <sstream>

#include "spinsec/linalg.hpp"
#include "spinsec/relations.hpp"
#include "spinsec/secant.hpp"
#include "spinsec/tensor.hpp"
#include "spinsec/toy.hpp"

namespace spinsec {

namespace {

std::string weight_list(const Decomposition& dec) {
  std::string s;
  for (const auto& [w, m] : dec.components) {
    if (!s.empty()) s += " + ";
    if (m != 1) s += std::to_string(m) + "*";
    s += weight_str(w);
  }
  return s.empty() ? "0" : s;
}

// ---- pfaffian suite pieces ----------------------------------------------

bool purity_trials(int n, int trials, std::mt19937_64& rng, bool rational,
                   std::string& detail) {
  for (int t = 0; t < trials; ++t) {
    SkewMatrix A = rational ? SkewMatrix::random(n, rng, 1000, 1000)
                            : SkewMatrix::random(n, rng, 5, 1);
    if (!is_pure(spinor_of_skew(A))) {
      detail = "purity failed at trial " + std::to_string(t);
      return false;
    }
  }
  detail = std::to_string(trials) + " spinors pure";
  return true;
}

std::vector<PfaffianRelation> emitted_relations(int n, int per_class,
                                                std::mt19937_64& rng) {
  if (n <= 6) return all_quadratic_relations(n);
  std::vector<PfaffianRelation> out;
  for (int k = n - 4; k >= 0; k -= 4) {
    // sample monomials of degree k with a nontrivial relation class
    int produced = 0, guard = 0;
    while (produced < per_class && guard < 50 * per_class) {
      ++guard;
      Mask mono = 0;
      // random k-subset of the 2n symbols
      while (set_size(mono) < k)
        mono |= Mask(1) << (rng() % (2 * n));
      PfaffianRelation rel = quadratic_relations(n, mono);
      if (rel.nontrivial()) {
        out.push_back(std::move(rel));
        ++produced;
      }
    }
  }
  return out;
}

bool relation_trials(int n, int trials, int per_class, std::mt19937_64& rng,
                     std::string& detail) {
  auto rels = emitted_relations(n, per_class, rng);
  if (rels.empty()) {
    detail = "no nontrivial relations at this rank";
    return n < 4;
  }
  int evaluations = 0;
  for (int t = 0; t < trials; ++t) {
    SkewMatrix A = SkewMatrix::random(n, rng, 9, 1);
    SubPfaffianTable table(A);
    for (const auto& rel : rels) {
      if (verify_relation(rel, table) != 0) {
        detail = "relation violated at trial " + std::to_string(t);
        return false;
      }
      ++evaluations;
    }
  }
  detail = std::to_string(rels.size()) + " relations x " +
           std::to_string(trials) + " matrices, all exactly zero (" +
           std::to_string(evaluations) + " checks)";
  return true;
}

bool relation_mutation(int n, std::mt19937_64& rng, std::string& detail) {
  Mask mono = 0;  // the degree-(n-4) class always exists for n >= 4
  while (set_size(mono) < n - 4) mono |= Mask(1) << (rng() % (2 * n));
  PfaffianRelation rel = quadratic_relations(n, mono);
  if (!rel.nontrivial()) return relation_mutation(n, rng, detail);
  rel.terms[rng() % rel.terms.size()].c += 1;
  for (int t = 0; t < 5; ++t) {
    SkewMatrix A = SkewMatrix::random(n, rng, 9, 1);
    if (verify_relation(rel, A) != 0) {
      detail = "corrupted relation detected on matrix " + std::to_string(t);
      return true;
    }
  }
  detail = "corrupted relation went unnoticed on 5 matrices";
  return false;
}

bool completeness_witness_n6(std::mt19937_64& rng, std::string& detail) {
  const int n = 6;
  auto rels = all_quadratic_relations(n);
  std::vector<Mask> evens;
  for (Mask K = 0; K <= full_mask(n); ++K)
    if (set_size(K) % 2 == 0) evens.push_back(K);
  std::map<std::pair<Mask, Mask>, int> idx;
  for (size_t a = 0; a < evens.size(); ++a)
    for (size_t b = a; b < evens.size(); ++b)
      idx[{evens[a], evens[b]}] = int(idx.size());
  const std::uint64_t p = 2305843009213693951ull;  // 2^61 - 1

  std::vector<std::vector<std::uint64_t>> relrows;
  for (const auto& rel : rels) {
    std::vector<std::uint64_t> row(idx.size(), 0);
    for (const auto& t : rel.terms) {
      Mask a = std::min(t.K1, t.K2), b = std::max(t.K1, t.K2);
      long c = t.c.get_si();
      std::uint64_t v = (c >= 0) ? std::uint64_t(c) : p - (std::uint64_t(-c) % p);
      row[idx[{a, b}]] = (row[idx[{a, b}]] + v) % p;
    }
    relrows.push_back(std::move(row));
  }
  const int rank_rel = rank_mod_p(relrows, p);

  // evaluation matrix on sample points, transposed for column rank. Every
  // emitted relation vanishes exactly on the samples (checked separately),
  // so rank(relations) <= dim ker(eval); the mod-p ranks sandwich both.
  const int samples = int(idx.size()) + 80;
  std::vector<std::vector<std::uint64_t>> evalT(
      idx.size(), std::vector<std::uint64_t>(samples));
  for (int s = 0; s < samples; ++s) {
    SkewMatrix A = SkewMatrix::random(n, rng, 1000, 1);
    SubPfaffianTable table(A);
    int col = 0;
    for (const auto& [pair_, id] : idx) {
      Int prod = Int(table.get(pair_.first).get_num()) *
                 Int(table.get(pair_.second).get_num());
      Int r = prod % Int(long(p));
      if (r < 0) r += Int(long(p));
      evalT[col][s] = mpz_get_ui(r.get_mpz_t());
      ++col;
    }
  }
  const int rank_eval = rank_mod_p(evalT, p);
  const int kernel_dim = int(idx.size()) - rank_eval;
  std::ostringstream os;
  os << rels.size() << " relations of rank " << rank_rel
     << "; degree-2 evaluation kernel has dimension " << kernel_dim;
  detail = os.str();
  return rank_rel == kernel_dim;
}

// ---- kappa identity -------------------------------------------------------

struct KappaScan {
  bool printed_ok_plain = true, printed_ok_double = true;
  bool computed_ok = true;
  std::string detail;
};

KappaScan kappa_scan(const std::vector<int>& ranks) {
  KappaScan scan;
  std::ostringstream os;
  for (int n : ranks) {
    const int m = n / 2;
    for (int i = 0; i <= m; ++i)
      for (int j = 1; i + j <= m; ++j) {
        TensorElem in = psi_general(n, n - 2 * i - 1, 2 * j - 1);
        TensorElem pa = psi_tensor(n, i, j);
        TensorElem pb = psi_general(n, n - 2 * i, 2 * j - 2);
        const Rat printedA = Rat(parity_sign(m - i - j) * (2 * j - 1));
        const Rat printedB = Rat(m + i - j + 1);
        for (int cf : {1, 2}) {
          TensorElem out = kappa_apply(i, in, cf);
          // solve out = A pb + B pa on the disjoint spin-degree supports
          auto coeff_on = [&](const TensorElem& basis) -> Rat {
            auto& [key, c] = *basis.terms.begin();
            auto it = out.terms.find(key);
            return it == out.terms.end() ? Rat(0) : Rat(it->second / c);
          };
          const Rat A = coeff_on(pb), B = coeff_on(pa);
          if (!(A * pb + B * pa == out)) {
            scan.computed_ok = false;
            os << " [n=" << n << ",(i,j)=(" << i << "," << j << "),cf=" << cf
               << ": image escapes the psi span]";
            continue;
          }
          if (cf == 1) {
            const Rat expA = Rat(parity_sign(m - i - j) * (m - i - j + 1));
            const Rat expB = Rat(2 * j);
            if (A != expA || B != expB) scan.computed_ok = false;
            if (A != printedA || B != printedB) scan.printed_ok_plain = false;
            os << " [n=" << n << " (i,j)=(" << i << "," << j << "): kappa = "
               << A << "*psi_{" << 2 * i << "," << 2 * j - 2 << "} + " << B
               << "*psi_{" << 2 * i << "," << 2 * j << "}, printed ("
               << printedA << "," << printedB << ")]";
          } else {
            if (A != printedA || B != printedB) scan.printed_ok_double = false;
          }
        }
      }
  }
  scan.detail = os.str();
  return scan;
}

// ---- branching ------------------------------------------------------------

bool partition_rule_agreement(int max_target_rank, std::string& detail) {
  for (int n = 3; n <= max_target_rank; ++n) {
    for (BranchRule rule : {BranchRule::DToB, BranchRule::BToD}) {
      const RootDatum src =
          rule == BranchRule::DToB ? RootDatum{Family::D, n + 1}
                                   : RootDatum{Family::B, n};
      const RootDatum tgt{rule == BranchRule::DToB ? Family::B : Family::D, n};
      const int top = src.ncoords();
      for (int i = 0; i <= top; ++i)
        for (int j = i; j <= top; ++j) {
          Weight lam = weight_add(src.theta(i), src.theta(j));
          if (!src.is_dominant(lam)) continue;
          auto br = decompose(branch(freudenthal_char(src, lam), rule));
          Decomposition expect(tgt);
          for (const Weight& w : branch_partition_rule(i, j, n, rule))
            expect.add(w, 1);
          if (!br.same_components(expect)) {
            std::ostringstream os;
            os << (rule == BranchRule::DToB ? "DToB" : "BToD")
               << " mismatch at theta_" << i << "+theta_" << j << ", n=" << n;
            detail = os.str();
            return false;
          }
        }
    }
  }
  detail = "partition rule agrees with weight-level branching";
  return true;
}

Decomposition s_class(const RootDatum& dl, int n, int i) {
  // the two-component bundles S_i over so(2n-2)
  Decomposition s(dl);
  if (i < 0) return s;
  if (i <= n - 3) {
    Weight tail = i ? dl.theta(i) : dl.zero();
    s.add(weight_add(dl.fundamental(n - 1), tail), 1);
    s.add(weight_add(dl.fundamental(n - 2), tail), 1);
  } else if (i == n - 2) {
    s.add(weight_add(weight_scale(2, dl.fundamental(n - 1)), dl.fundamental(n - 2)), 1);
    s.add(weight_add(dl.fundamental(n - 1), weight_scale(2, dl.fundamental(n - 2))), 1);
  } else if (i == n - 1) {
    s.add(weight_scale(3, dl.fundamental(n - 1)), 1);
    s.add(weight_scale(3, dl.fundamental(n - 2)), 1);
  } else {
    throw std::invalid_argument("s_class: index out of range");
  }
  return s;
}

// checks Res V_{w_n + w_i} against S_i + 2 S_{i-1} + S_{i-shift}
bool s_lemma_scan(int max_rank, int shift, std::string& detail) {
  for (int n = 4; n <= max_rank; ++n) {
    const RootDatum d{Family::D, n};
    const RootDatum dl{Family::D, n - 1};
    for (int i = 0; i <= n - 2; ++i) {
      Weight lam = weight_add(d.fundamental(n), i ? d.theta(i) : d.zero());
      auto br = decompose(branch(freudenthal_char(d, lam), BranchRule::DToD));
      Decomposition expect(dl);
      for (auto& [w, m] : s_class(dl, n, i).components) expect.add(w, m);
      for (auto& [w, m] : s_class(dl, n, i - 1).components) expect.add(w, 2 * m);
      for (auto& [w, m] : s_class(dl, n, i - shift).components) expect.add(w, m);
      if (!br.same_components(expect)) {
        std::ostringstream os;
        os << "restriction of V_{w_n+w_" << i << "} at n=" << n
           << " differs from S_" << i << " + 2S_" << i - 1 << " + S_"
           << i - shift;
        detail = os.str();
        return false;
      }
    }
    // top case: Res V_{2w_n + w_{n-1}}
    Weight lam = weight_add(weight_scale(2, d.fundamental(n)), d.fundamental(n - 1));
    auto br = decompose(branch(freudenthal_char(d, lam), BranchRule::DToD));
    Decomposition expect(dl);
    for (auto& [w, m] : s_class(dl, n, n - 1).components) expect.add(w, m);
    const int mid_mult = (shift == 2) ? 2 : 1;
    for (auto& [w, m] : s_class(dl, n, n - 2).components)
      expect.add(w, mid_mult * m);
    for (auto& [w, m] : s_class(dl, n, n - 3).components) expect.add(w, m);
    if (!br.same_components(expect)) {
      detail = "restriction of V_{2w_n+w_{n-1}} mismatch at n=" + std::to_string(n);
      return false;
    }
  }
  detail = "restriction formulas hold for all n <= " + std::to_string(max_rank);
  return true;
}

// ---- section 2.4 proportionality ------------------------------------------

bool beta_uEuF_proportionality(int n, std::string& detail) {
  const bool even = (n % 2 == 0);
  SpinElem uE = SpinElem::u_E(n);
  SpinElem other = even ? SpinElem::vacuum(n)
                        : SpinElem::monomial(n, bit_of(n));  // e_n
  ExtVElem b = beta(uE, other);
  std::ostringstream os;
  for (int k = 0; 2 * k + (even ? 0 : 1) <= 2 * n; ++k) {
    const int deg = 2 * k + (even ? 0 : 1);
    ExtVElem got = b.grade(deg);
    ExtVElem expect(n);
    for_each_subset(full_mask(n) & (even ? full_mask(n) : full_mask(n - 1)),
                    [&](Mask K) {
                      if (set_size(K) != k) return;
                      Mask mono = K | (K << n);
                      if (!even) {
                        if (has(K, n)) return;
                        mono |= bit_of(n);
                      }
                      expect.add_term(mono, Rat(1));
                    });
    // expect = sum over |K| = k of e_K ^ f_K (^ e_n in the odd case), with
    // the canonical reordering signs
    if (expect.is_zero()) {
      if (!got.is_zero()) {
        detail = "unexpected degree " + std::to_string(deg);
        return false;
      }
      continue;
    }
    // proportionality with one common scalar per degree
    if (got.terms.size() != expect.terms.size()) {
      detail = "support mismatch in degree " + std::to_string(deg);
      return false;
    }
    Rat ratio = 0;
    auto ig = got.terms.begin();
    auto ie = expect.terms.begin();
    for (; ig != got.terms.end(); ++ig, ++ie) {
      if (ig->first != ie->first) {
        detail = "support mismatch in degree " + std::to_string(deg);
        return false;
      }
      Rat r = ig->second / ie->second;
      if (ratio == 0)
        ratio = r;
      else if (r != ratio) {
        detail = "ratios disagree in degree " + std::to_string(deg);
        return false;
      }
    }
    os << " deg" << deg << ": scalar " << ratio << ";";
  }
  detail = os.str();
  return true;
}



// ---- suite runners --------------------------------------------------------

void suite_pfaffian(RunReport& rep, int max_rank, int trials,
                    std::mt19937_64& rng) {
  for (int n = 4; n <= std::min(max_rank, 10); ++n) {
    CheckTimer t;
    std::string detail;
    bool ok = purity_trials(n, trials, rng, false, detail);
    if (ok && n <= 6) {
      std::string d2;
      ok = purity_trials(n, std::max(1, trials / 5), rng, true, d2);
      detail += "; rational entries: " + d2;
    }
    rep.add("purity-n" + std::to_string(n), ok, detail, t.seconds());
  }
  for (int n = 4; n <= std::min(max_rank, 10); ++n) {
    CheckTimer t;
    std::string detail;
    bool ok = relation_trials(n, std::min(trials, 100), 40, rng, detail);
    rep.add("relations-n" + std::to_string(n), ok, detail, t.seconds());
  }
  {
    CheckTimer t;
    std::string detail;
    bool ok = relation_mutation(std::min(max_rank, 8), rng, detail);
    rep.add("relation-mutation", ok, detail, t.seconds());
  }
  for (int n = 2; n <= std::min(max_rank, 12); ++n) {
    CheckTimer t;
    bool ok = true;
    std::string detail = "Pf^2 = det";
    for (int trial = 0; trial < 5 && ok; ++trial) {
      SkewMatrix A = SkewMatrix::random(n, rng, 50, 7);
      Rat pf = pfaffian(A);
      ok = pf * pf == determinant(A);
      if (ok && n <= 8) ok = pf == pfaffian_matching_oracle(A, full_mask(n));
    }
    rep.add("pfaffian-det-n" + std::to_string(n), ok, detail, t.seconds());
  }
  for (int n = 2; n <= std::min(max_rank, 8); ++n) {
    CheckTimer t;
    SkewMatrix A = SkewMatrix::random(n, rng, 20, 3);
    SpinElem direct = spinor_of_skew(A);
    SpinElem via_kernel = pure_spinor_of_subspace(skew_frame(A));
    // compare projectively
    Rat ratio = 0;
    bool ok = direct.terms.size() == via_kernel.terms.size();
    if (ok)
      for (auto id = direct.terms.begin(), ik = via_kernel.terms.begin();
           id != direct.terms.end(); ++id, ++ik) {
        if (id->first != ik->first) {
          ok = false;
          break;
        }
        Rat r = id->second / ik->second;
        if (ratio == 0) ratio = r;
        if (r != ratio) {
          ok = false;
          break;
        }
      }
    rep.add("spinor-frame-agreement-n" + std::to_string(n), ok,
            "kernel route proportional to the sub-Pfaffian expansion",
            t.seconds());
  }
  {
    CheckTimer t;
    std::string detail;
    bool ok = completeness_witness_n6(rng, detail);
    rep.add("relation-completeness-n6", ok, detail, t.seconds());
  }
}

void suite_beta(RunReport& rep, int max_rank, int trials,
                std::mt19937_64& rng) {
  auto random_spinor = [&](int n, int parity) {
    SpinElem s(n);
    std::uniform_int_distribution<int> coef(-6, 6);
    for (Mask m = 0; m <= full_mask(n); ++m)
      if ((set_size(m) & 1) == parity && rng() % 3 == 0)
        s.add_term(m, Rat(coef(rng)));
    if (s.is_zero()) s.add_term(parity ? bit_of(1) : 0, Rat(1));
    return s;
  };

  {
    CheckTimer t;
    bool ok = true;
    for (int trial = 0; trial < trials && ok; ++trial) {
      const int n = 3 + int(rng() % 3);
      std::uniform_int_distribution<int> coef(-5, 5);
      VVector v(n), w(n);
      for (int i = 0; i < n; ++i) {
        v.e[i] = coef(rng);
        v.f[i] = coef(rng);
        w.e[i] = coef(rng);
        w.f[i] = coef(rng);
      }
      SpinElem s = random_spinor(n, int(rng() % 2));
      SpinElem lhs = clifford_act(v, clifford_act(w, s)) +
                     clifford_act(w, clifford_act(v, s));
      SpinElem rhs = Rat(2) * form_q(v, w) * s;
      ok = lhs == rhs;
    }
    rep.add("module-relation", ok, "vw + wv acts as 2q(v,w)", t.seconds());
  }
  {
    CheckTimer t;
    bool ok = true;
    for (int trial = 0; trial < trials && ok; ++trial) {
      const int n = 2 + int(rng() % 3);
      auto rand_mono = [&]() {
        return ExtVElem::monomial(n, Mask(rng()) & full_mask(2 * n),
                                  Rat(1 + int(rng() % 3)));
      };
      ExtVElem a = rand_mono(), b = rand_mono(), c = rand_mono();
      ok = clifford_mul(clifford_mul(a, b), c) ==
           clifford_mul(a, clifford_mul(b, c));
      if (ok) ok = clifford_mul(a, ExtVElem::one(n)) == a;
    }
    rep.add("clifford-associativity", ok, "random monomial triples",
            t.seconds());
  }
  {
    CheckTimer t;
    bool ok = true;
    for (int trial = 0; trial < trials && ok; ++trial) {
      const int n = 2 + int(rng() % 3);
      ExtVElem a = ExtVElem::monomial(n, Mask(rng()) & full_mask(2 * n));
      ExtVElem b = ExtVElem::monomial(n, Mask(rng()) & full_mask(2 * n));
      ok = alpha_ext(clifford_mul(a, b)) ==
           clifford_mul(alpha_ext(b), alpha_ext(a));
    }
    rep.add("alpha-antiautomorphism", ok, "alpha(xy) = alpha(y) alpha(x)",
            t.seconds());
  }
  for (int n = 2; n <= std::min(max_rank, 7); ++n) {
    CheckTimer t;
    bool ok = true;
    std::string detail;
    for (int trial = 0; trial < std::max(2, trials / 10) && ok; ++trial) {
      const int par = n % 2;  // the plus half-spin parity
      SpinElem u = random_spinor(n, par);
      SpinElem v = random_spinor(n, par);
      ExtVElem buv = beta(u, v);
      ExtVElem bvu = beta(v, u);
      for (int k = 0; k <= 2 * n && ok; ++k) {
        ExtVElem guv = buv.grade(k);
        ExtVElem gvu = bvu.grade(k);
        if ((n - k) % 2 != 0) {
          ok = guv.is_zero() && gvu.is_zero();
          if (!ok) detail = "nonzero odd-gap grade " + std::to_string(k);
          continue;
        }
        const int sign = parity_sign((n - k) / 2);
        ok = guv == Rat(sign) * gvu;
        if (!ok) detail = "symmetry sign wrong in grade " + std::to_string(k);
      }
      if (ok) {
        // top-bottom mirror: grades k and 2n-k match monomialwise, up to
        // sign, through the e/f-swapped complement
        ExtVElem bu = beta(u, u);
        for (int k = 0; k < n && ok; ++k) {
          ExtVElem low = bu.grade(k), high = bu.grade(2 * n - k);
          ok = low.terms.size() == high.terms.size();
          for (auto it = low.terms.begin(); ok && it != low.terms.end(); ++it) {
            Mask comp = full_mask(2 * n) & ~it->first;
            Mask partner = Mask((comp >> n) | ((comp & full_mask(n)) << n));
            auto ith = high.terms.find(partner);
            ok = ith != high.terms.end() && abs(ith->second) == abs(it->second);
          }
          if (!ok) detail = "grades " + std::to_string(k) + "/" +
                            std::to_string(2 * n - k) + " unrelated";
        }
      }
    }
    rep.add("beta-symmetry-n" + std::to_string(n), ok, detail, t.seconds());
  }
  for (int n = 2; n <= std::min(max_rank, 8); ++n) {
    CheckTimer t;
    std::string detail;
    bool ok = beta_uEuF_proportionality(n, detail);
    rep.add("beta-uE-uF-n" + std::to_string(n), ok, detail, t.seconds());
  }
  for (int n = 2; n <= std::min(max_rank, 5); ++n) {
    CheckTimer t;
    bool ok = true;
    std::string detail = "support and |coefficient| = 2^{|I cap J|}";
    for (Mask I = 0; I <= full_mask(n) && ok; ++I)
      for (Mask J = 0; J <= full_mask(n) && ok; ++J) {
        ExtVElem b = beta_pair_mono(n, I, J);
        const Mask P = I & J, Q = full_mask(n) & ~(I | J), D = (I ^ J);
        const Int expected_abs = Int(1) << set_size(P);
        for (const auto& [mono, c] : b.terms) {
          Mask X = VMono::epart(mono, n), Y = VMono::fpart(mono, n);
          Mask R = X & Y;
          if ((X & ~R) != P || (Y & ~R) != Q || (R & ~D) != 0 ||
              !(abs(Rat(c)) == Rat(expected_abs))) {
            ok = false;
            detail = "bad term for I=" + mask_to_string(I) +
                     ", J=" + mask_to_string(J);
            break;
          }
        }
      }
    rep.add("beta-monomial-closed-form-n" + std::to_string(n), ok, detail,
            t.seconds());
  }
  {
    CheckTimer t;
    bool ok = true;
    std::string detail;
    for (int m = 1; m <= std::min(max_rank / 2, 6) && ok; ++m)
      ok = is_pure(build_u_G(m));
    if (!ok) detail = "u_G purity failed";
    SpinElem mix = SpinElem::u_E(4) + SpinElem::vacuum(4);
    if (ok) {
      ok = !is_pure(mix);
      if (!ok) detail = "generic secant point reported pure";
    }
    rep.add("purity-examples", ok, detail, t.seconds());
  }
  {
    CheckTimer t;
    bool ok = true;
    std::string detail;
    for (int n = 2; n <= std::min(max_rank, 6) && ok; ++n) {
      for (int trial = 0; trial < 3 && ok; ++trial) {
        Mask I = Mask(rng()) & full_mask(n);
        std::vector<VVector> frame;
        for (int i = 1; i <= n; ++i)
          frame.push_back(has(I, i) ? VVector::basis_e(n, i)
                                    : VVector::basis_f(n, i));
        SpinElem s = pure_spinor_of_subspace(frame);
        ok = s == SpinElem::monomial(n, I);
        if (!ok) detail = "coordinate frame " + mask_to_string(I);
      }
    }
    rep.add("pure-spinor-frames", ok, detail, t.seconds());
  }
  {
    CheckTimer t;
    bool ok = true;
    const int n = 4;
    for (int trial = 0; trial < trials && ok; ++trial) {
      SpinElem u = random_spinor(n, int(rng() % 2));
      SpinElem v = random_spinor(n, (set_size(u.terms.begin()->first) + n) % 2);
      for (Mask X = 1; X <= full_mask(2 * n) && ok; ++X) {
        if (set_size(X) != 2) continue;
        SpinElem Xu = act_extmono_on_spin(n, X, u);
        SpinElem Xv = act_extmono_on_spin(n, X, v);
        ok = spin_pairing(Xu, v) + spin_pairing(u, Xv) == 0;
      }
    }
    rep.add("spin-pairing-invariance", ok, "so-invariance of the form",
            t.seconds());
  }
  {
    CheckTimer t;
    std::vector<int> ranks;
    for (int n = 4; n <= std::min(max_rank, 8); n += 2) ranks.push_back(n);
    KappaScan scan = kappa_scan(ranks);
    rep.add("kappa-exact-identity", scan.computed_ok,
            "kappa(psi_{2i+1,2j-1}) = (-1)^{m-i-j}(m-i-j+1) psi_{2i,2j-2} + "
            "2j psi_{2i,2j} under the plain contraction",
            t.seconds());
    rep.add("kappa-printed-constants",
            scan.printed_ok_plain || scan.printed_ok_double,
            std::string("printed constants (-1)^{m-i-j}(2j-1) and (m+i-j+1) "
                        "match neither contraction convention; measured:") +
                scan.detail,
            0.0);
  }
}

void suite_cubics(RunReport& rep, int max_rank, int, std::mt19937_64&) {
  const int top = std::min(max_rank, kS3RankCap);
  {
    CheckTimer t;
    Decomposition dec = s3_halfspin(9);
    RootDatum d{Family::D, 9};
    Decomposition expect(d);
    expect.add(weight_scale(3, d.fundamental(9)), 1);
    expect.add(weight_add(d.fundamental(9), d.theta(5)), 1);
    expect.add(weight_add(d.fundamental(9), d.theta(3)), 1);
    expect.add(weight_add(d.fundamental(9), d.theta(1)), 1);
    expect.add(d.fundamental(8), 1);
    rep.add("s3-halfspin-D9", dec.same_components(expect), weight_list(dec),
            t.seconds());
  }
  {
    CheckTimer t;
    bool ok = true;
    std::string detail;
    IntegerSeries a = cubic_mult_series();
    for (int n = 5; n <= top && ok; ++n) {
      Decomposition dec = s3_halfspin(n);
      RootDatum d{Family::D, n};
      for (int j = 1; 2 * j <= n && ok; ++j) {
        long long got = dec.mult_of(weight_add(d.fundamental(n), d.theta(n - 2 * j)));
        ok = got == a.at(j).get_si();
        if (!ok) detail = "a-mult wrong at n=" + std::to_string(n) + " j=" + std::to_string(j);
      }
      for (int j = 1; 2 * j + 1 <= n && ok; ++j) {
        long long got =
            dec.mult_of(weight_add(d.fundamental(n - 1), d.theta(n - 2 * j - 1)));
        long long want = (j >= 4) ? a.at(j - 4).get_si() : 0;
        ok = got == want;
        if (!ok) detail = "b-mult wrong at n=" + std::to_string(n) + " j=" + std::to_string(j);
      }
      if (ok) {
        Int expect_dim = binomial((1L << (n - 1)) + 2, 3);
        ok = dec.dim() == expect_dim;
        if (!ok) detail = "dimension check failed at n=" + std::to_string(n);
      }
    }
    rep.add("s3-multiplicity-series", ok, detail, t.seconds());
  }
  {
    CheckTimer t;
    bool ok = true;
    std::string detail;
    for (int n = 4; n <= top && ok; ++n) {
      Decomposition ideal = cubic_ideal(n);
      const bool empty = ideal.components.empty();
      ok = (n <= 8) ? empty : !empty;
      if (!ok) detail = "ideal emptiness wrong at n=" + std::to_string(n);
      if (ok && !ideal.same_components(cubic_ideal_formula(n))) {
        ok = false;
        detail = "ideal disagrees with closed form at n=" + std::to_string(n);
      }
    }
    if (ok && top >= 9) {
      Decomposition ideal = cubic_ideal(9);
      RootDatum d{Family::D, 9};
      Decomposition expect(d);
      expect.add(d.fundamental(8), 1);
      ok = ideal.same_components(expect);
      if (!ok) detail = "I3 at n=9 is not {w8}";
    }
    rep.add("cubic-ideal-range", ok, detail, t.seconds());
  }
  {
    CheckTimer t;
    bool ok = true;
    std::string detail;
    for (int n = 8; n <= top && ok; ++n) {
      ok = tangent_kernel(n, 3).same_components(tangent_kernel_formula(n, 3)) &&
           tangent_kernel(n, 4).same_components(tangent_kernel_formula(n, 4));
      if (!ok) detail = "tangent kernel mismatch at n=" + std::to_string(n);
    }
    rep.add("tangent-kernels", ok, detail, t.seconds());
  }
}

void suite_quartics(RunReport& rep, int max_rank, int, std::mt19937_64&) {
  const int top = std::min(max_rank, kS4RankCap);
  std::vector<QuarticTable> tables;
  for (int n = 7; n <= top; ++n) {
    CheckTimer t;
    QuarticTable tab = s4_halfspin(n);
    auto diffs = diff_tables(quartic_e_triangular(tab), reference_quartic_table(), n);
    bool ok = diffs.empty();
    std::string detail = ok ? "matches the reference sub-triangle"
                            : diffs.front();
    for (int i = 0; i <= n && ok; ++i) {
      if (tab.f_at(i) != 0) {
        ok = false;
        detail = "nonzero f at i=" + std::to_string(i);
      }
      for (int j = i; j <= n && ok; ++j)
        if ((i + j) % 2 == 1 && tab.e_at(i, j) != 0) {
          ok = false;
          detail = "parity violation";
        }
    }
    if (ok) {
      auto recs = quartic_recursion_check(tab);
      ok = recs.ok;
      if (!ok) detail = recs.violations.front();
    }
    rep.add("s4-table-n" + std::to_string(n), ok, detail, t.seconds());
    tables.push_back(std::move(tab));
  }
  {
    CheckTimer t;
    bool ok = true;
    std::string detail = "entries agree across ranks on shared indices";
    for (size_t a = 0; a + 1 < tables.size() && ok; ++a) {
      int bound = tables[a].n;
      for (int i = 0; i <= bound && ok; ++i)
        for (int j = i; j <= bound && ok; ++j)
          if (tables[a].e_at(i, j) != tables.back().e_at(i, j)) {
            ok = false;
            detail = "cross-rank disagreement at (" + std::to_string(i) + "," +
                     std::to_string(j) + ")";
          }
    }
    rep.add("s4-rank-stability", tables.size() < 2 || ok, detail, t.seconds());
  }
  if (top >= 9) {
    CheckTimer t;
    RootDatum d7{Family::D, 7}, d8{Family::D, 8}, d9{Family::D, 9};
    Decomposition e7(d7), e8(d8), e9(d9);
    e7.add(d7.theta(4), 1);
    e8.add(weight_scale(2, d8.fundamental(8)), 1);
    e8.add(weight_add(d8.theta(1), d8.theta(5)), 1);
    e9.add(d9.zero(), 1);
    e9.add(d9.theta(4), 1);
    e9.add(d9.theta(6), 1);
    e9.add(d9.theta(8), 1);
    e9.add(weight_add(d9.theta(1), weight_scale(2, d9.fundamental(9))), 1);
    e9.add(weight_add(d9.theta(2), d9.theta(6)), 1);
    bool ok = quartic_ideal(7).same_components(e7) &&
              quartic_ideal(8).same_components(e8) &&
              quartic_ideal(9).same_components(e9);
    rep.add("quartic-ideal-examples", ok,
            "ideals at ranks 7, 8, 9 match the reference lists", t.seconds());
  }
  if (top >= 10) {
    CheckTimer t;
    NotInducedWitness w = not_induced_by_cubics(10);
    rep.add("quartic-not-induced", w.holds, w.detail, t.seconds());
  }
}

void suite_freudenthal(RunReport& rep, int max_rank, int trials,
                       std::mt19937_64& rng) {
  {
    CheckTimer t;
    bool ok = true;
    std::string detail;
    for (int n = 4; n <= std::min(max_rank, 14) && ok; ++n) {
      RootDatum d{Family::D, n};
      for (int k = 0; k <= n - 2 && ok; ++k) {
        Weight lam = weight_add(d.fundamental(n), k ? d.theta(k) : d.zero());
        Int expect = (Int(1) << (n - 1)) * Int(2 * n - 2 * k + 1) *
                     binomial(2 * n, k) / Int(2 * n - k + 1);
        ok = dim_irrep(d, lam) == expect;
        if (!ok) detail = "spin-wedge dimension wrong at n=" + std::to_string(n);
      }
    }
    // the two-theta closed forms
    for (int n = 4; n <= std::min(max_rank, 12) && ok; ++n) {
      RootDatum d{Family::D, n};
      auto fact = [](long k) {
        Int r;
        mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
        return r;
      };
      for (int p = 1; p <= n - 1 && ok; ++p) {
        Weight lam = weight_add(d.theta(n), d.theta(n - p));
        Int expect = Int((p + 1)) * (p + 1) * fact(2 * n) * fact(2 * n + 1) /
                     (fact(n - p) * fact(n + p + 2) * fact(n) * fact(n + 1));
        ok = dim_irrep(d, lam) == expect;
        if (!ok) detail = "theta_n+theta_{n-p} dimension wrong";
        for (int q = 1; q <= p - 1 && ok; ++q) {
          Weight mu = weight_add(d.theta(n - p), d.theta(n - q));
          Int e2 = Int(p - q + 1) * Int(p + q + 1) * fact(2 * n) *
                   fact(2 * n + 2) /
                   (fact(n - p) * fact(n + p + 2) * fact(n - q + 1) *
                    fact(n + q + 1));
          ok = dim_irrep(d, mu) == e2;
          if (!ok) detail = "two-theta dimension wrong";
        }
      }
    }
    rep.add("dimension-closed-forms", ok, detail, t.seconds());
  }
  {
    CheckTimer t;
    bool ok = true;
    std::string detail;
    for (int n = 4; n <= std::min(max_rank, 6) && ok; ++n) {
      RootDatum d{Family::D, n};
      for (int trial = 0; trial < trials / 2 && ok; ++trial) {
        Weight lam(n, 0);
        for (int i = 0; i < n; ++i) lam[i] = 2 * int(rng() % 3);
        std::sort(lam.begin(), lam.end(), std::greater<int>());
        if (rng() % 2) {
          for (auto& x : lam) x += 1;
          if (rng() % 2) lam[n - 1] = -lam[n - 1];
        }
        if (!d.is_dominant(lam)) continue;
        const bool plus = rng() % 2 == 0;
        Decomposition fast = tensor_minuscule(d, lam, plus);
        Decomposition general = decompose(
            char_mul(freudenthal_char(d, lam), spin_char(d, plus)));
        ok = fast.same_components(general);
        if (!ok) detail = "minuscule path disagrees at " + weight_str(lam);
      }
    }
    rep.add("minuscule-vs-general", ok, detail, t.seconds());
  }
  {
    CheckTimer t;
    std::string detail;
    bool ok = partition_rule_agreement(std::min(max_rank, 6), detail);
    rep.add("branch-partition-rule", ok, detail, t.seconds());
  }
  {
    CheckTimer t;
    std::string detail;
    bool printed = s_lemma_scan(std::min(max_rank, 6), 3, detail);
    rep.add("restriction-lemma-printed", printed,
            "printed third summand S_{i-3}: " + detail, t.seconds());
    std::string detail2;
    bool corrected = s_lemma_scan(std::min(max_rank, 6), 2, detail2);
    rep.add("restriction-lemma-corrected", corrected,
            "third summand S_{i-2}: " + detail2, t.seconds());
  }
  {
    CheckTimer t;
    bool ok = true;
    std::string names;
    for (auto [f, r] : std::vector<std::pair<Family, int>>{
             {Family::C, 3}, {Family::C, 4}, {Family::A, 5}, {Family::A, 7},
             {Family::D, 4}}) {
      Theorem5Report t5 = theorem5_check(f, r);
      names += t5.name + (t5.ok() ? " ok; " : " FAIL; ");
      ok = ok && t5.ok();
    }
    rep.add("freudenthal-uniformity", ok, names, t.seconds());
  }
  {
    CheckTimer t;
    CAuditReport audit = corollary_c_audit(2, std::max(4, std::min(max_rank, 12)));
    bool n3_flag = false;
    for (const auto& row : audit.rows)
      if (row.n == 3 && row.printed_sum == 11 && row.lhs == 5) n3_flag = true;
    bool ok = audit.derived_ok && audit.unique_nonnegative && n3_flag &&
              !audit.printed_ok;
    rep.add("coefficient-series-audit", ok,
            "derived series passes, printed series fails at n=3 (11 != 5); "
            "unique nonnegative solution",
            t.seconds());
  }
  {
    CheckTimer t;
    bool ok = true;
    std::string devs;
    for (int n : {3, 4}) {
      for (int a = 0; a <= n && ok; ++a)
        ok = grassmannian_m_oracle(a, a, n) == grassmannian_m_diagonal_closed(a);
      for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= n; ++b) {
          if (a > 2 * b || b > 2 * a) continue;
          long long o = grassmannian_m_oracle(a, b, n);
          long long r = grassmannian_m_rule_printed(a, b);
          if (o != r)
            devs += "(" + std::to_string(a) + "," + std::to_string(b) +
                    "): oracle " + std::to_string(o) + " vs printed " +
                    std::to_string(r) + "; ";
        }
    }
    ok = ok && !devs.empty();
    rep.add("grassmannian-multiplicity-audit", ok,
            "diagonal closed form matches the oracle; printed two-sided rule "
            "deviates at: " + devs,
            t.seconds());
  }
}

void suite_toy(RunReport& rep, int max_rank, int, std::mt19937_64&) {
  const int top = std::min(max_rank, 8);
  {
    CheckTimer t;
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= top && ok; ++n)
      for (int k = 0; k <= 6 && ok; ++k) {
        BivariatePolynomial ch = localization_char(n, k);
        ok = ch == localization_char_fixedpoint(n, k);
        if (!ok) detail = "fixed-point route disagrees";
      }
    rep.add("toy-two-routes", ok, detail, t.seconds());
  }
  {
    CheckTimer t;
    bool ok = true;
    std::string detail;
    for (int n = 2; n <= top && ok; ++n)
      for (int k = 0; k <= 6 && ok; ++k) {
        GLTwoDecomp dec = decompose_gl2(localization_char(n, k));
        for (int s = 0; 2 * s <= n * k && ok; ++s) {
          ok = dec.mult_of(n * k - 2 * s, s) == q_formula(n, s, k);
          if (!ok)
            detail = "q mismatch at n=" + std::to_string(n) +
                     " k=" + std::to_string(k) + " s=" + std::to_string(s);
        }
        if (ok) {
          // dimension consistency at x = y = 1
          Rat total(0);
          for (const auto& [p, q, m] : dec.entries)
            total += Rat(long(m)) * Rat(p + 1);
          ok = total == eval_at_one(localization_char(n, k));
          if (!ok) detail = "dimension bookkeeping failed";
        }
      }
    rep.add("toy-q-formula", ok, detail, t.seconds());
  }
  {
    CheckTimer t;
    bool ok = true;
    std::string detail;
    for (int k = 0; k <= 6 && ok; ++k) {
      ok = decompose_gl2(plethysm_sym_sym(3, k)).entries ==
           decompose_gl2(localization_char(3, k)).entries;
      if (!ok) detail = "plethysm oracle disagrees at k=" + std::to_string(k);
    }
    rep.add("toy-plethysm-n3", ok, detail, t.seconds());
  }
  {
    CheckTimer t;
    bool ok = true;
    std::string detail;
    for (int n = 2; n <= top && ok; ++n)
      for (int k = 2; k <= 6 && ok; ++k) {
        GLTwoDecomp dec = decompose_gl2(localization_char(n, k));
        for (int s = 2; 2 * s <= n * k && ok; ++s) {
          long long lhs = dec.mult_of(n * k - 2 * s, s) -
                          dec.mult_of(n * k - 2 * (s - 2), s - 2);
          long long rhs = (s <= k ? 1 : 0) - ((s - 1) % n == 0 ? 1 : 0) -
                          ((s - 2) % n == 0 ? 1 : 0);
          ok = lhs == rhs;
          if (!ok)
            detail = "induction fails at n=" + std::to_string(n) +
                     " k=" + std::to_string(k) + " s=" + std::to_string(s);
        }
      }
    rep.add("toy-induction", ok, detail, t.seconds());
  }
  {
    CheckTimer t;
    bool ok = true;
    std::string detail = "tangent ring strictly smaller exactly when n >= 4";
    for (int n = 3; n <= top && ok; ++n) {
      GLTwoDecomp tau = tau_ring_gl2(n, 3);
      GLTwoDecomp sigma = decompose_gl2(localization_char(n, 3));
      bool equal = tau == sigma;
      ok = (n == 3) ? equal : !equal;
    }
    rep.add("toy-tangent-comparison", ok, detail, t.seconds());
  }
}

}  // namespace

RunReport run_suite(const std::string& suite, int max_rank, int trials,
                    unsigned long long seed, int threads) {
  RunReport rep;
  rep.command = "verify " + suite;
  rep.seed = seed;
  rep.threads = threads;
  rep.config = {{"max_rank", max_rank}, {"trials", trials}};
  std::mt19937_64 rng(seed);
  CheckTimer total;
  if (suite == "pfaffian" || suite == "all")
    suite_pfaffian(rep, max_rank, trials, rng);
  if (suite == "beta" || suite == "all") suite_beta(rep, max_rank, trials, rng);
  if (suite == "cubics" || suite == "all")
    suite_cubics(rep, max_rank, trials, rng);
  if (suite == "quartics" || suite == "all")
    suite_quartics(rep, max_rank, trials, rng);
  if (suite == "freudenthal" || suite == "all")
    suite_freudenthal(rep, max_rank, trials, rng);
  if (suite == "toy" || suite == "all") suite_toy(rep, max_rank, trials, rng);
  if (rep.checks.empty())
    throw std::invalid_argument("unknown suite: " + suite);
  rep.total_seconds = total.seconds();
  return rep;
}

bool run_acceptance_criterion(int criterion, std::ostream& out) {
  CheckTimer timer;
  bool ok = false;
  std::string detail;
  switch (criterion) {
    case 1: {
      Decomposition dec = s3_halfspin(9);
      RootDatum d{Family::D, 9};
      Decomposition expect(d);
      expect.add(weight_scale(3, d.fundamental(9)), 1);
      expect.add(weight_add(d.fundamental(9), d.theta(5)), 1);
      expect.add(weight_add(d.fundamental(9), d.theta(3)), 1);
      expect.add(weight_add(d.fundamental(9), d.theta(1)), 1);
      expect.add(d.fundamental(8), 1);
      ok = dec.same_components(expect) && timer.seconds() < 60.0;
      detail = "S3 half-spin at D9 = " + weight_list(dec);
      break;
    }
    case 2: {
      ok = true;
      IntegerSeries a = cubic_mult_series();
      for (int n = 5; n <= 12 && ok; ++n) {
        Decomposition dec = s3_halfspin(n);
        RootDatum d{Family::D, n};
        for (int j = 1; 2 * j <= n && ok; ++j)
          ok = dec.mult_of(weight_add(d.fundamental(n), d.theta(n - 2 * j))) ==
               a.at(j).get_si();
        for (int j = 1; 2 * j + 1 <= n && ok; ++j)
          ok = dec.mult_of(weight_add(d.fundamental(n - 1),
                                      d.theta(n - 2 * j - 1))) ==
               (j >= 4 ? a.at(j - 4).get_si() : 0);
      }
      detail = "multiplicities follow 1/((1-x^2)(1-x^3)) for n = 5..12";
      break;
    }
    case 3: {
      ok = true;
      for (int n = 4; n <= 12 && ok; ++n) {
        bool empty = cubic_ideal(n).components.empty();
        ok = (n <= 8) ? empty : !empty;
      }
      if (ok) {
        RootDatum d{Family::D, 9};
        Decomposition expect(d);
        expect.add(d.fundamental(8), 1);
        ok = cubic_ideal(9).same_components(expect);
      }
      detail = "cubic ideal empty exactly for n <= 8; at n = 9 it is {w8}";
      break;
    }
    case 4: {
      ok = true;
      IntegerSeries diag({Int(1), 0, 0, 0, 0, 0, 0, 0, 0, Int(1)},
                         poly_mul(poly_one_minus_xk(4), poly_one_minus_xk(6)));
      std::vector<QuarticTable> tables;
      for (int n = 7; n <= 10 && ok; ++n) {
        QuarticTable tab = s4_halfspin(n);
        auto diffs =
            diff_tables(quartic_e_triangular(tab), reference_quartic_table(), n);
        if (!diffs.empty()) {
          ok = false;
          detail = "table diff at n=" + std::to_string(n) + ": " + diffs.front();
        }
        for (int i = 0; i <= n && ok; ++i) {
          if (tab.e_at(i, i) != diag.at(i).get_si()) {
            ok = false;
            detail = "diagonal series mismatch";
          }
          if (tab.f_at(i) != 0) {
            ok = false;
            detail = "nonzero f entry";
          }
        }
        tables.push_back(std::move(tab));
      }
      if (ok) {
        const long long expected_row0[] = {1, 0, 0, 0, 1, 0, 1, 0, 2, 0, 1};
        for (int j = 0; j <= 10 && ok; ++j)
          ok = tables.back().e_at(0, j) == expected_row0[j];
        if (!ok) detail = "row 0 at n=10 mismatch";
      }
      for (size_t t = 0; ok && t + 1 < tables.size(); ++t)
        for (int i = 0; i <= tables[t].n && ok; ++i)
          for (int j = i; j <= tables[t].n && ok; ++j) {
            ok = tables[t].e_at(i, j) == tables.back().e_at(i, j);
            if (!ok) detail = "cross-rank instability";
          }
      ok = ok && timer.seconds() < 600.0;
      if (ok)
        detail = "quartic tables for n = 7..10 match the reference triangle, "
                 "the diagonal series, and each other";
      break;
    }
    case 5: {
      RootDatum d7{Family::D, 7}, d8{Family::D, 8}, d9{Family::D, 9};
      Decomposition e7(d7), e8(d8), e9(d9);
      e7.add(d7.theta(4), 1);
      e8.add(weight_scale(2, d8.fundamental(8)), 1);
      e8.add(weight_add(d8.theta(1), d8.theta(5)), 1);
      e9.add(d9.zero(), 1);
      e9.add(d9.theta(4), 1);
      e9.add(d9.theta(6), 1);
      e9.add(d9.theta(8), 1);
      e9.add(weight_add(d9.theta(1), weight_scale(2, d9.fundamental(9))), 1);
      e9.add(weight_add(d9.theta(2), d9.theta(6)), 1);
      ok = quartic_ideal(7).same_components(e7) &&
           quartic_ideal(8).same_components(e8) &&
           quartic_ideal(9).same_components(e9);
      detail = "quartic ideals at ranks 7, 8, 9 match the reference lists";
      break;
    }
    case 6: {
      ok = true;
      std::mt19937_64 rng(12345);
      std::string part;
      for (int n : {4, 6, 8, 10}) {
        if (!ok) break;
        std::vector<SkewMatrix> samples;
        for (int t = 0; t < 100; ++t)
          samples.push_back(SkewMatrix::random(n, rng, 5, 1));
        for (int t = 0; t < 100 && ok; ++t) {
          ok = is_pure(spinor_of_skew(samples[t]));
          if (!ok) detail = "purity failed at n=" + std::to_string(n);
        }
        if (!ok) break;
        auto rels = emitted_relations(n, 40, rng);
        long long checks = 0;
        for (const auto& A : samples) {
          SubPfaffianTable table(A);
          for (const auto& rel : rels) {
            if (verify_relation(rel, table) != 0) {
              ok = false;
              detail = "relation violated at n=" + std::to_string(n);
              break;
            }
            ++checks;
          }
          if (!ok) break;
        }
        part += "n=" + std::to_string(n) + ": 100 pure, " +
                std::to_string(rels.size()) + " relations x 100 all zero; ";
      }
      if (ok) detail = part;
      break;
    }
    case 7: {
      ok = true;
      for (int n : {2, 4, 6, 8}) {
        std::string d;
        if (!beta_uEuF_proportionality(n, d)) {
          ok = false;
          detail = "failed at n=" + std::to_string(n) + ": " + d;
          break;
        }
        detail += "n=" + std::to_string(n) + ":" + d;
      }
      break;
    }
    case 8: {
      KappaScan scan = kappa_scan({4, 6, 8});
      ok = scan.printed_ok_plain || scan.printed_ok_double;
      detail = std::string("printed constants (-1)^{m-i-j}(2j-1), (m+i-j+1) ") +
               (ok ? "hold under the " : "hold under neither contraction "
                                         "convention (factor 1 or 2); ") +
               (ok ? (scan.printed_ok_plain ? "plain" : "factor-2")
                   : "the exact identity is kappa_i(psi_{2i+1,2j-1}) = "
                     "(-1)^{m-i-j}(m-i-j+1) psi_{2i,2j-2} + 2j psi_{2i,2j} "
                     "(plain contraction), verified for every admissible "
                     "(i,j) at n = 4, 6, 8") +
               (scan.computed_ok ? "" : " [span verification also failed]");
      break;
    }
    case 9: {
      std::string d1, d2, d3;
      bool part_a = partition_rule_agreement(6, d1);
      bool printed = s_lemma_scan(6, 3, d2);
      bool corrected = s_lemma_scan(6, 2, d3);
      ok = part_a && printed;
      detail = "partition rule: " + std::string(part_a ? "agrees" : "FAILS") +
               "; printed restriction S_i+2S_{i-1}+S_{i-3}: " +
               (printed ? "holds" : "fails (" + d2 + ")") +
               "; corrected S_i+2S_{i-1}+S_{i-2}: " +
               (corrected ? "holds for all i at n <= 6 (top case needs "
                            "2S_{n-2} as well)"
                          : "fails");
      break;
    }
    case 10: {
      ok = true;
      for (auto [f, r] : std::vector<std::pair<Family, int>>{
               {Family::C, 3}, {Family::C, 4}, {Family::A, 5}, {Family::A, 7},
               {Family::D, 4}}) {
        Theorem5Report t5 = theorem5_check(f, r);
        detail += t5.name + (t5.ok() ? " ok; " : " FAIL; ");
        ok = ok && t5.ok();
      }
      break;
    }
    case 11: {
      ok = true;
      for (int n = 2; n <= 8 && ok; ++n)
        for (int k = 0; k <= 6 && ok; ++k) {
          GLTwoDecomp dec = decompose_gl2(localization_char(n, k));
          for (int s = 0; 2 * s <= n * k && ok; ++s) {
            ok = dec.mult_of(n * k - 2 * s, s) == q_formula(n, s, k);
            if (!ok)
              detail = "mismatch at n=" + std::to_string(n) +
                       " k=" + std::to_string(k) + " s=" + std::to_string(s);
          }
        }
      for (int k = 0; k <= 6 && ok; ++k) {
        ok = decompose_gl2(plethysm_sym_sym(3, k)).entries ==
             decompose_gl2(localization_char(3, k)).entries;
        if (!ok) detail = "plethysm oracle mismatch at k=" + std::to_string(k);
      }
      if (ok)
        detail = "localization multiplicities equal the closed formula for "
                 "n = 2..8, k <= 6, and the n = 3 plethysm oracle";
      break;
    }
    case 12: {
      CAuditReport audit = corollary_c_audit(2, 12);
      bool n3_flag = false;
      for (const auto& row : audit.rows)
        if (row.n == 3 && row.printed_sum == 11 && row.lhs == 5) n3_flag = true;
      bool cgr_diag = true;
      std::string devs;
      for (int n : {3, 4}) {
        for (int a = 0; a <= n; ++a)
          cgr_diag = cgr_diag && grassmannian_m_oracle(a, a, n) ==
                                     grassmannian_m_diagonal_closed(a);
        for (int a = 0; a <= n; ++a)
          for (int b = 0; b <= n; ++b) {
            if (a > 2 * b || b > 2 * a) continue;
            if (grassmannian_m_oracle(a, b, n) !=
                grassmannian_m_rule_printed(a, b))
              devs += "(" + std::to_string(a) + "," + std::to_string(b) + ") ";
          }
      }
      ok = audit.derived_ok && audit.unique_nonnegative && n3_flag &&
           !audit.printed_ok && cgr_diag && !devs.empty();
      detail =
          "derived series (1+x^9)/((1-x^4)(1-x^6)) passes n = 2..12 and is "
          "the unique nonnegative solution; printed series fails at n=3 "
          "(11 != 5); diagonal closed form matches the character oracle at "
          "A5/A7; printed two-sided rule deviates at " +
          devs;
      break;
    }
    default:
      throw std::invalid_argument("criterion must be 1..12");
  }
  out << (ok ? "[PASS]" : "[FAIL]") << " criterion " << criterion << " ("
      << timer.seconds() << "s): " << detail << "\n";
  return ok;
}

}  // namespace spinsec
