#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "spinsec/branch.hpp"
#include "spinsec/character.hpp"

using namespace spinsec;

namespace {

Decomposition folded(const Decomposition& dec) {
  Decomposition out(dec.datum);
  for (const auto& [w, m] : dec.components) {
    Weight v = w;
    if (!v.empty() && v.back() < 0) v.back() = -v.back();
    out.add(v, m);
  }
  return out;
}

}  // namespace

TEST_CASE("Weyl dimension formula") {
  RootDatum d4{Family::D, 4}, d9{Family::D, 9};
  CHECK(dim_irrep(d4, d4.fundamental(1)) == 8);
  CHECK(dim_irrep(d9, d9.fundamental(9)) == 256);
  CHECK(dim_irrep(d9, weight_add(d9.fundamental(9), d9.fundamental(5))) ==
        1410048);
  CHECK_THROWS_AS(dim_irrep(d4, Weight{0, 2, 0, 0}), std::invalid_argument);

  // spin-wedge closed form across the supported range
  for (int n = 4; n <= 14; ++n) {
    RootDatum d{Family::D, n};
    for (int k = 0; k <= n - 2; ++k) {
      Weight lam = weight_add(d.fundamental(n), k ? d.theta(k) : d.zero());
      Int expect = (Int(1) << (n - 1)) * Int(2 * n - 2 * k + 1) *
                   binomial(2 * n, k) / Int(2 * n - k + 1);
      CHECK(dim_irrep(d, lam) == expect);
    }
  }
}

TEST_CASE("two-theta dimension closed forms") {
  auto fact = [](long k) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
  };
  for (int n = 4; n <= 12; n += 2) {
    RootDatum d{Family::D, n};
    for (int p = 1; p <= n - 1; ++p) {
      CHECK(dim_irrep(d, weight_add(d.theta(n), d.theta(n - p))) ==
            Int(p + 1) * (p + 1) * fact(2 * n) * fact(2 * n + 1) /
                (fact(n - p) * fact(n + p + 2) * fact(n) * fact(n + 1)));
      for (int q = 1; q < p; ++q)
        CHECK(dim_irrep(d, weight_add(d.theta(n - p), d.theta(n - q))) ==
              Int(p - q + 1) * (p + q + 1) * fact(2 * n) * fact(2 * n + 2) /
                  (fact(n - p) * fact(n + p + 2) * fact(n - q + 1) *
                   fact(n + q + 1)));
    }
  }
}

TEST_CASE("Freudenthal characters") {
  RootDatum d4{Family::D, 4}, d5{Family::D, 5};
  // vector representation: no zero weight in type D
  DominantCharacter v = freudenthal_char(d5, d5.fundamental(1));
  CHECK(v.mults.size() == 1);
  CHECK(v.mults.at(d5.fundamental(1)) == 1);
  CHECK(v.dim() == 10);
  // adjoint: zero weight with multiplicity = rank
  DominantCharacter adj = freudenthal_char(d4, d4.fundamental(2));
  CHECK(adj.value_at(d4.zero()) == 4);
  CHECK(adj.dim() == 28);
  // minuscule: a single dominant weight
  DominantCharacter spin = freudenthal_char(d5, d5.fundamental(5));
  CHECK(spin.mults.size() == 1);
  CHECK(spin.dim() == 16);
  CHECK(spin_char(d5, true) == spin);

  // dimension conservation on assorted weights
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 4 + int(rng() % 2);
    RootDatum d{Family::D, n};
    Weight lam(n, 0);
    for (int i = 0; i < n; ++i) lam[i] = 2 * int(rng() % 3);
    std::sort(lam.begin(), lam.end(), std::greater<int>());
    CHECK(freudenthal_char(d, lam).dim() == dim_irrep(d, lam));
  }
}

TEST_CASE("character products") {
  RootDatum d4{Family::D, 4}, d5{Family::D, 5};
  CHECK(char_mul(spin_char(d4, true), spin_char(d4, false)).dim() == 64);
  // identity element
  DominantCharacter triv(d4);
  triv.add(d4.zero(), 1);
  CHECK(char_mul(spin_char(d4, true), triv) == spin_char(d4, true));
  // square = sym + ext
  DominantCharacter sq = char_mul(spin_char(d5, true), spin_char(d5, true));
  DominantCharacter split(d5);
  for (const auto& [w, m] : power_op(spin_char(d5, true), 2, PowerKind::Sym).mults)
    split.add(w, m);
  for (const auto& [w, m] : power_op(spin_char(d5, true), 2, PowerKind::Ext).mults)
    split.add(w, m);
  CHECK(sq == split);
}

TEST_CASE("symmetric and exterior squares") {
  RootDatum d5{Family::D, 5}, d4{Family::D, 4};
  // vector representation: S^2 V = V_{2w1} + trivial
  Decomposition s2v = decompose(
      power_op(freudenthal_char(d5, d5.fundamental(1)), 2, PowerKind::Sym));
  Decomposition expect(d5);
  expect.add(weight_scale(2, d5.fundamental(1)), 1);
  expect.add(d5.zero(), 1);
  CHECK(s2v.same_components(expect));

  // ext^2 of a half-spin representation of D4 is the adjoint
  Decomposition e2 =
      decompose(power_op(spin_char(d4, true), 2, PowerKind::Ext));
  CHECK(e2.components.size() == 1);
  CHECK(e2.components.begin()->first == d4.theta(2));
  CHECK(e2.dim() == 28);

  // sym^2 of a half-spin representation of D5
  Decomposition s2 =
      decompose(power_op(spin_char(d5, true), 2, PowerKind::Sym));
  Decomposition expect2(d5);
  expect2.add(weight_scale(2, d5.fundamental(5)), 1);
  expect2.add(d5.fundamental(1), 1);
  CHECK(s2.same_components(expect2));
  CHECK(s2.dim() == 136);
}

TEST_CASE("decompose flags non-characters") {
  RootDatum d4{Family::D, 4};
  DominantCharacter bad(d4);
  bad.add(d4.fundamental(2), 1);   // adjoint highest weight only,
  bad.add(d4.zero(), 1);           // with too small a zero-weight space
  CHECK_THROWS_AS(decompose(bad), std::logic_error);
  // an irreducible character decomposes to itself
  Decomposition dec = decompose(freudenthal_char(d4, d4.fundamental(2)));
  CHECK(dec.components.size() == 1);
  CHECK(dec.mult_of(d4.fundamental(2)) == 1);
}

TEST_CASE("minuscule tensor rule") {
  RootDatum d4{Family::D, 4};
  {
    Decomposition dec = tensor_minuscule(d4, d4.fundamental(1), true);
    Decomposition expect(d4);
    expect.add(weight_add(d4.fundamental(4), d4.fundamental(1)), 1);
    expect.add(d4.fundamental(3), 1);
    CHECK(dec.same_components(expect));
    CHECK(dec.dim() == 64);
  }
  {
    Decomposition dec =
        tensor_minuscule(d4, weight_scale(2, d4.fundamental(4)), true);
    Decomposition expect(d4);
    expect.add(weight_scale(3, d4.fundamental(4)), 1);
    expect.add(weight_add(d4.fundamental(4), d4.theta(2)), 1);
    expect.add(d4.fundamental(4), 1);
    CHECK(dec.same_components(expect));
    CHECK(dec.dim() == 280);
  }
  // agreement with the general path on random dominant weights
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 4 + int(rng() % 3);
    RootDatum d{Family::D, n};
    Weight lam(n, 0);
    for (int i = 0; i < n; ++i) lam[i] = 2 * int(rng() % 2);
    std::sort(lam.begin(), lam.end(), std::greater<int>());
    if (rng() % 2) {
      for (auto& x : lam) x += 1;
      if (rng() % 2) lam[n - 1] = -lam[n - 1];
    }
    if (!d.is_dominant(lam)) continue;
    const bool plus = rng() % 2 == 0;
    CHECK(tensor_minuscule(d, lam, plus).same_components(
        decompose(char_mul(freudenthal_char(d, lam), spin_char(d, plus)))));
  }
}

TEST_CASE("spin restriction to the smaller even datum") {
  for (int n = 4; n <= 6; ++n) {
    RootDatum d{Family::D, n}, dl{Family::D, n - 1};
    Decomposition dec = decompose(branch(spin_char(d, true), BranchRule::DToD));
    Decomposition expect(dl);
    expect.add(dl.fundamental(n - 1), 1);
    expect.add(dl.fundamental(n - 2), 1);
    CHECK(dec.same_components(expect));
  }
}

TEST_CASE("restriction of Cartan powers of the spin weight") {
  for (int n = 4; n <= 6; ++n) {
    RootDatum d{Family::D, n}, dl{Family::D, n - 1};
    for (int k = 1; k <= 3; ++k) {
      Decomposition dec = decompose(branch(
          freudenthal_char(d, weight_scale(k, d.fundamental(n))), BranchRule::DToD));
      Decomposition expect(dl);
      for (int i = 0; i <= k; ++i)
        expect.add(weight_add(weight_scale(i, dl.fundamental(n - 1)),
                              weight_scale(k - i, dl.fundamental(n - 2))),
                   1);
      CHECK(dec.same_components(expect));
    }
  }
}

TEST_CASE("branching through the odd datum matches the partition rule") {
  for (int n = 3; n <= 5; ++n) {
    for (BranchRule rule : {BranchRule::DToB, BranchRule::BToD}) {
      const RootDatum src = rule == BranchRule::DToB
                                ? RootDatum{Family::D, n + 1}
                                : RootDatum{Family::B, n};
      const RootDatum tgt{rule == BranchRule::DToB ? Family::B : Family::D, n};
      for (int i = 0; i <= src.ncoords(); ++i)
        for (int j = i; j <= src.ncoords(); ++j) {
          Weight lam = weight_add(src.theta(i), src.theta(j));
          if (!src.is_dominant(lam)) continue;
          Decomposition dec = decompose(branch(freudenthal_char(src, lam), rule));
          Decomposition expect(tgt);
          for (const Weight& w : branch_partition_rule(i, j, n, rule))
            expect.add(w, 1);
          CHECK(dec.same_components(expect));
        }
    }
  }
  // the i = j = 1 case: the template degenerates to (2), (1), ()
  // (dimension bookkeeping: 27 + 7 + 1 = 35 at n = 3)
  auto parts = branch_partition_rule(1, 1, 4, BranchRule::DToB);
  CHECK(parts.size() == 3);
  // i = j = 0: only the trivial one survives
  CHECK(branch_partition_rule(0, 0, 4, BranchRule::DToB).size() == 1);
}

TEST_CASE("tensor product fixtures of a half-spin with wedge powers") {
  for (int n = 4; n <= 5; ++n) {
    RootDatum d{Family::D, n};
    auto cplus = spin_char(d, true);
    for (int i = 1; i <= n - 2; ++i) {
      Decomposition dec =
          decompose(char_mul(cplus, freudenthal_char(d, d.theta(i))));
      Decomposition expect(d);
      for (int j = 0; i - 2 * j >= 0; ++j)
        expect.add(weight_add(d.fundamental(n), d.theta(i - 2 * j)), 1);
      for (int j = 0; i - 2 * j - 1 >= 0; ++j)
        expect.add(weight_add(d.fundamental(n - 1), d.theta(i - 2 * j - 1)), 1);
      CHECK(dec.same_components(expect));
    }
  }
}

TEST_CASE("theta-power tensor fixtures") {
  for (int n = 4; n <= 5; ++n) {
    RootDatum d{Family::D, n};
    // V_{3w_n} (x) spin halves
    {
      auto v3 = freudenthal_char(d, weight_scale(3, d.fundamental(n)));
      Decomposition plus = decompose(char_mul(v3, spin_char(d, true)));
      Decomposition expp(d);
      for (int j = 0; n - 2 * j >= 0; ++j)
        expp.add(weight_add(d.theta(n), d.theta(n - 2 * j)), 1);
      CHECK(plus.same_components(expp));
      Decomposition minus = decompose(char_mul(v3, spin_char(d, false)));
      Decomposition expm(d);
      for (int j = 0; n - 2 * j - 1 >= 0; ++j)
        expm.add(d.mirror(weight_add(d.theta(n), d.theta(n - 2 * j - 1))), 1);
      CHECK(folded(minus).same_components(folded(expm)));
    }
    // V_{2w_n} (x) V_{2w_{n-1}}
    {
      Decomposition dec = decompose(
          char_mul(freudenthal_char(d, weight_scale(2, d.fundamental(n))),
                   freudenthal_char(d, weight_scale(2, d.fundamental(n - 1)))));
      Decomposition expect(d);
      for (int j = 1; j <= n; j += 2)
        for (int k = 1; k <= j; k += 2)
          expect.add(weight_add(d.theta(n - j), d.theta(n - k)), 1);
      CHECK(dec.same_components(expect));
    }
    // V_{2w_n} (x) wedge^{n-i}: j - k >= i band, mirror-folded
    for (int i = 1; i <= n - 1; ++i) {
      Decomposition dec = decompose(
          char_mul(freudenthal_char(d, weight_scale(2, d.fundamental(n))),
                   freudenthal_char(d, d.theta(n - i))));
      Decomposition expect(d);
      for (int j = 0; j <= n; ++j)
        for (int k = 0; k <= j; ++k) {
          if (j - k < i || (j - k - i) % 2 != 0) continue;
          expect.add(weight_add(d.theta(n - j), d.theta(n - k)), 1);
        }
      CHECK(folded(dec).same_components(folded(expect)));
    }
    // V_{w_n + w_{n-p}} (x) spin halves, p >= 2
    for (int p = 2; p <= n - 1; ++p) {
      Weight lam = weight_add(d.fundamental(n), d.theta(n - p));
      for (bool plus : {true, false}) {
        Decomposition dec =
            decompose(char_mul(freudenthal_char(d, lam), spin_char(d, plus)));
        Decomposition expect(d);
        for (int r = p; r <= n; ++r)
          for (int s = 0; s <= p; ++s) {
            if (((r + s - p) % 2 == 0) != plus) continue;
            expect.add(weight_add(d.theta(n - r), d.theta(n - s)), 1);
          }
        CHECK(folded(dec).same_components(folded(expect)));
      }
    }
  }
}

TEST_CASE("wedge times wedge: the two-band rule, mirror-folded") {
  for (int n = 3; n <= 5; ++n) {
    RootDatum d{Family::D, n};
    for (int p = 1; p < n; ++p)
      for (int q = 1; q <= p; ++q) {
        Decomposition dec =
            decompose(char_mul(freudenthal_char(d, d.theta(n - p)),
                               freudenthal_char(d, d.theta(n - q))));
        Decomposition expect(d);
        for (int r = 0; r <= n; ++r)
          for (int s = 0; s <= r; ++s) {
            if (((p + q) - (r + s)) % 2 != 0) continue;
            long long mult = 0;
            if (r - s >= p - q && r + s >= p + q) ++mult;
            if (r - s >= p + q) ++mult;
            if (mult)
              expect.add(weight_add(d.theta(n - r), d.theta(n - s)), mult);
          }
        CHECK(folded(dec).same_components(folded(expect)));
      }
  }
}

TEST_CASE("orbit sizes are consistent with dimensions") {
  RootDatum d{Family::D, 5};
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 10; ++trial) {
    Weight lam(5, 0);
    for (int i = 0; i < 5; ++i) lam[i] = 2 * int(rng() % 3);
    std::sort(lam.begin(), lam.end(), std::greater<int>());
    if (rng() % 3 == 0) lam[4] = -lam[4];
    if (!d.is_dominant(lam)) continue;
    Int total = 0;
    for (const Weight& x : d.orbit(lam)) {
      (void)x;
      total += 1;
    }
    CHECK(total == d.orbit_size(lam));
    // the orbit of a mirror-negative weight is disjoint from its mirror
    if (lam[4] != 0) {
      Weight mir = d.mirror(lam);
      auto orb = d.orbit(lam);
      CHECK(std::find(orb.begin(), orb.end(), mir) == orb.end());
    }
  }
}

TEST_CASE("type A and C data") {
  RootDatum a3{Family::A, 3};
  // wedge^2 C^4 is minuscule of dimension 6
  CHECK(dim_irrep(a3, a3.fundamental(2)) == 6);
  CHECK(freudenthal_char(a3, a3.fundamental(2)).dim() == 6);
  RootDatum c3{Family::C, 3};
  CHECK(dim_irrep(c3, c3.fundamental(3)) == 14);
  DominantCharacter lg = freudenthal_char(c3, c3.fundamental(3));
  CHECK(lg.dim() == 14);
  CHECK(lg.value_at(c3.zero()) == 0);
  CHECK(lg.value_at(c3.fundamental(1)) == 1);
}
