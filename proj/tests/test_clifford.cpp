#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "spinsec/pfaffian.hpp"
#include "spinsec/spin.hpp"
#include "spinsec/tensor.hpp"

using namespace spinsec;

namespace {

SpinElem random_spinor(int n, int parity, std::mt19937_64& rng) {
  SpinElem s(n);
  std::uniform_int_distribution<int> coef(-6, 6);
  for (Mask m = 0; m <= full_mask(n); ++m)
    if ((set_size(m) & 1) == parity && rng() % 3 == 0) s.add_term(m, Rat(coef(rng)));
  if (s.is_zero()) s.add_term(parity ? bit_of(1) : 0, Rat(1));
  return s;
}

VVector random_vector(int n, std::mt19937_64& rng) {
  VVector v(n);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (int i = 0; i < n; ++i) {
    v.e[i] = coef(rng);
    v.f[i] = coef(rng);
  }
  return v;
}

}  // namespace

TEST_CASE("module action basics") {
  const int n = 2;
  // e_1 . 1 = e_1
  CHECK(clifford_act(VVector::basis_e(n, 1), SpinElem::vacuum(n)) ==
        SpinElem::monomial(n, bit_of(1)));
  // f_1 . e_1 = 2
  CHECK(clifford_act(VVector::basis_f(n, 1), SpinElem::monomial(n, bit_of(1))) ==
        Rat(2) * SpinElem::vacuum(n));
  // f_2 . e_1^e_2 = -2 e_1
  CHECK(clifford_act(VVector::basis_f(n, 2),
                     SpinElem::monomial(n, bit_of(1) | bit_of(2))) ==
        Rat(-2) * SpinElem::monomial(n, bit_of(1)));
}

TEST_CASE("module relation vw + wv = 2q(v,w)") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + int(rng() % 4);
    VVector v = random_vector(n, rng), w = random_vector(n, rng);
    SpinElem s = random_spinor(n, int(rng() % 2), rng);
    CHECK(clifford_act(v, clifford_act(w, s)) + clifford_act(w, clifford_act(v, s)) ==
          Rat(2) * form_q(v, w) * s);
  }
}

TEST_CASE("Clifford product basics") {
  const int n = 2;
  ExtVElem e1 = ExtVElem::monomial(n, bit_of(1));
  ExtVElem f1 = ExtVElem::monomial(n, bit_of(n + 1));
  CHECK(clifford_mul(e1, e1).is_zero());
  ExtVElem expect(n);
  expect.add_term(bit_of(1) | bit_of(n + 1), Rat(1));
  expect.add_term(0, Rat(1));
  CHECK(clifford_mul(e1, f1) == expect);
  // e1 f1 + f1 e1 = 2
  CHECK(clifford_mul(e1, f1) + clifford_mul(f1, e1) ==
        Rat(2) * ExtVElem::one(n));
}

TEST_CASE("Clifford product is associative and unital") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 2 + int(rng() % 4);
    auto rand_mono = [&]() {
      return ExtVElem::monomial(n, Mask(rng()) & full_mask(2 * n),
                                Rat(1 + int(rng() % 4)));
    };
    ExtVElem a = rand_mono(), b = rand_mono(), c = rand_mono();
    CHECK(clifford_mul(clifford_mul(a, b), c) == clifford_mul(a, clifford_mul(b, c)));
    CHECK(clifford_mul(a, ExtVElem::one(n)) == a);
    CHECK(clifford_mul(ExtVElem::one(n), a) == a);
  }
}

TEST_CASE("v.v = q(v,v) for degree one") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3;
    VVector v = random_vector(n, rng);
    ExtVElem ve(n);
    for (int i = 1; i <= n; ++i) {
      ve.add_term(bit_of(i), v.e[i - 1]);
      ve.add_term(bit_of(n + i), v.f[i - 1]);
    }
    CHECK(clifford_mul(ve, ve) == form_q(v, v) * ExtVElem::one(n));
  }
}

TEST_CASE("main anti-automorphism") {
  const int n = 4;
  CHECK(alpha(SpinElem::monomial(n, bit_of(1))) == SpinElem::monomial(n, bit_of(1)));
  CHECK(alpha(SpinElem::monomial(n, bit_of(1) | bit_of(2))) ==
        Rat(-1) * SpinElem::monomial(n, bit_of(1) | bit_of(2)));
  CHECK(alpha(SpinElem::u_E(4)) == SpinElem::u_E(4));  // sign (+1)^{C(4,2)}
  // anti-homomorphism on the exterior model
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    ExtVElem a = ExtVElem::monomial(3, Mask(rng()) & full_mask(6));
    ExtVElem b = ExtVElem::monomial(3, Mask(rng()) & full_mask(6));
    CHECK(alpha_ext(clifford_mul(a, b)) ==
          clifford_mul(alpha_ext(b), alpha_ext(a)));
  }
}

TEST_CASE("beta of the coordinate spinors") {
  // beta(u_E, u_E) concentrates in the top wedge of E
  for (int n = 1; n <= 4; ++n) {
    ExtVElem b = beta(SpinElem::u_E(n), SpinElem::u_E(n));
    CHECK(b.terms.size() == 1);
    CHECK(b.terms.begin()->first == full_mask(n));
  }
  // dual route through the generic Clifford multiplication
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 3;
    SpinElem u = random_spinor(n, int(rng() % 2), rng);
    SpinElem v = random_spinor(n, int(rng() % 2), rng);
    ExtVElem f_elem = ExtVElem::monomial(n, full_mask(2 * n) & ~full_mask(n));
    ExtVElem via_mul = clifford_mul(clifford_mul(embed_in_extv(u), f_elem),
                                    embed_in_extv(alpha(v)));
    CHECK(beta(u, v) == via_mul);
  }
}

TEST_CASE("beta grading and symmetry") {
  std::mt19937_64 rng(6);
  for (int n = 2; n <= 6; ++n) {
    const int par = n % 2;
    SpinElem u = random_spinor(n, par, rng);
    SpinElem v = random_spinor(n, par, rng);
    ExtVElem buv = beta(u, v), bvu = beta(v, u);
    for (int k = 0; k <= 2 * n; ++k) {
      ExtVElem guv = buv.grade(k), gvu = bvu.grade(k);
      if ((n - k) % 2 != 0) {
        CHECK(guv.is_zero());
      } else {
        // symmetric for (n-k)/2 even, skew otherwise
        CHECK(guv == Rat(parity_sign((n - k) / 2)) * gvu);
      }
    }
    // grades k and 2n-k mirror each other through the e/f-swapped
    // complement, monomial for monomial up to sign
    ExtVElem b = beta(u, u);
    auto swap_ef = [&](Mask m) {
      return Mask((m >> n) | ((m & full_mask(n)) << n));
    };
    for (int k = 0; k < n; ++k) {
      ExtVElem low = b.grade(k), high = b.grade(2 * n - k);
      CHECK(low.terms.size() == high.terms.size());
      for (const auto& [m, c] : low.terms) {
        auto it = high.terms.find(swap_ef(full_mask(2 * n) & ~m));
        REQUIRE(it != high.terms.end());
        CHECK(abs(it->second) == abs(c));
      }
    }
  }
}

TEST_CASE("monomial beta has the two-power closed support") {
  for (int n = 2; n <= 5; ++n) {
    for (Mask I = 0; I <= full_mask(n); ++I)
      for (Mask J = 0; J <= full_mask(n); ++J) {
        ExtVElem b = beta_pair_mono(n, I, J);
        const Mask P = I & J;
        const Mask Q = full_mask(n) & ~(I | J);
        const Mask D = I ^ J;
        const Rat expected = Rat(Int(1) << set_size(P));
        CHECK(b.terms.size() == (size_t(1) << set_size(D)));
        for (const auto& [mono, c] : b.terms) {
          const Mask X = VMono::epart(mono, n), Y = VMono::fpart(mono, n);
          const Mask R = X & Y;
          CHECK((X & ~R) == P);
          CHECK((Y & ~R) == Q);
          CHECK((R & ~D) == 0);
          CHECK(abs(c) == expected);
        }
      }
  }
}

TEST_CASE("purity criterion") {
  // coordinate spinors are pure
  for (int n = 2; n <= 5; ++n)
    for (Mask I = 0; I <= full_mask(n); I += 3)
      CHECK(is_pure(SpinElem::monomial(n, I)));
  // the symplectic-style spinor is pure
  for (int m = 1; m <= 5; ++m) CHECK(is_pure(build_u_G(m)));
  // a generic secant point is not
  CHECK(!is_pure(SpinElem::u_E(4) + SpinElem::vacuum(4)));
  CHECK_THROWS_AS(is_pure(SpinElem::zero(3)), std::invalid_argument);
  CHECK_THROWS_AS(is_pure(SpinElem::vacuum(3) + SpinElem::monomial(3, bit_of(1))),
                  std::invalid_argument);
}

TEST_CASE("u_G expansion") {
  SpinElem g1 = build_u_G(1);
  CHECK(g1.terms.size() == 2);
  CHECK(g1.terms.count(0) == 1);
  CHECK(g1.terms.count(bit_of(1) | bit_of(2)) == 1);
  SpinElem g2 = build_u_G(2);
  CHECK(g2.terms.size() == 4);
  for (const auto& [m, c] : g2.terms) CHECK(c == 1);
  CHECK(g2.terms.count(bit_of(1) | bit_of(2) | bit_of(3) | bit_of(4)) == 1);
  CHECK_THROWS_AS(build_u_G(0), std::invalid_argument);
}

TEST_CASE("pure spinor of a coordinate subspace") {
  for (int n = 2; n <= 5; ++n)
    for (Mask I : {Mask(0), Mask(1), full_mask(n), Mask(full_mask(n) & ~1u)}) {
      std::vector<VVector> frame;
      for (int i = 1; i <= n; ++i)
        frame.push_back(has(I, i) ? VVector::basis_e(n, i)
                                  : VVector::basis_f(n, i));
      CHECK(pure_spinor_of_subspace(frame) == SpinElem::monomial(n, I));
    }
}

TEST_CASE("pure spinor of a skew frame matches the sub-Pfaffian expansion") {
  std::mt19937_64 rng(7);
  for (int n = 2; n <= 6; ++n) {
    SkewMatrix A = SkewMatrix::random(n, rng, 9, 3);
    SpinElem via_kernel = pure_spinor_of_subspace(skew_frame(A));
    SpinElem direct = spinor_of_skew(A);
    // proportional with one scalar
    REQUIRE(via_kernel.terms.size() == direct.terms.size());
    Rat ratio = 0;
    for (auto ik = via_kernel.terms.begin(), id = direct.terms.begin();
         ik != via_kernel.terms.end(); ++ik, ++id) {
      REQUIRE(ik->first == id->first);
      Rat r = id->second / ik->second;
      if (ratio == 0) ratio = r;
      CHECK(r == ratio);
    }
  }
}

TEST_CASE("pure spinor rejects bad frames") {
  const int n = 3;
  std::vector<VVector> frame;
  for (int i = 1; i <= n; ++i) frame.push_back(VVector::basis_e(n, i));
  frame[0].f[0] = 1;  // q(h1, h1) = 2 now
  CHECK_THROWS_AS(pure_spinor_of_subspace(frame), std::invalid_argument);

  std::vector<VVector> degenerate;
  degenerate.push_back(VVector::basis_e(n, 1));
  degenerate.push_back(VVector::basis_e(n, 1));
  degenerate.push_back(VVector::basis_e(n, 2));
  CHECK_THROWS_AS(pure_spinor_of_subspace(degenerate), std::invalid_argument);
}

TEST_CASE("spinor pairing") {
  // (1, u_G) is the top coefficient of u_G
  for (int m = 1; m <= 3; ++m) {
    const int n = 2 * m;
    CHECK(spin_pairing(SpinElem::vacuum(n), build_u_G(m)) == 1);
  }
  // complementary supports only
  const int n = 4;
  CHECK(spin_pairing(SpinElem::monomial(n, bit_of(1) | bit_of(2)),
                     SpinElem::monomial(n, bit_of(3) | bit_of(4))) != 0);
  CHECK(spin_pairing(SpinElem::monomial(n, bit_of(1) | bit_of(2)),
                     SpinElem::monomial(n, bit_of(2) | bit_of(3))) == 0);
  CHECK_THROWS_AS(spin_pairing(SpinElem::vacuum(4),
                               SpinElem::monomial(4, bit_of(1))),
                  std::invalid_argument);
}

TEST_CASE("pairing is so-invariant") {
  std::mt19937_64 rng(8);
  const int n = 4;
  for (int trial = 0; trial < 8; ++trial) {
    const int pu = int(rng() % 2);
    SpinElem u = random_spinor(n, pu, rng);
    SpinElem v = random_spinor(n, (n - pu) % 2, rng);
    for (Mask X = 1; X <= full_mask(2 * n); ++X) {
      if (set_size(X) != 2) continue;
      SpinElem Xu = act_extmono_on_spin(n, X, u);
      SpinElem Xv = act_extmono_on_spin(n, X, v);
      CHECK(spin_pairing(Xu, v) + spin_pairing(u, Xv) == 0);
    }
  }
}
