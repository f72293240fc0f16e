#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spinsec/series.hpp"

using namespace spinsec;

namespace {

// brute-force count of solutions of 2a + 3b = j
long count_2a3b(int j) {
  long c = 0;
  for (int a = 0; 2 * a <= j; ++a)
    if ((j - 2 * a) % 3 == 0) ++c;
  return c;
}

Int pascal(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<Int> row{Int(1)};
  for (int i = 1; i <= n; ++i) {
    std::vector<Int> next(i + 1, Int(0));
    for (int j = 0; j <= i; ++j) {
      if (j < i) next[j] += row[j];
      if (j > 0) next[j] += row[j - 1];
    }
    row = std::move(next);
  }
  return row[k];
}

}  // namespace

TEST_CASE("series expansion of 1/((1-x^2)(1-x^3))") {
  IntPoly denom = poly_mul(poly_one_minus_xk(2), poly_one_minus_xk(3));
  auto c = series_coeffs({Int(1)}, denom, 13);
  const long expected[] = {1, 0, 1, 1, 1, 1, 2, 1, 2, 2, 2, 2, 3};
  for (int j = 0; j < 13; ++j) {
    CHECK(c[j] == expected[j]);
    CHECK(c[j] == count_2a3b(j));
  }
}

TEST_CASE("geometric series") {
  auto c = series_coeffs({Int(1)}, {Int(1), Int(-1)}, 4);
  for (int j = 0; j < 4; ++j) CHECK(c[j] == 1);
}

TEST_CASE("shifted numerator x^4/((1-x^2)(1-x^3))") {
  auto b = cubic_mult_series_b().prefix(9);
  auto a = cubic_mult_series().prefix(9);
  const long expected[] = {0, 0, 0, 0, 1, 0, 1, 1, 1};
  for (int j = 0; j < 9; ++j) {
    CHECK(b[j] == expected[j]);
    if (j >= 4) CHECK(b[j] == a[j - 4]);
  }
}

TEST_CASE("series rejects a non-invertible denominator") {
  CHECK_THROWS_AS(series_coeffs({Int(1)}, {Int(0), Int(1)}, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(series_coeffs({Int(1)}, {Int(2)}, 3), std::invalid_argument);
  CHECK_THROWS_AS(series_coeffs({Int(1)}, {Int(1)}, 0), std::invalid_argument);
}

TEST_CASE("binomial values and conventions") {
  CHECK(binomial(18, 5) == 8568);
  CHECK(binomial(18, 5) == pascal(18, 5));
  CHECK(binomial(4, -1) == 0);
  CHECK(binomial(4, 7) == 0);
  for (int n = 0; n <= 20; ++n) CHECK(binomial(2 * n, 0) == 1);
}

TEST_CASE("Pascal rule holds on the tested range") {
  for (int n = 1; n <= 200; n += 7)
    for (int k = 0; k <= n; k += 3)
      CHECK(binomial(n, k) == binomial(n - 1, k) + binomial(n - 1, k - 1));
}

TEST_CASE("telescoping binomial identity") {
  // sum_{k=0}^{i} (2n-2k+1)/(2n-k+1) C(2n,k) = C(2n,i)
  for (int n = 2; n <= 20; ++n)
    for (int i = 0; i <= n - 2; ++i) {
      Rat sum(0);
      for (int k = 0; k <= i; ++k) {
        Rat term(2 * n - 2 * k + 1, 2 * n - k + 1);
        term.canonicalize();
        sum += term * Rat(binomial(2 * n, k));
      }
      CHECK(sum == Rat(binomial(2 * n, i)));
    }
}

TEST_CASE("IntegerSeries caches consistently") {
  IntegerSeries s = cubic_mult_series();
  CHECK(s.at(40) == count_2a3b(40));
  CHECK(s.at(3) == 1);
  CHECK(s.at(-1) == 0);
  auto p = s.prefix(10);
  for (int j = 0; j < 10; ++j) CHECK(p[j] == count_2a3b(j));
}
