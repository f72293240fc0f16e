#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace spinsec {

using Int = mpz_class;
using Rat = mpq_class;

// C(n,k) with C(n,k)=0 for k<0 or k>n>=0. Negative n follows the
// usual polynomial extension n(n-1)...(n-k+1)/k!.
Int binomial(long n, long k);

// (-1)^k as an int
inline int parity_sign(long k) { return (k % 2 == 0) ? 1 : -1; }

inline Int double_factorial_odd(int m) {
  // (2m-1)!! = 1*3*5*...*(2m-1)
  Int r = 1;
  for (int i = 1; i < 2 * m; i += 2) r *= i;
  return r;
}

}  // namespace spinsec
