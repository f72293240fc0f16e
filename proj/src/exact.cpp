#include "spinsec/exact.hpp"

namespace spinsec {

Int binomial(long n, long k) {
  if (k < 0) return 0;
  if (n >= 0 && k > n) return 0;
  if (n >= 0) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
  }
  // n < 0: n(n-1)...(n-k+1)/k!
  Int num = 1;
  for (long i = 0; i < k; ++i) num *= Int(n - i);
  Int den;
  mpz_fac_ui(den.get_mpz_t(), static_cast<unsigned long>(k));
  Int q = num / den;
  return q;
}

}  // namespace spinsec
