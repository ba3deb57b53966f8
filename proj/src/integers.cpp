#include "schurcore/integers.hpp"

#include <algorithm>
#include <stdexcept>

namespace schurcore {

std::vector<long> divisors(long n) {
  if (n < 1) throw std::invalid_argument("divisors: n must be positive");
  std::vector<long> small, large;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

int mobius(long n) {
  if (n < 1) throw std::invalid_argument("mobius: n must be positive");
  int primes = 0;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      ++primes;
    }
  }
  if (n > 1) ++primes;
  return primes % 2 == 0 ? 1 : -1;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

}  // namespace schurcore
