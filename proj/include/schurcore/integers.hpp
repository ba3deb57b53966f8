#pragma once

#include <gmpxx.h>

#include <vector>

namespace schurcore {

/// Exact arbitrary-precision integer; all coefficients and counts use it.
using Int = mpz_class;

/// Divisors of n in increasing order, n >= 1.
std::vector<long> divisors(long n);

/// Moebius function, n >= 1.
int mobius(long n);

bool is_prime(long n);

/// Binomial coefficient, zero outside 0 <= k <= n.
Int binomial(long n, long k);

inline bool is_zero_value(const Int& v) { return sgn(v) == 0; }

}  // namespace schurcore
