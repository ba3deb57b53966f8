#pragma once

#include "schurcore/cyclotomic.hpp"
#include "schurcore/polynomial.hpp"

#include <vector>

namespace schurcore {

/// One alphabet item: a coefficient times a monomial in the ambient ring.
/// Alphabets are plain lists of items; the generating-function machinery
/// below treats them uniformly, which covers ordinary variables, twisted
/// variables omega^k x_j, power alphabets x_j^t and principal
/// specializations q^(j-1).
template <class R>
struct AlphabetItem {
  Monomial exponents;
  R coeff;
};

template <class R>
using Alphabet = std::vector<AlphabetItem<R>>;

/// The ambient ring for (n, m) alphabets has arity n + m: variables
/// x_1..x_n then y_1..y_m.
inline Alphabet<Int> x_variables(int n, int m) {
  Alphabet<Int> a;
  for (int j = 0; j < n; ++j) {
    Monomial e(static_cast<size_t>(n + m), 0);
    e[static_cast<size_t>(j)] = 1;
    a.push_back({std::move(e), Int(1)});
  }
  return a;
}

inline Alphabet<Int> y_variables(int n, int m) {
  Alphabet<Int> a;
  for (int j = 0; j < m; ++j) {
    Monomial e(static_cast<size_t>(n + m), 0);
    e[static_cast<size_t>(n + j)] = 1;
    a.push_back({std::move(e), Int(1)});
  }
  return a;
}

/// x_j^t for each j.
inline Alphabet<Int> x_powers(int n, int m, long t) {
  Alphabet<Int> a;
  for (int j = 0; j < n; ++j) {
    Monomial e(static_cast<size_t>(n + m), 0);
    e[static_cast<size_t>(j)] = static_cast<int>(t);
    a.push_back({std::move(e), Int(1)});
  }
  return a;
}

/// (-1)^(t-1) y_j^t for each j.
inline Alphabet<Int> y_powers_signed(int n, int m, long t) {
  Alphabet<Int> a;
  const Int sign = (t % 2 == 0) ? Int(-1) : Int(1);
  for (int j = 0; j < m; ++j) {
    Monomial e(static_cast<size_t>(n + m), 0);
    e[static_cast<size_t>(n + j)] = static_cast<int>(t);
    a.push_back({std::move(e), sign});
  }
  return a;
}

/// omega^k x_j for 0 <= k < t, 1 <= j <= n, with omega the class of x in
/// the order-t cyclotomic ring.
inline Alphabet<Cyclotomic> x_twisted(int n, int m, long t) {
  Alphabet<Cyclotomic> a;
  for (long k = 0; k < t; ++k)
    for (int j = 0; j < n; ++j) {
      Monomial e(static_cast<size_t>(n + m), 0);
      e[static_cast<size_t>(j)] = 1;
      a.push_back({std::move(e), Cyclotomic::root_power(t, k)});
    }
  return a;
}

inline Alphabet<Cyclotomic> y_twisted(int n, int m, long t) {
  Alphabet<Cyclotomic> a;
  for (long k = 0; k < t; ++k)
    for (int j = 0; j < m; ++j) {
      Monomial e(static_cast<size_t>(n + m), 0);
      e[static_cast<size_t>(n + j)] = 1;
      a.push_back({std::move(e), Cyclotomic::root_power(t, k)});
    }
  return a;
}

/// q^(step*i) for 0 <= i < count, in the univariate ring (arity 1).
inline Alphabet<Int> principal_powers(int count, int step = 1) {
  Alphabet<Int> a;
  for (int i = 0; i < count; ++i) a.push_back({Monomial{step * i}, Int(1)});
  return a;
}

}  // namespace schurcore
