#pragma once

#include "schurcore/integers.hpp"

#include <vector>

namespace schurcore {

/// Coefficients of the n-th cyclotomic polynomial Phi_n, ascending degree.
/// Computed as (x^n - 1) divided by the product of Phi_d over proper
/// divisors d of n; monic with integer coefficients.
std::vector<Int> cyclotomic_polynomial(long order);

/// Element of Z[x]/(Phi_t), the ring of integers of the t-th cyclotomic
/// field. The class of x is a primitive t-th root of unity. Order 1 is the
/// ring of plain integers; binary operations promote an order-1 operand to
/// the other operand's order and reject any other mismatch. Elements are
/// kept reduced modulo Phi_t, so a value is a rational integer exactly when
/// every coefficient beyond degree zero vanishes.
class Cyclotomic {
 public:
  Cyclotomic() : order_(1), coeffs_(1, Int(0)) {}
  Cyclotomic(long value) : order_(1), coeffs_(1, Int(value)) {}
  Cyclotomic(Int value) : order_(1), coeffs_{std::move(value)} {}

  static Cyclotomic zero(long order);
  static Cyclotomic from_int(Int value, long order);
  /// Class of x^power in Z[x]/(Phi_order).
  static Cyclotomic root_power(long order, long power);

  long order() const { return order_; }
  const std::vector<Int>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_integer() const;
  /// Value as a rational integer; requires is_integer().
  Int integer_value() const;

  Cyclotomic promoted(long order) const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic operator-() const;

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  std::string to_string() const;

 private:
  long order_;
  std::vector<Int> coeffs_;  // size deg Phi_order, reduced
};

inline bool is_zero_value(const Cyclotomic& v) { return v.is_zero(); }

}  // namespace schurcore
