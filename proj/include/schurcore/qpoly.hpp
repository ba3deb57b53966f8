#pragma once

#include "schurcore/cyclotomic.hpp"
#include "schurcore/integers.hpp"
#include "schurcore/polynomial.hpp"

#include <vector>

namespace schurcore {

/// Univariate polynomial in q with integer coefficients, stored densely
/// by ascending exponent with no trailing zeros.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Int> coeffs);
  static QPoly from_polynomial(const Polynomial<Int>& p);  // arity 1

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Int coeff(int i) const;
  const std::vector<Int>& coefficients() const { return coeffs_; }

  Int at_one() const;
  bool has_nonnegative_coefficients() const;

  /// Coefficients of the reduction modulo q^t - 1, length t.
  std::vector<Int> reduce_mod_qt_minus_1(long t) const;

  QPoly operator+(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

  std::string to_string() const;

 private:
  std::vector<Int> coeffs_;
};

/// f at omega^d for omega a primitive t-th root of unity, computed exactly:
/// reduce f modulo q^t - 1, fold the residues modulo e = t/d, and reduce in
/// Z[x]/(Phi_e). The result has order e; it reports is_integer() when the
/// value is a rational integer. Requires d | t.
Cyclotomic evaluate_at_root(const QPoly& f, long t, long d);

}  // namespace schurcore
