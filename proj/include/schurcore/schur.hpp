#pragma once

#include "schurcore/alphabet.hpp"
#include "schurcore/partition.hpp"
#include "schurcore/polynomial.hpp"
#include "schurcore/qpoly.hpp"

#include <vector>

namespace schurcore {

/// e_0..e_rmax of the alphabet: coefficients of prod_a (1 + a q).
template <class R>
std::vector<Polynomial<R>> elementary_table(const Alphabet<R>& items, int rmax, int arity) {
  std::vector<Polynomial<R>> e(static_cast<size_t>(rmax) + 1, Polynomial<R>(arity));
  e[0] = Polynomial<R>::constant(arity, R(1));
  int used = 0;
  for (const auto& item : items) {
    ++used;
    for (int r = std::min(rmax, used); r >= 1; --r)
      e[static_cast<size_t>(r)] += e[static_cast<size_t>(r - 1)].times_term(item.exponents, item.coeff);
  }
  return e;
}

/// h_0..h_rmax of the alphabet: coefficients of prod_a 1/(1 - a q).
template <class R>
std::vector<Polynomial<R>> complete_table(const Alphabet<R>& items, int rmax, int arity) {
  std::vector<Polynomial<R>> h(static_cast<size_t>(rmax) + 1, Polynomial<R>(arity));
  h[0] = Polynomial<R>::constant(arity, R(1));
  for (const auto& item : items)
    for (int r = 1; r <= rmax; ++r)
      h[static_cast<size_t>(r)] += h[static_cast<size_t>(r - 1)].times_term(item.exponents, item.coeff);
  return h;
}

/// H_r(X/Y) = sum_j h_j(X) e_(r-j)(Y).
template <class R>
std::vector<Polynomial<R>> super_complete_table(const Alphabet<R>& x, const Alphabet<R>& y,
                                                int rmax, int arity) {
  auto h = complete_table(x, rmax, arity);
  auto e = elementary_table(y, rmax, arity);
  std::vector<Polynomial<R>> H(static_cast<size_t>(rmax) + 1, Polynomial<R>(arity));
  for (int r = 0; r <= rmax; ++r)
    for (int j = 0; j <= r; ++j)
      H[static_cast<size_t>(r)] += h[static_cast<size_t>(j)] * e[static_cast<size_t>(r - j)];
  return H;
}

/// E_r(X/Y) = sum_j e_j(X) h_(r-j)(Y).
template <class R>
std::vector<Polynomial<R>> super_elementary_table(const Alphabet<R>& x, const Alphabet<R>& y,
                                                  int rmax, int arity) {
  auto e = elementary_table(x, rmax, arity);
  auto h = complete_table(y, rmax, arity);
  std::vector<Polynomial<R>> E(static_cast<size_t>(rmax) + 1, Polynomial<R>(arity));
  for (int r = 0; r <= rmax; ++r)
    for (int j = 0; j <= r; ++j)
      E[static_cast<size_t>(r)] += e[static_cast<size_t>(j)] * h[static_cast<size_t>(r - j)];
  return E;
}

/// Single values; zero for r < 0.
template <class R>
Polynomial<R> elementary(int r, const Alphabet<R>& items, int arity) {
  if (r < 0) return Polynomial<R>(arity);
  return elementary_table(items, r, arity)[static_cast<size_t>(r)];
}
template <class R>
Polynomial<R> complete(int r, const Alphabet<R>& items, int arity) {
  if (r < 0) return Polynomial<R>(arity);
  return complete_table(items, r, arity)[static_cast<size_t>(r)];
}
template <class R>
Polynomial<R> super_complete(int r, const Alphabet<R>& x, const Alphabet<R>& y, int arity) {
  if (r < 0) return Polynomial<R>(arity);
  return super_complete_table(x, y, r, arity)[static_cast<size_t>(r)];
}
template <class R>
Polynomial<R> super_elementary(int r, const Alphabet<R>& x, const Alphabet<R>& y, int arity) {
  if (r < 0) return Polynomial<R>(arity);
  return super_elementary_table(x, y, r, arity)[static_cast<size_t>(r)];
}

/// det(H_(lam_i - mu_j - i + j)) for 1 <= i,j <= rows, entries drawn from
/// the table (index < 0 gives zero). rows must cover both lengths; the
/// value does not depend on the padding.
template <class R>
Polynomial<R> jacobi_trudi(const SkewShape& shape, int rows,
                           const std::vector<Polynomial<R>>& table, int arity) {
  const Partition& lam = shape.outer();
  const Partition& mu = shape.inner();
  if (rows < lam.length() || rows < mu.length())
    throw std::invalid_argument("jacobi_trudi: declared length below partition length");
  const Polynomial<R> zero(arity);
  std::vector<std::vector<Polynomial<R>>> matrix(
      static_cast<size_t>(rows), std::vector<Polynomial<R>>(static_cast<size_t>(rows), zero));
  for (int i = 1; i <= rows; ++i)
    for (int j = 1; j <= rows; ++j) {
      int idx = lam.part(i) - mu.part(j) - i + j;
      if (idx < 0) continue;
      if (idx >= static_cast<int>(table.size()))
        throw std::invalid_argument("jacobi_trudi: table too short");
      matrix[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = table[static_cast<size_t>(idx)];
    }
  return determinant(matrix, zero, Polynomial<R>::constant(arity, R(1)));
}

enum class SchurMethod { jacobi_trudi, tableaux };

/// Skew Schur polynomial in n variables; zero when mu is not contained in
/// lam. Both methods agree; the tableau method enumerates semistandard
/// fillings.
Polynomial<Int> skew_schur(const SkewShape& shape, int n, SchurMethod method,
                           int declared_length = -1);
Polynomial<Int> skew_schur(const Partition& lam, const Partition& mu, int n, SchurMethod method,
                           int declared_length = -1);

/// Skew hook Schur polynomial over x_1..x_n / y_1..y_m (arity n + m).
Polynomial<Int> skew_hook_schur(const SkewShape& shape, int n, int m, SchurMethod method,
                                int declared_length = -1);
Polynomial<Int> skew_hook_schur(const Partition& lam, const Partition& mu, int n, int m,
                                SchurMethod method, int declared_length = -1);

/// hs at the principal letters (1, q, ..., q^(tn-1) / 1, q, ..., q^(tm-1)),
/// through the Jacobi-Trudi determinant over univariate polynomials.
QPoly principal_specialization(const SkewShape& shape, long t, int n, int m);

/// Same value by direct tableau enumeration with the q-weight convention
/// (unprimed letter i contributes q^(i-1), primed letter j' contributes
/// q^(j-1)).
QPoly principal_specialization_by_tableaux(const SkewShape& shape, long t, int n, int m);

/// hs at all-ones alphabets of the given sizes, via binomial H-values.
Int hook_schur_all_ones(const SkewShape& shape, int ones_x, int ones_y, int declared_length = -1);

}  // namespace schurcore
