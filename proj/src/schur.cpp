#include "schurcore/schur.hpp"

#include "schurcore/supertableau.hpp"

#include <algorithm>
#include <stdexcept>

namespace schurcore {

namespace {

int default_rows(const SkewShape& shape, int declared_length) {
  int rows = std::max(shape.outer().length(), shape.inner().length());
  if (declared_length >= 0) {
    if (declared_length < rows)
      throw std::invalid_argument("declared length below partition length");
    rows = declared_length;
  }
  return rows;
}

int table_size_for(const SkewShape& shape, int rows) {
  return shape.outer().part(1) + rows;
}

}  // namespace

Polynomial<Int> skew_schur(const SkewShape& shape, int n, SchurMethod method,
                           int declared_length) {
  if (method == SchurMethod::tableaux) return supertableau_weight_sum(shape, n, 0);
  const int rows = default_rows(shape, declared_length);
  auto h = complete_table(x_variables(n, 0), table_size_for(shape, rows), n);
  return jacobi_trudi(shape, rows, h, n);
}

Polynomial<Int> skew_schur(const Partition& lam, const Partition& mu, int n, SchurMethod method,
                           int declared_length) {
  if (!lam.contains(mu)) return Polynomial<Int>(n);
  return skew_schur(SkewShape(lam, mu), n, method, declared_length);
}

Polynomial<Int> skew_hook_schur(const SkewShape& shape, int n, int m, SchurMethod method,
                                int declared_length) {
  if (method == SchurMethod::tableaux) return supertableau_weight_sum(shape, n, m);
  const int rows = default_rows(shape, declared_length);
  auto H = super_complete_table(x_variables(n, m), y_variables(n, m),
                                table_size_for(shape, rows), n + m);
  return jacobi_trudi(shape, rows, H, n + m);
}

Polynomial<Int> skew_hook_schur(const Partition& lam, const Partition& mu, int n, int m,
                                SchurMethod method, int declared_length) {
  if (!lam.contains(mu)) return Polynomial<Int>(n + m);
  return skew_hook_schur(SkewShape(lam, mu), n, m, method, declared_length);
}

QPoly principal_specialization(const SkewShape& shape, long t, int n, int m) {
  const int rows = default_rows(shape, -1);
  auto H = super_complete_table(principal_powers(static_cast<int>(t) * n),
                                principal_powers(static_cast<int>(t) * m),
                                table_size_for(shape, rows), 1);
  return QPoly::from_polynomial(jacobi_trudi(shape, rows, H, 1));
}

QPoly principal_specialization_by_tableaux(const SkewShape& shape, long t, int n, int m) {
  return supertableau_q_weight_sum(shape, static_cast<int>(t) * n, static_cast<int>(t) * m);
}

Int hook_schur_all_ones(const SkewShape& shape, int ones_x, int ones_y, int declared_length) {
  const int rows = default_rows(shape, declared_length);
  const int rmax = table_size_for(shape, rows);
  // H_r(1^a / 1^b) = sum_j binom(j + a - 1, j) binom(b, r - j)
  std::vector<Int> H(static_cast<size_t>(rmax) + 1, Int(0));
  for (int r = 0; r <= rmax; ++r)
    for (int j = 0; j <= r; ++j) {
      Int hj = (j == 0) ? Int(1) : binomial(j + ones_x - 1, j);
      H[static_cast<size_t>(r)] += hj * binomial(ones_y, r - j);
    }
  const Partition& lam = shape.outer();
  const Partition& mu = shape.inner();
  std::vector<std::vector<Int>> matrix(static_cast<size_t>(rows),
                                       std::vector<Int>(static_cast<size_t>(rows), Int(0)));
  for (int i = 1; i <= rows; ++i)
    for (int j = 1; j <= rows; ++j) {
      int idx = lam.part(i) - mu.part(j) - i + j;
      if (idx >= 0) matrix[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = H[static_cast<size_t>(idx)];
    }
  return determinant(matrix, Int(0), Int(1));
}

}  // namespace schurcore
