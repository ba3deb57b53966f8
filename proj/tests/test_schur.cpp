#include "schurcore/alphabet.hpp"
#include "schurcore/schur.hpp"
#include "schurcore/supertableau.hpp"

#include <doctest.h>

using namespace schurcore;

namespace {

Polynomial<Int> monomials(int arity, std::initializer_list<std::pair<Monomial, int>> terms) {
  Polynomial<Int> p(arity);
  for (const auto& [m, c] : terms) p.add_term(m, Int(c));
  return p;
}

// The displayed seven-term polynomial for hs_(2,2)/(1)(x1,x2/y1); variables
// x1, x2, y1.
Polynomial<Int> hs_22_1_expected() {
  return monomials(3, {{{2, 1, 0}, 1},
                       {{1, 2, 0}, 1},
                       {{2, 0, 1}, 1},
                       {{1, 1, 1}, 2},
                       {{0, 2, 1}, 1},
                       {{1, 0, 2}, 1},
                       {{0, 1, 2}, 1}});
}

}  // namespace

TEST_CASE("elementary and complete basics") {
  CHECK(elementary(0, x_variables(3, 0), 3) == Polynomial<Int>::constant(3, 1));
  CHECK(elementary(-3, x_variables(3, 0), 3).is_zero());
  CHECK(complete(0, x_variables(2, 0), 2) == Polynomial<Int>::constant(2, 1));
  CHECK(complete(-1, x_variables(2, 0), 2).is_zero());

  CHECK(elementary(2, x_variables(3, 0), 3) ==
        monomials(3, {{{1, 1, 0}, 1}, {{1, 0, 1}, 1}, {{0, 1, 1}, 1}}));
  CHECK(complete(2, x_variables(2, 0), 2) ==
        monomials(2, {{{2, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}}));

  // h_r at k ones counts multisets: binomial(r+k-1, k-1)
  for (int r = 0; r <= 6; ++r)
    for (int k = 1; k <= 4; ++k) {
      auto h = complete(r, x_variables(k, 0), k);
      std::vector<Polynomial<Int>> ones(static_cast<size_t>(k),
                                        Polynomial<Int>::constant(0, 1));
      CHECK(h.substitute(ones).constant_value() == binomial(r + k - 1, k - 1));
    }
}

TEST_CASE("super complete and elementary") {
  // H_1(x1/y1) = x1 + y1
  CHECK(super_complete(1, x_variables(1, 1), y_variables(1, 1), 2) ==
        monomials(2, {{{1, 0}, 1}, {{0, 1}, 1}}));
  CHECK(super_elementary(1, x_variables(1, 1), y_variables(1, 1), 2) ==
        monomials(2, {{{1, 0}, 1}, {{0, 1}, 1}}));
  CHECK(super_complete(0, x_variables(1, 1), y_variables(1, 1), 2) ==
        Polynomial<Int>::constant(2, 1));
  CHECK(super_complete(-2, x_variables(1, 1), y_variables(1, 1), 2).is_zero());

  // duality: E_r(X/Y) = H_r(Y/X)
  for (int r = 0; r <= 6; ++r)
    for (int n = 0; n <= 2; ++n)
      for (int m = 0; m <= 2; ++m)
        CHECK(super_elementary(r, x_variables(n, m), y_variables(n, m), n + m) ==
              super_complete(r, y_variables(n, m), x_variables(n, m), n + m));
}

TEST_CASE("supersymmetry cancellation") {
  // substituting x_n = z, y_m = -z leaves H_r independent of z
  for (int r = 1; r <= 6; ++r)
    for (int n = 1; n <= 2; ++n)
      for (int m = 1; m <= 2; ++m) {
        auto H = super_complete(r, x_variables(n, m), y_variables(n, m), n + m);
        // target ring: x_1..x_(n-1), y_1..y_(m-1), z
        const int target = (n - 1) + (m - 1) + 1;
        std::vector<Polynomial<Int>> images;
        for (int i = 0; i < n - 1; ++i) images.push_back(Polynomial<Int>::variable(target, i));
        images.push_back(Polynomial<Int>::variable(target, target - 1));  // x_n -> z
        for (int j = 0; j < m - 1; ++j)
          images.push_back(Polynomial<Int>::variable(target, n - 1 + j));
        images.push_back(-Polynomial<Int>::variable(target, target - 1));  // y_m -> -z
        auto value = H.substitute(images);
        for (const auto& [mono, c] : value.terms()) CHECK(mono.back() == 0);
      }
}

TEST_CASE("skew Schur examples") {
  CHECK(skew_schur(SkewShape(Partition{2, 2}, Partition{2, 2}), 3,
                   SchurMethod::jacobi_trudi) == Polynomial<Int>::constant(3, 1));
  CHECK(skew_schur(SkewShape(Partition{2, 2}, Partition{1}), 2, SchurMethod::jacobi_trudi) ==
        monomials(2, {{{2, 1}, 1}, {{1, 2}, 1}}));
  CHECK(skew_schur(SkewShape(Partition{2, 2}, Partition{1}), 2, SchurMethod::tableaux) ==
        monomials(2, {{{2, 1}, 1}, {{1, 2}, 1}}));

  // s_(2,2)(1,1,1,1) = 20
  auto s = skew_schur(SkewShape(Partition{2, 2}, Partition()), 4, SchurMethod::jacobi_trudi);
  std::vector<Polynomial<Int>> ones(4, Polynomial<Int>::constant(0, 1));
  CHECK(s.substitute(ones).constant_value() == 20);

  // mu not inside lam gives zero
  CHECK(skew_schur(Partition{1}, Partition{2}, 2, SchurMethod::jacobi_trudi).is_zero());

  // vanishing beyond the variable count
  CHECK(skew_schur(SkewShape(Partition{1, 1, 1}, Partition()), 2, SchurMethod::jacobi_trudi)
            .is_zero());
}

TEST_CASE("hook Schur examples") {
  auto hs_jt = skew_hook_schur(SkewShape(Partition{2, 2}, Partition{1}), 2, 1,
                               SchurMethod::jacobi_trudi);
  auto hs_tab = skew_hook_schur(SkewShape(Partition{2, 2}, Partition{1}), 2, 1,
                                SchurMethod::tableaux);
  CHECK(hs_jt == hs_22_1_expected());
  CHECK(hs_tab == hs_22_1_expected());

  CHECK(skew_hook_schur(SkewShape(Partition{3}, Partition{3}), 2, 2,
                        SchurMethod::jacobi_trudi) == Polynomial<Int>::constant(4, 1));

  // straight-shape vanishing: nonzero iff lambda_(n+1) <= m
  CHECK(skew_hook_schur(SkewShape(Partition{3}, Partition()), 1, 0,
                        SchurMethod::jacobi_trudi) == monomials(1, {{{3}, 1}}));
  CHECK(skew_hook_schur(SkewShape(Partition{1, 1}, Partition()), 1, 0,
                        SchurMethod::jacobi_trudi)
            .is_zero());
  CHECK(skew_hook_schur(SkewShape(Partition{1, 1}, Partition()), 1, 0, SchurMethod::tableaux)
            .is_zero());
  for (int n = 1; n <= 2; ++n)
    for (int m = 0; m <= 2; ++m)
      for (const Partition& lam : partitions_up_to(6, 4)) {
        bool vanish = skew_hook_schur(SkewShape(lam, Partition()), n, m,
                                      SchurMethod::jacobi_trudi)
                          .is_zero();
        CHECK(vanish == (lam.part(n + 1) > m));
      }
}

TEST_CASE("hook Schur with m = 0 equals skew Schur") {
  for (int n = 1; n <= 3; ++n)
    for (const Partition& lam : partitions_up_to(6, 3))
      for (const Partition& mu : subpartitions(lam))
        CHECK(skew_hook_schur(SkewShape(lam, mu), n, 0, SchurMethod::jacobi_trudi) ==
              skew_schur(SkewShape(lam, mu), n, SchurMethod::jacobi_trudi));
}

TEST_CASE("Jacobi-Trudi value does not depend on the padding") {
  for (const Partition& lam : partitions_up_to(6, 3))
    for (const Partition& mu : subpartitions(lam)) {
      SkewShape shape(lam, mu);
      auto base = skew_hook_schur(shape, 2, 1, SchurMethod::jacobi_trudi);
      for (int pad = 1; pad <= 3; ++pad)
        CHECK(skew_hook_schur(shape, 2, 1, SchurMethod::jacobi_trudi,
                              std::max(lam.length(), mu.length()) + pad) == base);
    }
}

TEST_CASE("method agreement on a small sweep") {
  for (const Partition& lam : partitions_up_to(6, 3))
    for (const Partition& mu : subpartitions(lam)) {
      SkewShape shape(lam, mu);
      for (int n = 0; n <= 2; ++n)
        for (int m = 0; m + n <= 3; ++m)
          CHECK(skew_hook_schur(shape, n, m, SchurMethod::jacobi_trudi) ==
                skew_hook_schur(shape, n, m, SchurMethod::tableaux));
    }
}

TEST_CASE("principal specialization") {
  // single box with k letters: 1 + q + ... + q^(k-1)
  for (int k = 1; k <= 5; ++k) {
    QPoly f = principal_specialization(SkewShape(Partition{1}, Partition()), k, 1, 0);
    CHECK(f.coefficients() == std::vector<Int>(static_cast<size_t>(k), Int(1)));
  }

  QPoly f = principal_specialization(SkewShape(Partition{2, 2}, Partition()), 2, 2, 0);
  CHECK(f.at_one() == 20);
  CHECK(evaluate_at_root(f, 2, 1) == Cyclotomic(4));

  // single tableau 11/22 has q-weight 2
  QPoly g = principal_specialization(SkewShape(Partition{2, 2}, Partition()), 2, 1, 0);
  CHECK(g.coefficients() == std::vector<Int>{0, 0, 1});

  // enumeration route agrees with the determinant route
  for (long t = 2; t <= 3; ++t)
    for (int n = 0; n <= 1; ++n)
      for (int m = 0; m + n <= 2; ++m)
        for (const Partition& lam : partitions_up_to(5, 3))
          for (const Partition& mu : subpartitions(lam)) {
            SkewShape shape(lam, mu);
            CHECK(principal_specialization(shape, t, n, m) ==
                  principal_specialization_by_tableaux(shape, t, n, m));
          }
}

TEST_CASE("specialization commutes with substitution") {
  // x_j -> q^(j-1), y_j -> q^(j-1) applied to the symbolic polynomial
  for (const Partition& lam : partitions_up_to(5, 3))
    for (const Partition& mu : subpartitions(lam)) {
      SkewShape shape(lam, mu);
      const long t = 2;
      const int n = 1, m = 1;
      auto hs = skew_hook_schur(shape, static_cast<int>(t) * n, static_cast<int>(t) * m,
                                SchurMethod::jacobi_trudi);
      std::vector<Polynomial<Int>> images;
      for (int j = 0; j < static_cast<int>(t) * n; ++j)
        images.push_back(Polynomial<Int>::single_term(1, {j}, 1));
      for (int j = 0; j < static_cast<int>(t) * m; ++j)
        images.push_back(Polynomial<Int>::single_term(1, {j}, 1));
      CHECK(QPoly::from_polynomial(hs.substitute(images)) ==
            principal_specialization(shape, t, n, m));
    }
}

TEST_CASE("all-ones hook Schur values") {
  // binomial-table determinant vs symbolic evaluation
  for (const Partition& lam : partitions_up_to(6, 3))
    for (const Partition& mu : subpartitions(lam))
      for (int a = 0; a <= 3; ++a)
        for (int b = 0; a + b <= 4; ++b) {
          SkewShape shape(lam, mu);
          auto hs = skew_hook_schur(shape, a, b, SchurMethod::tableaux);
          std::vector<Polynomial<Int>> ones(static_cast<size_t>(a + b),
                                            Polynomial<Int>::constant(0, 1));
          CHECK(hook_schur_all_ones(shape, a, b) == hs.substitute(ones).constant_value());
        }
}
