#include "schurcore/alphabet.hpp"
#include "schurcore/cyclotomic.hpp"
#include "schurcore/polynomial.hpp"
#include "schurcore/qpoly.hpp"
#include "schurcore/schur.hpp"

#include <doctest.h>

#include <random>

using namespace schurcore;

namespace {

Polynomial<Int> random_poly(std::mt19937& rng, int arity, int max_terms, int max_exp,
                            int max_coeff) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> exp(0, max_exp);
  std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
  Polynomial<Int> p(arity);
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    Monomial m(static_cast<size_t>(arity));
    for (int& e : m) e = exp(rng);
    p.add_term(std::move(m), Int(coeff(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<Int>{-1, 1});
  CHECK(cyclotomic_polynomial(2) == std::vector<Int>{1, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<Int>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<Int>{1, 0, -1, 0, 1});
  // prime p: 1 + x + ... + x^(p-1)
  for (long p : {2L, 3L, 5L, 7L})
    CHECK(cyclotomic_polynomial(p) == std::vector<Int>(static_cast<size_t>(p), Int(1)));
  // degree is Euler phi
  auto phi = [](long n) {
    long r = 0;
    for (long k = 1; k <= n; ++k) {
      long a = k, b = n;
      while (b) std::swap(a %= b, b);
      if (a == 1) ++r;
    }
    return r;
  };
  for (long n = 1; n <= 20; ++n)
    CHECK(static_cast<long>(cyclotomic_polynomial(n).size()) - 1 == phi(n));
}

TEST_CASE("cyclotomic ring elements") {
  for (long t = 2; t <= 8; ++t) {
    Cyclotomic w = Cyclotomic::root_power(t, 1);
    // multiplicative order exactly t
    Cyclotomic pow = Cyclotomic::from_int(1, t);
    for (long k = 1; k < t; ++k) {
      pow *= w;
      CHECK(pow == Cyclotomic::root_power(t, k));
      CHECK(pow != Cyclotomic::from_int(1, t));
    }
    pow *= w;
    CHECK(pow == Cyclotomic::from_int(1, t));
  }

  // sum of all powers vanishes for prime t
  for (long t : {2L, 3L, 5L, 7L}) {
    Cyclotomic sum = Cyclotomic::zero(t);
    for (long k = 0; k < t; ++k) sum += Cyclotomic::root_power(t, k);
    CHECK(sum.is_zero());
  }

  // omega of order 2 is -1
  CHECK(Cyclotomic::root_power(2, 1) == Cyclotomic(-1));

  // integrality detection
  CHECK(Cyclotomic::from_int(5, 12).is_integer());
  CHECK_FALSE(Cyclotomic::root_power(12, 1).is_integer());
  CHECK(Cyclotomic::from_int(5, 12).integer_value() == 5);

  // mixed-order arithmetic promotes integers, rejects the rest
  CHECK(Cyclotomic(3) + Cyclotomic::from_int(4, 5) == Cyclotomic::from_int(7, 5));
  CHECK_THROWS_AS(Cyclotomic::root_power(3, 1) + Cyclotomic::root_power(4, 1),
                  std::domain_error);
}

TEST_CASE("mobius") {
  CHECK(mobius(1) == 1);
  CHECK(mobius(2) == -1);
  CHECK(mobius(4) == 0);
  CHECK(mobius(6) == 1);
  CHECK(mobius(30) == -1);
  // sum over divisors is zero for n > 1
  for (long n = 2; n <= 60; ++n) {
    int s = 0;
    for (long d : divisors(n)) s += mobius(d);
    CHECK(s == 0);
  }
}

TEST_CASE("ring axioms on random sparse polynomials") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 1100; ++trial) {
    int arity = 1 + trial % 3;
    auto a = random_poly(rng, arity, 5, 4, 9);
    auto b = random_poly(rng, arity, 5, 4, 9);
    auto c = random_poly(rng, arity, 5, 4, 9);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Polynomial<Int>(arity));
  }
}

TEST_CASE("evaluate at roots of unity") {
  QPoly f(std::vector<Int>{1, 1, 1, 1});  // 1 + q + q^2 + q^3
  CHECK(evaluate_at_root(f, 4, 2) == Cyclotomic(0));  // geometric sum at -1
  CHECK(evaluate_at_root(f, 4, 1).is_zero());
  CHECK(evaluate_at_root(f, 4, 4) == Cyclotomic(4));

  // d = t gives f(1)
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coeff(0, 6);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Int> cs(static_cast<size_t>(1 + trial % 9));
    for (Int& x : cs) x = coeff(rng);
    QPoly g(cs);
    for (long t : {2L, 3L, 4L, 6L}) CHECK(evaluate_at_root(g, t, t) == Cyclotomic(g.at_one()));
  }

  // multiplicativity in the order-e ring
  for (int trial = 0; trial < 120; ++trial) {
    std::vector<Int> ca(4), cb(5);
    for (Int& x : ca) x = coeff(rng);
    for (Int& x : cb) x = coeff(rng);
    QPoly a(ca), b(cb);
    for (long t : {2L, 3L, 4L, 6L})
      for (long d : divisors(t))
        CHECK(evaluate_at_root(a * b, t, d) ==
              evaluate_at_root(a, t, d) * evaluate_at_root(b, t, d));
  }
}

TEST_CASE("principal specialization of s_(2,2) at -1") {
  // frozen from the quotient product: s_(1)(1,1)^2 with sign +1
  QPoly f = principal_specialization(SkewShape(Partition{2, 2}, Partition()), 2, 2, 0);
  CHECK(evaluate_at_root(f, 2, 1) == Cyclotomic(4));
  CHECK(f.at_one() == 20);
}

TEST_CASE("generating function identities for e and h") {
  // prod (1 + x_i q) = sum e_r q^r and prod 1/(1 - x_i q) = sum h_r q^r,
  // checked coefficientwise in an extended ring with q as the last variable
  const int degree = 12;
  for (int n = 1; n <= 4; ++n) {
    const int arity = n + 1;  // x_1..x_n, q
    Polynomial<Int> eprod = Polynomial<Int>::constant(arity, 1);
    for (int i = 0; i < n; ++i) {
      Monomial xq(static_cast<size_t>(arity), 0);
      xq[static_cast<size_t>(i)] = 1;
      xq[static_cast<size_t>(n)] = 1;
      Polynomial<Int> factor = Polynomial<Int>::constant(arity, 1);
      factor.add_term(xq, 1);
      eprod *= factor;
    }
    // truncated geometric series for each variable
    Polynomial<Int> hprod = Polynomial<Int>::constant(arity, 1);
    for (int i = 0; i < n; ++i) {
      Polynomial<Int> geo(arity);
      for (int k = 0; k <= degree; ++k) {
        Monomial mk(static_cast<size_t>(arity), 0);
        mk[static_cast<size_t>(i)] = k;
        mk[static_cast<size_t>(n)] = k;
        geo.add_term(mk, 1);
      }
      hprod *= geo;
    }
    auto e = elementary_table(x_variables(n, 0), degree, n);
    auto h = complete_table(x_variables(n, 0), degree, n);
    for (int r = 0; r <= degree; ++r) {
      // extract the q^r slice
      Polynomial<Int> eslice(n), hslice(n);
      for (const auto& [m, c] : eprod.terms())
        if (m[static_cast<size_t>(n)] == r)
          eslice.add_term(Monomial(m.begin(), m.begin() + n), c);
      for (const auto& [m, c] : hprod.terms())
        if (m[static_cast<size_t>(n)] == r)
          hslice.add_term(Monomial(m.begin(), m.begin() + n), c);
      CHECK(eslice == e[static_cast<size_t>(r)]);
      CHECK(hslice == h[static_cast<size_t>(r)]);
    }
  }
}

TEST_CASE("substitution") {
  // x1 x2 at all ones
  Polynomial<Int> p(2);
  p.add_term({1, 1}, 1);
  auto ones = std::vector<Polynomial<Int>>{Polynomial<Int>::constant(0, 1),
                                           Polynomial<Int>::constant(0, 1)};
  CHECK(p.substitute(ones).constant_value() == 1);

  // hs example at all ones: coefficient sum 8
  Polynomial<Int> hs = skew_hook_schur(SkewShape(Partition{2, 2}, Partition{1}), 2, 1,
                                       SchurMethod::jacobi_trudi);
  std::vector<Polynomial<Int>> allones(3, Polynomial<Int>::constant(0, 1));
  CHECK(hs.substitute(allones).constant_value() == 8);

  // e_2(x1, w x1) = -x1^2 at t = 2
  auto e2 = elementary(2, x_twisted(1, 0, 2), 1);
  Polynomial<Cyclotomic> expected(1);
  expected.add_term({2}, Cyclotomic(-1));
  CHECK(e2 == expected);

  // twisted substitution into an integer polynomial: h_2(i*x1) = -x1^2
  auto h2 = embed_cyclotomic(complete(2, x_variables(1, 0), 1), 4);
  std::vector<Polynomial<Cyclotomic>> twist{
      Polynomial<Cyclotomic>::variable(1, 0).times_scalar(Cyclotomic::root_power(4, 1))};
  CHECK(h2.substitute(twist) ==
        Polynomial<Cyclotomic>::single_term(1, {2}, Cyclotomic::root_power(4, 2)));
  CHECK(Cyclotomic::root_power(4, 2) == Cyclotomic(-1));
}

TEST_CASE("qpoly arithmetic and reduction") {
  QPoly a(std::vector<Int>{1, 2});        // 1 + 2q
  QPoly b(std::vector<Int>{0, 0, 3});     // 3q^2
  CHECK((a * b).coefficients() == std::vector<Int>{0, 0, 3, 6});
  CHECK((a + b).coefficients() == std::vector<Int>{1, 2, 3});
  QPoly f(std::vector<Int>{1, 2, 3, 4, 5});
  CHECK(f.reduce_mod_qt_minus_1(3) == std::vector<Int>{5, 7, 3});
  CHECK(f.at_one() == 15);
}
