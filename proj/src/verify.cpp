#include "schurcore/verify.hpp"

#include "schurcore/alphabet.hpp"
#include "schurcore/ribbon_tableau.hpp"
#include "schurcore/schur.hpp"
#include "schurcore/supertableau.hpp"

#include <algorithm>
#include <stdexcept>

namespace schurcore {

FactorizationTables make_factorization_tables(long t, int n, int m, int max_total_size) {
  if (t < 2) throw std::invalid_argument("factorization tables: t must be at least 2");
  FactorizationTables tables;
  tables.t = t;
  tables.n = n;
  tables.m = m;
  const int arity = n + m;
  const int rmax = max_total_size + static_cast<int>(t) * n + 1;
  tables.twisted_H =
      super_complete_table(x_twisted(n, m, t), y_twisted(n, m, t), rmax, arity);
  tables.power_H =
      super_complete_table(x_powers(n, m, t), y_powers_signed(n, m, t), rmax, arity);
  return tables;
}

HSpecializationCheck check_H_specialization(long t, int n, int m, int k) {
  if (t < 2) throw std::invalid_argument("check_H_specialization: t must be at least 2");
  const int arity = n + m;
  Polynomial<Cyclotomic> lhs =
      super_complete(k, x_twisted(n, m, t), y_twisted(n, m, t), arity);
  HSpecializationCheck check{t, n, m, k, k % t != 0, false};
  if (check.vanishing_branch) {
    check.passed = lhs.is_zero();
  } else {
    Polynomial<Int> rhs = super_complete(k / static_cast<int>(t), x_powers(n, m, t),
                                         y_powers_signed(n, m, t), arity);
    check.passed = lhs == embed_cyclotomic(rhs, t);
  }
  return check;
}

namespace {

// Product over quotient components of hs over the power alphabet.
Polynomial<Int> quotient_product(const FactorizationTables& tables,
                                 const QuotientDecomposition& dl,
                                 const QuotientDecomposition& dm) {
  const int arity = tables.n + tables.m;
  Polynomial<Int> product = Polynomial<Int>::constant(arity, 1);
  for (size_t i = 0; i < dl.quotient.size(); ++i) {
    if (!dl.quotient[i].contains(dm.quotient[i])) return Polynomial<Int>(arity);
    SkewShape factor(dl.quotient[i], dm.quotient[i]);
    product *= jacobi_trudi(factor, std::max(factor.outer().length(), factor.inner().length()),
                            tables.power_H, arity);
    if (product.is_zero()) return product;
  }
  return product;
}

}  // namespace

FactorizationVerdict verify_factorization_super(const FactorizationTables& tables,
                                                const Partition& lam, const Partition& mu) {
  const long t = tables.t;
  const int n = tables.n;
  const int ell = static_cast<int>(t) * n;
  if (lam.length() > ell || mu.length() > ell)
    throw std::domain_error("verify_factorization: partition longer than t*n");

  FactorizationVerdict v;
  v.lam = lam;
  v.mu = mu;
  v.t = t;
  v.n = n;
  v.m = tables.m;
  v.contained = lam.contains(mu);
  const int arity = tables.n + tables.m;
  if (!v.contained) {
    v.cores_equal = false;
    v.vanishes = true;
    v.match = true;
    v.passed = true;
    v.lhs = Polynomial<Cyclotomic>(arity);
    v.rhs_product = Polynomial<Int>(arity);
    return v;
  }

  SkewShape shape(lam, mu);
  v.lhs = jacobi_trudi(shape, ell, tables.twisted_H, arity);
  v.vanishes = v.lhs.is_zero();

  QuotientDecomposition dl = decompose(lam, t, ell);
  QuotientDecomposition dm = decompose(mu, t, ell);
  v.cores_equal = dl.counts == dm.counts;

  if (!v.cores_equal) {
    v.passed = v.vanishes;
    return v;
  }

  v.sign = dl.sigma_sign * dm.sigma_sign;
  v.rhs_product = quotient_product(tables, dl, dm);
  Polynomial<Cyclotomic> rhs_signed = embed_cyclotomic(
      v.sign == 1 ? v.rhs_product : -v.rhs_product, t);
  v.match = v.lhs == rhs_signed;
  v.passed = v.match;
  if (!v.match) {
    // first graded-lex monomial where the sides disagree
    for (const auto& [mono, c] : v.lhs.terms())
      if (!(rhs_signed.coefficient(mono) == c)) {
        v.witness = mono;
        break;
      }
    if (!v.witness)
      for (const auto& [mono, c] : rhs_signed.terms())
        if (!(v.lhs.coefficient(mono) == c)) {
          v.witness = mono;
          break;
        }
  }
  return v;
}

FactorizationVerdict verify_factorization_super(const Partition& lam, const Partition& mu,
                                                long t, int n, int m) {
  auto tables = make_factorization_tables(t, n, m, std::max(lam.size(), mu.size()));
  return verify_factorization_super(tables, lam, mu);
}

FactorizationVerdict verify_factorization_schur(const Partition& lam, const Partition& mu,
                                                long t, int n) {
  return verify_factorization_super(lam, mu, t, n, 0);
}

RibbonCountCheck count_ribbon_identity(const Partition& lam, const Partition& mu, long t, long d,
                                       int n, int m) {
  if (d < 1 || t % d != 0)
    throw std::invalid_argument("count_ribbon_identity: d must divide t");
  RibbonCountCheck check;
  check.lam = lam;
  check.mu = mu;
  check.t = t;
  check.d = d;
  check.n = n;
  check.m = m;
  const long ribbon = t / d;
  const int ell = static_cast<int>(t) * n;
  if (lam.length() > ell || mu.length() > ell)
    throw std::domain_error("count_ribbon_identity: partition longer than t*n");
  if (!lam.contains(mu)) {
    check.passed = true;  // no shape: both sides empty by convention
    return check;
  }
  SkewShape shape(lam, mu);
  check.chains = count_ribbon_chains(shape, ribbon, d * n, d * m);

  QuotientDecomposition dl = decompose(lam, ribbon, ell);
  QuotientDecomposition dm = decompose(mu, ribbon, ell);
  check.cores_equal = dl.counts == dm.counts;
  if (!check.cores_equal) {
    check.product = 0;
    check.passed = check.chains == 0;
    return check;
  }
  Int product = 1;
  for (size_t i = 0; i < dl.quotient.size(); ++i) {
    if (!dl.quotient[i].contains(dm.quotient[i])) {
      product = 0;
      break;
    }
    product *= hook_schur_all_ones(SkewShape(dl.quotient[i], dm.quotient[i]), d * n, d * m);
  }
  check.product = product;
  check.passed = check.product == check.chains;
  return check;
}

DivisibilityCheck divisibility_check(const Partition& lam, const Partition& mu, long t, int n,
                                     int m, bool super_variant) {
  if (!is_prime(t)) throw std::domain_error("divisibility_check: t must be prime");
  if (super_variant && t % 2 == 0)
    throw std::domain_error("divisibility_check: super variant requires odd t");
  DivisibilityCheck check;
  check.lam = lam;
  check.mu = mu;
  check.t = t;
  check.n = n;
  check.m = m;
  check.super_variant = super_variant;
  if (!lam.contains(mu)) {
    check.divisible = true;  // no shape, both counts zero
    return check;
  }
  SkewShape shape(lam, mu);
  const int mm = super_variant ? m : 0;
  check.fine_count = count_supertableaux(shape, static_cast<int>(t) * n, static_cast<int>(t) * mm);
  check.coarse_count = count_ribbon_chains(shape, t, n, mm);
  check.difference = check.fine_count - check.coarse_count;
  check.divisible = check.difference % t == 0;
  const int ell = static_cast<int>(t) * n;
  if (lam.length() <= ell && mu.length() <= ell)
    check.sign = sigma_sign(lam, t, ell) * sigma_sign(mu, t, ell);
  check.signed_difference = check.fine_count - Int(check.sign) * check.coarse_count;
  check.signed_divisible = check.signed_difference % t == 0;
  return check;
}

namespace {

// Shared by csp_analyze and the theorem-level verifiers.
CspReport analyze_values(const QPoly& f, long t) {
  CspReport report;
  report.t = t;
  report.f_mod = f.reduce_mod_qt_minus_1(t);
  report.f_at_one = f.at_one();

  const std::vector<long> divs = divisors(t);
  bool all_integer = true;
  for (long d : divs) {
    Cyclotomic value = evaluate_at_root(f, t, d);
    if (!value.is_integer() && !report.failing_d) {
      report.failing_d = d;
      all_integer = false;
    }
    report.values_at_roots.emplace_back(d, std::move(value));
  }
  if (!all_integer) {
    report.csp_exists = false;
    return report;
  }

  auto value_at = [&](long e) -> Int {
    for (const auto& [d, v] : report.values_at_roots)
      if (d == e) return v.integer_value();
    throw std::logic_error("analyze_values: divisor lookup failed");
  };

  bool ok = true;
  for (long j : divs) {
    Int s = 0;
    for (long e : divisors(j)) s += mobius(j / e) * value_at(e);
    if (s % j != 0 || sgn(s) < 0) {
      if (!report.failing_j) report.failing_j = j;
      ok = false;
      report.orbit_counts.emplace_back(j, s);  // raw j*c_j for the report
      continue;
    }
    report.orbit_counts.emplace_back(j, s / j);
  }
  report.csp_exists = ok;

  if (ok) {
    // reconstruction must reproduce f modulo q^t - 1
    std::vector<Int> rebuilt(static_cast<size_t>(t), Int(0));
    for (const auto& [j, cj] : report.orbit_counts)
      for (long i = 0; i < j; ++i) rebuilt[static_cast<size_t>((t / j) * i)] += cj;
    if (rebuilt != report.f_mod)
      throw std::logic_error("csp_analyze: orbit reconstruction mismatch");
  }
  return report;
}

// f(omega^d) through the factorization route: sign times the product of
// quotient Schur values at all-ones alphabets.
Int factorization_route_value(const Partition& lam, const Partition& mu, long t, long d, int n,
                              int m) {
  const long ribbon = t / d;
  const int ell = static_cast<int>(t) * n;
  if (!lam.contains(mu)) return 0;
  QuotientDecomposition dl = decompose(lam, ribbon, ell);
  QuotientDecomposition dm = decompose(mu, ribbon, ell);
  if (dl.counts != dm.counts) return 0;
  Int product = 1;
  for (size_t i = 0; i < dl.quotient.size(); ++i) {
    if (!dl.quotient[i].contains(dm.quotient[i])) return 0;
    product *= hook_schur_all_ones(SkewShape(dl.quotient[i], dm.quotient[i]),
                                   static_cast<int>(d) * n, static_cast<int>(d) * m);
  }
  return Int(dl.sigma_sign * dm.sigma_sign) * product;
}

CspReport csp_verify_common(const Partition& lam, const Partition& mu, long t, int n, int m) {
  const int ell = static_cast<int>(t) * n;
  if (lam.length() > ell || mu.length() > ell)
    throw std::domain_error("verify_csp: partition longer than t*n");

  QPoly f;
  if (lam.contains(mu)) f = principal_specialization(SkewShape(lam, mu), t, n, m);
  CspReport report = analyze_values(f, t);
  report.sign_condition = sigma_sign(lam, t, ell) == sigma_sign(mu, t, ell);
  bool all_levels = true;
  for (long d : divisors(t))
    if (sigma_sign(lam, t / d, ell) != sigma_sign(mu, t / d, ell)) all_levels = false;
  report.sign_condition_all_divisors = all_levels;

  bool agree = true;
  for (const auto& [d, value] : report.values_at_roots) {
    Int route_b = factorization_route_value(lam, mu, t, d, n, m);
    if (!value.is_integer() || value.integer_value() != route_b) agree = false;
  }
  report.route_agreement = agree;
  return report;
}

}  // namespace

CspReport csp_analyze(const QPoly& f, long t) {
  if (t < 1) throw std::invalid_argument("csp_analyze: t must be positive");
  if (!f.has_nonnegative_coefficients())
    throw std::invalid_argument("csp_analyze: f must have nonnegative coefficients");
  return analyze_values(f, t);
}

CspReport verify_csp_skew(const Partition& lam, const Partition& mu, long t, int n) {
  if (t < 2) throw std::domain_error("verify_csp_skew: t must be at least 2");
  return csp_verify_common(lam, mu, t, n, 0);
}

CspReport verify_csp_super(const Partition& lam, const Partition& mu, long t, int n, int m) {
  if (t < 2 || t % 2 == 0) throw std::domain_error("verify_csp_super: t must be odd");
  return csp_verify_common(lam, mu, t, n, m);
}

}  // namespace schurcore
