#pragma once

#include "schurcore/cyclotomic.hpp"
#include "schurcore/partition.hpp"
#include "schurcore/polynomial.hpp"
#include "schurcore/qpoly.hpp"
#include "schurcore/quotient.hpp"

#include <optional>
#include <vector>

namespace schurcore {

/// Precomputed series tables for one (t, n, m): the twisted super complete
/// functions H_r(X, wX, ..., w^(t-1)X / Y, ..., w^(t-1)Y) and the plain
/// H_r(X^t / (-1)^(t-1) Y^t). Shared across a verification sweep.
struct FactorizationTables {
  long t = 2;
  int n = 1;
  int m = 0;
  std::vector<Polynomial<Cyclotomic>> twisted_H;
  std::vector<Polynomial<Int>> power_H;
};

/// max_total_size bounds |lambda| over the sweep the tables serve.
FactorizationTables make_factorization_tables(long t, int n, int m, int max_total_size);

struct HSpecializationCheck {
  long t;
  int n, m, k;
  bool vanishing_branch;  // t does not divide k
  bool passed;
};

/// Exact symbolic check that H_k over the twisted alphabet vanishes when
/// t does not divide k and equals H_(k/t)(X^t / (-1)^(t-1) Y^t) otherwise.
HSpecializationCheck check_H_specialization(long t, int n, int m, int k);

struct FactorizationVerdict {
  Partition lam, mu;
  long t = 2;
  int n = 1, m = 0;
  bool contained = true;    // mu inside lam; otherwise both sides vanish by convention
  bool cores_equal = false;
  int sign = 1;             // sgn(sigma_lam) sgn(sigma_mu), factorization branch
  bool vanishes = false;    // lhs is identically zero
  bool match = false;       // lhs equals sign * rhs
  bool passed = false;
  Polynomial<Cyclotomic> lhs;
  Polynomial<Int> rhs_product;
  std::optional<Monomial> witness;  // first diverging monomial
};

FactorizationVerdict verify_factorization_super(const Partition& lam, const Partition& mu,
                                                long t, int n, int m);
FactorizationVerdict verify_factorization_super(const FactorizationTables& tables,
                                                const Partition& lam, const Partition& mu);
/// The m = 0 specialization (ordinary skew Schur polynomials).
FactorizationVerdict verify_factorization_schur(const Partition& lam, const Partition& mu,
                                                long t, int n);

struct RibbonCountCheck {
  Partition lam, mu;
  long t = 2, d = 1;
  int n = 1, m = 0;
  bool cores_equal = false;  // at ribbon size t/d
  Int product = 0;           // quotient hook Schur product at all-ones
  Int chains = 0;            // enumerated ribbon tableaux
  bool passed = false;
};

/// Cross-checks the quotient product formula against direct enumeration of
/// (t/d)-ribbon supertableaux with entries in the (dn, dm) alphabet.
RibbonCountCheck count_ribbon_identity(const Partition& lam, const Partition& mu, long t, long d,
                                       int n, int m);

struct DivisibilityCheck {
  Partition lam, mu;
  long t = 2;
  int n = 1, m = 0;
  bool super_variant = false;
  Int fine_count = 0;    // 1-ribbon tableaux over the stretched alphabet
  Int coarse_count = 0;  // t-ribbon tableaux over the base alphabet
  Int difference = 0;
  bool divisible = false;
  // The congruence the factorization actually yields carries the product
  // of the sorting-permutation signs on the coarse count; the plain
  // difference above fails for odd t when the signs differ.
  int sign = 1;
  Int signed_difference = 0;
  bool signed_divisible = false;
};

/// fine - coarse must be a multiple of the prime t; super variant requires
/// t odd and counts supertableaux.
DivisibilityCheck divisibility_check(const Partition& lam, const Partition& mu, long t, int n,
                                     int m, bool super_variant);

struct CspReport {
  long t = 2;
  std::vector<Int> f_mod;  // f modulo q^t - 1, length t
  Int f_at_one = 0;
  std::vector<std::pair<long, Cyclotomic>> values_at_roots;  // per divisor d of t
  std::vector<std::pair<long, Int>> orbit_counts;            // per divisor j of t
  bool csp_exists = false;
  std::optional<long> failing_d;        // first divisor with non-integer value
  std::optional<long> failing_j;        // first divisor with bad orbit count
  std::optional<bool> sign_condition;   // sgn(sigma_lam) = sgn(sigma_mu) at modulus t
  /// Sign equality at modulus t/d for every divisor d of t. The criterion
  /// can fail at composite t with sign_condition true but this one false.
  std::optional<bool> sign_condition_all_divisors;
  std::optional<bool> route_agreement;  // evaluate_at_root vs factorization product
};

/// Divisor-lattice analysis of f at the t-th roots of unity: the orbit
/// counts c_j are recovered by Moebius inversion j*c_j =
/// sum_(e|j) mobius(j/e) f(w^e); the criterion holds exactly when every
/// f(w^d) is a rational integer and every c_j a nonnegative integer.
CspReport csp_analyze(const QPoly& f, long t);

/// f = s_(lam/mu)(1, q, ..., q^(tn-1)); requires lengths at most tn.
CspReport verify_csp_skew(const Partition& lam, const Partition& mu, long t, int n);

/// f = hs at the (tn / tm) principal alphabet; requires odd t.
CspReport verify_csp_super(const Partition& lam, const Partition& mu, long t, int n, int m);

}  // namespace schurcore
