#pragma once

#include <string>
#include <vector>

namespace schurcore {

enum class ReportFormat { json, csv, text };

/// One verification sweep over small instances. Selectors:
///   h-special      twisted H_k specialization, k = 0..max_k
///   factorize      hook Schur factorization at roots of unity
///   factorize-schur  the m = 0 Schur specialization
///   ribbon-count   quotient product vs ribbon tableau enumeration
///   divisibility   prime-modulus tableau count congruences
///   csp            cyclic sieving criterion for skew Schur specializations
///   csp-super      the hook Schur analogue (odd t)
struct SweepOptions {
  std::string selector;
  long t = 2;
  int n = 2;
  int m = 0;
  long d = 0;  // ribbon-count: specific divisor of t, 0 = all divisors
  int max_size = 8;
  int max_length = -1;  // bound on length(lambda); -1 = t*n
  int max_k = 8;        // h-special only
  int jobs = 1;
  bool probe_converse = false;  // csp: report only unequal-sign instances
  ReportFormat format = ReportFormat::json;
};

struct SweepResult {
  long total = 0;
  long passed = 0;
  long failed = 0;
  std::vector<std::string> lines;  // one report per instance, in input order
  std::string first_failure;       // empty when everything passed
};

SweepResult run_sweep(const SweepOptions& options);

}  // namespace schurcore
