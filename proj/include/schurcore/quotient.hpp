#pragma once

#include "schurcore/border_strip.hpp"
#include "schurcore/partition.hpp"

#include <stdexcept>
#include <vector>

namespace schurcore {

/// Raised when a strip-removal parity is requested for a pair that admits
/// no removal chain (different cores, or incompatible quotients).
struct UndefinedParity : std::domain_error {
  using std::domain_error::domain_error;
};

/// Core, quotient tuple, residue counts and sorting-permutation sign of a
/// partition at modulus t and declared length ell. Theorem-level callers
/// fix ell = t*n for every partition they compare; the quotient tuple is
/// only defined up to cyclic rotation otherwise.
struct QuotientDecomposition {
  long t = 1;
  int ell = 0;
  BetaSet beta;
  std::vector<int> counts;          // size t, sums to ell
  Partition core;
  std::vector<Partition> quotient;  // size t
  int sigma_sign = 1;
};

QuotientDecomposition decompose(const Partition& lam, long t, int ell);

/// Core via the beta-set construction; independent of ell.
Partition t_core(const Partition& lam, long t);

std::vector<Partition> t_quotient(const Partition& lam, long t, int ell);

/// Sign of the permutation sorting the beta set into residue blocks
/// 0..t-1, decreasing within each block.
int sigma_sign(const Partition& lam, long t, int ell);

/// Independent oracle: repeatedly remove size-t border strips until none
/// remain, taking the first removable strip each time.
Partition t_core_by_strip_removal(const Partition& lam, long t);

/// Parity (0/1) of the total strip height along one removal chain from lam
/// down to mu; throws UndefinedParity when no chain exists.
int height_parity(const Partition& lam, const Partition& mu, long t);

}  // namespace schurcore
