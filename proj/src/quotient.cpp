#include "schurcore/quotient.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace schurcore {

QuotientDecomposition decompose(const Partition& lam, long t, int ell) {
  if (t < 1) throw std::invalid_argument("decompose: t must be positive");
  QuotientDecomposition d;
  d.t = t;
  d.ell = ell;
  d.beta = beta_set(lam, ell);
  d.counts = residue_counts(d.beta, t);

  // core: the beta set collapses to {t*j + i : 0 <= j < counts[i]}
  std::vector<int> collapsed;
  for (long i = 0; i < t; ++i)
    for (int j = 0; j < d.counts[static_cast<size_t>(i)]; ++j)
      collapsed.push_back(static_cast<int>(t) * j + static_cast<int>(i));
  std::sort(collapsed.rbegin(), collapsed.rend());
  d.core = BetaSet(std::move(collapsed)).to_partition();

  // quotient: residue class i, entries (b - i)/t in decreasing order
  d.quotient.assign(static_cast<size_t>(t), Partition());
  for (long i = 0; i < t; ++i) {
    std::vector<int> tilde;
    for (int b : d.beta.entries())
      if (b % t == i) tilde.push_back((b - static_cast<int>(i)) / static_cast<int>(t));
    std::sort(tilde.rbegin(), tilde.rend());
    const int ni = static_cast<int>(tilde.size());
    std::vector<int> parts(tilde.size());
    for (int j = 1; j <= ni; ++j) parts[static_cast<size_t>(j - 1)] = tilde[static_cast<size_t>(j - 1)] - ni + j;
    d.quotient[static_cast<size_t>(i)] = Partition(std::move(parts));
  }

  // sign of the residue-block sorting permutation, by inversion count
  const auto& entries = d.beta.entries();
  std::vector<int> sigma;  // one-line notation: position in beta of each sorted slot
  for (long q = 0; q < t; ++q)
    for (size_t p = 0; p < entries.size(); ++p)
      if (entries[p] % t == q) sigma.push_back(static_cast<int>(p) + 1);
  long inversions = 0;
  for (size_t a = 0; a < sigma.size(); ++a)
    for (size_t b = a + 1; b < sigma.size(); ++b)
      if (sigma[a] > sigma[b]) ++inversions;
  d.sigma_sign = inversions % 2 == 0 ? 1 : -1;
  return d;
}

Partition t_core(const Partition& lam, long t) {
  return decompose(lam, t, std::max(lam.length(), 1)).core;
}

std::vector<Partition> t_quotient(const Partition& lam, long t, int ell) {
  return decompose(lam, t, ell).quotient;
}

int sigma_sign(const Partition& lam, long t, int ell) {
  return decompose(lam, t, ell).sigma_sign;
}

Partition t_core_by_strip_removal(const Partition& lam, long t) {
  Partition current = lam;
  for (;;) {
    auto moves = removable_strips(current, t);
    if (moves.empty()) return current;
    current = moves.front().result;
  }
}

namespace {

// One chain lam -> mu, memoized on the intermediate partition.
std::optional<int> chain_parity(const Partition& nu, const Partition& mu, long t,
                                std::map<Partition, std::optional<int>>& memo) {
  if (nu == mu) return 0;
  auto it = memo.find(nu);
  if (it != memo.end()) return it->second;
  std::optional<int> result;
  for (const auto& move : removable_strips(nu, t)) {
    if (!move.result.contains(mu)) continue;
    auto rest = chain_parity(move.result, mu, t, memo);
    if (rest) {
      result = (*rest + move.strip.height()) % 2;
      break;
    }
  }
  memo[nu] = result;
  return result;
}

}  // namespace

int height_parity(const Partition& lam, const Partition& mu, long t) {
  if (!lam.contains(mu)) throw UndefinedParity("height_parity: mu not contained in lam");
  const int ell = std::max(lam.length(), 1);
  if (residue_counts(beta_set(lam, ell), t) != residue_counts(beta_set(mu, ell), t))
    throw UndefinedParity("height_parity: cores differ");
  std::map<Partition, std::optional<int>> memo;
  auto parity = chain_parity(lam, mu, t, memo);
  if (!parity) throw UndefinedParity("height_parity: no strip-removal chain exists");
  return *parity;
}

}  // namespace schurcore
