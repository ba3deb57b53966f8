#pragma once

#include "schurcore/border_strip.hpp"
#include "schurcore/partition.hpp"
#include "schurcore/quotient.hpp"
#include "schurcore/supertableau.hpp"

#include <functional>
#include <vector>

namespace schurcore {

/// Ribbon supertableau in chain form: a sequence of partitions from the
/// inner to the outer shape, each step adding one border strip of size t,
/// with a super entry per strip. Strips are listed in weakly increasing
/// label order; strips sharing an unprimed label appear at strictly
/// increasing positions, strips sharing a primed label at strictly
/// decreasing positions. Standard means all labels distinct.
struct RibbonChain {
  long t = 1;
  SkewShape shape;
  std::vector<Partition> chain;     // chain.front() = inner, chain.back() = outer
  std::vector<BorderStrip> strips;  // chain.size() - 1 entries
  std::vector<SuperEntry> labels;   // one per strip

  bool is_standard() const;
  int total_height() const;
  /// One variable per strip (arity n + m).
  Monomial weight(int n, int m) const;

  friend bool operator==(const RibbonChain&, const RibbonChain&) = default;
};

/// Structural validity including the label-ordering rules.
bool is_valid_chain(const RibbonChain& chain);

/// Visit all semistandard t-ribbon chains of the shape with entries in the
/// alphabet of n unprimed and m primed letters, in lexicographic order of
/// the (label, strip) sequence.
void for_each_ribbon_chain(const SkewShape& shape, long t, int n, int m,
                           const std::function<void(const RibbonChain&)>& visit);

std::vector<RibbonChain> enumerate_ribbon_chains(const SkewShape& shape, long t, int n, int m);

Int count_ribbon_chains(const SkewShape& shape, long t, int n, int m);

int ribbon_position(const BorderStrip& strip);

/// Relabel so that the unprimed strips receive 1,2,... and the primed
/// strips 1',2',... in chain order; preserves the relative order of
/// distinct labels and turns any semistandard chain standard.
RibbonChain standardize(const RibbonChain& chain);

/// Quotient data for a pair of partitions at the same modulus and declared
/// length; requires equal residue counts (i.e. equal cores).
struct QuotientPair {
  QuotientDecomposition lam;
  QuotientDecomposition mu;
  long t() const { return lam.t; }
  int ell() const { return lam.ell; }
  int blocks() const { return lam.ell / static_cast<int>(lam.t); }  // the n with ell = t*n
};

/// Throws std::domain_error when the residue counts differ.
QuotientPair quotient_pair(const Partition& lam, const Partition& mu, long t, int n);

/// Entry transport of the standard bijection: ribbons at position
/// t*(pos(x) + n_i - n) + i correspond to cells x of quotient component i.
std::vector<SuperTableau> quotient_bijection_forward(const RibbonChain& standard_chain,
                                                     const QuotientPair& pair);
RibbonChain quotient_bijection_inverse(const std::vector<SuperTableau>& tuple,
                                       const QuotientPair& pair);

/// Semistandard version; weight-preserving, inverse orders equal labels by
/// the transported position (increasing for unprimed, decreasing for
/// primed).
std::vector<SuperTableau> semistandard_quotient_map(const RibbonChain& chain,
                                                    const QuotientPair& pair);
RibbonChain semistandard_quotient_inverse(const std::vector<SuperTableau>& tuple,
                                          const QuotientPair& pair);

}  // namespace schurcore
