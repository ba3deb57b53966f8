#include "schurcore/ribbon_tableau.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace schurcore {

bool RibbonChain::is_standard() const {
  std::set<SuperEntry> seen;
  for (const SuperEntry& e : labels)
    if (!seen.insert(e).second) return false;
  return true;
}

int RibbonChain::total_height() const {
  int h = 0;
  for (const BorderStrip& s : strips) h += s.height();
  return h;
}

Monomial RibbonChain::weight(int n, int m) const {
  Monomial w(static_cast<size_t>(n + m), 0);
  for (const SuperEntry& e : labels) ++w[static_cast<size_t>(entry_index(e, n, m))];
  return w;
}

bool is_valid_chain(const RibbonChain& c) {
  if (c.chain.empty()) return false;
  if (c.chain.front() != c.shape.inner() || c.chain.back() != c.shape.outer()) return false;
  if (c.strips.size() + 1 != c.chain.size() || c.labels.size() != c.strips.size()) return false;
  for (size_t i = 0; i < c.strips.size(); ++i) {
    const Partition& lo = c.chain[i];
    const Partition& hi = c.chain[i + 1];
    if (!hi.contains(lo) || hi.size() - lo.size() != static_cast<int>(c.t)) return false;
    std::vector<Cell> diff;
    for (int r = 1; r <= hi.length(); ++r)
      for (int col = lo.part(r) + 1; col <= hi.part(r); ++col) diff.push_back({r, col});
    if (!is_border_strip(diff) || !(BorderStrip(diff) == c.strips[i])) return false;
  }
  for (size_t i = 1; i < c.labels.size(); ++i) {
    if (c.labels[i] < c.labels[i - 1]) return false;
    if (c.labels[i] == c.labels[i - 1]) {
      int prev = c.strips[i - 1].position();
      int cur = c.strips[i].position();
      if (c.labels[i].primed ? cur >= prev : cur <= prev) return false;
    }
  }
  return true;
}

void for_each_ribbon_chain(const SkewShape& shape, long t, int n, int m,
                           const std::function<void(const RibbonChain&)>& visit) {
  if (t < 1) throw std::invalid_argument("for_each_ribbon_chain: t must be positive");
  if (shape.size() % t != 0) return;

  RibbonChain current;
  current.t = t;
  current.shape = shape;
  current.chain.push_back(shape.inner());

  auto rec = [&](auto&& self) -> void {
    if (current.chain.back() == shape.outer()) {
      visit(current);
      return;
    }
    auto additions = addable_strips(current.chain.back(), t, shape.outer());
    int last_index = current.labels.empty()
                         ? 0
                         : entry_index(current.labels.back(), n, m);
    for (int k = current.labels.empty() ? 0 : last_index; k < n + m; ++k) {
      SuperEntry label = entry_at(k, n, m);
      for (const auto& add : additions) {
        if (!current.labels.empty() && k == last_index) {
          int prev = current.strips.back().position();
          int cur = add.strip.position();
          if (label.primed ? cur >= prev : cur <= prev) continue;
        }
        current.chain.push_back(add.result);
        current.strips.push_back(add.strip);
        current.labels.push_back(label);
        self(self);
        current.chain.pop_back();
        current.strips.pop_back();
        current.labels.pop_back();
      }
    }
  };
  rec(rec);
}

std::vector<RibbonChain> enumerate_ribbon_chains(const SkewShape& shape, long t, int n, int m) {
  std::vector<RibbonChain> out;
  for_each_ribbon_chain(shape, t, n, m, [&](const RibbonChain& c) { out.push_back(c); });
  return out;
}

Int count_ribbon_chains(const SkewShape& shape, long t, int n, int m) {
  Int count = 0;
  for_each_ribbon_chain(shape, t, n, m, [&](const RibbonChain&) { ++count; });
  return count;
}

int ribbon_position(const BorderStrip& strip) { return strip.position(); }

RibbonChain standardize(const RibbonChain& chain) {
  RibbonChain out = chain;
  int next_unprimed = 1, next_primed = 1;
  for (SuperEntry& e : out.labels)
    e = e.primed ? SuperEntry{next_primed++, true} : SuperEntry{next_unprimed++, false};
  return out;
}

QuotientPair quotient_pair(const Partition& lam, const Partition& mu, long t, int n) {
  const int ell = static_cast<int>(t) * n;
  QuotientPair pair{decompose(lam, t, ell), decompose(mu, t, ell)};
  if (pair.lam.counts != pair.mu.counts)
    throw std::domain_error("quotient_pair: residue counts differ (cores are distinct)");
  return pair;
}

namespace {

// Beta entries of the current partition, kept as a descending vector.
std::vector<int> beta_entries(const Partition& p, int ell) { return beta_set(p, ell).entries(); }

// The unique moved entry between two beta sets differing by one strip:
// returns the new (larger) value b; b - t is in the old set.
int moved_entry(const std::vector<int>& before, const std::vector<int>& after, long t) {
  for (int b : after)
    if (std::find(before.begin(), before.end(), b) == before.end()) {
      if (std::find(before.begin(), before.end(), b - static_cast<int>(t)) == before.end())
        throw std::logic_error("moved_entry: not a single strip move");
      return b;
    }
  throw std::logic_error("moved_entry: beta sets equal");
}

// Row index (1-based) of value b among the residue-class entries of beta.
int residue_row(const std::vector<int>& beta, long t, long residue, int b) {
  int row = 0;
  for (int x : beta)
    if (x % t == residue) {
      ++row;
      if (x == b) return row;
    }
  throw std::logic_error("residue_row: entry not found");
}

SuperTableau empty_tableau(const SkewShape& shape) {
  std::vector<std::vector<SuperEntry>> rows(static_cast<size_t>(shape.outer().length()));
  for (int r = 1; r <= shape.outer().length(); ++r)
    rows[static_cast<size_t>(r - 1)].resize(
        static_cast<size_t>(shape.outer().part(r) - shape.inner().part(r)));
  return SuperTableau(shape, rows);
}

struct TupleCell {
  int component;
  Cell cell;
  SuperEntry label;
  long transported;  // t*(pos(x) + n_i - n) + i
};

std::vector<SuperTableau> transport_forward(const RibbonChain& chain, const QuotientPair& pair,
                                            bool require_standard) {
  if (!is_valid_chain(chain)) throw std::domain_error("quotient map: invalid chain");
  if (require_standard && !chain.is_standard())
    throw std::domain_error("quotient map: chain is not standard");
  if (!(chain.shape.outer() == pair.lam.beta.to_partition()) ||
      !(chain.shape.inner() == pair.mu.beta.to_partition()))
    throw std::domain_error("quotient map: shape does not match the decomposition pair");

  const long t = pair.t();
  const int ell = pair.ell();
  const int n = pair.blocks();

  std::vector<SuperTableau> tuple;
  for (long i = 0; i < t; ++i)
    tuple.push_back(empty_tableau(
        SkewShape(pair.lam.quotient[static_cast<size_t>(i)], pair.mu.quotient[static_cast<size_t>(i)])));

  std::vector<int> beta = beta_entries(chain.chain.front(), ell);
  for (size_t step = 0; step < chain.strips.size(); ++step) {
    std::vector<int> next = beta_entries(chain.chain[step + 1], ell);
    int b = moved_entry(beta, next, t);
    long residue = b % t;
    int row = residue_row(next, t, residue, b);
    int ni = pair.lam.counts[static_cast<size_t>(residue)];
    int col = (b - static_cast<int>(residue)) / static_cast<int>(t) - ni + row;
    Cell x{row, col};
    // transported position must match the ribbon position
    long expected = t * (static_cast<long>(x.col - x.row) + ni - n) + residue;
    if (expected != chain.strips[step].position())
      throw std::logic_error("quotient map: position transport mismatch");
    tuple[static_cast<size_t>(residue)].set(x, chain.labels[step]);
    beta = std::move(next);
  }
  return tuple;
}

RibbonChain transport_inverse(const std::vector<SuperTableau>& tuple, const QuotientPair& pair,
                              bool require_standard) {
  const long t = pair.t();
  const int ell = pair.ell();
  const int n = pair.blocks();
  if (tuple.size() != static_cast<size_t>(t))
    throw std::domain_error("quotient map: tuple size must equal t");
  for (long i = 0; i < t; ++i) {
    const SkewShape expected(pair.lam.quotient[static_cast<size_t>(i)],
                             pair.mu.quotient[static_cast<size_t>(i)]);
    if (!(tuple[static_cast<size_t>(i)].shape() == expected))
      throw std::domain_error("quotient map: tuple shapes do not match the quotient");
  }

  std::vector<TupleCell> cells;
  for (long i = 0; i < t; ++i) {
    int ni = pair.lam.counts[static_cast<size_t>(i)];
    for (Cell c : tuple[static_cast<size_t>(i)].shape().cells()) {
      SuperEntry label = tuple[static_cast<size_t>(i)].at(c);
      long transported = t * (static_cast<long>(c.col - c.row) + ni - n) + i;
      cells.push_back({static_cast<int>(i), c, label, transported});
    }
  }
  if (require_standard) {
    std::set<SuperEntry> seen;
    for (const auto& tc : cells)
      if (!seen.insert(tc.label).second)
        throw std::domain_error("quotient map: entries are not mutually disjoint");
  }
  std::sort(cells.begin(), cells.end(), [](const TupleCell& a, const TupleCell& b) {
    if (a.label != b.label) return a.label < b.label;
    return a.label.primed ? a.transported > b.transported : a.transported < b.transported;
  });

  RibbonChain chain;
  chain.t = t;
  chain.shape = SkewShape(pair.lam.beta.to_partition(), pair.mu.beta.to_partition());
  chain.chain.push_back(chain.shape.inner());

  std::vector<int> beta = beta_entries(chain.shape.inner(), ell);
  for (const TupleCell& tc : cells) {
    int ni = pair.lam.counts[static_cast<size_t>(tc.component)];
    int b_old = static_cast<int>(t) * (tc.cell.col - 1 + ni - tc.cell.row) + tc.component;
    int b_new = b_old + static_cast<int>(t);
    if (std::find(beta.begin(), beta.end(), b_old) == beta.end() ||
        std::find(beta.begin(), beta.end(), b_new) != beta.end())
      throw std::domain_error("quotient map: tuple is not a valid image");
    for (int& x : beta)
      if (x == b_old) x = b_new;
    std::sort(beta.rbegin(), beta.rend());
    Partition next = BetaSet(beta).to_partition();
    const Partition& prev = chain.chain.back();
    std::vector<Cell> diff;
    for (int r = 1; r <= next.length(); ++r)
      for (int col = prev.part(r) + 1; col <= next.part(r); ++col) diff.push_back({r, col});
    chain.strips.emplace_back(diff);
    chain.labels.push_back(tc.label);
    chain.chain.push_back(next);
  }
  if (!(chain.chain.back() == chain.shape.outer()))
    throw std::domain_error("quotient map: tuple does not rebuild the outer shape");
  if (!is_valid_chain(chain)) throw std::domain_error("quotient map: rebuilt chain is invalid");
  return chain;
}

}  // namespace

std::vector<SuperTableau> quotient_bijection_forward(const RibbonChain& standard_chain,
                                                     const QuotientPair& pair) {
  return transport_forward(standard_chain, pair, /*require_standard=*/true);
}

RibbonChain quotient_bijection_inverse(const std::vector<SuperTableau>& tuple,
                                       const QuotientPair& pair) {
  return transport_inverse(tuple, pair, /*require_standard=*/true);
}

std::vector<SuperTableau> semistandard_quotient_map(const RibbonChain& chain,
                                                    const QuotientPair& pair) {
  return transport_forward(chain, pair, /*require_standard=*/false);
}

RibbonChain semistandard_quotient_inverse(const std::vector<SuperTableau>& tuple,
                                          const QuotientPair& pair) {
  return transport_inverse(tuple, pair, /*require_standard=*/false);
}

}  // namespace schurcore
