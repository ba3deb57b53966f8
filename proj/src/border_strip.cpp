#include "schurcore/border_strip.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace schurcore {

bool is_border_strip(const std::vector<Cell>& cells) {
  if (cells.empty()) return false;
  std::set<Cell> s(cells.begin(), cells.end());
  if (s.size() != cells.size()) return false;
  for (Cell c : s)
    if (s.count({c.row + 1, c.col}) && s.count({c.row, c.col + 1}) &&
        s.count({c.row + 1, c.col + 1}))
      return false;
  // rows occupy consecutive columns, consecutive rows overlap in one column
  int prev_row = 0, prev_first = 0;
  bool have_prev = false;
  auto it = s.begin();
  while (it != s.end()) {
    int row = it->row;
    int first = it->col, last = it->col;
    while (it != s.end() && it->row == row) {
      if (it->col != last && it->col != last + 1) return false;
      last = it->col;
      ++it;
    }
    if (have_prev) {
      // the row below starts where the row above ends (English notation)
      if (row != prev_row + 1 || prev_first != last) return false;
    }
    have_prev = true;
    prev_row = row;
    prev_first = first;
  }
  return true;
}

BorderStrip::BorderStrip(std::vector<Cell> cells) : cells_(std::move(cells)) {
  std::sort(cells_.begin(), cells_.end());
  if (!is_border_strip(cells_)) throw std::invalid_argument("BorderStrip: invalid cell set");
}

int BorderStrip::height() const {
  return cells_.back().row - cells_.front().row;
}

int BorderStrip::position() const {
  int best = cells_.front().col - cells_.front().row;
  for (Cell c : cells_) best = std::max(best, c.col - c.row);
  return best;
}

namespace {

std::vector<Cell> diagram_difference(const Partition& outer, const Partition& inner) {
  std::vector<Cell> cells;
  for (int r = 1; r <= outer.length(); ++r)
    for (int c = inner.part(r) + 1; c <= outer.part(r); ++c) cells.push_back({r, c});
  return cells;
}

Partition move_beta_entry(const BetaSet& beta, int from, int to) {
  std::vector<int> entries = beta.entries();
  for (int& b : entries)
    if (b == from) b = to;
  std::sort(entries.rbegin(), entries.rend());
  return BetaSet(std::move(entries)).to_partition();
}

}  // namespace

std::vector<StripRemoval> removable_strips(const Partition& lam, long t) {
  if (t < 1) throw std::invalid_argument("removable_strips: t must be positive");
  std::vector<StripRemoval> out;
  if (lam.length() == 0) return out;
  BetaSet beta = beta_set(lam, lam.length());
  const auto& entries = beta.entries();
  for (int b : entries) {
    int target = b - static_cast<int>(t);
    if (target < 0) continue;
    if (std::find(entries.begin(), entries.end(), target) != entries.end()) continue;
    Partition mu = move_beta_entry(beta, b, target);
    out.push_back({mu, BorderStrip(diagram_difference(lam, mu))});
  }
  std::sort(out.begin(), out.end(),
            [](const StripRemoval& a, const StripRemoval& b) { return a.strip < b.strip; });
  return out;
}

std::vector<BorderStrip> enumerate_border_strips(const Partition& lam, long t) {
  std::vector<BorderStrip> out;
  for (auto& r : removable_strips(lam, t)) out.push_back(r.strip);
  return out;
}

std::vector<StripAddition> addable_strips(const Partition& lam, long t, const Partition& bound) {
  if (t < 1) throw std::invalid_argument("addable_strips: t must be positive");
  if (!bound.contains(lam))
    throw std::invalid_argument("addable_strips: lam must be contained in bound");
  std::vector<StripAddition> out;
  const int ell = std::max(bound.length(), 1);
  BetaSet beta = beta_set(lam, ell);
  const auto& entries = beta.entries();
  for (int b : entries) {
    int target = b + static_cast<int>(t);
    if (std::find(entries.begin(), entries.end(), target) != entries.end()) continue;
    Partition nu = move_beta_entry(beta, b, target);
    if (!bound.contains(nu)) continue;
    out.push_back({nu, BorderStrip(diagram_difference(nu, lam))});
  }
  std::sort(out.begin(), out.end(),
            [](const StripAddition& a, const StripAddition& b) { return a.strip < b.strip; });
  return out;
}

}  // namespace schurcore
