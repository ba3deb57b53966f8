#pragma once

#include "schurcore/partition.hpp"

#include <vector>

namespace schurcore {

/// Connected set of cells with no 2x2 block; successive rows and columns
/// overlap in exactly one cell.
class BorderStrip {
 public:
  explicit BorderStrip(std::vector<Cell> cells);

  int size() const { return static_cast<int>(cells_.size()); }
  /// Number of rows spanned minus one.
  int height() const;
  /// max(col - row) over the cells.
  int position() const;
  const std::vector<Cell>& cells() const { return cells_; }

  friend bool operator==(const BorderStrip& a, const BorderStrip& b) {
    return a.cells_ == b.cells_;
  }
  friend bool operator<(const BorderStrip& a, const BorderStrip& b) {
    return a.cells_ < b.cells_;
  }

 private:
  std::vector<Cell> cells_;  // row-major
};

/// True when the cell set is connected, has no 2x2 block, and occupies
/// consecutive columns within each row with one-column overlaps between
/// consecutive rows.
bool is_border_strip(const std::vector<Cell>& cells);

struct StripRemoval {
  Partition result;
  BorderStrip strip;
};

/// All removable border strips of size t, with the partitions they leave
/// behind, ordered by the strip cell sets.
std::vector<StripRemoval> removable_strips(const Partition& lam, long t);

/// The strips as such (same order).
std::vector<BorderStrip> enumerate_border_strips(const Partition& lam, long t);

struct StripAddition {
  Partition result;
  BorderStrip strip;
};

/// All ways to add a border strip of size t to lam such that the result is
/// still contained in the bound, ordered by the strip cell sets.
std::vector<StripAddition> addable_strips(const Partition& lam, long t, const Partition& bound);

}  // namespace schurcore
