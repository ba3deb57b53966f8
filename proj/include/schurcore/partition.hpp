#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace schurcore {

/// Integer partition: weakly decreasing positive parts. Trailing zeros are
/// stripped on construction; a declared length is supplied explicitly to
/// the operations that need one (beta sets).
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  explicit Partition(std::vector<int> parts);

  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  /// 1-based part access; zero beyond the length.
  int part(int i) const;
  const std::vector<int>& parts() const { return parts_; }

  bool contains(const Partition& mu) const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
  friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

  /// "4,2,1"; the empty partition prints as "0".
  std::string to_string() const;
  /// Accepts "4,2,1", "0" and "" (both empty); rejects anything that is not
  /// weakly decreasing or not a nonnegative integer sequence.
  static Partition parse(std::string_view text);

 private:
  std::vector<int> parts_;
};

/// Matrix coordinates, 1-based, English notation (row 1 on top).
struct Cell {
  int row;
  int col;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

class SkewShape {
 public:
  SkewShape() = default;
  SkewShape(Partition outer, Partition inner);

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  int size() const { return outer_.size() - inner_.size(); }
  bool empty() const { return size() == 0; }
  bool contains(Cell c) const;
  /// Cells in row-major order.
  std::vector<Cell> cells() const;

  friend bool operator==(const SkewShape& a, const SkewShape& b) {
    return a.outer_ == b.outer_ && a.inner_ == b.inner_;
  }

  std::string to_string() const;
  /// "4,2,1/2,1" or plain "4,2,1".
  static SkewShape parse(std::string_view text);

 private:
  Partition outer_;
  Partition inner_;
};

/// Beta set at a declared length: entries lambda_i + ell - i, strictly
/// decreasing, all distinct and nonnegative.
class BetaSet {
 public:
  BetaSet() = default;
  explicit BetaSet(std::vector<int> entries);

  const std::vector<int>& entries() const { return entries_; }
  int declared_length() const { return static_cast<int>(entries_.size()); }
  Partition to_partition() const;

  friend bool operator==(const BetaSet& a, const BetaSet& b) { return a.entries_ == b.entries_; }

 private:
  std::vector<int> entries_;
};

/// Throws std::invalid_argument when ell < length(lam).
BetaSet beta_set(const Partition& lam, int ell);

/// counts[i] = number of entries congruent to i mod t; the counts sum to
/// the declared length.
std::vector<int> residue_counts(const BetaSet& beta, long t);

/// All partitions of n with at most max_length parts, ordered
/// lexicographically by part vector.
std::vector<Partition> partitions_of(int n, int max_length);

/// All partitions of each size 0..max_size with at most max_length parts,
/// ordered by size then lexicographically.
std::vector<Partition> partitions_up_to(int max_size, int max_length);

/// All mu contained in lam, ordered by size then lexicographically.
std::vector<Partition> subpartitions(const Partition& lam);

}  // namespace schurcore
