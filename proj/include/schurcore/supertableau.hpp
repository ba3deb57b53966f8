#pragma once

#include "schurcore/integers.hpp"
#include "schurcore/partition.hpp"
#include "schurcore/polynomial.hpp"
#include "schurcore/qpoly.hpp"

#include <functional>
#include <string>
#include <vector>

namespace schurcore {

/// Letter of the ordered alphabet 1 < ... < n < 1' < ... < m'.
struct SuperEntry {
  int value = 1;   // 1-based
  bool primed = false;

  friend bool operator==(const SuperEntry&, const SuperEntry&) = default;
  friend auto operator<=>(const SuperEntry& a, const SuperEntry& b) {
    if (a.primed != b.primed) return a.primed <=> b.primed;
    return a.value <=> b.value;
  }

  std::string to_string() const {
    return std::to_string(value) + (primed ? "'" : "");
  }
  /// "3" or "3'".
  static SuperEntry parse(std::string_view text);
};

/// Index of an entry in the alphabet of n unprimed and m primed letters,
/// 0-based; inverse of entry_at.
int entry_index(const SuperEntry& e, int n, int m);
SuperEntry entry_at(int index, int n, int m);

/// Filling of a skew shape by super entries. Semistandard means: rows and
/// columns weakly increase, unprimed entries are strict down columns, and
/// primed entries are strict along rows. With m = 0 this is the classical
/// semistandard condition.
class SuperTableau {
 public:
  SuperTableau() = default;
  SuperTableau(SkewShape shape, std::vector<std::vector<SuperEntry>> rows);

  const SkewShape& shape() const { return shape_; }
  SuperEntry at(Cell c) const;
  void set(Cell c, SuperEntry e);
  /// Row r entries (skew cells only, left to right).
  const std::vector<SuperEntry>& row(int r) const { return rows_.at(static_cast<size_t>(r - 1)); }

  bool is_semistandard(int n, int m) const;
  /// All entries distinct and rows/columns strictly increasing.
  bool is_standard() const;

  /// Exponent vector over x_1..x_n,y_1..y_m.
  Monomial weight(int n, int m) const;
  /// q-exponent of the principal letter weights: unprimed i -> i-1,
  /// primed j' -> j-1.
  long q_weight() const;

  friend bool operator==(const SuperTableau&, const SuperTableau&) = default;

  std::string to_string() const;

 private:
  SkewShape shape_;
  std::vector<std::vector<SuperEntry>> rows_;
};

/// Visit every semistandard filling in row-reading lexicographic order.
void for_each_supertableau(const SkewShape& shape, int n, int m,
                           const std::function<void(const SuperTableau&)>& visit);

std::vector<SuperTableau> enumerate_supertableaux(const SkewShape& shape, int n, int m);

Int count_supertableaux(const SkewShape& shape, int n, int m);

/// Sum of weight monomials over all fillings (arity n + m).
Polynomial<Int> supertableau_weight_sum(const SkewShape& shape, int n, int m);

/// Sum of q^(q_weight) over all fillings.
QPoly supertableau_q_weight_sum(const SkewShape& shape, int n, int m);

}  // namespace schurcore
