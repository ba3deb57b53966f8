#include "schurcore/supertableau.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace schurcore {

SuperEntry SuperEntry::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("SuperEntry: empty");
  bool primed = text.back() == '\'';
  if (primed) text.remove_suffix(1);
  int value = 0;
  for (char ch : text) {
    if (ch < '0' || ch > '9') throw std::invalid_argument("SuperEntry: bad digit");
    value = value * 10 + (ch - '0');
  }
  if (value < 1) throw std::invalid_argument("SuperEntry: value must be positive");
  return {value, primed};
}

int entry_index(const SuperEntry& e, int n, int m) {
  if (e.value < 1 || e.value > (e.primed ? m : n))
    throw std::invalid_argument("entry_index: entry outside alphabet");
  return e.primed ? n + e.value - 1 : e.value - 1;
}

SuperEntry entry_at(int index, int n, int m) {
  if (index < 0 || index >= n + m) throw std::invalid_argument("entry_at: index outside alphabet");
  if (index < n) return {index + 1, false};
  return {index - n + 1, true};
}

SuperTableau::SuperTableau(SkewShape shape, std::vector<std::vector<SuperEntry>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != shape_.outer().length())
    throw std::invalid_argument("SuperTableau: row count mismatch");
  for (int r = 1; r <= shape_.outer().length(); ++r) {
    size_t expected = static_cast<size_t>(shape_.outer().part(r) - shape_.inner().part(r));
    if (rows_[static_cast<size_t>(r - 1)].size() != expected)
      throw std::invalid_argument("SuperTableau: row length mismatch");
  }
}

SuperEntry SuperTableau::at(Cell c) const {
  if (!shape_.contains(c)) throw std::invalid_argument("SuperTableau: cell outside shape");
  return rows_[static_cast<size_t>(c.row - 1)][static_cast<size_t>(c.col - shape_.inner().part(c.row) - 1)];
}

void SuperTableau::set(Cell c, SuperEntry e) {
  if (!shape_.contains(c)) throw std::invalid_argument("SuperTableau: cell outside shape");
  rows_[static_cast<size_t>(c.row - 1)][static_cast<size_t>(c.col - shape_.inner().part(c.row) - 1)] = e;
}

bool SuperTableau::is_semistandard(int n, int m) const {
  for (Cell c : shape_.cells()) {
    SuperEntry e = at(c);
    if (e.value < 1 || e.value > (e.primed ? m : n)) return false;
    Cell left{c.row, c.col - 1};
    if (shape_.contains(left)) {
      SuperEntry l = at(left);
      if (e < l) return false;
      if (e == l && e.primed) return false;  // primed strict along rows
    }
    Cell up{c.row - 1, c.col};
    if (shape_.contains(up)) {
      SuperEntry u = at(up);
      if (e < u) return false;
      if (e == u && !e.primed) return false;  // unprimed strict down columns
    }
  }
  return true;
}

bool SuperTableau::is_standard() const {
  std::vector<SuperEntry> seen;
  for (Cell c : shape_.cells()) {
    SuperEntry e = at(c);
    if (std::find(seen.begin(), seen.end(), e) != seen.end()) return false;
    seen.push_back(e);
    Cell left{c.row, c.col - 1};
    if (shape_.contains(left) && !(at(left) < e)) return false;
    Cell up{c.row - 1, c.col};
    if (shape_.contains(up) && !(at(up) < e)) return false;
  }
  return true;
}

Monomial SuperTableau::weight(int n, int m) const {
  Monomial w(static_cast<size_t>(n + m), 0);
  for (Cell c : shape_.cells()) ++w[static_cast<size_t>(entry_index(at(c), n, m))];
  return w;
}

long SuperTableau::q_weight() const {
  long total = 0;
  for (Cell c : shape_.cells()) total += at(c).value - 1;
  return total;
}

std::string SuperTableau::to_string() const {
  std::ostringstream os;
  for (int r = 1; r <= shape_.outer().length(); ++r) {
    if (r > 1) os << " / ";
    for (int i = 0; i < shape_.inner().part(r); ++i) os << ". ";
    const auto& row = rows_[static_cast<size_t>(r - 1)];
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) os << " ";
      os << row[i].to_string();
    }
  }
  return os.str();
}

void for_each_supertableau(const SkewShape& shape, int n, int m,
                           const std::function<void(const SuperTableau&)>& visit) {
  std::vector<Cell> cells = shape.cells();
  std::vector<std::vector<SuperEntry>> rows(static_cast<size_t>(shape.outer().length()));
  for (int r = 1; r <= shape.outer().length(); ++r)
    rows[static_cast<size_t>(r - 1)].resize(
        static_cast<size_t>(shape.outer().part(r) - shape.inner().part(r)));
  SuperTableau tab(shape, rows);

  auto rec = [&](auto&& self, size_t idx) -> void {
    if (idx == cells.size()) {
      visit(tab);
      return;
    }
    Cell c = cells[idx];
    int lo = 0;
    Cell left{c.row, c.col - 1};
    if (shape.contains(left)) {
      SuperEntry l = tab.at(left);
      lo = std::max(lo, entry_index(l, n, m) + (l.primed ? 1 : 0));
    }
    Cell up{c.row - 1, c.col};
    if (shape.contains(up)) {
      SuperEntry u = tab.at(up);
      lo = std::max(lo, entry_index(u, n, m) + (u.primed ? 0 : 1));
    }
    for (int k = lo; k < n + m; ++k) {
      tab.set(c, entry_at(k, n, m));
      self(self, idx + 1);
    }
  };
  rec(rec, 0);
}

std::vector<SuperTableau> enumerate_supertableaux(const SkewShape& shape, int n, int m) {
  std::vector<SuperTableau> out;
  for_each_supertableau(shape, n, m, [&](const SuperTableau& t) { out.push_back(t); });
  return out;
}

Int count_supertableaux(const SkewShape& shape, int n, int m) {
  Int count = 0;
  for_each_supertableau(shape, n, m, [&](const SuperTableau&) { ++count; });
  return count;
}

Polynomial<Int> supertableau_weight_sum(const SkewShape& shape, int n, int m) {
  Polynomial<Int> sum(n + m);
  for_each_supertableau(shape, n, m,
                        [&](const SuperTableau& t) { sum.add_term(t.weight(n, m), 1); });
  return sum;
}

QPoly supertableau_q_weight_sum(const SkewShape& shape, int n, int m) {
  std::vector<Int> coeffs;
  for_each_supertableau(shape, n, m, [&](const SuperTableau& t) {
    size_t w = static_cast<size_t>(t.q_weight());
    if (w >= coeffs.size()) coeffs.resize(w + 1, Int(0));
    ++coeffs[w];
  });
  return QPoly(std::move(coeffs));
}

}  // namespace schurcore
