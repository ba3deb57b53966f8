#include "schurcore/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace schurcore {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("Partition: negative part");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const {
  if (i < 1) throw std::invalid_argument("Partition: parts are 1-based");
  return i <= length() ? parts_[static_cast<size_t>(i - 1)] : 0;
}

bool Partition::contains(const Partition& mu) const {
  if (mu.length() > length()) return false;
  for (int i = 1; i <= mu.length(); ++i)
    if (mu.part(i) > part(i)) return false;
  return true;
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ",";
    os << parts_[i];
  }
  return os.str();
}

Partition Partition::parse(std::string_view text) {
  // strip surrounding whitespace
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  if (text.empty() || text == "0") return Partition();
  std::vector<int> parts;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string_view piece = text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (ec != std::errc() || ptr != piece.data() + piece.size() || piece.empty())
      throw std::invalid_argument("Partition: cannot parse part '" + std::string(piece) + "'");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!outer_.contains(inner_))
    throw std::invalid_argument("SkewShape: inner partition not contained in outer");
}

bool SkewShape::contains(Cell c) const {
  return c.row >= 1 && c.row <= outer_.length() && c.col > inner_.part(c.row) &&
         c.col <= outer_.part(c.row);
}

std::vector<Cell> SkewShape::cells() const {
  std::vector<Cell> out;
  for (int r = 1; r <= outer_.length(); ++r)
    for (int c = inner_.part(r) + 1; c <= outer_.part(r); ++c) out.push_back({r, c});
  return out;
}

std::string SkewShape::to_string() const {
  if (inner_.length() == 0) return outer_.to_string();
  return outer_.to_string() + "/" + inner_.to_string();
}

SkewShape SkewShape::parse(std::string_view text) {
  size_t slash = text.find('/');
  if (slash == std::string_view::npos) return SkewShape(Partition::parse(text), Partition());
  return SkewShape(Partition::parse(text.substr(0, slash)),
                   Partition::parse(text.substr(slash + 1)));
}

BetaSet::BetaSet(std::vector<int> entries) : entries_(std::move(entries)) {
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < 0) throw std::invalid_argument("BetaSet: negative entry");
    if (i > 0 && entries_[i] >= entries_[i - 1])
      throw std::invalid_argument("BetaSet: entries must be strictly decreasing");
  }
}

Partition BetaSet::to_partition() const {
  const int ell = declared_length();
  std::vector<int> parts(entries_.size());
  for (int i = 1; i <= ell; ++i) parts[static_cast<size_t>(i - 1)] = entries_[static_cast<size_t>(i - 1)] - ell + i;
  return Partition(std::move(parts));
}

BetaSet beta_set(const Partition& lam, int ell) {
  if (ell < lam.length())
    throw std::invalid_argument("beta_set: declared length below partition length");
  std::vector<int> entries(static_cast<size_t>(ell));
  for (int i = 1; i <= ell; ++i) entries[static_cast<size_t>(i - 1)] = lam.part(i) + ell - i;
  return BetaSet(std::move(entries));
}

std::vector<int> residue_counts(const BetaSet& beta, long t) {
  if (t < 1) throw std::invalid_argument("residue_counts: t must be positive");
  std::vector<int> counts(static_cast<size_t>(t), 0);
  for (int b : beta.entries()) ++counts[static_cast<size_t>(b % t)];
  return counts;
}

namespace {
void gen_partitions(int remaining, int max_part, int max_length, std::vector<int>& stack,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(stack);
    return;
  }
  if (max_length == 0) return;
  for (int p = 1; p <= std::min(remaining, max_part); ++p) {
    stack.push_back(p);
    gen_partitions(remaining - p, p, max_length - 1, stack, out);
    stack.pop_back();
  }
}
}  // namespace

std::vector<Partition> partitions_of(int n, int max_length) {
  std::vector<Partition> out;
  std::vector<int> stack;
  gen_partitions(n, n == 0 ? 1 : n, max_length, stack, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> partitions_up_to(int max_size, int max_length) {
  std::vector<Partition> out;
  for (int n = 0; n <= max_size; ++n) {
    auto batch = partitions_of(n, max_length);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

std::vector<Partition> subpartitions(const Partition& lam) {
  std::vector<Partition> out;
  std::vector<int> stack;
  auto rec = [&](auto&& self, int row) -> void {
    if (row > lam.length()) {
      out.emplace_back(stack);
      return;
    }
    int upper = std::min(lam.part(row), row == 1 ? lam.part(1) : stack[static_cast<size_t>(row - 2)]);
    for (int p = 0; p <= upper; ++p) {
      stack.push_back(p);
      self(self, row + 1);
      stack.pop_back();
    }
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace schurcore
