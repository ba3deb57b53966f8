#pragma once

#include "schurcore/cyclotomic.hpp"
#include "schurcore/integers.hpp"

#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace schurcore {

/// Exponent vector; length equals the polynomial's arity.
using Monomial = std::vector<int>;

/// Graded lexicographic order: total degree first, then lexicographic.
struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    long da = std::accumulate(a.begin(), a.end(), 0L);
    long db = std::accumulate(b.begin(), b.end(), 0L);
    if (da != db) return da < db;
    return a < b;
  }
};

/// Sparse multivariate polynomial over an exact coefficient ring R
/// (Int or Cyclotomic). The variable list is fixed by the arity at
/// construction; terms are kept in graded lexicographic order with no
/// stored zero coefficients.
template <class R>
class Polynomial {
 public:
  using TermMap = std::map<Monomial, R, GradedLexLess>;

  explicit Polynomial(int arity = 0) : arity_(arity) {}

  static Polynomial zero(int arity) { return Polynomial(arity); }

  static Polynomial constant(int arity, R value) {
    Polynomial p(arity);
    p.add_term(Monomial(static_cast<size_t>(arity), 0), std::move(value));
    return p;
  }

  /// The monomial x_index (0-based variable index).
  static Polynomial variable(int arity, int index) {
    Monomial m(static_cast<size_t>(arity), 0);
    m.at(static_cast<size_t>(index)) = 1;
    Polynomial p(arity);
    p.add_term(m, R(1));
    return p;
  }

  static Polynomial single_term(int arity, Monomial m, R c) {
    Polynomial p(arity);
    p.add_term(std::move(m), std::move(c));
    return p;
  }

  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }

  int total_degree() const {
    if (terms_.empty()) return -1;
    const Monomial& m = terms_.rbegin()->first;
    return static_cast<int>(std::accumulate(m.begin(), m.end(), 0L));
  }

  R coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? R(0) : it->second;
  }

  void add_term(Monomial m, R c) {
    if (m.size() != static_cast<size_t>(arity_))
      throw std::invalid_argument("Polynomial: exponent arity mismatch");
    if (is_zero_value(c)) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(std::move(m), std::move(c));
    } else {
      it->second += c;
      if (is_zero_value(it->second)) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_arity(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    check_arity(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }

  Polynomial operator-() const {
    Polynomial p(arity_);
    for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
    return p;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  Polynomial operator*(const Polynomial& o) const {
    check_arity(o);
    Polynomial p(arity_);
    for (const auto& [ma, ca] : terms_) {
      for (const auto& [mb, cb] : o.terms_) {
        Monomial m(static_cast<size_t>(arity_));
        for (size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
        p.add_term(std::move(m), ca * cb);
      }
    }
    return p;
  }

  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  /// Multiply by the single term c * x^m.
  Polynomial times_term(const Monomial& m, const R& c) const {
    if (m.size() != static_cast<size_t>(arity_))
      throw std::invalid_argument("Polynomial: exponent arity mismatch");
    Polynomial p(arity_);
    if (is_zero_value(c)) return p;
    for (const auto& [ma, ca] : terms_) {
      Monomial mm(static_cast<size_t>(arity_));
      for (size_t i = 0; i < mm.size(); ++i) mm[i] = ma[i] + m[i];
      p.add_term(std::move(mm), ca * c);
    }
    return p;
  }

  Polynomial times_scalar(const R& c) const {
    return times_term(Monomial(static_cast<size_t>(arity_), 0), c);
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.arity_ != b.arity_ || a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end(); ++ia, ++ib)
      if (ia->first != ib->first || !(ia->second == ib->second)) return false;
    return true;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Substitute every variable by its image; all images must share one
  /// arity, which becomes the arity of the result.
  Polynomial substitute(const std::vector<Polynomial>& images) const {
    if (images.size() != static_cast<size_t>(arity_))
      throw std::invalid_argument("substitute: image count mismatch");
    int target = arity_ == 0 ? 0 : images[0].arity();
    for (const auto& im : images)
      if (im.arity() != target) throw std::invalid_argument("substitute: mixed image arities");
    Polynomial result(target);
    for (const auto& [m, c] : terms_) {
      Polynomial term = Polynomial::constant(target, c);
      for (size_t v = 0; v < m.size(); ++v)
        for (int e = 0; e < m[v]; ++e) term = term * images[v];
      result += term;
    }
    return result;
  }

  /// Value of a constant (or zero) polynomial.
  R constant_value() const {
    if (terms_.empty()) return R(0);
    if (terms_.size() != 1 || total_degree() != 0)
      throw std::domain_error("Polynomial: not a constant");
    return terms_.begin()->second;
  }

  std::string to_string() const;
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void check_arity(const Polynomial& o) const {
    if (arity_ != o.arity_) throw std::invalid_argument("Polynomial: arity mismatch");
  }

  int arity_;
  TermMap terms_;
};

/// Apply a coefficient map, e.g. embedding Int into a cyclotomic ring.
template <class S, class R, class F>
Polynomial<S> map_coefficients(const Polynomial<R>& p, F f) {
  Polynomial<S> q(p.arity());
  for (const auto& [m, c] : p.terms()) q.add_term(m, f(c));
  return q;
}

inline Polynomial<Cyclotomic> embed_cyclotomic(const Polynomial<Int>& p, long order) {
  return map_coefficients<Cyclotomic>(
      p, [order](const Int& c) { return Cyclotomic::from_int(c, order); });
}

/// Promote every coefficient to the given cyclotomic order (for canonical
/// serialization of mixed-order results).
inline Polynomial<Cyclotomic> normalize_order(const Polynomial<Cyclotomic>& p, long order) {
  return map_coefficients<Cyclotomic>(
      p, [order](const Cyclotomic& c) { return c.promoted(order); });
}

template <class R>
bool is_zero_value(const Polynomial<R>& p) {
  return p.is_zero();
}

/// Determinant by division-free expansion along rows, memoized on the set
/// of unused columns. Exact over any commutative ring; zero entries are
/// skipped, which makes sparse matrices (e.g. twisted Jacobi-Trudi
/// matrices) cheap.
template <class T>
T determinant(const std::vector<std::vector<T>>& m, T zero, T one) {
  const int k = static_cast<int>(m.size());
  if (k == 0) return one;
  if (k > 31) throw std::invalid_argument("determinant: size too large");
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != k)
      throw std::invalid_argument("determinant: not square");

  std::unordered_map<std::uint32_t, T> memo;
  auto rec = [&](auto&& self, std::uint32_t mask) -> T {
    if (mask == 0) return one;
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    const int row = k - __builtin_popcount(mask);
    T acc = zero;
    int parity = 0;
    for (int j = 0; j < k; ++j) {
      if (!(mask & (1u << j))) continue;
      if (!is_zero_value(m[static_cast<size_t>(row)][static_cast<size_t>(j)])) {
        T sub = self(self, mask & ~(1u << j));
        T contrib = m[static_cast<size_t>(row)][static_cast<size_t>(j)] * sub;
        if (parity % 2 == 0) acc += contrib;
        else acc -= contrib;
      }
      ++parity;
    }
    return memo.emplace(mask, std::move(acc)).first->second;
  };
  return rec(rec, (k == 31) ? 0x7fffffffu : ((1u << k) - 1u));
}

template <class R>
std::string Polynomial<R>::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if constexpr (std::is_same_v<R, Int>) os << c.get_str();
    else os << c.to_string();
    for (size_t v = 0; v < m.size(); ++v) {
      if (m[v] == 0) continue;
      os << "*" << (v < names.size() ? names[v] : "v" + std::to_string(v));
      if (m[v] > 1) os << "^" << m[v];
    }
  }
  return os.str();
}

template <class R>
std::string Polynomial<R>::to_string() const {
  return to_string({});
}

}  // namespace schurcore
