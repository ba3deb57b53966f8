#include "schurcore/qpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace schurcore {

namespace {
void normalize(std::vector<Int>& c) {
  while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
}
}  // namespace

QPoly::QPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { normalize(coeffs_); }

QPoly QPoly::from_polynomial(const Polynomial<Int>& p) {
  if (p.arity() != 1) throw std::invalid_argument("QPoly: arity must be 1");
  std::vector<Int> c;
  for (const auto& [m, v] : p.terms()) {
    if (m[0] >= static_cast<int>(c.size())) c.resize(static_cast<size_t>(m[0]) + 1, Int(0));
    c[static_cast<size_t>(m[0])] = v;
  }
  return QPoly(std::move(c));
}

Int QPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<size_t>(i)];
}

Int QPoly::at_one() const {
  Int s = 0;
  for (const Int& c : coeffs_) s += c;
  return s;
}

bool QPoly::has_nonnegative_coefficients() const {
  for (const Int& c : coeffs_)
    if (sgn(c) < 0) return false;
  return true;
}

std::vector<Int> QPoly::reduce_mod_qt_minus_1(long t) const {
  if (t < 1) throw std::invalid_argument("reduce_mod_qt_minus_1: t must be positive");
  std::vector<Int> b(static_cast<size_t>(t), Int(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) b[i % static_cast<size_t>(t)] += coeffs_[i];
  return b;
}

QPoly QPoly::operator+(const QPoly& o) const {
  std::vector<Int> c(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
  return QPoly(std::move(c));
}

QPoly QPoly::operator*(const QPoly& o) const {
  if (coeffs_.empty() || o.coeffs_.empty()) return QPoly();
  std::vector<Int> c(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return QPoly(std::move(c));
}

std::string QPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << coeffs_[i].get_str();
    if (i == 1) os << "*q";
    else if (i > 1) os << "*q^" << i;
  }
  return os.str();
}

Cyclotomic evaluate_at_root(const QPoly& f, long t, long d) {
  if (t < 1 || d < 1 || t % d != 0)
    throw std::invalid_argument("evaluate_at_root: d must divide t");
  const long e = t / d;
  std::vector<Int> b = f.reduce_mod_qt_minus_1(t);
  std::vector<Int> folded(static_cast<size_t>(e), Int(0));
  for (long i = 0; i < t; ++i) folded[static_cast<size_t>(i % e)] += b[static_cast<size_t>(i)];
  Cyclotomic value = Cyclotomic::zero(e);
  for (long r = 0; r < e; ++r) {
    if (sgn(folded[static_cast<size_t>(r)]) == 0) continue;
    value += Cyclotomic::root_power(e, r) * Cyclotomic(folded[static_cast<size_t>(r)]);
  }
  return value;
}

}  // namespace schurcore
