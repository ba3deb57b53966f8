#include "schurcore/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace schurcore {

namespace {

// Exact division of polynomials over Z, requires the divisor to be monic
// and the division to be exact. Coefficients ascending.
std::vector<Int> divide_exact(std::vector<Int> num, const std::vector<Int>& den) {
  const size_t dd = den.size() - 1;
  if (num.size() < den.size()) throw std::logic_error("divide_exact: degree underflow");
  std::vector<Int> quot(num.size() - dd, Int(0));
  for (size_t i = num.size(); i-- > dd;) {
    Int c = num[i];
    if (sgn(c) == 0) continue;
    quot[i - dd] = c;
    for (size_t k = 0; k <= dd; ++k) num[i - dd + k] -= c * den[k];
  }
  for (const Int& c : num)
    if (sgn(c) != 0) throw std::logic_error("divide_exact: remainder nonzero");
  return quot;
}

std::vector<Int> compute_cyclotomic(long n) {
  // x^n - 1
  std::vector<Int> p(static_cast<size_t>(n) + 1, Int(0));
  p[0] = -1;
  p[static_cast<size_t>(n)] = 1;
  for (long d : divisors(n)) {
    if (d == n) continue;
    p = divide_exact(std::move(p), cyclotomic_polynomial(d));
  }
  return p;
}

}  // namespace

std::vector<Int> cyclotomic_polynomial(long order) {
  if (order < 1) throw std::invalid_argument("cyclotomic_polynomial: order must be positive");
  static std::map<long, std::vector<Int>> cache;
  static std::mutex mutex;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;
  }
  std::vector<Int> result = compute_cyclotomic(order);
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(order, std::move(result)).first->second;
}

Cyclotomic Cyclotomic::zero(long order) {
  Cyclotomic z;
  z.order_ = order;
  z.coeffs_.assign(cyclotomic_polynomial(order).size() - 1, Int(0));
  return z;
}

Cyclotomic Cyclotomic::from_int(Int value, long order) {
  Cyclotomic z = zero(order);
  z.coeffs_[0] = std::move(value);
  return z;
}

Cyclotomic Cyclotomic::root_power(long order, long power) {
  const auto& phi = cyclotomic_polynomial(order);
  const long deg = static_cast<long>(phi.size()) - 1;
  power %= order;
  if (power < 0) power += order;
  Cyclotomic z = zero(order);
  if (power < deg) {
    z.coeffs_[static_cast<size_t>(power)] = 1;
    return z;
  }
  // reduce x^power mod Phi_order by repeated shifting
  std::vector<Int> raw(static_cast<size_t>(power) + 1, Int(0));
  raw.back() = 1;
  for (size_t i = raw.size(); i-- > static_cast<size_t>(deg);) {
    Int c = raw[i];
    if (sgn(c) == 0) continue;
    raw[i] = 0;
    for (long k = 0; k < deg; ++k)
      raw[i - static_cast<size_t>(deg) + static_cast<size_t>(k)] -= c * phi[static_cast<size_t>(k)];
  }
  for (long k = 0; k < deg; ++k) z.coeffs_[static_cast<size_t>(k)] = raw[static_cast<size_t>(k)];
  return z;
}

bool Cyclotomic::is_zero() const {
  for (const Int& c : coeffs_)
    if (sgn(c) != 0) return false;
  return true;
}

bool Cyclotomic::is_integer() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) return false;
  return true;
}

Int Cyclotomic::integer_value() const {
  if (!is_integer()) throw std::domain_error("Cyclotomic: value is not a rational integer");
  return coeffs_[0];
}

Cyclotomic Cyclotomic::promoted(long order) const {
  if (order_ == order) return *this;
  if (order_ != 1) throw std::domain_error("Cyclotomic: mixed orders");
  return from_int(coeffs_[0], order);
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (order_ != o.order_) {
    if (order_ == 1) { *this = promoted(o.order_); }
    else if (o.order_ == 1) { return *this += o.promoted(order_); }
    else throw std::domain_error("Cyclotomic: mixed orders");
  }
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  if (order_ != o.order_) {
    if (order_ == 1) { *this = promoted(o.order_); }
    else if (o.order_ == 1) { return *this -= o.promoted(order_); }
    else throw std::domain_error("Cyclotomic: mixed orders");
  }
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (order_ != o.order_) {
    if (order_ == 1) { *this = promoted(o.order_); }
    else if (o.order_ == 1) { return *this *= o.promoted(order_); }
    else throw std::domain_error("Cyclotomic: mixed orders");
  }
  if (order_ == 1) {
    coeffs_[0] *= o.coeffs_[0];
    return *this;
  }
  const auto& phi = cyclotomic_polynomial(order_);
  const size_t deg = phi.size() - 1;
  std::vector<Int> raw(2 * deg - 1, Int(0));
  for (size_t i = 0; i < deg; ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (size_t j = 0; j < deg; ++j) {
      if (sgn(o.coeffs_[j]) == 0) continue;
      raw[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  for (size_t i = raw.size(); i-- > deg;) {
    Int c = raw[i];
    if (sgn(c) == 0) continue;
    raw[i] = 0;
    for (size_t k = 0; k < deg; ++k) raw[i - deg + k] -= c * phi[k];
  }
  for (size_t i = 0; i < deg; ++i) coeffs_[i] = raw[i];
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (Int& c : r.coeffs_) c = -c;
  return r;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  if (a.order_ == 1) return a.promoted(b.order_).coeffs_ == b.coeffs_;
  if (b.order_ == 1) return a.coeffs_ == b.promoted(a.order_).coeffs_;
  throw std::domain_error("Cyclotomic: mixed orders");
}

std::string Cyclotomic::to_string() const {
  if (is_integer()) return coeffs_[0].get_str();
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ",";
    os << coeffs_[i].get_str();
  }
  os << ")@" << order_;
  return os.str();
}

}  // namespace schurcore
