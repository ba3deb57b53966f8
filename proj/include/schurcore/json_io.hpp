#pragma once

#include "schurcore/cyclotomic.hpp"
#include "schurcore/partition.hpp"
#include "schurcore/polynomial.hpp"
#include "schurcore/qpoly.hpp"
#include "schurcore/quotient.hpp"
#include "schurcore/ribbon_tableau.hpp"
#include "schurcore/supertableau.hpp"
#include "schurcore/verify.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace schurcore {

using Json = nlohmann::ordered_json;

/// Integers that fit a 64-bit value serialize as numbers, larger ones as
/// decimal strings.
inline Json json_int(const Int& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

inline Json json_partition(const Partition& p) {
  Json a = Json::array();
  for (int part : p.parts()) a.push_back(part);
  return a;
}

inline Json json_shape(const SkewShape& s) {
  return Json{{"outer", json_partition(s.outer())}, {"inner", json_partition(s.inner())}};
}

inline Json json_cyclotomic(const Cyclotomic& c) {
  if (c.is_integer()) return json_int(c.integer_value());
  Json coeffs = Json::array();
  for (const Int& x : c.coefficients()) coeffs.push_back(json_int(x));
  return Json{{"order", c.order()}, {"coeffs", coeffs}};
}

/// Polynomial serialization: variable list plus [[exponents...], coefficient]
/// term entries in graded lexicographic order.
inline Json json_polynomial(const Polynomial<Int>& p, const std::vector<std::string>& vars) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json exps = Json::array();
    for (int e : m) exps.push_back(e);
    terms.push_back(Json::array({exps, json_int(c)}));
  }
  return Json{{"variables", vars}, {"ring", "integer"}, {"terms", terms}};
}

inline Json json_polynomial(const Polynomial<Cyclotomic>& p, const std::vector<std::string>& vars,
                            long order) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json exps = Json::array();
    for (int e : m) exps.push_back(e);
    Json coeff = Json::array();
    Cyclotomic promoted = c.promoted(order);
    for (const Int& x : promoted.coefficients()) coeff.push_back(json_int(x));
    terms.push_back(Json::array({exps, coeff}));
  }
  return Json{{"variables", vars},
              {"ring", Json{{"type", "cyclotomic"}, {"order", order}}},
              {"terms", terms}};
}

inline std::vector<std::string> variable_names(int n, int m) {
  std::vector<std::string> vars;
  for (int i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
  for (int j = 1; j <= m; ++j) vars.push_back("y" + std::to_string(j));
  return vars;
}

inline Json json_qpoly(const QPoly& f) {
  Json coeffs = Json::array();
  for (const Int& c : f.coefficients()) coeffs.push_back(json_int(c));
  return Json{{"variables", {"q"}}, {"coeffs", coeffs}};
}

inline Json json_supertableau(const SuperTableau& t) {
  Json rows = Json::array();
  for (int r = 1; r <= t.shape().outer().length(); ++r) {
    Json row = Json::array();
    for (const SuperEntry& e : t.row(r)) row.push_back(e.to_string());
    rows.push_back(row);
  }
  return Json{{"shape", json_shape(t.shape())}, {"rows", rows}};
}

inline Json json_ribbon_chain(const RibbonChain& c) {
  Json chain = Json::array();
  for (const Partition& p : c.chain) chain.push_back(json_partition(p));
  Json labels = Json::array();
  for (const SuperEntry& e : c.labels) labels.push_back(e.to_string());
  return Json{{"t", c.t}, {"chain", chain}, {"labels", labels}};
}

inline Json json_decomposition(const QuotientDecomposition& d) {
  Json quotient = Json::array();
  for (const Partition& p : d.quotient) quotient.push_back(json_partition(p));
  return Json{{"t", d.t},
              {"ell", d.ell},
              {"beta", d.beta.entries()},
              {"residue_counts", d.counts},
              {"core", json_partition(d.core)},
              {"quotient", quotient},
              {"sigma_sign", d.sigma_sign}};
}

inline Json json_csp_report(const CspReport& r) {
  Json values = Json::array();
  for (const auto& [d, v] : r.values_at_roots)
    values.push_back(Json{{"d", d}, {"value", json_cyclotomic(v)}});
  Json orbits = Json::array();
  for (const auto& [j, c] : r.orbit_counts)
    orbits.push_back(Json{{"j", j}, {"count", json_int(c)}});
  Json f_mod = Json::array();
  for (const Int& c : r.f_mod) f_mod.push_back(json_int(c));
  Json out{{"t", r.t},
           {"f_mod_qt_minus_1", f_mod},
           {"f_at_one", json_int(r.f_at_one)},
           {"values_at_roots", values},
           {"orbit_counts", orbits},
           {"verdict", r.csp_exists ? "csp_exists" : "criterion_fails"}};
  if (r.failing_d) out["failing_d"] = *r.failing_d;
  if (r.failing_j) out["failing_j"] = *r.failing_j;
  if (r.sign_condition) out["sign_condition"] = *r.sign_condition;
  if (r.sign_condition_all_divisors)
    out["sign_condition_all_divisors"] = *r.sign_condition_all_divisors;
  if (r.route_agreement) out["route_agreement"] = *r.route_agreement;
  return out;
}

inline Json json_factorization_verdict(const FactorizationVerdict& v) {
  Json out{{"lambda", json_partition(v.lam)},
           {"mu", json_partition(v.mu)},
           {"t", v.t},
           {"n", v.n},
           {"m", v.m},
           {"contained", v.contained},
           {"branch", v.cores_equal ? "factorization" : "vanishing"},
           {"sign", v.sign},
           {"vanishes", v.vanishes},
           {"match", v.match},
           {"passed", v.passed}};
  if (v.witness) {
    Json exps = Json::array();
    for (int e : *v.witness) exps.push_back(e);
    out["witness"] = exps;
  }
  return out;
}

}  // namespace schurcore
