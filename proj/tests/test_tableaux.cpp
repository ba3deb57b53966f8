#include "schurcore/json_io.hpp"
#include "schurcore/ribbon_tableau.hpp"
#include "schurcore/schur.hpp"
#include "schurcore/supertableau.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace schurcore;

namespace {

// Independent classical SSYT counter: rows weakly increase, columns
// strictly increase, entries in 1..n. Written directly on part vectors.
long classical_ssyt_count(const SkewShape& shape, int n) {
  auto cells = shape.cells();
  std::map<Cell, int> filling;
  long count = 0;
  auto rec = [&](auto&& self, size_t idx) -> void {
    if (idx == cells.size()) {
      ++count;
      return;
    }
    Cell c = cells[idx];
    int lo = 1;
    auto left = filling.find({c.row, c.col - 1});
    if (left != filling.end()) lo = std::max(lo, left->second);
    auto up = filling.find({c.row - 1, c.col});
    if (up != filling.end()) lo = std::max(lo, up->second + 1);
    for (int v = lo; v <= n; ++v) {
      filling[c] = v;
      self(self, idx + 1);
    }
    filling.erase(c);
  };
  rec(rec, 0);
  return count;
}

SuperTableau make_tableau(const SkewShape& shape,
                          std::vector<std::vector<std::string>> entries) {
  std::vector<std::vector<SuperEntry>> rows;
  for (auto& row : entries) {
    rows.emplace_back();
    for (auto& e : row) rows.back().push_back(SuperEntry::parse(e));
  }
  return SuperTableau(shape, rows);
}

}  // namespace

TEST_CASE("supertableau enumeration matches the displayed example") {
  SkewShape shape(Partition{2, 2}, Partition{1});
  auto tabs = enumerate_supertableaux(shape, 2, 1);
  CHECK(tabs.size() == 8);
  for (const auto& t : tabs) CHECK(t.is_semistandard(2, 1));

  Polynomial<Int> expected(3);
  expected.add_term({2, 1, 0}, 1);
  expected.add_term({1, 2, 0}, 1);
  expected.add_term({2, 0, 1}, 1);
  expected.add_term({1, 1, 1}, 2);
  expected.add_term({0, 2, 1}, 1);
  expected.add_term({1, 0, 2}, 1);
  expected.add_term({0, 1, 2}, 1);
  CHECK(supertableau_weight_sum(shape, 2, 1) == expected);

  // enumeration order is deterministic and starts with the all-unprimed
  // smallest filling
  CHECK(tabs.front().at({1, 2}) == SuperEntry{1, false});
}

TEST_CASE("degenerate shapes") {
  CHECK(enumerate_supertableaux(SkewShape(Partition{2, 2}, Partition{2, 2}), 3, 2).size() == 1);
  CHECK(count_supertableaux(SkewShape(Partition{2, 2}, Partition()), 4, 0) == 20);
  // no filling when the shape leaves the hook
  CHECK(count_supertableaux(SkewShape(Partition{1, 1}, Partition()), 1, 0) == 0);
}

TEST_CASE("weights") {
  SkewShape shape(Partition{2, 2}, Partition{1});
  auto t = make_tableau(shape, {{"1"}, {"1", "2"}});
  CHECK(t.weight(2, 1) == Monomial{2, 1, 0});
  CHECK(t.q_weight() == 1);

  auto empty = make_tableau(SkewShape(Partition{1}, Partition{1}), {{}});
  CHECK(empty.weight(2, 1) == Monomial{0, 0, 0});

  auto primed = make_tableau(SkewShape(Partition{1}, Partition()), {{"1'"}});
  CHECK(primed.weight(1, 1) == Monomial{0, 1});
}

TEST_CASE("semistandard validation rejects mutations") {
  SkewShape shape(Partition{2, 2}, Partition());
  // valid: 1 2 / 2 1' -- rows weak, unprimed strict down columns
  CHECK(make_tableau(shape, {{"1", "2"}, {"2", "1'"}}).is_semistandard(2, 1));
  // equal unprimed entries in a column
  CHECK_FALSE(make_tableau(shape, {{"1", "2"}, {"1", "2"}}).is_semistandard(2, 1));
  // decreasing row
  CHECK_FALSE(make_tableau(shape, {{"2", "1"}, {"2", "2"}}).is_semistandard(2, 1));
  // equal primed entries in a row
  CHECK_FALSE(make_tableau(shape, {{"1", "2"}, {"1'", "1'"}}).is_semistandard(2, 1));
  // equal primed entries in a column are fine
  CHECK(make_tableau(shape, {{"1", "1'"}, {"2", "1'"}}).is_semistandard(2, 1));
  // entry outside the alphabet
  CHECK_FALSE(make_tableau(shape, {{"1", "3"}, {"2", "3"}}).is_semistandard(2, 1));
}

TEST_CASE("classical SSYT restriction") {
  for (const Partition& lam : partitions_up_to(6, 3))
    for (const Partition& mu : subpartitions(lam))
      for (int n = 1; n <= 3; ++n) {
        SkewShape shape(lam, mu);
        CHECK(count_supertableaux(shape, n, 0) == classical_ssyt_count(shape, n));
      }
}

TEST_CASE("ribbon positions") {
  CHECK(ribbon_position(BorderStrip({{3, 5}})) == 2);
  CHECK(ribbon_position(BorderStrip({{1, 1}, {1, 2}, {1, 3}})) == 2);
  CHECK(ribbon_position(BorderStrip({{1, 3}, {1, 4}, {2, 2}, {2, 3}, {3, 2}, {4, 2}})) == 3);
}

TEST_CASE("ribbon chain enumeration") {
  // (2,2) with one unprimed letter: only the two-vertical-domino chain
  auto chains = enumerate_ribbon_chains(SkewShape(Partition{2, 2}, Partition()), 2, 1, 0);
  REQUIRE(chains.size() == 1);
  CHECK(chains[0].chain == std::vector<Partition>{Partition(), Partition{1, 1}, Partition{2, 2}});
  CHECK(chains[0].strips[0].position() == 0);
  CHECK(chains[0].strips[1].position() == 1);
  CHECK(is_valid_chain(chains[0]));

  // size not divisible by t
  CHECK(count_ribbon_chains(SkewShape(Partition{1}, Partition()), 2, 2, 0) == 0);
  // equal cores but no tiling
  CHECK(count_ribbon_chains(SkewShape(Partition{3, 1}, Partition{2}), 2, 2, 0) == 0);
  // different cores
  CHECK(count_ribbon_chains(SkewShape(Partition{2, 2}, Partition()), 4, 4, 0) == 0);

  // 1-ribbon chains are exactly the supertableaux
  for (const Partition& lam : partitions_up_to(5, 3))
    for (const Partition& mu : subpartitions(lam))
      for (int n = 0; n <= 2; ++n)
        for (int m = 0; n + m <= 3; ++m)
          CHECK(count_ribbon_chains(SkewShape(lam, mu), 1, n, m) ==
                count_supertableaux(SkewShape(lam, mu), n, m));
}

TEST_CASE("the displayed 4-ribbon tableau shape admits the displayed labels") {
  SkewShape shape(Partition{6, 5, 5, 5, 5}, Partition{2, 2, 1, 1});
  REQUIRE(shape.size() == 20);
  bool found = false;
  for_each_ribbon_chain(shape, 4, 4, 0, [&](const RibbonChain& c) {
    if (c.weight(4, 0) == Monomial{1, 2, 0, 2}) found = true;
  });
  CHECK(found);
}

TEST_CASE("standardization relabels by position") {
  // chain with two equal unprimed labels at increasing positions
  SkewShape shape(Partition{2, 2}, Partition());
  auto chains = enumerate_ribbon_chains(shape, 2, 1, 0);
  REQUIRE(chains.size() == 1);
  RibbonChain standard = standardize(chains[0]);
  CHECK(standard.is_standard());
  CHECK(standard.labels == std::vector<SuperEntry>{{1, false}, {2, false}});
  CHECK(is_valid_chain(standard));
  // idempotent up to renumbering
  CHECK(standardize(standard) == standard);
}

TEST_CASE("quotient bijection on the displayed 3-ribbon example") {
  // shape reconstructed from the displayed quotient triple at t = 3, n = 2
  Partition lam{7, 5, 5, 5, 4, 3};
  Partition mu{3, 2};
  QuotientPair pair = quotient_pair(lam, mu, 3, 2);
  CHECK(pair.lam.counts == std::vector<int>{3, 1, 2});
  CHECK(pair.lam.core == Partition{1, 1});
  CHECK(pair.lam.quotient == std::vector<Partition>{{2, 2, 1}, {2}, {1, 1}});
  CHECK(pair.mu.quotient == std::vector<Partition>{{}, {}, {1}});

  // the displayed semistandard triple
  std::vector<SuperTableau> triple{
      make_tableau(SkewShape(Partition{2, 2, 1}, Partition()),
                   {{"1", "3'"}, {"2", "3'"}, {"3"}}),
      make_tableau(SkewShape(Partition{2}, Partition()), {{"1'", "2'"}}),
      make_tableau(SkewShape(Partition{1, 1}, Partition{1}), {{}, {"3"}})};

  RibbonChain chain = semistandard_quotient_inverse(triple, pair);
  CHECK(is_valid_chain(chain));
  CHECK(chain.strips.size() == 8);
  CHECK(chain.shape.outer() == lam);
  CHECK(chain.shape.inner() == mu);

  // weight preservation: labels 1,2,3,3 / 1',2',3',3'
  CHECK(chain.weight(3, 3) == Monomial{1, 1, 2, 1, 1, 2});

  auto forward = semistandard_quotient_map(chain, pair);
  CHECK(forward == triple);

  // the standardization maps onto the displayed standard triple
  RibbonChain standard = standardize(chain);
  CHECK(standard.is_standard());
  auto standard_tuple = quotient_bijection_forward(standard, pair);
  std::vector<SuperTableau> expected{
      make_tableau(SkewShape(Partition{2, 2, 1}, Partition()),
                   {{"1", "3'"}, {"2", "4'"}, {"3"}}),
      make_tableau(SkewShape(Partition{2}, Partition()), {{"1'", "2'"}}),
      make_tableau(SkewShape(Partition{1, 1}, Partition{1}), {{}, {"4"}})};
  CHECK(standard_tuple == expected);

  // and back
  CHECK(quotient_bijection_inverse(standard_tuple, pair) == standard);
}

TEST_CASE("bijection round trips on a sweep") {
  for (long t = 2; t <= 3; ++t)
    for (const Partition& lam : partitions_up_to(6, 4)) {
      const int n_blocks = std::max(1, (lam.length() + static_cast<int>(t) - 1) /
                                           static_cast<int>(t));
      for (const Partition& mu : subpartitions(lam)) {
        if ((lam.size() - mu.size()) % t != 0) continue;
        const int ell = static_cast<int>(t) * n_blocks;
        if (residue_counts(beta_set(lam, ell), t) != residue_counts(beta_set(mu, ell), t))
          continue;
        QuotientPair pair = quotient_pair(lam, mu, t, n_blocks);
        SkewShape shape(lam, mu);
        const int k = shape.size() / static_cast<int>(t);

        // standard chains over an alphabet of exactly k unprimed letters
        long standard_count = 0;
        for_each_ribbon_chain(shape, t, k, 0, [&](const RibbonChain& c) {
          if (!c.is_standard()) return;
          ++standard_count;
          auto tuple = quotient_bijection_forward(c, pair);
          std::set<SuperEntry> entries;
          for (size_t i = 0; i < tuple.size(); ++i) {
            CHECK(tuple[i].is_standard());
            for (Cell cell : tuple[i].shape().cells())
              CHECK(entries.insert(tuple[i].at(cell)).second);  // disjointness
          }
          CHECK(quotient_bijection_inverse(tuple, pair) == c);
        });
        // standard chains exist exactly when the quotient skew shapes do
        bool quotient_contained = true;
        for (long i = 0; i < t; ++i)
          if (!pair.lam.quotient[static_cast<size_t>(i)].contains(
                  pair.mu.quotient[static_cast<size_t>(i)]))
            quotient_contained = false;
        CHECK((standard_count > 0) == quotient_contained);

        // semistandard chains over small alphabets
        for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 0}, {2, 1}}) {
          Int chains = 0;
          for_each_ribbon_chain(shape, t, n, m, [&](const RibbonChain& c) {
            ++chains;
            auto tuple = semistandard_quotient_map(c, pair);
            Monomial product(static_cast<size_t>(n + m), 0);
            for (size_t i = 0; i < tuple.size(); ++i) {
              CHECK(tuple[i].is_semistandard(n, m));
              Monomial w = tuple[i].weight(n, m);
              for (size_t v = 0; v < w.size(); ++v) product[v] += w[v];
            }
            CHECK(product == c.weight(n, m));
            CHECK(semistandard_quotient_inverse(tuple, pair) == c);
            // standardization is valid, standard, and idempotent
            RibbonChain st = standardize(c);
            CHECK(st.is_standard());
            CHECK(is_valid_chain(st));
            CHECK(standardize(st) == st);
          });
          // cardinality agreement with the quotient product
          Int product_count = 1;
          for (long i = 0; i < t; ++i) {
            const Partition& qo = pair.lam.quotient[static_cast<size_t>(i)];
            const Partition& qi = pair.mu.quotient[static_cast<size_t>(i)];
            if (!qo.contains(qi)) {
              product_count = 0;
              break;
            }
            product_count *= count_supertableaux(SkewShape(qo, qi), n, m);
          }
          CHECK(chains == product_count);
        }
      }
    }
}

TEST_CASE("tuple-side inverse covers every tuple") {
  // enumerate semistandard tuples directly and pull them back
  Partition lam{4, 2};
  Partition mu;
  QuotientPair pair = quotient_pair(lam, mu, 2, 2);
  const int n = 2, m = 1;
  std::vector<std::vector<SuperTableau>> components;
  for (long i = 0; i < 2; ++i)
    components.push_back(enumerate_supertableaux(
        SkewShape(pair.lam.quotient[static_cast<size_t>(i)],
                  pair.mu.quotient[static_cast<size_t>(i)]),
        n, m));
  long tuples = 0;
  for (const auto& t0 : components[0])
    for (const auto& t1 : components[1]) {
      std::vector<SuperTableau> tuple{t0, t1};
      RibbonChain chain = semistandard_quotient_inverse(tuple, pair);
      CHECK(is_valid_chain(chain));
      CHECK(semistandard_quotient_map(chain, pair) == tuple);
      ++tuples;
    }
  CHECK(Int(tuples) == count_ribbon_chains(SkewShape(lam, mu), 2, n, m));
}

TEST_CASE("serialization formats") {
  SkewShape shape(Partition{2, 2}, Partition{1});
  auto t = make_tableau(shape, {{"2"}, {"1", "1'"}});
  CHECK(json_supertableau(t).dump() ==
        R"({"shape":{"outer":[2,2],"inner":[1]},"rows":[["2"],["1","1'"]]})");

  // four chains: labels (1,1) vertical, (1,1') both orders, (1',1') horizontal
  auto chains = enumerate_ribbon_chains(SkewShape(Partition{2, 2}, Partition()), 2, 1, 1);
  REQUIRE(chains.size() == 4);
  CHECK(json_ribbon_chain(chains.front()).dump() ==
        R"({"t":2,"chain":[[],[2],[2,2]],"labels":["1","1'"]})");

  CHECK(json_qpoly(principal_specialization(SkewShape(Partition{2, 2}, Partition()), 2, 1, 0))
            .dump() == R"({"variables":["q"],"coeffs":[0,0,1]})");

  Polynomial<Cyclotomic> p(1);
  p.add_term({2}, Cyclotomic::root_power(4, 1));
  p.add_term({0}, Cyclotomic(3));
  CHECK(json_polynomial(p, {"x1"}, 4).dump() ==
        R"({"variables":["x1"],"ring":{"type":"cyclotomic","order":4},)"
        R"("terms":[[[0],[3,0]],[[2],[0,1]]]})");
}

TEST_CASE("bijection input validation") {
  QuotientPair pair = quotient_pair(Partition{2, 2}, Partition(), 2, 1);
  // non-disjoint entries rejected in the standard inverse
  std::vector<SuperTableau> clash{
      make_tableau(SkewShape(Partition{1}, Partition()), {{"1"}}),
      make_tableau(SkewShape(Partition{1}, Partition()), {{"1"}})};
  CHECK_THROWS_AS(quotient_bijection_inverse(clash, pair), std::domain_error);
  // shape mismatch rejected
  std::vector<SuperTableau> wrong{
      make_tableau(SkewShape(Partition{2}, Partition()), {{"1", "2"}}),
      make_tableau(SkewShape(Partition{1}, Partition()), {{"2"}})};
  CHECK_THROWS_AS(quotient_bijection_inverse(wrong, pair), std::domain_error);
  // cores must match
  CHECK_THROWS_AS(quotient_pair(Partition{1}, Partition(), 2, 1), std::domain_error);
}
