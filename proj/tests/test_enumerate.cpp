#include <gtest/gtest.h>

#include "core/catalog.hpp"
#include "core/enumerate.hpp"
#include "core/error.hpp"
#include "core/isoclinism.hpp"
#include "core/words.hpp"
#include "support.hpp"

using namespace sbrace;

namespace {

std::set<std::vector<Elem>> canonical_set(const std::vector<EnumeratedBrace>& bs) {
  std::set<std::vector<Elem>> out;
  for (auto& e : bs) out.insert(oracle::canonical_form(e.brace.order(), e.brace.dot().table(), e.brace.circ().table()));
  return out;
}

}  // namespace

TEST(Enumerate, SmallCounts) {
  std::vector<std::size_t> expect{1, 1, 1, 4, 1, 6, 1, 47};
  for (std::size_t n = 1; n <= 8; ++n) EXPECT_EQ(enumerate_all(n, false).size(), expect[n - 1]) << n;
  auto z2 = enumerate_over_group(cyclic_group(2));
  ASSERT_EQ(z2.size(), 1u);
  EXPECT_EQ(z2[0].brace.circ().table(), cyclic_group(2).table());
}

TEST(Enumerate, MatchesExhaustiveSearch) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (auto& g : groups_of_order(n)) {
      auto found = enumerate_over_group(g.group);
      auto got = canonical_set(found);
      EXPECT_EQ(got.size(), found.size()) << g.tag;
      EXPECT_EQ(got, oracle::exhaustive_braces(n, g.group.table())) << g.tag;
    }
  // order 8 groups with small automorphism groups are still within reach
  for (auto& g : groups_of_order(8)) {
    if (automorphisms(g.group).size() > 8) continue;
    auto found = enumerate_over_group(g.group);
    EXPECT_EQ(canonical_set(found), oracle::exhaustive_braces(8, g.group.table())) << g.tag;
  }
}

TEST(Enumerate, OrbitCountingAndDedup) {
  for (std::size_t n = 2; n <= 8; ++n)
    for (auto& g : groups_of_order(n)) {
      EnumerationStats st;
      auto found = enumerate_over_group(g.group, &st);
      std::uint64_t aut = automorphisms(g.group).size(), weighted = 0;
      for (auto& e : found) {
        EXPECT_EQ(e.automorphisms, brace_automorphisms(e.brace).size());
        if (n <= 6) EXPECT_EQ(e.automorphisms, oracle::count_brace_isomorphisms(e.brace, e.brace));
        ASSERT_EQ(aut % e.automorphisms, 0u);
        weighted += aut / e.automorphisms;
        EXPECT_EQ(e.brace.dot().table(), g.group.table());
      }
      auto maps = all_lambda_maps(g.group);
      std::set<std::vector<Elem>> distinct(maps.begin(), maps.end());
      EXPECT_EQ(distinct.size(), maps.size());
      EXPECT_EQ(maps.size(), weighted) << g.tag;
      EXPECT_EQ(st.raw_total, weighted) << g.tag;
      for (std::size_t i = 0; i < found.size(); ++i)
        for (std::size_t j = i + 1; j < found.size(); ++j)
          EXPECT_FALSE(brace_isomorphism(found[i].brace, found[j].brace)) << g.tag;
    }
}

TEST(Enumerate, EveryBraceValidates) {
  for (auto* pa : oracle::braces_upto(12)) {
    auto d = pa->dot().table(), c = pa->circ().table();
    EXPECT_NO_THROW(SkewBrace::from_tables(pa->order(), d, c));
  }
}

TEST(Enumerate, CensusSummaries) {
  for (std::size_t n = 1; n <= 12; ++n) {
    auto r = census(n, {});
    auto& s = r.summary;
    EXPECT_EQ(s.order, n);
    EXPECT_EQ(s.total, r.rows.size());
    EXPECT_EQ(s.total, s.symmetric + s.non_symmetric);
    EXPECT_EQ(s.total, s.in_I2 + s.not_in_I2);
    EXPECT_EQ(s.not_in_I2, 0u);
    std::size_t sym = 0;
    for (auto& row : r.rows) {
      sym += is_symmetric(row.brace);
      EXPECT_EQ(row.symmetric, is_symmetric(row.brace));
      EXPECT_EQ(row.additive, identify_group(row.brace.dot()));
      EXPECT_EQ(row.multiplicative, identify_group(row.brace.circ()));
      EXPECT_EQ(row.ann_size, annihilator(row.brace).size());
    }
    EXPECT_EQ(sym, s.symmetric);
  }
  auto one = census(1, {});
  EXPECT_EQ(one.summary.total, 1u);
  EXPECT_EQ(one.summary.symmetric, 1u);
  auto a = census(8, {}), b = census(8, {false, 4});
  ASSERT_EQ(a.rows.size(), b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) EXPECT_EQ(a.rows[i].brace.circ().table(), b.rows[i].brace.circ().table());
}

TEST(Enumerate, OrderSixteenIsGated) {
  try {
    census(16, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
  }
  EXPECT_THROW(enumerate_all(17, true), Error);
}

TEST(Enumerate, OrderSixteenCensus) {
  auto r = census(16, {true, 4});
  EXPECT_EQ(r.summary.total, 1605u);
  EXPECT_EQ(r.summary.symmetric, 1086u);
  EXPECT_EQ(r.summary.non_symmetric, 519u);
  EXPECT_EQ(r.summary.in_I2, 1557u);
  EXPECT_EQ(r.summary.not_in_I2, 48u);
  for (auto& row : r.rows)
    if (!row.in_I2) EXPECT_TRUE(row.i2_witness);
}

TEST(Enumerate, LambdaMapOracle) {
  for (std::size_t n : {8, 9, 10})
    for (auto& g : groups_of_order(n)) {
      auto t = g.group.table();
      auto maps = oracle::lambda_maps(n, t);
      auto core = all_lambda_maps(g.group);
      EXPECT_EQ(maps, std::set<std::vector<Elem>>(core.begin(), core.end())) << g.tag;
      EXPECT_EQ(oracle::lambda_orbits(n, t, maps), enumerate_over_group(g.group).size()) << g.tag;
    }
}
