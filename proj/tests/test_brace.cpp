#include <gtest/gtest.h>

#include <cstdio>

#include "core/abelian.hpp"
#include "core/brace.hpp"
#include "core/catalog.hpp"
#include "core/error.hpp"
#include "core/series.hpp"
#include "support.hpp"

using namespace sbrace;

namespace {

GroupTable s3() { return GroupTable::from_table(6, oracle::s3_table()); }

// (A, o, .) is a skew brace: x.(y o z) = (x.y) o xbar o (x.z)
bool symmetric_oracle(const SkewBrace& a) {
  oracle::Brace b{a};
  std::size_t n = a.order();
  for (Elem x = 0; x < n; ++x) {
    Elem xb = b.cinv(x);
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (b.dot(x, b.circ(y, z)) != b.circ(b.circ(b.dot(x, y), xb), b.dot(x, z))) return false;
  }
  return true;
}

bool axiom_oracle(std::size_t n, const std::vector<Elem>& dot, const std::vector<Elem>& circ) {
  std::vector<Elem> dinv(n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (dot[x * n + y] == 0) dinv[x] = y;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (circ[a * n + dot[b * n + c]] != dot[dot[circ[a * n + b] * n + dinv[a]] * n + circ[a * n + c]]) return false;
  return true;
}

}  // namespace

TEST(SkewBrace, ValidExamples) {
  auto z4 = oracle::cyclic_table(4);
  auto t = SkewBrace::from_tables(4, z4, z4);
  EXPECT_EQ(t.order(), 4u);
  auto s = oracle::s3_table();
  std::vector<Elem> op(36);
  for (Elem a = 0; a < 6; ++a)
    for (Elem b = 0; b < 6; ++b) op[a * 6 + b] = s[b * 6 + a];
  auto at = SkewBrace::from_tables(6, s, op);
  oracle::Brace b{at};
  for (Elem x = 0; x < 6; ++x)
    for (Elem y = 0; y < 6; ++y) EXPECT_EQ(at.lambda(x, y), b.dot(b.dot(b.dinv(x), y), x));  // x^-1 y x
}

TEST(SkewBrace, AxiomFailureMatchesOracle) {
  // every relabelling of Z/4 and Z/2 x Z/2 as circle group over either additive group
  std::vector<std::int64_t> f{2, 2};
  std::vector<std::vector<Elem>> tables{oracle::cyclic_table(4), abelian_group(f).table()};
  std::size_t rejected = 0, accepted = 0;
  for (auto& dot : tables)
    for (auto& base : tables)
      oracle::for_each_perm(4, [&](const std::vector<Elem>& p) {
        std::vector<Elem> circ(16);
        for (Elem x = 0; x < 4; ++x)
          for (Elem y = 0; y < 4; ++y) circ[p[x] * 4 + p[y]] = p[base[x * 4 + y]];
        bool ok = axiom_oracle(4, dot, circ);
        try {
          SkewBrace::from_tables(4, dot, circ);
          EXPECT_TRUE(ok);
          ++accepted;
        } catch (const Error& e) {
          EXPECT_FALSE(ok);
          EXPECT_EQ(e.code(), ErrorCode::BraceAxiomFails);
          // the reported triple really fails
          unsigned a = 0, b = 0, c = 0;
          ASSERT_EQ(std::sscanf(e.what(), "brace axiom fails at a=%u b=%u c=%u", &a, &b, &c), 3);
          Elem ainv = 0;
          while (dot[a * 4 + ainv] != 0) ++ainv;
          EXPECT_NE(circ[a * 4 + dot[b * 4 + c]], dot[dot[circ[a * 4 + b] * 4 + ainv] * 4 + circ[a * 4 + c]]);
          ++rejected;
        }
      });
  EXPECT_GT(rejected, 0u);
  EXPECT_GT(accepted, 0u);
}

TEST(SkewBrace, LambdaStarCommutators) {
  auto tb = trivial_brace(dihedral_group(4));
  for (Elem x = 0; x < 8; ++x)
    for (Elem y = 0; y < 8; ++y) {
      EXPECT_EQ(tb.star(x, y), 0u);
      EXPECT_EQ(tb.lambda(x, y), y);
    }
  auto at = almost_trivial_brace(s3());
  oracle::Brace b{at};
  for (Elem x = 0; x < 6; ++x) {
    EXPECT_EQ(at.comm_dot(x, x), 0u);
    for (Elem y = 0; y < 6; ++y)
      EXPECT_EQ(at.star(x, y), b.dot(b.dot(b.dinv(x), y), b.dot(x, b.dinv(y))));
  }
}

TEST(SkewBrace, StructuralIdentitiesOnCensus) {
  for (auto* pa : oracle::braces_upto(8)) {
    auto& a = *pa;
    oracle::Brace b{a};
    std::size_t n = a.order();
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) {
        EXPECT_EQ(a.cmul(x, y), a.mul(x, a.lambda(x, y)));
        for (Elem z = 0; z < n; ++z) {
          EXPECT_EQ(a.lambda(a.cmul(x, y), z), a.lambda(x, a.lambda(y, z)));
          EXPECT_EQ(a.comm_dot(a.mul(x, y), z),
                    a.mul(a.mul(a.comm_dot(x, a.comm_dot(y, z)), a.comm_dot(y, z)), a.comm_dot(x, z)));
        }
      }
    bool sym = is_symmetric(a);
    EXPECT_EQ(sym, symmetric_oracle(a));
    if (sym)
      for (Elem x = 0; x < n; ++x)
        for (Elem z = 0; z < n; ++z) {
          EXPECT_EQ(a.lambda(a.dinv(x), z), a.lambda(a.cinv(x), z));
          EXPECT_EQ(a.lambda(x, a.lambda(a.cinv(x), z)), z);
        }
    (void)b;
  }
}

TEST(SkewBrace, Constructors) {
  auto t2 = trivial_brace(cyclic_group(2));
  EXPECT_EQ(t2.order(), 2u);
  EXPECT_TRUE(annihilator(t2).is_full());
  EXPECT_TRUE(is_symmetric(t2));
  auto at = almost_trivial_brace(s3());
  EXPECT_TRUE(is_symmetric(at));
  std::vector<std::int64_t> f{2, 4};
  auto g = abelian_group(f);
  auto x = trivial_brace(g), y = almost_trivial_brace(g);
  EXPECT_EQ(x.circ().table(), y.circ().table());
  for (auto& c : groups_of_order(8)) {
    EXPECT_TRUE(is_symmetric(trivial_brace(c.group)));
    EXPECT_TRUE(is_symmetric(almost_trivial_brace(c.group)));
  }
}

TEST(SkewBrace, DirectProduct) {
  auto t2 = trivial_brace(cyclic_group(2));
  auto p = direct_product(t2, t2);
  std::vector<std::int64_t> f{2, 2};
  EXPECT_EQ(p.dot().table(), abelian_group(f).table());
  EXPECT_EQ(p.circ().table(), p.dot().table());
  auto one = trivial_brace(cyclic_group(1));
  for (auto& a : oracle::braces(6)) {
    auto q = direct_product(a, one);
    EXPECT_EQ(q.dot().table(), a.dot().table());
    EXPECT_EQ(q.circ().table(), a.circ().table());
  }
  // Ann_n of a product is the product of the Ann_n
  auto& b4 = oracle::braces(4);
  auto& b6 = oracle::braces(6);
  for (auto& a : b4)
    for (auto& c : b6) {
      auto d = direct_product(a, c);
      for (std::size_t k = 1; k <= 3; ++k) {
        auto sa = series_term(a, SeriesKind::AnnUpper, k), sc = series_term(c, SeriesKind::AnnUpper, k);
        auto sd = series_term(d, SeriesKind::AnnUpper, k);
        for (Elem x = 0; x < d.order(); ++x)
          EXPECT_EQ(sd.contains(x), sa.contains(x / 6) && sc.contains(x % 6));
        auto ga = series_term(a, SeriesKind::GammaLower, k + 1), gc = series_term(c, SeriesKind::GammaLower, k + 1);
        auto gd = series_term(d, SeriesKind::GammaLower, k + 1);
        for (Elem x = 0; x < d.order(); ++x)
          EXPECT_EQ(gd.contains(x), ga.contains(x / 6) && gc.contains(x % 6));
      }
    }
}

TEST(SkewBrace, ClassifySubset) {
  auto tb = trivial_brace(dihedral_group(4));
  EXPECT_TRUE(classify_subset(tb, Subset::singleton(8, 0)).ideal);
  EXPECT_TRUE(classify_subset(tb, Subset::full(8)).ideal);
  auto& g = tb.dot();
  std::size_t checked = 0;
  for (Elem x = 1; x < 8; ++x) {
    if (g.elem_order(x) != 2) continue;
    std::vector<Elem> s{0, x};
    auto sub = Subset::of(8, s);
    bool normal = true;
    for (Elem y = 0; y < 8; ++y) normal = normal && sub.contains(g.conj(y, x));
    auto c = classify_subset(tb, sub);
    EXPECT_TRUE(c.left_ideal);
    EXPECT_EQ(c.strong_left_ideal, normal);
    EXPECT_EQ(c.ideal, normal);
    checked += !normal;
  }
  EXPECT_GT(checked, 0u);
}

TEST(SkewBrace, IdealPredicateAgainstDefinition) {
  for (auto* pa : oracle::braces_upto(6)) {
    auto& a = *pa;
    oracle::Brace b{a};
    std::size_t n = a.order();
    // every dot subgroup generated by one or two elements
    for (Elem x = 0; x < n; ++x)
      for (Elem y = x; y < n; ++y) {
        auto s = b.dclose({x, y});
        std::vector<Elem> v(s.begin(), s.end());
        bool lam = true, dn = true, cn = true;
        for (Elem u = 0; u < n; ++u)
          for (Elem w : v) {
            lam = lam && s.count(a.lambda(u, w));
            dn = dn && s.count(b.dot(b.dot(u, w), b.dinv(u)));
            cn = cn && s.count(b.circ(b.circ(u, w), b.cinv(u)));
          }
        auto c = classify_subset(a, Subset::of(n, v));
        EXPECT_EQ(c.left_ideal, lam);
        EXPECT_EQ(c.ideal, lam && dn && cn);
        EXPECT_EQ(is_ideal(a, Subset::of(n, v)), lam && dn && cn);
      }
  }
}

TEST(SkewBrace, SubAndQuotient) {
  for (auto* pa : oracle::braces_upto(8)) {
    auto& a = *pa;
    std::size_t n = a.order();
    auto q0 = quotient_brace(a, Subset::singleton(n, 0));
    EXPECT_EQ(q0.brace.order(), n);
    EXPECT_TRUE(is_brace_hom(a, q0.brace, q0.projection));
    EXPECT_EQ(quotient_brace(a, Subset::full(n)).brace.order(), 1u);
    auto g2 = series_term(a, SeriesKind::GammaLower, 2);
    auto q = quotient_brace(a, g2);
    EXPECT_EQ(q.brace.dot().table(), q.brace.circ().table());
    EXPECT_TRUE(q.brace.dot().is_abelian());
    EXPECT_EQ(q.brace.order() * g2.size(), n);
    std::vector<Elem> members;
    auto s = sub_brace(a, g2, &members);
    EXPECT_EQ(s.order(), g2.size());
    for (Elem x = 0; x < s.order(); ++x)
      for (Elem y = 0; y < s.order(); ++y) {
        EXPECT_EQ(members[s.mul(x, y)], a.mul(members[x], members[y]));
        EXPECT_EQ(members[s.cmul(x, y)], a.cmul(members[x], members[y]));
      }
  }
}
