#include "f1q/catalog.hpp"
#include "f1q/enumeration.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace f1q;

namespace {

Winding from_ids(std::shared_ptr<const Quiver> base, std::vector<std::string> vs, std::vector<ArrowSpec> as,
                 std::map<std::string, std::string> vmap, std::map<std::string, std::string> amap) {
  return Winding(QuiverMap::from_ids(Quiver(std::move(vs), std::move(as)), std::move(base), vmap, amap));
}

}  // namespace

TEST(Enumeration, LoopGivesOneChainPerDimension) {
  auto l1 = catalog::loops(1);
  for (std::size_t n = 1; n <= 8; ++n) {
    auto classes = enumerate_nilpotent_indecomposables(l1, n);
    ASSERT_EQ(classes.size(), 1u);
    EXPECT_EQ(classes[0].witness.total().arrow_count(), n - 1);
  }
}

TEST(Enumeration, SmallCounts) {
  auto a2 = catalog::a2();
  EXPECT_EQ(ni(a2, 1), 2u);
  EXPECT_EQ(ni(a2, 2), 1u);
  EXPECT_EQ(ni(a2, 3), 0u);
  auto q = catalog::loop_arrow_in();
  EXPECT_EQ(ni(q, 4), 5u);
  EXPECT_EQ(ni(q, 5), 8u);
}

TEST(Enumeration, MatchesNaiveGeneration) {
  struct Case {
    std::shared_ptr<const Quiver> base;
    std::size_t max_n;
  };
  for (const auto& c : {Case{catalog::a2(), 4}, Case{catalog::loops(1), 5}, Case{catalog::kronecker(), 5},
                        Case{catalog::loop_arrow_in(), 5}, Case{catalog::loop_arrow_out(), 5},
                        Case{catalog::cycle(3, false), 5}, Case{catalog::cycle(2, true), 5},
                        Case{catalog::loops(2), 4}}) {
    NilpotentEnumerator e(c.base);
    for (std::size_t n = 1; n <= c.max_n; ++n) {
      const auto& got = e.classes(n);
      auto naive = oracle::naive_nilpotent_classes(*c.base, n);
      ASSERT_EQ(got.size(), naive.size()) << "n=" << n;
      for (const auto& cls : got) {
        auto p = oracle::plain(cls.witness);
        ASSERT_EQ(p.color.size(), n);
        ASSERT_TRUE(oracle::connected(p));
        ASSERT_TRUE(oracle::acyclic(p));
        ASSERT_TRUE(std::any_of(naive.begin(), naive.end(), [&](const oracle::Plain& x) { return oracle::isomorphic(x, p); }));
      }
    }
  }
}

TEST(Enumeration, ParallelMatchesSerial) {
  auto q = catalog::triangle_plus_leaf();
  EnumerationOptions par;
  par.jobs = 4;
  auto a = enumerate_nilpotent_indecomposables(q, 6);
  auto b = enumerate_nilpotent_indecomposables(q, 6, par);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].key, b[i].key);
}

TEST(Enumeration, Budget) {
  EnumerationOptions small;
  small.max_dimension = 3;
  EXPECT_CODE(ni(catalog::loops(1), 4, small), ErrorCode::kBudgetExceeded);
  small.max_dimension = 12;
  small.max_classes = 3;
  EXPECT_CODE(ni(catalog::loops(2), 3, small), ErrorCode::kBudgetExceeded);
}

TEST(Enumeration, TreePseudotreeSplit) {
  auto eq = catalog::cycle(3, true);
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(split_tree_pseudotree(eq, n).pseudotrees, 0u);
  auto k = catalog::kronecker();
  auto s2 = split_tree_pseudotree(k, 2);
  EXPECT_EQ(s2.pseudotrees, 1u);
  EXPECT_EQ(s2.trees, 2u);
  auto tri = catalog::cycle(4, false);
  for (std::size_t n = 1; n < 4; ++n) EXPECT_EQ(split_tree_pseudotree(tri, n).pseudotrees, 0u);
  for (std::size_t n = 1; n <= 6; ++n) {
    auto s = split_tree_pseudotree(tri, n);
    EXPECT_EQ(s.trees + s.pseudotrees, ni(tri, n));
  }
  EXPECT_CODE(split_tree_pseudotree(catalog::loops(2), 2), ErrorCode::kNotPseudotree);
}

TEST(Enumeration, SpineClassification) {
  auto q = catalog::spine_cycle_one_tail();  // p: a -> b, q: b -> c, r: c -> b
  auto s = spine_classify(simple(q, "b"));
  EXPECT_EQ(s.kind, SpineData::Kind::kSpine);
  EXPECT_EQ(s.vertices_on_cycle, 1u);
  EXPECT_EQ(s.start, "b");
  EXPECT_EQ(spine_classify(simple(q, "a")).kind, SpineData::Kind::kBranch);
  Winding path = from_ids(q, {"x", "y", "z", "w"}, {{"e1", "x", "y"}, {"e2", "y", "z"}, {"e3", "z", "w"}},
                          {{"x", "a"}, {"y", "b"}, {"z", "c"}, {"w", "b"}}, {{"e1", "p"}, {"e2", "q"}, {"e3", "r"}});
  auto d = spine_classify(path);
  EXPECT_EQ(d.kind, SpineData::Kind::kSpine);
  EXPECT_EQ(d.vertices_on_cycle, 3u);
  EXPECT_EQ(d.start, "b");
  EXPECT_EQ(d.finish, "b");
  Winding two = from_ids(q, {"y", "z"}, {{"e2", "y", "z"}}, {{"y", "b"}, {"z", "c"}}, {{"e2", "q"}});
  auto t = spine_classify(two);
  EXPECT_EQ(t.start, "b");
  EXPECT_EQ(t.finish, "c");
  EXPECT_CODE(spine_classify(direct_sum(simple(q, "a"), simple(q, "b"))), ErrorCode::kNotTreeRep);
}

TEST(Enumeration, ReverseRep) {
  auto q = catalog::triangle_plus_leaf();
  for (const auto& c : enumerate_nilpotent_indecomposables(q, 4)) {
    Winding r = reverse_rep(c.witness, "b");
    EXPECT_EQ(r.base(), reverse_arrow(*q, "b"));
    EXPECT_EQ(dimension_vector(r), dimension_vector(c.witness));
    EXPECT_EQ(betti_number(r.total()), betti_number(c.witness.total()));
    EXPECT_EQ(canonical_key(reverse_rep(r, "b")), c.key);
  }
  EXPECT_CODE(reverse_rep(simple(q, "1"), "zz"), ErrorCode::kUnknownArrow);
}

TEST(Enumeration, OrientationInvariance) {
  auto acyc = catalog::cycle(3, false), eq = catalog::cycle(3, true);
  for (std::size_t n = 1; n <= 6; ++n) {
    EXPECT_TRUE(tree_count_orientation_invariance(acyc, acyc, n));
    EXPECT_TRUE(tree_count_orientation_invariance(acyc, eq, n));
    EXPECT_EQ(split_tree_pseudotree(acyc, n).trees, split_tree_pseudotree(eq, n).trees);
  }
  auto t1 = catalog::make({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}});
  auto t2 = catalog::make({"1", "2", "3"}, {{"a", "2", "1"}, {"b", "2", "3"}});
  for (std::size_t n = 1; n <= 4; ++n) EXPECT_TRUE(tree_count_orientation_invariance(t1, t2, n));
  EXPECT_CODE(tree_count_orientation_invariance(acyc, catalog::cycle(4, false), 2), ErrorCode::kGraphMismatch);
}

TEST(Enumeration, PseudotreeClassesNeverOutnumberTrees) {
  for (auto q : {catalog::kronecker(), catalog::cycle(3, false), catalog::triangle_plus_leaf()}) {
    NilpotentEnumerator e(q);
    for (std::size_t n = 1; n <= 7; ++n) {
      auto s = split_tree_pseudotree(e, n);
      EXPECT_LE(s.pseudotrees, s.trees);
    }
  }
}

TEST(Enumeration, FactorialFamily) {
  EXPECT_EQ(factorial_family(1).size(), 1u);
  for (std::size_t k = 1; k <= 4; ++k) {
    auto fam = factorial_family(k);
    std::size_t expect = 1;
    for (std::size_t i = 2; i <= k; ++i) expect *= i;
    ASSERT_EQ(fam.size(), expect);
    std::set<CanonicalKey> keys;
    for (const auto& m : fam) {
      EXPECT_TRUE(is_nilpotent(m));
      EXPECT_TRUE(is_indecomposable(m));
      EXPECT_EQ(dimension(m), 2 * k);
      keys.insert(canonical_key(m));
    }
    EXPECT_EQ(keys.size(), expect);
  }
}
