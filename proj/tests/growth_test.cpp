#include <cmath>

#include "f1q/catalog.hpp"
#include "f1q/enumeration.hpp"
#include "f1q/growth.hpp"
#include "support.hpp"

using namespace f1q;

namespace {

// Rooted subtrees by brute force over vertex subsets.
std::vector<std::uint64_t> brute_subtrees(const RootedTree& t) {
  const Quiver& q = t.tree;
  const std::size_t n = q.vertex_count();
  std::vector<std::uint64_t> s(n, 0);
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    if (!(mask >> t.root & 1)) continue;
    std::vector<VertexIndex> vs;
    for (VertexIndex v = 0; v < n; ++v) {
      if (mask >> v & 1) vs.push_back(v);
    }
    if (is_connected(full_subquiver(q, vs))) ++s[vs.size() - 1];
  }
  return s;
}

std::vector<std::int64_t> ni_values(std::shared_ptr<const Quiver> q, std::size_t up_to) {
  NilpotentEnumerator e(q);
  std::vector<std::int64_t> v{0};
  for (std::size_t n = 1; n <= up_to; ++n) v.push_back(static_cast<std::int64_t>(e.count(n)));
  return v;
}

}  // namespace

TEST(Growth, RootedSubtreeCounts) {
  RootedTree point{Quiver({"r"}, {}), 0};
  EXPECT_EQ(rooted_subtree_counts(point), (std::vector<std::uint64_t>{1}));
  // Root r, child c, two leaves below c.
  RootedTree forked{Quiver({"c", "l1", "l2", "r"}, {{"x", "l1", "c"}, {"y", "l2", "c"}, {"z", "c", "r"}}), 3};
  EXPECT_EQ(rooted_subtree_counts(forked), (std::vector<std::uint64_t>{1, 1, 2, 1}));
  RootedTree path{Quiver({"a", "b", "c"}, {{"x", "a", "b"}, {"y", "b", "c"}}), 0};
  EXPECT_EQ(rooted_subtree_counts(path), (std::vector<std::uint64_t>{1, 1, 1}));
  EXPECT_EQ(rooted_subtree_counts(forked), brute_subtrees(forked));
  RootedTree star{Quiver({"a", "b", "c", "d", "e", "f"},
                         {{"1", "a", "b"}, {"2", "c", "a"}, {"3", "a", "d"}, {"4", "d", "e"}, {"5", "f", "d"}}),
                  0};
  auto s = rooted_subtree_counts(star);
  EXPECT_EQ(s, brute_subtrees(star));
  EXPECT_EQ(s.front(), 1u);
  EXPECT_EQ(s.back(), 1u);
}

TEST(Growth, LoopTreeRecursion) {
  auto r = loop_tree_recursion(*catalog::loop_arrow_in());
  EXPECT_EQ(r.coeffs, (std::vector<std::int64_t>{1, 1}));
  EXPECT_EQ(r.valid_from, 4u);
  EXPECT_EQ(loop_tree_recursion(*catalog::loop_two_leaves()).coeffs, (std::vector<std::int64_t>{1, 2, 1}));
  EXPECT_EQ(loop_tree_recursion(*catalog::loops(1)).coeffs, (std::vector<std::int64_t>{1}));
  EXPECT_CODE(loop_tree_recursion(*catalog::a2()), ErrorCode::kWrongShape);
  EXPECT_CODE(loop_tree_recursion(*catalog::cycle(3, true)), ErrorCode::kWrongShape);
}

TEST(Growth, CharPolynomials) {
  auto poly = [](std::vector<std::int64_t> c) { return char_polynomial(LinearRecursion{std::move(c), 0, ""}); };
  EXPECT_EQ(poly({1, 1}).to_string(), "x^2 - x - 1");
  EXPECT_EQ(poly({1, 2, 1}).to_string(), "x^3 - x^2 - 2x - 1");
  EXPECT_EQ(poly({0, 1, 1}).to_string(), "x^3 - x - 1");
  EXPECT_EQ(poly({1, 1}).coeffs, (std::vector<std::int64_t>{1, -1, -1}));
}

TEST(Growth, DominantRoots) {
  EXPECT_NEAR(dominant_root(CharPolynomial{{1, -1, -1}}), (1 + std::sqrt(5.0)) / 2, 1e-9);
  EXPECT_NEAR(dominant_root(CharPolynomial{{1, 0, -1, -1}}), 1.3247, 1e-3);
  EXPECT_NEAR(dominant_root(CharPolynomial{{1, -2}}), 2.0, 1e-9);
  EXPECT_GT(dominant_root(CharPolynomial{{1, -1, -2, -1}}), 2.0);
  EXPECT_CODE(dominant_root(CharPolynomial{{1, 0, 1}}), ErrorCode::kNoBracket);
  EXPECT_NEAR(dominant_root(CharPolynomial{{1, 0, -4}}, 1e-12, std::pair{1.0, 3.0}), 2.0, 1e-9);
}

TEST(Growth, LoopTreePolynomialsAreNegativeAtOne) {
  for (auto q : {catalog::loop_arrow_in(), catalog::loop_arrow_out(), catalog::loop_two_leaves()}) {
    auto p = char_polynomial(loop_tree_recursion(*q));
    EXPECT_LE(p.eval(1.0), -1.0);
    EXPECT_GT(dominant_root(p), 1.0);
  }
}

TEST(Growth, PseudotreeSteps) {
  auto bare = catalog::cycle(3, true);
  for (const auto& v : bare->vertices()) EXPECT_EQ(pseudotree_step(*bare, v), (std::vector<std::uint64_t>{1}));
  auto q2 = catalog::spine_cycle_two_tails();
  EXPECT_EQ(pseudotree_step(*q2, "b"), (std::vector<std::uint64_t>{1, 1}));
  EXPECT_EQ(pseudotree_step(*q2, "c"), (std::vector<std::uint64_t>{1, 1}));
  // A one-vertex cycle reduces to the loop-tree step.
  auto qt = catalog::loop_two_leaves();
  auto s = pseudotree_step(*qt, "o");
  EXPECT_EQ(std::vector<std::int64_t>(s.begin(), s.end()), loop_tree_recursion(*qt).coeffs);
  EXPECT_CODE(pseudotree_step(*catalog::cycle(3, false), "c0"), ErrorCode::kNotEquioriented);
}

TEST(Growth, ComposedRecursions) {
  auto q2 = catalog::spine_cycle_two_tails();
  EXPECT_EQ(compose_cycle_recursion(*q2, "b", "c").coeffs, (std::vector<std::int64_t>{0, 1, 2, 1}));
  auto q2p = catalog::spine_cycle_one_tail();
  EXPECT_EQ(compose_cycle_recursion(*q2p, "b", "c").coeffs, (std::vector<std::int64_t>{0, 1, 1}));
  auto bare = catalog::cycle(4, true);
  EXPECT_EQ(compose_cycle_recursion(*bare, "c0", "c2").coeffs, (std::vector<std::int64_t>{0, 0, 0, 1}));
  EXPECT_CODE(compose_cycle_recursion(*catalog::cycle(3, false), "c0", "c1"), ErrorCode::kNotEquioriented);
}

TEST(Growth, ComposedRecursionMatchesDirectCount) {
  for (auto q : {catalog::spine_cycle_two_tails(), catalog::spine_cycle_one_tail(), catalog::loop_arrow_in(),
                 catalog::loop_two_leaves(), catalog::cycle(3, true)}) {
    auto layout = equioriented_layout(*q);
    for (auto a : layout.cycle) {
      for (auto b : layout.cycle) {
        const auto& i = q->vertex_id(a);
        const auto& f = q->vertex_id(b);
        auto r = compose_cycle_recursion(*q, i, f);
        std::vector<std::int64_t> g;
        for (std::size_t d = 0; d <= r.valid_from + 8; ++d) g.push_back(static_cast<std::int64_t>(q_if_count(*q, i, f, d)));
        for (std::size_t d = r.valid_from; d <= r.valid_from + 8; ++d) {
          ASSERT_EQ(g[d], r.predict(g, d)) << i << "->" << f << " d=" << d;
        }
      }
    }
  }
}

TEST(Growth, DirectCounts) {
  auto bare = catalog::cycle(2, true);
  EXPECT_EQ(q_if_count(*bare, "c0", "c0", 3), 1u);
  EXPECT_EQ(q_if_count(*bare, "c0", "c0", 2), 0u);
  EXPECT_EQ(q_if_count(*bare, "c0", "c1", 1), 0u);
  auto q = catalog::loop_arrow_in();
  EXPECT_EQ(q_if_count(*q, "o", "o", 4), 5u);
  EXPECT_EQ(q_if_count(*q, "o", "o", 5), 8u);
  // Sum over start and finish equals the enumerated count above max t.
  for (auto base : {catalog::spine_cycle_two_tails(), catalog::spine_cycle_one_tail(), catalog::cycle(3, true)}) {
    auto layout = equioriented_layout(*base);
    NilpotentEnumerator e(base);
    for (std::size_t d = 2; d <= 7; ++d) {
      std::uint64_t sum = 0;
      for (auto a : layout.cycle) {
        for (auto b : layout.cycle) sum += q_if_count(*base, base->vertex_id(a), base->vertex_id(b), d);
      }
      EXPECT_EQ(sum, e.count(d)) << "d=" << d;
    }
  }
}

TEST(Growth, RecursionsPredictEnumeratedCounts) {
  for (auto q : {catalog::loop_arrow_in(), catalog::loop_two_leaves(), catalog::spine_cycle_two_tails(),
                 catalog::spine_cycle_one_tail()}) {
    auto r = ni_recursion(*q);
    auto v = ni_values(q, r.valid_from + 4);
    for (std::size_t n = r.valid_from; n < v.size(); ++n) ASSERT_EQ(v[n], r.predict(v, n)) << "n=" << n;
  }
  EXPECT_EQ(ni_recursion(*catalog::loop_two_leaves()).coeffs, (std::vector<std::int64_t>{1, 2, 1}));
}

TEST(Growth, ClassifyNil) {
  EXPECT_EQ(classify_nil(*catalog::a2()), NilClass::kL0);
  EXPECT_EQ(classify_nil(Quiver({"o"}, {})), NilClass::kL0);
  EXPECT_EQ(classify_nil(*catalog::cycle(3, true)), NilClass::kL1);
  EXPECT_EQ(classify_nil(*catalog::cycle(3, false)), NilClass::kL1);
  EXPECT_EQ(classify_nil(*catalog::spine_cycle_two_tails()), NilClass::kLoopArrow);
  EXPECT_EQ(classify_nil(*catalog::loops(2)), NilClass::kL2);
  EXPECT_EQ(representative_name(NilClass::kLoopArrow), "loop with one arrow");
  EXPECT_CODE(classify_nil(Quiver({"p", "q"}, {})), ErrorCode::kDisconnectedQuiver);
}
