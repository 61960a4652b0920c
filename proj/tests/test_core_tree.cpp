#include <gtest/gtest.h>

#include "ctm/cartesian_tree.hpp"
#include "ctm/oracle.hpp"
#include "support.hpp"

using namespace ctm;
using ctm_test::Seq;

TEST(CartesianTree, EmptySequenceGivesEmptyTree) {
  const auto t = build_cartesian_tree(Seq{});
  EXPECT_TRUE(t.empty());
  EXPECT_EQ(t.root, kNoNode);
  EXPECT_TRUE(right_branch(t).empty());
  EXPECT_TRUE(left_branch(t).empty());
}

TEST(CartesianTree, RightBranchOfFigureSequence) {
  const auto t = build_cartesian_tree(Seq{3, 5, 6, 2, 1, 7, 8, 4, 9});
  EXPECT_EQ(right_branch(t), (std::vector<std::size_t>{4, 7, 8}));
}

TEST(CartesianTree, RootAndBranches) {
  const auto t = build_cartesian_tree(Seq{5, 7, 4, 1, 6, 8, 9, 2, 3});
  EXPECT_EQ(t.root, 3u);
  EXPECT_EQ(right_branch(t), (std::vector<std::size_t>{3, 7, 8}));
  EXPECT_EQ(left_branch(t), (std::vector<std::size_t>{3, 2, 0}));
  EXPECT_EQ(rightmost_path_length(t, t.root), 3u);
  EXPECT_EQ(leftmost_path_length(t, t.root), 3u);
}

TEST(CartesianTree, MonotoneSequencesAreChains) {
  EXPECT_EQ(right_branch(build_cartesian_tree(Seq{1, 2, 3})),
            (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(left_branch(build_cartesian_tree(Seq{3, 2, 1})),
            (std::vector<std::size_t>{2, 1, 0}));
}

TEST(CartesianTree, TiesBreakByPosition) {
  // Equal values: the earlier one is smaller, so a constant run is increasing.
  EXPECT_TRUE(ct_equal(Seq{7, 7, 7, 7}, Seq{1, 2, 3, 4}));
  EXPECT_TRUE(ct_equal(Seq{2, 1, 2, 1}, Seq{3, 1, 4, 2}));
}

TEST(CartesianTree, CtEqualExamples) {
  EXPECT_TRUE(ct_equal(Seq{3, 5, 6, 2, 1, 7, 8, 4, 9}, Seq{3, 4, 8, 2, 1, 7, 9, 5, 6}));
  const Seq x{4, 1, 3};
  EXPECT_TRUE(ct_equal(x, x));
  EXPECT_FALSE(ct_equal(Seq{1, 2, 3}, Seq{3, 2, 1}));
  EXPECT_FALSE(ct_equal(Seq{1, 2}, Seq{1, 2, 3}));
}

TEST(CartesianTree, MixedNumericTypes) {
  const std::vector<double> d{0.5, -1.25, 3.0};
  EXPECT_TRUE(ct_equal(d, Seq{2, 1, 3}));
}

TEST(CartesianTree, InOrderHeapAndAmortizedStackOps) {
  for (std::size_t m = 1; m <= 7; ++m)
    for (const auto& x : ctm_test::permutations(m)) {
      BuildStats stats;
      const auto t = build_cartesian_tree(x, &stats);
      ASSERT_LE(stats.pushes + stats.pops, 2 * m);
      // In-order walk.
      std::vector<std::size_t> order, stack;
      for (std::size_t v = t.root; v != kNoNode || !stack.empty();) {
        if (v != kNoNode) {
          stack.push_back(v);
          v = t.left[v];
        } else {
          v = stack.back();
          stack.pop_back();
          order.push_back(v);
          v = t.right[v];
        }
      }
      std::vector<std::size_t> expected(m);
      std::iota(expected.begin(), expected.end(), 0);
      ASSERT_EQ(order, expected);
      for (std::size_t v = 0; v < m; ++v)
        if (t.parent[v] != kNoNode) {
          ASSERT_LT(x[t.parent[v]], x[v]);
        }
    }
}

TEST(CartesianTree, CtEqualAgreesWithRecursiveDefinition) {
  for (std::size_t m = 1; m <= 6; ++m) {
    const auto perms = ctm_test::permutations(m);
    for (const auto& x : perms) {
      const auto px = oracle::naive_tree_parents(std::span<const std::int64_t>(x));
      ASSERT_EQ(build_cartesian_tree(x).parent, px);
      for (const auto& y : perms)
        ASSERT_EQ(ct_equal(x, y),
                  px == oracle::naive_tree_parents(std::span<const std::int64_t>(y)));
    }
  }
}

TEST(CartesianTree, ParentDistanceRoundTrip) {
  for (std::size_t m = 0; m <= 7; ++m)
    for (const auto& x : ctm_test::permutations(m)) {
      const auto t = build_cartesian_tree(x);
      const Table pd = oracle::naive_parent_distance(x);
      ASSERT_EQ(tree_from_parent_distance(pd), t);
      ASSERT_TRUE(ct_equal(realize(t), x));
    }
}

TEST(CartesianTree, RejectsInvalidParentDistanceTables) {
  EXPECT_THROW(tree_from_parent_distance(Table{1}), Error);
  // Position 2 cannot hang below position 0: position 1 blocks it (pd[1]=0
  // pops 0 off the right branch).
  EXPECT_THROW(tree_from_parent_distance(Table{0, 0, 2}), Error);
}

TEST(CartesianTree, SubtreeSizes) {
  const auto t = build_cartesian_tree(Seq{5, 7, 4, 1, 6, 8, 9, 2, 3});
  const auto s = subtree_sizes(t);
  EXPECT_EQ(s[t.root], 9u);
  EXPECT_EQ(s[2], 3u);  // 4 with children 5 and 7
  EXPECT_EQ(s[7], 5u);  // 2 with 6,8,9 on the left and 3 on the right
}
