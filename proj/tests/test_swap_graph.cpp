#include <gtest/gtest.h>

#include <random>
#include <set>

#include "ctm/automaton.hpp"
#include "ctm/oracle.hpp"
#include "ctm/swap_graph.hpp"
#include "support.hpp"

using namespace ctm;
using ctm_test::Seq;

namespace {

Seq shape(const Table& pd) { return realize(tree_from_parent_distance(pd)); }

std::size_t ng_size_of_subtree(const Seq& x, std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) return 0;
  return neighborhood(Seq(x.begin() + static_cast<std::ptrdiff_t>(lo),
                          x.begin() + static_cast<std::ptrdiff_t>(hi)))
      .size();
}

}  // namespace

TEST(Neighborhood, Examples) {
  const Seq x{1, 2, 3};
  EXPECT_EQ(neighborhood_at(x, 0), (std::vector<Table>{{0, 0, 1}}));
  EXPECT_EQ(neighborhood_at(x, 1), (std::vector<Table>{{0, 1, 2}}));
  EXPECT_EQ(neighborhood_at(Seq{1, 2}, 0), (std::vector<Table>{{0, 0}}));
  EXPECT_EQ(neighborhood(x).all, (std::set<Table>{{0, 0, 1}, {0, 1, 2}}));
  EXPECT_EQ(neighborhood(Seq{1, 2}).size(), 1u);

  // x = (2,1,3), swap of the first two: the chain below position 1 is {2}.
  const Seq y{2, 1, 3};
  const auto t = build_cartesian_tree(y);
  EXPECT_EQ(neighborhood_at(y, 0).size(), leftmost_path_length(t, t.right[1]) + 1);
}

TEST(Neighborhood, Errors) {
  EXPECT_THROW(neighborhood_at(Seq{1, 2, 3}, 2), Error);
  EXPECT_THROW(neighborhood_at(Seq{1}, 0), Error);
  EXPECT_THROW(neighborhood(Seq{1}), Error);
  try {
    neighborhood_at(Seq{1, 2}, 5);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidPosition);
  }
}

TEST(Neighborhood, EqualsEnumeratedSwaps) {
  for (std::size_t m = 2; m <= 7; ++m)
    for (const Table& pd : oracle::enumerate_trees(m)) {
      const Seq x = shape(pd);
      const auto bf = oracle::brute_force_neighbourhood(x);
      const auto ng = neighborhood(x);
      for (std::size_t i = 0; i + 1 < m; ++i)
        ASSERT_EQ(ng.at[i], std::vector<Table>(bf[i].begin(), bf[i].end()));
    }
}

// |ng(x, i)| is SN[i]+1 when x[i] < x[i+1], and otherwise one more than the
// left path of the right subtree of i+1.
TEST(Neighborhood, PerPositionSizes) {
  for (std::size_t m = 2; m <= 8; ++m)
    for (const Table& pd : oracle::enumerate_trees(m)) {
      const Seq x = shape(pd);
      const auto t = build_cartesian_tree(x);
      const auto sn = skipped_number(x).sn;
      for (std::size_t i = 0; i + 1 < m; ++i) {
        const std::size_t expected = x[i] < x[i + 1]
                                         ? sn[i] + 1
                                         : leftmost_path_length(t, t.right[i + 1]) + 1;
        ASSERT_EQ(neighborhood_at(x, i).size(), expected);
      }
    }
}

TEST(Neighborhood, PositionsAreDisjoint) {
  for (std::size_t m = 2; m <= 8; ++m)
    for (const Table& pd : oracle::enumerate_trees(m)) {
      const auto ng = neighborhood(shape(pd));
      std::size_t total = 0;
      for (const auto& at : ng.at) total += at.size();
      ASSERT_EQ(total, ng.size());
      ASSERT_FALSE(ng.all.contains(pd));
    }
}

// |ng(T)| = |ng(left)| + |ng(right)| + the two swaps involving the root, and
// those two have sizes LMP(right)+1 and RMP(left)+1.
TEST(Neighborhood, RootDecomposition) {
  for (std::size_t m = 2; m <= 8; ++m)
    for (const Table& pd : oracle::enumerate_trees(m)) {
      const Seq x = shape(pd);
      const auto t = build_cartesian_tree(x);
      const auto ng = neighborhood(x);
      const std::size_t k = t.root;
      std::size_t expected = ng_size_of_subtree(x, 0, k) + ng_size_of_subtree(x, k + 1, m);
      if (k > 0) {
        ASSERT_EQ(ng.at[k - 1].size(), leftmost_path_length(t, t.right[k]) + 1);
        expected += ng.at[k - 1].size();
      }
      if (k + 1 < m) {
        ASSERT_EQ(ng.at[k].size(), rightmost_path_length(t, t.left[k]) + 1);
        expected += ng.at[k].size();
      }
      ASSERT_EQ(ng.size(), expected);
    }
}

TEST(Neighborhood, SizesOfFourNodeTrees) {
  const auto trees = oracle::enumerate_trees(4);
  ASSERT_EQ(trees.size(), 14u);
  for (const Table& pd : trees) {
    const auto s = neighborhood(shape(pd)).size();
    EXPECT_GE(s, 3u);
    EXPECT_LE(s, 7u);
  }
}

TEST(CountSequences, Examples) {
  EXPECT_EQ(count_sequences(build_cartesian_tree(Seq{1})), 1u);
  EXPECT_EQ(count_sequences(build_cartesian_tree(Seq{2, 1, 3})), 2u);
  EXPECT_EQ(count_sequences_hook(build_cartesian_tree(Seq{2, 1, 3})), 2u);
  EXPECT_EQ(count_sequences(build_cartesian_tree(Seq{1, 2, 3, 4, 5, 6})), 1u);
  EXPECT_EQ(count_sequences(CartesianTree{}), 1u);
}

TEST(CountSequences, FormulasAgreeAndSumToFactorial) {
  for (std::size_t m = 1; m <= 10; ++m) {
    std::uint64_t sum = 0;
    for (const Table& pd : oracle::enumerate_trees(m)) {
      const auto t = tree_from_parent_distance(pd);
      const auto c = count_sequences_recursive(t);
      ASSERT_EQ(c, count_sequences_hook(t));
      sum += c;
    }
    EXPECT_EQ(sum, ctm_test::factorial(m)) << m;
  }
}

TEST(CountSequences, MatchesPermutationClasses) {
  for (std::size_t m = 1; m <= 7; ++m) {
    std::map<Table, std::uint64_t> classes;
    for (const auto& x : ctm_test::permutations(m)) ++classes[parent_distance(x)];
    for (const auto& [pd, n] : classes)
      ASSERT_EQ(count_sequences(tree_from_parent_distance(pd)), n);
  }
}

TEST(SwapGraph, SmallGraphs) {
  const auto g2 = build_swap_graph(2);
  EXPECT_EQ(g2.vertices.size(), 2u);
  EXPECT_EQ(g2.edges.size(), 1u);
  EXPECT_EQ(build_swap_graph(3).vertices.size(), 5u);
  const auto g4 = build_swap_graph(4);
  EXPECT_EQ(g4.vertices.size(), 14u);
  for (const auto d : g4.degree) {
    EXPECT_GE(d, 3u);
    EXPECT_LE(d, 7u);
  }
  EXPECT_THROW(build_swap_graph(1), Error);
  EXPECT_THROW(build_swap_graph(13), Error);
}

TEST(SwapGraph, DegreesMatchNeighborhoodsAndBounds) {
  for (std::size_t m = 2; m <= 10; ++m) {
    const auto g = build_swap_graph(m);
    ASSERT_EQ(g.vertices.size(), oracle::catalan(m));
    std::vector<std::size_t> deg(g.vertices.size(), 0);
    for (const auto& [u, v] : g.edges) {
      ++deg[u];
      ++deg[v];
    }
    // Every edge found from both ends, so the undirected degree equals |ng|.
    ASSERT_EQ(deg, g.degree);
    for (const auto d : g.degree) {
      ASSERT_GE(d, m - 1);
      ASSERT_LE(d, 3 * (m - 2) + 1);
    }
  }
}

TEST(SwapGraph, EdgesAreSymmetric) {
  for (std::size_t m = 2; m <= 7; ++m) {
    const auto trees = oracle::enumerate_trees(m);
    std::map<Table, std::set<Table>> ng;
    for (const Table& pd : trees) ng[pd] = neighborhood_of_table(pd).all;
    for (const auto& [a, around] : ng)
      for (const Table& b : around) ASSERT_TRUE(ng[b].contains(a));
  }
}

TEST(SwapGraph, Export) {
  const auto g = build_swap_graph(2);
  std::ostringstream dot, csv;
  write_dot(dot, g);
  write_csv(csv, g);
  EXPECT_EQ(dot.str(), "graph swap_2 {\n  \"0,0\";\n  \"0,1\";\n  \"0,0\" -- \"0,1\";\n}\n");
  EXPECT_EQ(csv.str(), "source,target\n\"0,0\",\"0,1\"\n");
}

TEST(Automaton, AcceptedSets) {
  auto accepted = [](const Seq& p) {
    const auto a = build_swap_automaton(p);
    return std::set<Table>(a.patterns().begin(), a.patterns().end());
  };
  EXPECT_EQ(accepted({1, 2}), (std::set<Table>{{0, 1}, {0, 0}}));
  EXPECT_EQ(accepted({1, 2, 3}), (std::set<Table>{{0, 1, 1}, {0, 0, 1}, {0, 1, 2}}));
  const auto a = build_swap_automaton(Seq{1, 2, 3});
  EXPECT_TRUE(a.accepts(Table{0, 0, 1}));
  EXPECT_FALSE(a.accepts(Table{0, 1, 0}));
  EXPECT_THROW(build_swap_automaton(Seq{1}), Error);
}

TEST(Automaton, SizeBounds) {
  std::mt19937_64 rng(17);
  for (int r = 0; r < 100; ++r) {
    const std::size_t m = 2 + rng() % 63;
    const auto a = build_swap_automaton(ctm_test::random_sequence(rng, m, 1 << 30));
    ASSERT_LE(a.pattern_count(), 3 * (m - 2) + 2);
    ASSERT_LE(a.state_count(), m * (3 * (m - 2) + 2));
  }
}

TEST(Automaton, SearchExamples) {
  const Seq p{1, 2};
  EXPECT_EQ(automaton_search(build_swap_automaton(p), Seq{2, 1, 3}).occurrences,
            (std::vector<std::size_t>{1, 2}));
  const Seq q{3, 1, 4, 2};
  EXPECT_EQ(automaton_search(build_swap_automaton(q), q).occurrences,
            (std::vector<std::size_t>{1}));
}

TEST(Automaton, AgreesWithMetaSearch) {
  std::mt19937_64 rng(23);
  for (int r = 0; r < 1000; ++r) {
    const std::size_t m = 2 + rng() % 15;
    const std::size_t n = m + rng() % (257 - m);
    const auto p = ctm_test::random_sequence(rng, m, r % 3 ? 1 << 20 : 3);
    const auto t = ctm_test::random_sequence(rng, n, r % 3 ? 1 << 20 : 3);
    const auto report = automaton_search(build_swap_automaton(p), t);
    ASSERT_EQ(report.occurrences, meta_search(p, t, MatchMode::SwapPD).occurrences);
    ASSERT_EQ(report.windows, n - m + 1);
  }
}
