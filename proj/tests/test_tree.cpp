#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "cak/cak.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace cak;

TEST(Tree, GrundyExamples) {
  EXPECT_EQ(grundy_tree(fixtures::path(4)).value, 2u);
  EXPECT_EQ(grundy_tree(fixtures::star(3)).value, 1u);
  EXPECT_EQ(grundy_tree(disjoint_union(fixtures::path(2), fixtures::path(2))).value, 0u);
  EXPECT_EQ(grundy_tree(ColoredGraph(0)).value, 0u);
  EXPECT_EQ(grundy_tree(ColoredGraph(5)).value, 0u);
}

TEST(Tree, RejectsCyclesAndColors) {
  EXPECT_THROW(grundy_tree(gen_grid(2, 2, GridVariant::Cram)), GraphError);
  EXPECT_THROW(solve_tree(gen_grid(2, 2, GridVariant::Cram), Player::B), GraphError);
  ColoredGraph b(2);
  b.add_edge(0, 1, Color::Black);
  EXPECT_THROW(grundy_tree(b), GraphError);
}

TEST(Tree, CaterpillarIsKayles) {
  const auto kayles = oracle::kayles_sequence(15);
  const std::vector<unsigned> known = {0, 1, 2, 3, 1, 4, 3, 2, 1, 4, 2, 6, 4, 1, 2, 7};
  ASSERT_EQ(kayles, known);
  for (std::size_t pins = 1; pins <= 15; ++pins)
    EXPECT_EQ(grundy_tree(gen_caterpillar_kayles(pins)).value, kayles[pins]) << pins;
  EXPECT_EQ(grundy_naive(gen_caterpillar_kayles(2)).value, 2u);
}

TEST(Tree, SolveExamples) {
  for (Player t : {Player::B, Player::W}) {
    const auto e = solve_tree(fixtures::path(2), t);
    EXPECT_EQ(e.winner, t);
    EXPECT_EQ(e.winning_move, (Edge{0, 1}));
    EXPECT_EQ(solve_tree(fixtures::path(5), t).winner, solve_naive(fixtures::path(5), t).winner);
  }
  for (std::size_t pins = 1; pins <= 8; ++pins) {
    const auto g = gen_caterpillar_kayles(pins);
    EXPECT_EQ(solve_tree(g, Player::B).winner, solve_subset(g, Player::B).winner);
  }
}

TEST(Tree, GrundyMatchesNaiveOnForests) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const std::size_t n = 2 + seed % 12;  // at most 12 edges
    const auto f = seed % 2 ? fixtures::random_forest(n, seed) : gen_random_tree(n, seed);
    EXPECT_EQ(grundy_tree(f).value, grundy_naive(f).value) << serialize_graph(f);
    EXPECT_EQ(grundy_tree(f).value, oracle::grundy(f));
  }
}

TEST(Tree, WinnerMatchesSubsetAndMoveIsSmallest) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 2 + seed % 19;  // up to 20
    const auto t = seed % 3 ? gen_random_tree(n, seed) : fixtures::random_forest(n, seed);
    for (Player p : {Player::B, Player::W}) {
      const auto a = solve_tree(t, p);
      const auto b = solve_subset(t, p);
      ASSERT_EQ(a.winner, b.winner) << serialize_graph(t);
      EXPECT_EQ(a.winning_move, b.winning_move);
    }
  }
}

TEST(Tree, AdditiveOverUnions) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto a = gen_random_tree(2 + seed % 9, seed);
    const auto b = gen_random_tree(2 + seed % 7, seed + 100);
    EXPECT_EQ(grundy_tree(disjoint_union(a, b)).value, grundy_tree(a).value ^ grundy_tree(b).value);
  }
}

TEST(Tree, MemoSharesIsomorphicComponents) {
  TreeSolver solver;
  const auto g = disjoint_union(disjoint_union(fixtures::path(4), fixtures::path(4)), fixtures::path(4));
  EXPECT_EQ(solver.grundy(g, all_vertices(g)).value, 2u);
  EXPECT_GT(solver.stats().memo_hits, 0u);
  // P4 and two smaller shapes (P2, plus nothing for single vertices)
  EXPECT_EQ(solver.stats().distinct_keys, 2u);
}

TEST(Tree, AliveMaskSelectsSubforest) {
  const auto g = gen_grid(2, 2, GridVariant::Cram);
  auto alive = all_vertices(g);
  alive.erase(3);  // leaves path 1-0-2
  EXPECT_EQ(grundy_tree(g, alive).value, 1u);
}

// canonical forms

TEST(Canonical, RootedFormsSeparateRoots) {
  const auto p3 = fixtures::path(3);
  const auto all = all_vertices(p3);
  EXPECT_EQ(rooted_canonical_form(p3, all, 0).code, rooted_canonical_form(p3, all, 2).code);
  EXPECT_NE(rooted_canonical_form(p3, all, 0).code, rooted_canonical_form(p3, all, 1).code);
}

TEST(Canonical, UnrootedFormInvariantUnderRelabeling) {
  std::mt19937_64 rng(5);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto t = gen_random_tree(3 + seed % 15, seed);
    const auto p = permute(t, fixtures::random_permutation(t.order(), rng));
    EXPECT_EQ(tree_canonical_form(t, all_vertices(t)).code, tree_canonical_form(p, all_vertices(p)).code);
  }
}

TEST(Canonical, EqualCodesIffIsomorphic) {
  std::size_t distinct_pairs = 0;
  std::mt19937_64 rng(9);
  for (int i = 0; i < 1500; ++i) {
    const std::size_t n = 4 + rng() % 6;
    const auto a = gen_random_tree(n, rng());
    const auto b = gen_random_tree(n, rng());
    const bool same = tree_canonical_form(a, all_vertices(a)).code == tree_canonical_form(b, all_vertices(b)).code;
    EXPECT_EQ(same, oracle::unrooted_isomorphic(a, b));
    if (!same) ++distinct_pairs;
  }
  EXPECT_GE(distinct_pairs, 1000u);
}

TEST(Canonical, RootedCodesMatchBacktrackingIsomorphism) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 400; ++i) {
    const std::size_t n = 2 + rng() % 7;
    const auto a = gen_random_tree(n, rng());
    const auto b = gen_random_tree(n, rng());
    const Vertex ra = static_cast<Vertex>(rng() % n), rb = static_cast<Vertex>(rng() % n);
    const auto sa = all_vertices(a), sb = all_vertices(b);
    const bool same = rooted_canonical_form(a, sa, ra).code == rooted_canonical_form(b, sb, rb).code;
    EXPECT_EQ(same, oracle::rooted_isomorphic(a, sa, ra, b, sb, rb));
  }
}

// subtree counts

TEST(Subtrees, AkExamples) {
  // rooted at an end, P3 leaves itself or r alone (the other edge matched)
  EXPECT_EQ(count_ak_subtrees(fixtures::path(3), 0), 2u);
  // rooted at the center, only the whole tree survives
  EXPECT_EQ(count_ak_subtrees(fixtures::path(3), 1), 1u);
  EXPECT_EQ(count_ak_subtrees(fixtures::path(2), 0), 1u);
  EXPECT_EQ(count_ak_subtrees(ColoredGraph(1), 0), 1u);
  EXPECT_THROW(count_ak_subtrees(gen_grid(2, 2, GridVariant::Cram), 0), GraphError);
  EXPECT_THROW(count_ak_subtrees(fixtures::path(3), 3), GraphError);
}

TEST(Subtrees, NkExamples) {
  EXPECT_EQ(count_nk_subtrees(fixtures::path(2), 0), 1u);
  EXPECT_EQ(count_nk_subtrees(fixtures::path(2), 1), 1u);
  EXPECT_EQ(count_nk_subtrees(ColoredGraph(1), 0), 1u);
  EXPECT_THROW(count_nk_subtrees(fixtures::path(3) , 7), GraphError);
}

TEST(Subtrees, BaseValuesOverAllRootedTrees) {
  const std::vector<std::size_t> expected = {1, 1, 2, 3};
  for (std::size_t n = 1; n <= 4; ++n) {
    std::size_t best_ak = 0, best_nk = 0;
    for (const auto& t : oracle::all_labeled_trees(n))
      for (Vertex r = 0; r < n; ++r) {
        best_ak = std::max(best_ak, count_ak_subtrees(t, r));
        best_nk = std::max(best_nk, count_nk_subtrees(t, r));
      }
    EXPECT_EQ(best_ak, expected[n - 1]) << "n=" << n;
    EXPECT_EQ(best_nk, expected[n - 1]) << "n=" << n;
  }
}

TEST(Subtrees, AkMatchesBacktrackingOracle) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 2 + seed % 8;
    const auto t = gen_random_tree(n, seed);
    for (Vertex r = 0; r < n; ++r) EXPECT_EQ(count_ak_subtrees(t, r), oracle::ak_subtrees(t, r));
  }
}

TEST(Subtrees, DpAgreesWithEnumeration) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const std::size_t n = 1 + seed % 12;
    const auto t = gen_random_tree(n, seed + 31);
    for (Vertex r = 0; r < n; ++r) EXPECT_EQ(count_ak_subtrees_dp(t, r), count_ak_subtrees_enumerate(t, r));
  }
  for (std::size_t pins = 1; pins <= 6; ++pins) {
    const auto c = gen_caterpillar_kayles(pins);
    for (Vertex r = 0; r < c.order(); ++r) EXPECT_EQ(count_ak_subtrees_dp(c, r), count_ak_subtrees_enumerate(c, r));
  }
}

TEST(Subtrees, BoundedByTwoToHalfN) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 4 + seed % 17;
    const auto t = gen_random_tree(n, seed + 7);
    const double bound = std::pow(2.0, static_cast<double>(n) / 2.0) - 1.0;
    for (Vertex r = 0; r < n; ++r) {
      EXPECT_LE(static_cast<double>(count_ak_subtrees(t, r)), bound);
      EXPECT_LE(static_cast<double>(count_nk_subtrees(t, r)), bound);
    }
  }
}
