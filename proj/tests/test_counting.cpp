#include <gtest/gtest.h>

#include <cstdlib>

#include "oracles.hpp"
#include "parklot/counting.hpp"
#include "parklot/error.hpp"
#include "parklot/formulas.hpp"

using namespace parklot;

namespace {

oracle::Adj adj_of(const DiGraph& d) { return oracle::adjacency(d.size(), d.edges()); }

std::uint64_t root_count(const oracle::Seq& s, Vertex z) { return std::count(s.begin(), s.end(), z); }

}  // namespace

TEST(Counting, SmallValues) {
  EXPECT_EQ(count_pf(build_path(3, Orientation::Sink), 2), 8);
  EXPECT_EQ(count_pf(build_star(4, Orientation::Sink), 2), 15);
  EXPECT_EQ(count_pf(build_star(4, Orientation::Sink), 0), 1);
  EXPECT_EQ(count_pf(build_star(4, Orientation::Source), 4), 73);
}

TEST(Counting, MatchesOracle) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& t : all_rooted_trees(n))
      for (auto o : {Orientation::Sink, Orientation::Source}) {
        const DiGraph d = to_digraph(t, o);
        for (int m = 1; m <= n; ++m) {
          const Count c = count_pf(d, m);
          ASSERT_EQ(c, Count(static_cast<unsigned long>(oracle::count(adj_of(d), m))));
          ASSERT_EQ(c, count_pf_by_sequence(d, m));
        }
      }
  const DiGraph cyc(4, {{1, 2}, {2, 3}, {3, 1}, {3, 4}});
  for (int m = 1; m <= 4; ++m) EXPECT_EQ(count_pf(cyc, m), Count(static_cast<unsigned long>(oracle::count(adj_of(cyc), m))));
}

TEST(Counting, ThreadCountDoesNotChangeResults) {
  const DiGraph d = build_spider({2, 2, 2}, Orientation::Sink);
  const Count one = count_pf(d, 5, {100'000'000, 1});
  EXPECT_EQ(count_pf(d, 5, {100'000'000, 4}), one);
  EXPECT_EQ(count_pf(d, 5, {100'000'000, 16}), one);
}

TEST(Counting, SingleCar) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& t : all_rooted_trees(n)) {
      ASSERT_EQ(count_pf(to_digraph(t, Orientation::Sink), 1), n);
      ASSERT_EQ(count_pf(to_digraph(t, Orientation::Source), 1), n);
    }
}

TEST(Counting, Budget) {
  const DiGraph d = build_star(9, Orientation::Sink);
  EXPECT_THROW(count_pf(d, 9, {1000, 1}), BudgetExceeded);
  EXPECT_NO_THROW(count_pf(d, 3, {1000, 1}));
  EXPECT_THROW(count_pf(d, 10), InvalidArgument);
}

TEST(Counting, ByRootPreference) {
  const auto src = count_by_root_preference(build_star(4, Orientation::Source), 2);
  EXPECT_EQ(src, (std::map<int, Count>{{0, 6}, {1, 6}, {2, 1}}));
  const auto snk = count_by_root_preference(build_star(4, Orientation::Sink), 2);
  EXPECT_EQ(snk.at(0), 9);
  EXPECT_EQ(snk.at(1), 6);
  EXPECT_FALSE(snk.count(2));
  EXPECT_EQ(count_by_root_preference(build_star(4, Orientation::Sink), 0), (std::map<int, Count>{{0, 1}}));
}

TEST(Counting, Case3a) {
  EXPECT_EQ(count_case3a(build_star(4, Orientation::Sink), 2), 3);
  EXPECT_EQ(count_case3a(build_star(5, Orientation::Sink), 3), 36);
  EXPECT_EQ(count_case3a(build_star(5, Orientation::Sink), 1), 0);
  EXPECT_THROW(count_case3a(build_star(4, Orientation::Source), 2), InvalidArgument);

  // Oracle: no car prefers the root and the root ends up occupied.
  for (int n = 2; n <= 5; ++n)
    for (const auto& t : all_rooted_trees(n)) {
      const DiGraph d = to_digraph(t, Orientation::Sink);
      const auto adj = adj_of(d);
      for (int m = 1; m <= n; ++m) {
        const auto want = oracle::count_if(adj, m, [&](const oracle::Seq& s) {
          if (root_count(s, 1)) return false;
          for (const auto& occ : oracle::final_occupancies(adj, s))
            if (occ.front() == 1) return true;
          return false;
        });
        ASSERT_EQ(count_case3a(d, m), Count(static_cast<unsigned long>(want)));
      }
    }
}

TEST(Counting, FirstPair) {
  const DiGraph src4 = build_star(4, Orientation::Source);
  const DiGraph snk4 = build_star(4, Orientation::Sink);
  EXPECT_EQ(count_first_pair(src4, 2, 1, 2, PairMode::RootPair), 1);
  EXPECT_EQ(count_first_pair(src4, 3, 2, 3, PairMode::RootPair), 3);
  // Three leaves for the colliding pair, then two free leaves for car 3.
  EXPECT_EQ(count_first_pair(snk4, 3, 1, 2, PairMode::LeafCollision), 6);
  EXPECT_EQ(count_first_pair(snk4, 3, 1, 2, PairMode::LeafCollision),
            star_pair_partition(4, 3, 2, StarSide::Sink));
  EXPECT_THROW(count_first_pair(src4, 3, 2, 2, PairMode::RootPair), InvalidArgument);
  EXPECT_THROW(count_first_pair(src4, 3, 1, 4, PairMode::RootPair), InvalidArgument);
  EXPECT_THROW(first_pair_table(src4, 2, PairMode::LeafCollision), InvalidArgument);

  // Oracle for the root-pair classes on every small source tree.
  for (int n = 2; n <= 5; ++n)
    for (const auto& t : all_rooted_trees(n)) {
      const DiGraph d = to_digraph(t, Orientation::Source);
      const auto table = first_pair_table(d, std::min(n, 4), PairMode::RootPair);
      std::map<CarPair, std::uint64_t> want;
      oracle::for_each_seq(n, std::min(n, 4), [&](const oracle::Seq& s) {
        if (!oracle::parks(adj_of(d), s)) return;
        std::vector<int> at;
        for (std::size_t k = 0; k < s.size(); ++k)
          if (s[k] == 1) at.push_back(static_cast<int>(k + 1));
        if (at.size() >= 2) ++want[{at[0], at[1]}];
      });
      ASSERT_EQ(table.size(), want.size());
      for (const auto& [ij, c] : want) ASSERT_EQ(table.at(ij), Count(static_cast<unsigned long>(c)));
    }
}

TEST(Counting, Completions) {
  const DiGraph src4 = build_star(4, Orientation::Source);
  // Car 2 may prefer the root or one of the two free leaves.
  EXPECT_EQ(count_completions(src4, 2, {2}), 3);
  EXPECT_EQ(count_completions(build_star(4, Orientation::Sink), 2, {1}), 3);
  EXPECT_EQ(count_completions(src4, 2, {2, 3}), 1);
  EXPECT_THROW(count_completions(build_star(4, Orientation::Sink), 2, {1, 1}), InvalidArgument);

  for (int n = 2; n <= 5; ++n)
    for (const auto& t : all_rooted_trees(n))
      for (auto o : {Orientation::Sink, Orientation::Source}) {
        const DiGraph d = to_digraph(t, o);
        const auto adj = adj_of(d);
        oracle::for_each_seq(n, 1, [&](const oracle::Seq& g) {
          for (int m = 1; m <= std::min(n, 4); ++m)
            ASSERT_EQ(count_completions(d, m, g), Count(static_cast<unsigned long>(oracle::completions(adj, m, g))));
        });
      }
}

TEST(Counting, MustParkHypothesis) {
  const DiGraph path = build_path(3, Orientation::Source);  // 1 -> 2 -> 3
  EXPECT_TRUE(check_must_park(path, {3}, 2, 2).ok);
  const auto occupied = check_must_park(path, {2}, 2, 2);
  EXPECT_FALSE(occupied.ok);
  EXPECT_NE(occupied.reason.find("occupied"), std::string::npos);
  const auto empty_below = check_must_park(path, {2}, 1, 2);
  EXPECT_FALSE(empty_below.ok);
  EXPECT_NE(empty_below.reason.find("downstream"), std::string::npos);
  // Two runs of (1,1) on the source star leave different occupancies.
  const auto ambiguous = check_must_park(build_star(4, Orientation::Source), {1, 1}, 2, 3);
  EXPECT_FALSE(ambiguous.ok);
  EXPECT_NE(ambiguous.reason.find("depends on the run"), std::string::npos);
  // The star centre has degree 3 and lies on a 2-vertex path from each leaf.
  EXPECT_TRUE(check_must_park(build_star(4, Orientation::Source), {}, 2, 2).ok);
  EXPECT_FALSE(check_must_park(build_star(4, Orientation::Source), {}, 2, 3).ok);
}

TEST(Counting, CompletionSplit) {
  const DiGraph path = build_path(3, Orientation::Source);
  const SplitCount split = count_completions_split(path, 2, {2}, 3);
  EXPECT_EQ(split.avoiding + split.reaching, count_completions(path, 2, {2}));
  EXPECT_EQ(split.avoiding, 1);  // car 2 prefers 1
  EXPECT_EQ(split.reaching, 2);  // car 2 prefers 2 or 3
  EXPECT_TRUE(split.hypothesis.ok);

  const SplitCount none = count_completions_split(path, 1, {2}, 3);
  EXPECT_EQ(none.avoiding, 1);
  EXPECT_EQ(none.reaching, 0);

  EXPECT_THROW(count_completions_split(DiGraph(3, {{1, 2}, {2, 1}}), 1, {}, 1), GraphError);

  for (int n = 2; n <= 5; ++n)
    for (const auto& t : all_rooted_trees(n)) {
      const DiGraph d = to_digraph(t, Orientation::Sink);
      for (Vertex v = 1; v <= n; ++v) {
        const SplitCount s = count_completions_split(d, std::min(n, 3), {}, v);
        ASSERT_EQ(s.avoiding + s.reaching, count_pf(d, std::min(n, 3)));
      }
    }
}

TEST(Counting, ThreadsFromEnvironment) {
  ::setenv("PARKLOT_THREADS", "3", 1);
  EXPECT_EQ(default_threads(), 3u);
  ::setenv("PARKLOT_THREADS", "zero", 1);
  EXPECT_GE(default_threads(), 1u);
  ::unsetenv("PARKLOT_THREADS");
}
