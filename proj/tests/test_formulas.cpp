#include <gtest/gtest.h>

#include "parklot/counting.hpp"
#include "parklot/error.hpp"
#include "parklot/formulas.hpp"

using namespace parklot;

namespace {

// Plain-loop reference values; no shared helpers with the library.
Count ref_falling(long x, long k) {
  Count p = 1;
  for (long t = 0; t < k; ++t) p *= (x - t);
  return k > x ? Count(0) : p;
}

Count ref_binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Count p = 1;
  for (long t = 1; t <= k; ++t) p = p * (n - k + t) / t;
  return p;
}

}  // namespace

TEST(Formulas, Factorials) {
  EXPECT_EQ(falling(5, 2), 20);
  EXPECT_EQ(falling(3, 4), 0);
  EXPECT_EQ(falling(0, 0), 1);
  EXPECT_EQ(rising(3, 2), 12);
  EXPECT_EQ(rising(0, 3), 0);
  EXPECT_EQ(binomial(10, 3), 120);
  EXPECT_EQ(binomial(4, 5), 0);
  EXPECT_THROW(falling(-1, 2), InvalidArgument);
  for (long n = 0; n <= 40; ++n)
    for (long k = 0; k <= n + 1; ++k) {
      ASSERT_EQ(falling(n, k), ref_falling(n, k));
      ASSERT_EQ(binomial(n, k), ref_binomial(n, k));
    }
}

TEST(Formulas, ClosedForms) {
  EXPECT_EQ(classical_count(3, 2), 8);
  EXPECT_EQ(classical_count(3, 3), 16);
  EXPECT_EQ(sink_star_count(4, 2), 15);
  EXPECT_EQ(sink_star_count(4, 4), 60);
  EXPECT_EQ(source_star_count(4, 2), 13);
  EXPECT_EQ(source_star_count(4, 4), 73);
  for (long n = 1; n <= 20; ++n) {
    EXPECT_EQ(classical_count(n, 1), n);
    EXPECT_EQ(sink_star_count(n, 1), n);
    EXPECT_EQ(source_star_count(n, 1), n);
  }
  EXPECT_THROW(classical_count(3, 4), InvalidArgument);
  EXPECT_THROW(sink_star_count(3, 0), InvalidArgument);
}

TEST(Formulas, Bounds) {
  const Bounds b = bounds(4, 2);
  EXPECT_EQ(b.sink_lower, 15);
  EXPECT_EQ(b.source_lower, 13);
  EXPECT_EQ(b.upper, 15);
  const Bounds b53 = bounds(5, 3);
  EXPECT_EQ(b53.sink_lower, 96);
  EXPECT_EQ(b53.source_lower, count_pf(build_star(5, Orientation::Source), 3));
  EXPECT_EQ(b53.upper, 108);
  EXPECT_EQ(b53.sink_lower, count_pf(build_star(5, Orientation::Sink), 3));
}

TEST(Formulas, StarPairPartition) {
  EXPECT_EQ(star_pair_partition(7, 4, 4, StarSide::Source), 1);
  EXPECT_EQ(star_pair_partition(7, 4, 2, StarSide::Sink), 120);
  EXPECT_EQ(star_pair_partition(7, 4, 2, StarSide::Source), 43);
  EXPECT_THROW(star_pair_partition(7, 4, 1, StarSide::Sink), InvalidArgument);
  EXPECT_THROW(star_pair_partition(3, 4, 2, StarSide::Sink), InvalidArgument);

  // j = 2: U is empty, so the class is counted directly on the stars.
  const DiGraph src = build_star(7, Orientation::Source);
  const DiGraph snk = build_star(7, Orientation::Sink);
  EXPECT_EQ(count_completions(src, 4, {1, 1}), 43);
  Count sink_side = 0;
  for (Vertex x = 2; x <= 7; ++x) sink_side += count_completions(snk, 4, {x, x});
  EXPECT_EQ(sink_side, 120);
}

TEST(Formulas, LemmaPrecise) {
  const auto eq = lemma_precise(0, 1, 2);
  EXPECT_EQ(eq.lhs, 2);
  EXPECT_EQ(eq.rhs, 2);
  EXPECT_TRUE(eq.holds);
  EXPECT_TRUE(eq.in_hypothesis);
  const auto a = lemma_precise(1, 3, 2);
  EXPECT_EQ(a.lhs, 10);
  EXPECT_EQ(a.rhs, 12);
  const auto b = lemma_precise(2, 5, 2);
  EXPECT_EQ(b.lhs, 86);
  EXPECT_EQ(b.rhs, 120);
  EXPECT_TRUE(b.holds);
  EXPECT_FALSE(lemma_precise(3, 5, 2).in_hypothesis);
}

TEST(Formulas, LemmaPremaxbound) {
  const auto a = lemma_premaxbound(0, 1);
  EXPECT_EQ(a.lhs, 1);
  EXPECT_EQ(a.rhs, 2);
  EXPECT_TRUE(a.holds);
  const auto b = lemma_premaxbound(2, 3);
  EXPECT_EQ(b.lhs, 21);
  EXPECT_EQ(b.rhs, 24);
  const auto c = lemma_premaxbound(12, 18);
  EXPECT_TRUE(c.in_hypothesis);
  EXPECT_TRUE(c.holds);
}

TEST(Formulas, StarComparison) {
  const auto a = star_comparison(7, 4, 2);
  EXPECT_EQ(a.lhs, 410);
  EXPECT_EQ(a.rhs, 720);
  EXPECT_TRUE(a.holds);
  EXPECT_TRUE(a.in_hypothesis);
  const auto b = star_comparison(6, 4);
  EXPECT_TRUE(b.in_hypothesis);
  EXPECT_TRUE(b.holds);
  EXPECT_TRUE(star_comparison(9, 4, 2).holds);
  // At m = n the source star wins, so the comparison fails outside the hypotheses.
  const auto full = star_comparison(6, 6);
  EXPECT_FALSE(full.in_hypothesis);
  EXPECT_FALSE(full.holds);
}

TEST(Formulas, Registry) {
  EXPECT_EQ(evaluate_formula("sink-star", {4, 2}).values.at(0).second, 15);
  const auto b = evaluate_formula("bounds", {4, 2});
  ASSERT_EQ(b.values.size(), 3u);
  EXPECT_EQ(b.values[1].first, "source_lower");
  const auto sc = evaluate_formula("star-comparison", {7, 4, 2});
  ASSERT_TRUE(sc.check);
  EXPECT_TRUE(sc.check->holds);
  EXPECT_EQ(sc.provenance, "star_comparison(n=7, m=4, r=2)");
  EXPECT_THROW(evaluate_formula("nope", {}), InvalidArgument);
  EXPECT_THROW(evaluate_formula("falling", {1}), InvalidArgument);
  EXPECT_EQ(formula_names().size(), 12u);
}
