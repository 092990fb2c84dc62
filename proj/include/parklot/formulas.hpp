#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parklot/count.hpp"

namespace parklot {

/// x(x-1)...(x-k+1); zero once k > x.
Count falling(long x, long k);
/// x(x+1)...(x+k-1).
Count rising(long x, long k);
Count binomial(long n, long k);

/// (n-m+1)(n+1)^(m-1): parking functions on the directed path.
Count classical_count(long n, long m);
/// n^(m falling) + C(m,2) (n-1)^(m-1 falling): parking functions on the sink star.
Count sink_star_count(long n, long m);
/// sum_i C(m,i) (n-1)^(m-i falling): parking functions on the source star.
Count source_star_count(long n, long m);

struct Bounds {
  Count sink_lower;    ///< lower bound for every sink tree (the sink star)
  Count source_lower;  ///< lower bound for every source tree (the source star)
  Count upper;         ///< shared upper bound (the directed path)
};
Bounds bounds(long n, long m);

enum class StarSide { Sink, Source };

/// Size of one (i, j, f) class of the star partition:
/// source: sum_l C(m-j,l) (n-j+1)^(l falling); sink: (n-j+1)(n-j)^(m-j falling).
Count star_pair_partition(long n, long m, long j, StarSide side);

/// Both sides of an inequality, whether it holds, and whether the arguments
/// satisfied the stated hypotheses. Out-of-hypothesis values are still computed.
struct InequalityCheck {
  Count lhs;
  Count rhs;
  bool holds = false;
  bool in_hypothesis = false;
};

/// r * sum_{l<=a} C(a,l)(b+1)^(l falling)  <=  (b+1) b^(a falling),
/// under 0 <= a <= b-1, r(a+1) <= b+1, r >= 2.
InequalityCheck lemma_precise(long a, long b, long r);

/// sum_{l<=a} C(a,l)(b+1)^(l falling)  <  (b+1) b^(a falling),
/// under 0 <= a <= b-1, 3a <= 2b.
InequalityCheck lemma_premaxbound(long a, long b);

/// r * sum_{i>=2} C(m,i)(n-1)^(m-i falling)  <  C(m,2)(n-1)^(m-1 falling).
/// With r: 3 < m and r m <= n+1. Without r (taken as 1): 3 < m and 3m <= 2n.
InequalityCheck star_comparison(long n, long m, std::optional<long> r = std::nullopt);

/// A named formula evaluation, as exposed on the command line.
struct FormulaValue {
  std::string provenance;  ///< e.g. "sink_star_count(n=4, m=2)"
  std::vector<std::pair<std::string, Count>> values;
  std::optional<InequalityCheck> check;
};

/// Names: falling, rising, binomial, classical, sink-star, source-star, bounds,
/// star-pair-sink, star-pair-source, precise, premaxbound, star-comparison.
FormulaValue evaluate_formula(const std::string& name, const std::vector<long>& args);
std::vector<std::string> formula_names();

}  // namespace parklot
