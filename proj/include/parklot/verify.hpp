#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "parklot/count.hpp"
#include "parklot/counting.hpp"
#include "parklot/digraph.hpp"
#include "parklot/report.hpp"

namespace parklot {

/// Oracle vs closed form on both stars, 1 <= m <= n <= max_n.
SuiteReport suite_star_exact(int max_n, const CountOptions& opts = {});

/// Oracle vs (n-m+1)(n+1)^(m-1) on the end-rooted sink path.
SuiteReport suite_classical(int max_n, const CountOptions& opts = {});

/// P(T,n) <= P(T~,n) on every rooted tree, equality exactly on end-rooted paths.
SuiteReport suite_full_capacity(int max_n, const CountOptions& opts = {});

/// P(T,m) > P(T~,m) for 2 <= m <= min(|N(z)|, minleafdist, max_m).
/// With `starlike`, spiders are also run up to min(|N(z)|, floor(sqrt n))
/// and reported as informational cases.
SuiteReport suite_sparse_tree(int max_n, int max_m, bool starlike = false, const CountOptions& opts = {});

/// Root-pair sums, leaf-collision sums against the case-3a total, and the
/// per-(i, j, f) star classes against their closed forms, on every rooted
/// tree with 2 <= n <= max_n.
SuiteReport suite_partition_identities(int max_n, const CountOptions& opts = {});

/// One completion-bound instance. Cars 1..|g| are fixed by `g`; item (2)
/// is evaluated with l = l2 and `m` total cars.
struct CrudeInstance {
  DiGraph graph;
  PrefixAssignment g;
  int l1 = 0;
  int l2 = 0;
  Vertex v = 1;
  int m = 0;
};

/// Seeded sample of instances on rooted trees with 3 <= n <= max_n. At most
/// `max_free` cars follow the prefix so each instance stays cheap.
std::vector<CrudeInstance> generate_crude_instances(int max_n, std::size_t count, std::uint64_t seed = 1,
                                                    int max_free = 4);

/// Item (1) as a rising-factorial bound, item (1) with a falling factorial
/// (informational), and item (2) when the structural hypothesis holds.
SuiteReport suite_crudebounds(const std::vector<CrudeInstance>& instances, const CountOptions& opts = {});

struct CrossoverRow {
  int m = 0;
  Count sink;
  Count source;
};

struct CrossoverResult {
  int n = 0;
  std::optional<int> m;         ///< from the formula scan
  std::optional<int> oracle_m;  ///< from brute-force counts, when checked
  bool oracle_checked = false;
  std::vector<CrossoverRow> rows;  ///< formula values for m = 1..n
};

/// Smallest m with source_star_count(n,m) > sink_star_count(n,m).
/// Counts both stars by brute force as well when n <= oracle_max_n.
CrossoverResult find_crossover(int n, int oracle_max_n = 7, const CountOptions& opts = {});

SuiteReport suite_crossover(int min_n, int max_n, int oracle_max_n = 7, const CountOptions& opts = {});

/// Star comparison without r for 3 < m <= 2n/3, and for each r over
/// 3 < m, rm <= n+1. One case per (r, n).
SuiteReport suite_star_comparison(int max_n, const std::vector<long>& rs = {2, 3, 4});

/// Both lemma inequalities over every in-hypothesis (a, b, r) with b <= max_b.
SuiteReport suite_star_lemmas(int max_b);

/// Flip involution, prefix closure, relabeling invariance, memoized vs naive
/// search, and P(D,1) = n.
SuiteReport suite_properties(int max_n, int max_m, const CountOptions& opts = {});

/// Whether flip* carries parking functions that leave the root empty to
/// parking functions of the reversed tree. Informational only.
SuiteReport suite_flip_transfer(int max_n, int max_m, const CountOptions& opts = {});

struct SuiteParams {
  int max_n = 0;  ///< 0 picks the suite's default
  int max_m = 0;
  std::uint64_t seed = 1;
};

/// Runs a suite by name; see `suite_names()`.
SuiteReport run_suite(const std::string& name, const SuiteParams& params = {}, const CountOptions& opts = {});
std::vector<std::string> suite_names();

/// Level sequence of a tree as "0,1,1,2", for case parameters.
std::string levels_text(const RootedTree& t);
/// Edge list as "1>2,2>3".
std::string edges_text(const DiGraph& d);

}  // namespace parklot
