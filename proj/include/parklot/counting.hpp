#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>

#include "parklot/count.hpp"
#include "parklot/digraph.hpp"
#include "parklot/parking.hpp"

namespace parklot {

/// Enumeration limits and parallelism for the brute-force oracle.
struct CountOptions {
  /// Largest n^(free cars) the enumeration may visit.
  std::uint64_t budget = 100'000'000;
  /// Worker threads; 0 picks `default_threads()`.
  unsigned threads = 0;
};

/// PARKLOT_THREADS when set to a positive integer, else the hardware concurrency.
unsigned default_threads();

/// Preferences already fixed for cars 1..j.
using PrefixAssignment = PrefSeq;

/// |{s in [n]^m : s parks on d}|.
///
/// Enumerates [n]^m in lexicographic order, carrying the set of occupancies
/// reachable after each prefix; a prefix with no reachable occupancy prunes its
/// whole subtree. The space is split into chunks by the first free car's
/// preference and counted in parallel.
Count count_pf(const DiGraph& d, int m, const CountOptions& opts = {});

/// Same count, one `is_parking_function` call per sequence.
Count count_pf_by_sequence(const DiGraph& d, int m, const CountOptions& opts = {});

/// Parking functions split by the number of cars preferring the root.
std::map<int, Count> count_by_root_preference(const DiGraph& d, int m, const CountOptions& opts = {});

/// Parking functions on a sink tree in which no car prefers the root but some
/// car parks there.
Count count_case3a(const DiGraph& sink_tree, int m, const CountOptions& opts = {});

enum class PairMode {
  /// Cars i < j are the first two cars preferring the root.
  RootPair,
  /// Sink trees: no car prefers the root, car j parks at the root, and i, j
  /// are the only cars among 1..j preferring vertex s_j.
  LeafCollision,
};

using CarPair = std::pair<int, int>;  ///< 1-based (i, j), i < j

Count count_first_pair(const DiGraph& d, int m, int i, int j, PairMode mode, const CountOptions& opts = {});

/// Every non-empty (i, j) class from one enumeration pass.
std::map<CarPair, Count> first_pair_table(const DiGraph& d, int m, PairMode mode, const CountOptions& opts = {});

/// Number of ways cars |g|+1..m can choose preferences so that the whole
/// sequence parks. `g` itself must park.
Count count_completions(const DiGraph& d, int m, const PrefixAssignment& g, const CountOptions& opts = {});

/// Structural preconditions for splitting completions on whether `v` fills.
struct MustParkCheck {
  bool ok = false;
  std::string reason;  ///< empty when ok
};

/// Checks, against the unique occupancy left by `g`: `v` is empty, every
/// vertex downstream of `v` is occupied, and every vertex of degree >= 3 lies
/// at least `m - |g|` vertices (path count) away from `v`. Fails with a
/// reason when the occupancy after `g` depends on the run.
MustParkCheck check_must_park(const DiGraph& d, const PrefixAssignment& g, Vertex v, int m);

struct SplitCount {
  Count avoiding;  ///< no successful run parks a car at v
  Count reaching;  ///< some successful run parks a car at v
  MustParkCheck hypothesis;
};

/// Splits `count_completions(d, cars, g)` on whether `v` can end up occupied.
/// `d` must be acyclic. The hypothesis is evaluated with `m` total cars
/// (defaults to `cars`) and reported, never enforced.
SplitCount count_completions_split(const DiGraph& d, int cars, const PrefixAssignment& g, Vertex v,
                                   std::optional<int> m = std::nullopt, const CountOptions& opts = {});

}  // namespace parklot
