#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "parklot/digraph.hpp"

namespace parklot {

/// Car preferences; entry i is the vertex car i+1 starts at.
using PrefSeq = std::vector<Vertex>;

/// Occupied vertices as a bit set, bit v-1 for vertex v. Limits search to n <= 64.
using Occupancy = std::uint64_t;

inline constexpr int kMaxSearchVertices = 64;

constexpr Occupancy vertex_bit(Vertex v) noexcept { return Occupancy{1} << (v - 1); }

/// Parses "6,6,6,10" (1-indexed, no spaces). The empty string is the empty sequence.
PrefSeq parse_prefs(std::string_view text);
std::string format_prefs(std::span<const Vertex> s);

/// Bit-set view of a digraph for the parking search.
///
/// A car arriving at an occupied vertex may move along any out-edge, and it
/// stops at the first unoccupied vertex it reaches. The spots a car can end up
/// in are therefore the unoccupied vertices reachable from its preference
/// through occupied vertices only.
class ParkingLot {
 public:
  explicit ParkingLot(const DiGraph& d);

  int size() const noexcept { return n_; }
  Occupancy feasible(Occupancy occupied, Vertex start) const;
  /// Every occupancy reachable by parking one more car preferring `pref`,
  /// from any of `states`. Output is sorted and deduplicated.
  void advance(std::span<const Occupancy> states, Vertex pref, std::vector<Occupancy>& out) const;

 private:
  int n_;
  std::vector<Occupancy> out_mask_;
};

/// Unoccupied vertices a car starting at `start` can park at, ascending.
std::vector<Vertex> feasible_spots(const DiGraph& d, std::span<const Vertex> occupied, Vertex start);

/// Where each car parked in one successful run of the process.
struct WitnessAssignment {
  std::vector<Vertex> parked_at;
};

/// Depth-first search over per-car feasible spots, memoized on
/// (car index, occupancy). Returns the first witness in ascending spot order.
std::optional<WitnessAssignment> find_witness(const DiGraph& d, std::span<const Vertex> s);
bool is_parking_function(const DiGraph& d, std::span<const Vertex> s);

/// Memo-free backtracking; only used to cross-check the memoized search.
bool is_parking_function_naive(const DiGraph& d, std::span<const Vertex> s);

struct ParkOutcome {
  std::vector<Vertex> parked_at;        ///< one entry per car that parked
  std::optional<std::size_t> failed_car;  ///< 1-based index of the first car that could not park
  bool parked() const noexcept { return !failed_car; }
};

/// Runs the (unique) process on a digraph with out-degree <= 1 everywhere.
ParkOutcome park_deterministic(const DiGraph& d, std::span<const Vertex> s);

/// Whether some car ends at the root of a sink tree; `s` must park.
bool parked_root_flag(const DiGraph& sink_tree, std::span<const Vertex> s);

/// Range-checks a preference sequence against the graph and |s| <= n.
void validate_prefs(const DiGraph& d, std::span<const Vertex> s);

}  // namespace parklot
