#include "parklot/parking.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <unordered_set>

#include "parklot/error.hpp"

namespace parklot {

PrefSeq parse_prefs(std::string_view text) {
  PrefSeq s;
  if (text.empty()) return s;
  std::size_t pos = 0;
  for (;;) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view field = text.substr(pos, comma == std::string_view::npos ? text.size() - pos : comma - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
      throw ParseError(0, "bad preference '" + std::string(field) + "' in '" + std::string(text) + "'");
    if (value < 1) throw ParseError(0, "preferences are 1-indexed, got " + std::to_string(value));
    s.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return s;
}

std::string format_prefs(std::span<const Vertex> s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out;
}

ParkingLot::ParkingLot(const DiGraph& d) : n_(d.size()), out_mask_(d.size() + 1, 0) {
  if (n_ > kMaxSearchVertices)
    throw InvalidArgument("parking search supports at most " + std::to_string(kMaxSearchVertices) + " vertices");
  for (Vertex v = 1; v <= n_; ++v)
    for (Vertex w : d.out(v)) out_mask_[v] |= vertex_bit(w);
}

Occupancy ParkingLot::feasible(Occupancy occupied, Vertex start) const {
  const Occupancy start_bit = vertex_bit(start);
  if (!(occupied & start_bit)) return start_bit;
  Occupancy visited = start_bit;
  Occupancy frontier = start_bit;
  Occupancy spots = 0;
  while (frontier) {
    const Vertex v = std::countr_zero(frontier) + 1;
    frontier &= frontier - 1;
    const Occupancy next = out_mask_[v] & ~visited;
    visited |= next;
    spots |= next & ~occupied;
    frontier |= next & occupied;
  }
  return spots;
}

void ParkingLot::advance(std::span<const Occupancy> states, Vertex pref, std::vector<Occupancy>& out) const {
  out.clear();
  for (Occupancy occ : states) {
    Occupancy spots = feasible(occ, pref);
    while (spots) {
      const Occupancy bit = spots & (~spots + 1);
      spots &= spots - 1;
      out.push_back(occ | bit);
    }
  }
  if (out.size() > 1) {
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
}

void validate_prefs(const DiGraph& d, std::span<const Vertex> s) {
  if (s.size() > static_cast<std::size_t>(d.size()))
    throw InvalidArgument(std::to_string(s.size()) + " cars exceed the " + std::to_string(d.size()) + " vertices");
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] < 1 || s[i] > d.size())
      throw InvalidArgument("car " + std::to_string(i + 1) + " prefers " + std::to_string(s[i]) + ", outside 1.." +
                            std::to_string(d.size()));
}

std::vector<Vertex> feasible_spots(const DiGraph& d, std::span<const Vertex> occupied, Vertex start) {
  d.out(start);
  ParkingLot lot(d);
  Occupancy occ = 0;
  for (Vertex v : occupied) {
    d.out(v);
    occ |= vertex_bit(v);
  }
  std::vector<Vertex> result;
  for (Occupancy spots = lot.feasible(occ, start); spots; spots &= spots - 1)
    result.push_back(std::countr_zero(spots) + 1);
  return result;
}

namespace {

class WitnessSearch {
 public:
  WitnessSearch(const DiGraph& d, std::span<const Vertex> s, bool memoize)
      : lot_(d), s_(s), memoize_(memoize), failed_(s.size()), parked_(s.size()) {}

  bool run() { return visit(0, 0); }
  std::vector<Vertex> witness() const { return parked_; }

 private:
  bool visit(std::size_t car, Occupancy occ) {
    if (car == s_.size()) return true;
    if (memoize_ && failed_[car].contains(occ)) return false;
    for (Occupancy spots = lot_.feasible(occ, s_[car]); spots; spots &= spots - 1) {
      const Vertex v = std::countr_zero(spots) + 1;
      parked_[car] = v;
      if (visit(car + 1, occ | vertex_bit(v))) return true;
    }
    if (memoize_) failed_[car].insert(occ);
    return false;
  }

  ParkingLot lot_;
  std::span<const Vertex> s_;
  bool memoize_;
  std::vector<std::unordered_set<Occupancy>> failed_;
  std::vector<Vertex> parked_;
};

}  // namespace

std::optional<WitnessAssignment> find_witness(const DiGraph& d, std::span<const Vertex> s) {
  validate_prefs(d, s);
  WitnessSearch search(d, s, true);
  if (!search.run()) return std::nullopt;
  return WitnessAssignment{search.witness()};
}

bool is_parking_function(const DiGraph& d, std::span<const Vertex> s) { return find_witness(d, s).has_value(); }

bool is_parking_function_naive(const DiGraph& d, std::span<const Vertex> s) {
  validate_prefs(d, s);
  return WitnessSearch(d, s, false).run();
}

ParkOutcome park_deterministic(const DiGraph& d, std::span<const Vertex> s) {
  if (!d.max_out_degree_at_most_one())
    throw InvalidArgument("deterministic parking needs out-degree at most one everywhere");
  validate_prefs(d, s);
  std::vector<char> taken(d.size() + 1, 0);
  ParkOutcome result;
  for (std::size_t car = 0; car < s.size(); ++car) {
    Vertex at = s[car];
    // Out-degree <= 1 means the walk is forced; a cycle of occupied vertices
    // is detected by the step bound.
    for (int steps = 0; taken[at]; ++steps) {
      const auto& next = d.out(at);
      if (next.empty() || steps > d.size()) {
        result.failed_car = car + 1;
        return result;
      }
      at = next.front();
    }
    taken[at] = 1;
    result.parked_at.push_back(at);
  }
  return result;
}

bool parked_root_flag(const DiGraph& sink_tree, std::span<const Vertex> s) {
  if (sink_tree.orientation() != Orientation::Sink) throw InvalidArgument("parked_root_flag needs a sink tree");
  const ParkOutcome outcome = park_deterministic(sink_tree, s);
  if (!outcome.parked()) throw InvalidArgument("sequence " + format_prefs(s) + " is not a parking function");
  const Vertex z = sink_tree.require_root();
  return std::find(outcome.parked_at.begin(), outcome.parked_at.end(), z) != outcome.parked_at.end();
}

}  // namespace parklot
