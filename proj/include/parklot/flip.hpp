#pragma once

#include <span>
#include <vector>

#include "parklot/digraph.hpp"
#include "parklot/parking.hpp"

namespace parklot {

/// The global flip as a vertex permutation: each flip-path is reversed
/// (w_k <-> w_{len-k+1}) and the root is fixed. Built from the source
/// orientation, so a tree and its reverse share one plan.
class FlipPlan {
 public:
  explicit FlipPlan(const DiGraph& tree, FlipLeafRule rule = FlipLeafRule::SmallestLabel);

  const std::vector<PathSeg>& segments() const noexcept { return segments_; }
  Vertex image(Vertex v) const;
  /// 1-indexed permutation; entry 0 is unused.
  const std::vector<Vertex>& vertex_map() const noexcept { return map_; }
  PrefSeq apply(std::span<const Vertex> s) const;

 private:
  std::vector<PathSeg> segments_;
  std::vector<Vertex> map_;
};

/// Reverses the preferences of the cars whose preference lies on `path`.
PrefSeq flip_on_path(const PathSeg& path, std::span<const Vertex> s);

PrefSeq flip_star(const DiGraph& tree, std::span<const Vertex> s);
Vertex flip_star_vertex(const DiGraph& tree, Vertex v);

}  // namespace parklot
