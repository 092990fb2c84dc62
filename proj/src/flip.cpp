#include "parklot/flip.hpp"

#include <algorithm>

#include "parklot/error.hpp"

namespace parklot {

FlipPlan::FlipPlan(const DiGraph& tree, FlipLeafRule rule)
    : segments_(flip_path_decomposition(tree, rule)), map_(tree.size() + 1) {
  for (Vertex v = 0; v <= tree.size(); ++v) map_[v] = v;
  for (const PathSeg& seg : segments_) {
    const auto& w = seg.vertices;
    for (std::size_t k = 0; k < w.size(); ++k) map_[w[k]] = w[w.size() - 1 - k];
  }
}

Vertex FlipPlan::image(Vertex v) const {
  if (v < 1 || v >= static_cast<Vertex>(map_.size()))
    throw InvalidArgument("vertex " + std::to_string(v) + " outside the tree");
  return map_[v];
}

PrefSeq FlipPlan::apply(std::span<const Vertex> s) const {
  PrefSeq out;
  out.reserve(s.size());
  for (Vertex v : s) out.push_back(image(v));
  return out;
}

PrefSeq flip_on_path(const PathSeg& path, std::span<const Vertex> s) {
  const auto& w = path.vertices;
  PrefSeq out(s.begin(), s.end());
  for (Vertex& pref : out) {
    auto it = std::find(w.begin(), w.end(), pref);
    if (it != w.end()) pref = w[w.size() - 1 - static_cast<std::size_t>(it - w.begin())];
  }
  return out;
}

PrefSeq flip_star(const DiGraph& tree, std::span<const Vertex> s) { return FlipPlan(tree).apply(s); }

Vertex flip_star_vertex(const DiGraph& tree, Vertex v) { return FlipPlan(tree).image(v); }

}  // namespace parklot
