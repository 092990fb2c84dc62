#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace parklot {

/// Vertex labels are 1-based, matching the usual [n] convention.
using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Orientation tag. `Sink` and `Source` are only valid on rooted trees.
enum class Orientation { General, Sink, Source };

std::string to_string(Orientation o);
Orientation parse_orientation(const std::string& text);

/// Returned by `minleafdist` when the tree has no vertex of degree >= 3.
inline constexpr int kUnbounded = std::numeric_limits<int>::max();

/// Immutable directed graph on vertices 1..n with sorted adjacency lists.
///
/// Construction validates endpoints, self-loops and duplicate edges. When the
/// orientation tag is `Sink` or `Source` the graph must additionally be a tree
/// oriented toward (resp. away from) the root.
class DiGraph {
 public:
  DiGraph() = default;
  DiGraph(int n, const std::vector<Edge>& edges, std::optional<Vertex> root = std::nullopt,
          Orientation orientation = Orientation::General);

  int size() const noexcept { return n_; }
  std::optional<Vertex> root() const noexcept { return root_; }
  /// Root, or GraphError when the graph is unrooted.
  Vertex require_root() const;
  Orientation orientation() const noexcept { return orientation_; }
  bool is_tree() const noexcept { return orientation_ != Orientation::General; }

  const std::vector<Vertex>& out(Vertex v) const { return out_[check(v)]; }
  const std::vector<Vertex>& in(Vertex v) const { return in_[check(v)]; }
  /// Undirected neighbourhood, sorted ascending.
  std::vector<Vertex> neighbors(Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(out(v).size() + in(v).size()); }

  /// All edges, sorted lexicographically.
  std::vector<Edge> edges() const;
  std::size_t edge_count() const noexcept { return edge_count_; }
  bool max_out_degree_at_most_one() const noexcept;
  bool is_acyclic() const;
  /// Vertices reachable from `v` by a directed path, `v` included.
  std::vector<Vertex> reachable_from(Vertex v) const;

  bool operator==(const DiGraph& other) const = default;

 private:
  std::size_t check(Vertex v) const;

  int n_ = 0;
  std::optional<Vertex> root_;
  Orientation orientation_ = Orientation::General;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::size_t edge_count_ = 0;
};

/// Ordered vertex list w_1, ..., w_k of a directed path.
struct PathSeg {
  std::vector<Vertex> vertices;

  std::size_t size() const noexcept { return vertices.size(); }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  bool contains(Vertex v) const;
  bool operator==(const PathSeg&) const = default;
};

/// Star with center 1 and leaves 2..n.
DiGraph build_star(int n, Orientation orientation);

/// Orients an undirected tree toward (`Sink`) or away from (`Source`) the root.
DiGraph build_tree(int n, const std::vector<Edge>& undirected, Vertex root, Orientation orientation);

/// Path 1 - 2 - ... - n rooted at 1.
DiGraph build_path(int n, Orientation orientation);

/// Paths of the given lengths joined at root 1; leg vertices are labeled leg by leg.
DiGraph build_spider(const std::vector<int>& legs, Orientation orientation);

/// Reverses every edge; the root is kept and Sink/Source tags are swapped.
DiGraph reverse(const DiGraph& d);

/// The source orientation of a tagged tree (identity on source trees).
DiGraph source_view(const DiGraph& tree);

/// Children of the root, i.e. N(z).
std::vector<Vertex> root_neighbors(const DiGraph& tree);

/// Smallest-labeled leaf among those reached from `u` by a longest directed
/// path of the source orientation. A leaf returns itself.
Vertex leaf_of(const DiGraph& tree, Vertex u);

/// Smallest leaf label reachable from `u` in the source orientation.
Vertex smallest_leaf_below(const DiGraph& tree, Vertex u);

/// The unique directed path from u to v in the graph's own orientation.
PathSeg path_between(const DiGraph& tree, Vertex u, Vertex v);

/// Vertices adjacent to the path, excluding the path itself and the parent of
/// its first vertex (taken in the source orientation). Sorted ascending.
std::vector<Vertex> branch_neighborhood(const DiGraph& tree, const PathSeg& path);

/// Minimum vertex count of a path from a leaf to a vertex of undirected degree
/// at least three; `kUnbounded` when no such vertex exists.
int minleafdist(const DiGraph& tree);

/// How a flip-path picks the leaf it runs to.
enum class FlipLeafRule {
  SmallestLabel,  ///< smallest reachable leaf label
  LongestPath,    ///< `leaf_of`: longest path first, then smallest label
};

/// The disjoint flip-paths covering every non-root vertex, listed in the
/// order the recursion discovers them. Root children and branch
/// neighbourhoods are visited in ascending label order.
std::vector<PathSeg> flip_path_decomposition(const DiGraph& tree,
                                             FlipLeafRule rule = FlipLeafRule::SmallestLabel);

/// True when the tree is a path whose root is one of its endpoints.
bool is_end_rooted_path(const DiGraph& tree);

/// Unlabeled rooted tree in canonical (preorder level-sequence) labeling.
struct RootedTree {
  int n = 0;
  Vertex root = 1;
  std::vector<Edge> edges;  ///< (parent, child), parent < child
  std::vector<int> levels;  ///< level sequence, root at level 0
};

/// Every rooted tree on n unlabeled vertices, once each, 1 <= n <= 9.
std::vector<RootedTree> all_rooted_trees(int n);

/// Materializes a generated tree in the given orientation.
DiGraph to_digraph(const RootedTree& t, Orientation orientation);

}  // namespace parklot
