#include "parklot/digraph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "parklot/error.hpp"

namespace parklot {

std::string to_string(Orientation o) {
  switch (o) {
    case Orientation::Sink:
      return "sink";
    case Orientation::Source:
      return "source";
    case Orientation::General:
      break;
  }
  return "general";
}

Orientation parse_orientation(const std::string& text) {
  if (text == "sink") return Orientation::Sink;
  if (text == "source") return Orientation::Source;
  if (text == "general") return Orientation::General;
  throw InvalidArgument("unknown orientation '" + text + "' (expected sink|source|general)");
}

DiGraph::DiGraph(int n, const std::vector<Edge>& edges, std::optional<Vertex> root,
                 Orientation orientation)
    : n_(n), root_(root), orientation_(orientation), out_(n + 1), in_(n + 1) {
  if (n < 1) throw GraphError("graph must have at least one vertex");
  if (root && (*root < 1 || *root > n))
    throw GraphError("root " + std::to_string(*root) + " outside 1.." + std::to_string(n));
  for (auto [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n)
      throw GraphError("edge " + std::to_string(u) + "->" + std::to_string(v) + " has an endpoint outside 1.." +
                       std::to_string(n));
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    out_[u].push_back(v);
    in_[v].push_back(u);
  }
  for (int v = 1; v <= n; ++v) {
    std::sort(out_[v].begin(), out_[v].end());
    if (std::adjacent_find(out_[v].begin(), out_[v].end()) != out_[v].end())
      throw GraphError("duplicate edge leaving vertex " + std::to_string(v));
    std::sort(in_[v].begin(), in_[v].end());
  }
  edge_count_ = edges.size();

  if (orientation == Orientation::General) return;
  if (!root) throw GraphError("a " + to_string(orientation) + " tree needs a root");
  if (edge_count_ != static_cast<std::size_t>(n - 1))
    throw GraphError("a tree on " + std::to_string(n) + " vertices has " + std::to_string(n - 1) + " edges, got " +
                     std::to_string(edge_count_));
  for (int v = 1; v <= n; ++v) {
    const auto& forward = orientation == Orientation::Sink ? out_[v] : in_[v];
    const std::size_t want = v == *root ? 0 : 1;
    if (forward.size() != want)
      throw GraphError("vertex " + std::to_string(v) + " is not oriented " +
                       (orientation == Orientation::Sink ? "toward" : "away from") + " the root");
  }
  // n-1 edges plus a parent for every non-root vertex: connected iff every
  // vertex climbs to the root without repeating.
  for (int v = 1; v <= n; ++v) {
    int at = v;
    for (int steps = 0; at != *root; ++steps) {
      if (steps > n) throw GraphError("orientation contains a cycle");
      at = orientation == Orientation::Sink ? out_[at].front() : in_[at].front();
    }
  }
}

std::size_t DiGraph::check(Vertex v) const {
  if (v < 1 || v > n_) throw InvalidArgument("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
  return static_cast<std::size_t>(v);
}

Vertex DiGraph::require_root() const {
  if (!root_) throw GraphError("graph has no root");
  return *root_;
}

std::vector<Vertex> DiGraph::neighbors(Vertex v) const {
  std::vector<Vertex> all;
  std::merge(out(v).begin(), out(v).end(), in(v).begin(), in(v).end(), std::back_inserter(all));
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

std::vector<Edge> DiGraph::edges() const {
  std::vector<Edge> result;
  result.reserve(edge_count_);
  for (int u = 1; u <= n_; ++u)
    for (Vertex v : out_[u]) result.emplace_back(u, v);
  return result;
}

bool DiGraph::max_out_degree_at_most_one() const noexcept {
  return std::all_of(out_.begin(), out_.end(), [](const auto& a) { return a.size() <= 1; });
}

bool DiGraph::is_acyclic() const {
  std::vector<int> indeg(n_ + 1);
  for (int v = 1; v <= n_; ++v) indeg[v] = static_cast<int>(in_[v].size());
  std::vector<Vertex> ready;
  for (int v = 1; v <= n_; ++v)
    if (indeg[v] == 0) ready.push_back(v);
  int seen = 0;
  while (!ready.empty()) {
    Vertex u = ready.back();
    ready.pop_back();
    ++seen;
    for (Vertex w : out_[u])
      if (--indeg[w] == 0) ready.push_back(w);
  }
  return seen == n_;
}

std::vector<Vertex> DiGraph::reachable_from(Vertex v) const {
  std::vector<char> seen(n_ + 1, 0);
  std::vector<Vertex> stack{static_cast<Vertex>(check(v))};
  seen[v] = 1;
  std::vector<Vertex> result;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    result.push_back(u);
    for (Vertex w : out_[u])
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  std::sort(result.begin(), result.end());
  return result;
}

bool PathSeg::contains(Vertex v) const { return std::find(vertices.begin(), vertices.end(), v) != vertices.end(); }

DiGraph build_star(int n, Orientation orientation) {
  if (n < 1) throw GraphError("empty graph: a star needs at least one vertex");
  std::vector<Edge> edges;
  for (int leaf = 2; leaf <= n; ++leaf) edges.emplace_back(1, leaf);
  return build_tree(n, edges, 1, orientation);
}

DiGraph build_tree(int n, const std::vector<Edge>& undirected, Vertex root, Orientation orientation) {
  if (orientation == Orientation::General) throw InvalidArgument("build_tree needs a sink or source orientation");
  if (n < 1) throw GraphError("graph must have at least one vertex");
  if (root < 1 || root > n)
    throw GraphError("root " + std::to_string(root) + " outside 1.." + std::to_string(n));
  if (undirected.size() != static_cast<std::size_t>(n - 1))
    throw GraphError("edge list is not a tree: " + std::to_string(undirected.size()) + " edges on " +
                     std::to_string(n) + " vertices");
  std::vector<std::vector<Vertex>> adj(n + 1);
  for (auto [u, v] : undirected) {
    if (u < 1 || u > n || v < 1 || v > n || u == v)
      throw GraphError("bad edge " + std::to_string(u) + "-" + std::to_string(v));
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<Vertex> parent(n + 1, 0);
  std::vector<char> seen(n + 1, 0);
  std::deque<Vertex> queue{root};
  seen[root] = 1;
  std::vector<Edge> oriented;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : adj[u]) {
      if (w == parent[u]) continue;
      if (seen[w]) throw GraphError("edge list contains a cycle");
      seen[w] = 1;
      parent[w] = u;
      oriented.push_back(orientation == Orientation::Source ? Edge{u, w} : Edge{w, u});
      queue.push_back(w);
    }
  }
  if (std::count(seen.begin() + 1, seen.end(), 1) != n) throw GraphError("edge list is disconnected");
  return DiGraph(n, oriented, root, orientation);
}

DiGraph build_path(int n, Orientation orientation) {
  if (n < 1) throw GraphError("empty graph: a path needs at least one vertex");
  std::vector<Edge> edges;
  for (int v = 2; v <= n; ++v) edges.emplace_back(v - 1, v);
  return build_tree(n, edges, 1, orientation);
}

DiGraph build_spider(const std::vector<int>& legs, Orientation orientation) {
  std::vector<Edge> edges;
  int next = 2;
  for (int len : legs) {
    if (len < 1) throw InvalidArgument("spider legs must have positive length");
    Vertex prev = 1;
    for (int k = 0; k < len; ++k, ++next) {
      edges.emplace_back(prev, next);
      prev = next;
    }
  }
  return build_tree(next - 1, edges, 1, orientation);
}

DiGraph reverse(const DiGraph& d) {
  std::vector<Edge> flipped;
  for (auto [u, v] : d.edges()) flipped.emplace_back(v, u);
  Orientation o = d.orientation();
  if (o == Orientation::Sink)
    o = Orientation::Source;
  else if (o == Orientation::Source)
    o = Orientation::Sink;
  return DiGraph(d.size(), flipped, d.root(), o);
}

DiGraph source_view(const DiGraph& tree) {
  switch (tree.orientation()) {
    case Orientation::Source:
      return tree;
    case Orientation::Sink:
      return reverse(tree);
    case Orientation::General:
      break;
  }
  throw GraphError("operation requires a sink or source tree");
}

std::vector<Vertex> root_neighbors(const DiGraph& tree) {
  return tree.neighbors(tree.require_root());
}

namespace {

// Longest downward path in the source orientation: returns
// (vertex count, smallest leaf achieving it).
std::pair<int, Vertex> deepest_leaf(const DiGraph& source, Vertex u) {
  const auto& kids = source.out(u);
  if (kids.empty()) return {1, u};
  std::pair<int, Vertex> best{0, 0};
  for (Vertex c : kids) {
    auto [len, leaf] = deepest_leaf(source, c);
    if (len > best.first || (len == best.first && leaf < best.second)) best = {len, leaf};
  }
  return {best.first + 1, best.second};
}

Vertex parent_in_source(const DiGraph& source, Vertex v) {
  const auto& p = source.in(v);
  return p.empty() ? 0 : p.front();
}

}  // namespace

Vertex leaf_of(const DiGraph& tree, Vertex u) {
  DiGraph source = source_view(tree);
  return deepest_leaf(source, u).second;
}

Vertex smallest_leaf_below(const DiGraph& tree, Vertex u) {
  DiGraph source = source_view(tree);
  Vertex best = 0;
  for (Vertex w : source.reachable_from(u))
    if (source.out(w).empty() && (best == 0 || w < best)) best = w;
  return best;
}

PathSeg path_between(const DiGraph& tree, Vertex u, Vertex v) {
  std::vector<Vertex> from(tree.size() + 1, 0);
  std::deque<Vertex> queue{u};
  tree.out(u);  // range check
  tree.out(v);
  from[u] = u;
  while (!queue.empty() && from[v] == 0) {
    Vertex x = queue.front();
    queue.pop_front();
    for (Vertex w : tree.out(x))
      if (from[w] == 0) {
        from[w] = x;
        queue.push_back(w);
      }
  }
  if (from[v] == 0)
    throw InvalidArgument("no directed path from " + std::to_string(u) + " to " + std::to_string(v));
  PathSeg path;
  for (Vertex x = v; x != u; x = from[x]) path.vertices.push_back(x);
  path.vertices.push_back(u);
  std::reverse(path.vertices.begin(), path.vertices.end());
  return path;
}

std::vector<Vertex> branch_neighborhood(const DiGraph& tree, const PathSeg& path) {
  if (path.vertices.empty()) return {};
  DiGraph source = source_view(tree);
  const Vertex excluded = parent_in_source(source, path.front());
  std::set<Vertex> result;
  for (Vertex w : path.vertices)
    for (Vertex x : source.neighbors(w))
      if (x != excluded && !path.contains(x)) result.insert(x);
  return {result.begin(), result.end()};
}

int minleafdist(const DiGraph& tree) {
  const Vertex root = tree.require_root();
  const int n = tree.size();
  int best = kUnbounded;
  for (Vertex leaf = 1; leaf <= n; ++leaf) {
    if (leaf == root || tree.degree(leaf) != 1) continue;
    std::vector<int> dist(n + 1, 0);
    std::deque<Vertex> queue{leaf};
    dist[leaf] = 1;
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      if (tree.degree(u) >= 3) {
        best = std::min(best, dist[u]);
        break;
      }
      for (Vertex w : tree.neighbors(u))
        if (dist[w] == 0) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
    }
  }
  return best;
}

std::vector<PathSeg> flip_path_decomposition(const DiGraph& tree, FlipLeafRule rule) {
  DiGraph source = source_view(tree);
  std::vector<PathSeg> result;
  std::function<void(Vertex)> grow = [&](Vertex u) {
    Vertex leaf = rule == FlipLeafRule::LongestPath ? deepest_leaf(source, u).second : smallest_leaf_below(source, u);
    PathSeg seg = path_between(source, u, leaf);
    std::vector<Vertex> branches = branch_neighborhood(source, seg);
    result.push_back(std::move(seg));
    for (Vertex b : branches) grow(b);
  };
  for (Vertex u : source.out(source.require_root())) grow(u);
  return result;
}

bool is_end_rooted_path(const DiGraph& tree) {
  const Vertex root = tree.require_root();
  if (tree.size() == 1) return true;
  if (tree.degree(root) != 1) return false;
  for (Vertex v = 1; v <= tree.size(); ++v)
    if (tree.degree(v) > 2) return false;
  return true;
}

}  // namespace parklot
