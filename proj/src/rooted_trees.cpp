#include "parklot/digraph.hpp"
#include "parklot/error.hpp"

namespace parklot {

std::vector<RootedTree> all_rooted_trees(int n) {
  if (n < 1 || n > 9) throw InvalidArgument("rooted-tree generation supports 1 <= n <= 9");
  // Level-sequence successor enumeration, root at level 1, starting from the
  // path and ending at the star.
  std::vector<int> level(n);
  for (int i = 0; i < n; ++i) level[i] = i + 1;
  std::vector<RootedTree> trees;
  for (;;) {
    RootedTree t;
    t.n = n;
    t.root = 1;
    for (int i = 0; i < n; ++i) t.levels.push_back(level[i] - 1);
    for (int i = 1; i < n; ++i) {
      int p = i - 1;
      while (level[p] != level[i] - 1) --p;
      t.edges.emplace_back(p + 1, i + 1);
    }
    trees.push_back(std::move(t));

    int p = n - 1;
    while (p >= 0 && level[p] <= 2) --p;
    if (p < 0) break;
    int q = p - 1;
    while (level[q] != level[p] - 1) --q;
    for (int i = p; i < n; ++i) level[i] = level[i - (p - q)];
  }
  return trees;
}

DiGraph to_digraph(const RootedTree& t, Orientation orientation) {
  return build_tree(t.n, t.edges, t.root, orientation);
}

}  // namespace parklot
