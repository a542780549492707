#include "infgraph/multigraph.hpp"

#include <algorithm>
#include <deque>

namespace infgraph {

std::vector<std::vector<std::size_t>> Multigraph::incidence() const {
  std::vector<std::vector<std::size_t>> inc(node_count);
  for (std::size_t i = 0; i < links.size(); ++i) {
    inc[links[i].a].push_back(i);
    if (links[i].b != links[i].a) inc[links[i].b].push_back(i);
  }
  return inc;
}

std::size_t Multigraph::degree_parity_violations() const {
  std::vector<unsigned> deg(node_count, 0);
  for (const auto& l : links) {
    ++deg[l.a];
    ++deg[l.b];
  }
  return static_cast<std::size_t>(std::count_if(deg.begin(), deg.end(), [](unsigned d) { return d % 2 == 1; }));
}

SpanningForest spanning_forest(const Multigraph& g, const std::vector<bool>* usable) {
  const std::size_t n = g.node_count;
  SpanningForest f;
  f.parent_link.assign(n, std::nullopt);
  f.parent_node.assign(n, 0);
  f.depth.assign(n, 0);
  f.component.assign(n, n);
  f.in_tree.assign(g.links.size(), false);
  auto inc = g.incidence();
  for (std::size_t root = 0; root < n; ++root) {
    if (f.component[root] != n) continue;
    f.component[root] = root;
    f.parent_node[root] = root;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      std::size_t x = queue.front();
      queue.pop_front();
      for (std::size_t li : inc[x]) {
        if (usable && !(*usable)[li]) continue;
        const auto& l = g.links[li];
        std::size_t y = l.a == x ? l.b : l.a;
        if (f.component[y] != n) continue;
        f.component[y] = root;
        f.parent_link[y] = li;
        f.parent_node[y] = x;
        f.depth[y] = f.depth[x] + 1;
        f.in_tree[li] = true;
        queue.push_back(y);
      }
    }
  }
  return f;
}

std::vector<OrientedLink> forest_path(const Multigraph& g, const SpanningForest& f, std::size_t x, std::size_t y) {
  if (f.component[x] != f.component[y]) throw InvalidParameter("forest path between different components");
  std::vector<OrientedLink> up, down;
  while (x != y) {
    if (f.depth[x] >= f.depth[y]) {
      std::size_t li = *f.parent_link[x];
      up.push_back({li, g.links[li].a == x});
      x = f.parent_node[x];
    } else {
      std::size_t li = *f.parent_link[y];
      // Traversed from parent toward y.
      down.push_back({li, g.links[li].b == y});
      y = f.parent_node[y];
    }
  }
  up.insert(up.end(), down.rbegin(), down.rend());
  return up;
}

std::vector<OrientedLink> fundamental_cycle(const Multigraph& g, const SpanningForest& f, std::size_t chord) {
  if (f.in_tree[chord]) throw InvalidParameter("fundamental cycle of a tree link");
  std::vector<OrientedLink> cycle{{chord, true}};
  auto path = forest_path(g, f, g.links[chord].b, g.links[chord].a);
  cycle.insert(cycle.end(), path.begin(), path.end());
  return cycle;
}

}  // namespace infgraph
