#include "infgraph/spanning.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace infgraph {

SpanningTower::SpanningTower(std::shared_ptr<const MinorTower> tower, FiniteEdges avoid)
    : tower_(std::move(tower)), avoid_(std::move(avoid)) {
  if (!tower_) throw InvalidParameter("spanning tower needs a minor tower");
}

const std::vector<Edge>& SpanningTower::chosen(std::size_t k) const {
  static const std::vector<Edge> none;
  if (tower_->clamp(k) != k) return none;
  std::lock_guard lock(mutex_);
  while (chosen_.size() <= k) {
    const StarExpansion& star = tower_->expansion(chosen_.size());
    std::vector<Edge> picked;
    for (const auto& candidates : star.star_edges) {
      auto it = std::find_if(candidates.begin(), candidates.end(), [&](const Edge& e) { return !avoid_.count(e); });
      picked.push_back(it != candidates.end() ? *it : candidates.front());
    }
    std::sort(picked.begin(), picked.end());
    chosen_.push_back(std::move(picked));
  }
  return chosen_[k];
}

bool SpanningTower::contains(const Edge& e) const {
  std::size_t k = e.lo.index;
  if (tower_->clamp(k) != k) return false;
  const auto& c = chosen(k);
  return std::binary_search(c.begin(), c.end(), e);
}

FiniteEdges SpanningTower::tree(std::size_t n) const {
  n = tower_->clamp(n);
  FiniteEdges out;
  for (std::size_t k = 0; k <= n; ++k)
    for (const auto& e : chosen(k)) out.insert(e);
  return out;
}

EdgeSet SpanningTower::as_edge_set() const {
  auto self = this;
  return EdgeSet::lazy("tower_tree", [self](const Edge& e) { return self->contains(e); },
                       [self](const MinorTower&, std::size_t n) { return self->tree(n); });
}

FiniteEdges SpanningTower::fundamental_cut(const Edge& f, std::optional<std::size_t> n) const {
  if (!contains(f)) throw NotInTree("edge " + to_string(f) + " is not in the spanning tree");
  std::size_t level = n.value_or(f.lo.index);
  if (level < f.lo.index) throw InvalidParameter("level " + std::to_string(level) + " does not contain " + to_string(f));
  const FiniteMinor& m = tower_->level(level);
  Multigraph g = m.multigraph();
  auto inc = g.incidence();
  std::vector<bool> tree_link(g.links.size());
  std::size_t f_link = g.links.size();
  for (std::size_t i = 0; i < g.links.size(); ++i) {
    tree_link[i] = contains(g.links[i].edge);
    if (g.links[i].edge == f) f_link = i;
  }
  std::vector<bool> side(g.node_count, false);
  std::deque<std::size_t> queue{g.links[f_link].a};
  side[g.links[f_link].a] = true;
  while (!queue.empty()) {
    std::size_t x = queue.front();
    queue.pop_front();
    for (std::size_t li : inc[x]) {
      if (!tree_link[li] || li == f_link) continue;
      std::size_t y = g.links[li].a == x ? g.links[li].b : g.links[li].a;
      if (side[y]) continue;
      side[y] = true;
      queue.push_back(y);
    }
  }
  FiniteEdges cut;
  for (const auto& l : g.links)
    if (side[l.a] != side[l.b]) cut.insert(cut.end(), l.edge);
  return cut;
}

FiniteEdges SpanningTower::fundamental_circuit_at(const Edge& e, std::size_t n) const {
  if (contains(e)) throw InvalidParameter("edge " + to_string(e) + " is a tree edge, not a chord");
  std::size_t level = std::max(tower_->clamp(n), static_cast<std::size_t>(e.lo.index));
  const FiniteMinor& m = tower_->level(level);
  if (!m.has_edge(e)) throw InvalidParameter("edge " + to_string(e) + " is not an edge of the graph");
  Multigraph g = m.multigraph();
  std::vector<bool> usable(g.links.size());
  std::size_t chord = 0;
  for (std::size_t i = 0; i < g.links.size(); ++i) {
    usable[i] = contains(g.links[i].edge);
    if (g.links[i].edge == e) chord = i;
  }
  SpanningForest forest = spanning_forest(g, &usable);
  FiniteEdges out;
  for (const auto& step : fundamental_cycle(g, forest, chord))
    if (MinorTower::in_level(g.links[step.link].edge, n)) out.insert(g.links[step.link].edge);
  return out;
}

EdgeSet SpanningTower::fundamental_circuit(const Edge& e) const {
  if (contains(e)) throw InvalidParameter("edge " + to_string(e) + " is a tree edge, not a chord");
  auto self = this;
  return EdgeSet::lazy(
      "C" + to_string(e),
      [self, e](const Edge& x) {
        if (x == e) return true;
        if (!self->contains(x)) return false;
        return self->fundamental_cut(x).count(e) > 0;
      },
      [self, e](const MinorTower&, std::size_t n) { return self->fundamental_circuit_at(e, n); });
}

// ---------------------------------------------------------------------------

LayeredTree::LayeredTree(GraphPtr g, FiniteEdges seed) : graph_(std::move(g)), seed_(std::move(seed)) {
  // Components of the seed graph, each with a breadth-first forest from its
  // smallest vertex; parents are the smallest neighbour one layer up.
  std::map<VertexId, std::vector<VertexId>> adj;
  for (const auto& e : seed_) {
    adj[e.lo].push_back(e.hi);
    adj[e.hi].push_back(e.lo);
  }
  for (auto& [v, list] : adj) std::sort(list.begin(), list.end());
  for (const auto& [start, _] : adj) {
    if (part_of_.count(start)) continue;
    SeedPart part;
    part.key = start.index;
    part.depth[start] = 0;
    std::deque<VertexId> queue{start};
    std::vector<VertexId> order;
    while (!queue.empty()) {
      VertexId x = queue.front();
      queue.pop_front();
      order.push_back(x);
      for (VertexId y : adj[x])
        if (!part.depth.count(y)) {
          part.depth[y] = part.depth[x] + 1;
          queue.push_back(y);
        }
    }
    for (VertexId x : order) {
      if (x == start) continue;
      for (VertexId y : adj[x])
        if (part.depth[y] + 1 == part.depth[x]) {
          part.parent[x] = y;
          break;
        }
      part_of_[x] = parts_.size();
    }
    part_of_[start] = parts_.size();
    parts_.push_back(std::move(part));
  }
  std::uint64_t root_node = node_of(VertexId{0});
  dist_[root_node] = 0;
  frontier_ = {root_node};
  frontier_dist_ = 0;
}

std::uint64_t LayeredTree::node_of(VertexId v) const {
  auto it = part_of_.find(v);
  return it == part_of_.end() ? v.index : parts_[it->second].key;
}

std::vector<VertexId> LayeredTree::members(std::uint64_t node) const {
  auto it = part_of_.find(VertexId{node});
  if (it == part_of_.end() || parts_[it->second].key != node) return {VertexId{node}};
  std::vector<VertexId> out;
  for (const auto& [v, _] : parts_[it->second].depth) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t LayeredTree::distance(std::uint64_t node) const {
  for (;;) {
    auto it = dist_.find(node);
    if (it != dist_.end()) return it->second;
    if (frontier_.empty()) throw GraphError("vertex node " + std::to_string(node) + " unreachable from v_0");
    std::vector<std::uint64_t> next;
    for (std::uint64_t x : frontier_)
      for (VertexId m : members(x))
        for (VertexId y : graph_->neighbors(m)) {
          std::uint64_t ny = node_of(y);
          if (dist_.emplace(ny, frontier_dist_ + 1).second) next.push_back(ny);
        }
    std::sort(next.begin(), next.end());
    frontier_ = std::move(next);
    ++frontier_dist_;
  }
}

LayeredTree::Attach LayeredTree::attach(std::uint64_t node) const {
  auto it = attach_.find(node);
  if (it != attach_.end()) return it->second;
  Attach a;
  std::size_t d = distance(node);
  if (d == 0) {
    a.inside = VertexId{0};
  } else {
    for (VertexId x : members(node))
      for (VertexId y : graph_->neighbors(x)) {
        std::uint64_t ny = node_of(y);
        if (ny == node || distance(ny) + 1 != d) continue;
        Edge e = Edge::between(x, y);
        if (!a.edge || e < *a.edge) {
          a.edge = e;
          a.inside = x;
        }
      }
    if (!a.edge) throw GraphError("layered tree: no edge to the previous layer");
  }
  attach_.emplace(node, a);
  return a;
}

std::vector<Edge> LayeredTree::seed_path(const SeedPart& part, VertexId a, VertexId b) const {
  std::vector<Edge> up, down;
  while (a != b) {
    if (part.depth.at(a) >= part.depth.at(b)) {
      VertexId p = part.parent.at(a);
      up.push_back(Edge::between(a, p));
      a = p;
    } else {
      VertexId p = part.parent.at(b);
      down.push_back(Edge::between(b, p));
      b = p;
    }
  }
  up.insert(up.end(), down.rbegin(), down.rend());
  return up;
}

std::optional<Edge> LayeredTree::parent_edge(VertexId v) const {
  graph_->vertex(v.index);
  std::lock_guard lock(mutex_);
  std::uint64_t node = node_of(v);
  Attach a = attach(node);
  auto pit = part_of_.find(v);
  if (pit != part_of_.end() && v != a.inside) return seed_path(parts_[pit->second], v, a.inside).front();
  return a.edge;
}

std::vector<Edge> LayeredTree::root_path(VertexId v) const {
  graph_->vertex(v.index);
  std::lock_guard lock(mutex_);
  std::vector<Edge> out;
  VertexId x = v;
  for (;;) {
    Attach a = attach(node_of(x));
    auto pit = part_of_.find(x);
    if (pit != part_of_.end() && x != a.inside) {
      auto inner = seed_path(parts_[pit->second], x, a.inside);
      out.insert(out.end(), inner.begin(), inner.end());
      x = a.inside;
    }
    if (!a.edge) break;
    out.push_back(*a.edge);
    x = a.edge->other(x);
  }
  return out;
}

std::vector<Edge> LayeredTree::path(VertexId u, VertexId v) const {
  auto pu = root_path(u);
  auto pv = root_path(v);
  while (!pu.empty() && !pv.empty() && pu.back() == pv.back()) {
    pu.pop_back();
    pv.pop_back();
  }
  pu.insert(pu.end(), pv.rbegin(), pv.rend());
  return pu;
}

bool LayeredTree::contains(const Edge& e) const { return parent_edge(e.lo) == e || parent_edge(e.hi) == e; }

FiniteEdges LayeredTree::fundamental_circuit(const Edge& chord) const {
  if (contains(chord)) throw InvalidParameter("edge " + to_string(chord) + " is a tree edge, not a chord");
  auto p = path(chord.lo, chord.hi);
  FiniteEdges out(p.begin(), p.end());
  out.insert(chord);
  return out;
}

EdgeSet LayeredTree::fundamental_cut(const Edge& f) const {
  if (!contains(f)) throw NotInTree("edge " + to_string(f) + " is not in the tree");
  auto self = this;
  return EdgeSet::lazy("D" + to_string(f), [self, f](const Edge& g) {
    auto on = [&](VertexId x) {
      auto p = self->root_path(x);
      return std::find(p.begin(), p.end(), f) != p.end();
    };
    return on(g.lo) != on(g.hi);
  });
}

bool LayeredTree::seed_parity(VertexId v) const {
  bool parity = false;
  for (const auto& e : root_path(v))
    if (seed_.count(e)) parity = !parity;
  return parity;
}

// ---------------------------------------------------------------------------

Verdict validate_normal(const LazyGraph& g, const NormalTreeWitness& w, std::size_t n) {
  if (auto count = g.vertex_count()) n = std::min<std::size_t>(n, *count - 1);
  FiniteEdges edges;
  for (std::uint64_t i = 0; i <= n; ++i) {
    VertexId v{i};
    auto nbrs = g.neighbors(v);
    if (v != w.root()) {
      VertexId p = *w.parent(v);
      if (!std::binary_search(nbrs.begin(), nbrs.end(), p)) {
        Witness wit;
        wit.kind = Witness::Kind::Node;
        wit.nodes = {MinorNode::real(v)};
        return Verdict::refuted(n, wit, "parent of " + g.vertex_name(v) + " is not a neighbour");
      }
    }
    for (VertexId y : nbrs)
      if (y.index <= n && v < y) edges.insert(Edge{v, y});
  }
  for (const auto& e : edges) {
    if (!w.comparable(e.lo, e.hi)) {
      Witness wit;
      wit.kind = Witness::Kind::Edge;
      wit.edge = e;
      wit.edges = {e};
      return Verdict::refuted(std::max(e.lo.index, e.hi.index), wit,
                              g.vertex_name(e.lo) + " and " + g.vertex_name(e.hi) + " are incomparable");
    }
  }
  return Verdict::verified(n);
}

}  // namespace infgraph
