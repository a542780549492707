#include "infgraph/minor_tower.hpp"

#include <algorithm>
#include <set>

namespace infgraph {

std::string to_string(const MinorNode& node) {
  return node.is_dummy() ? "d" + std::to_string(node.id) : "v" + std::to_string(node.id);
}

bool FiniteMinor::has_edge(const Edge& e) const {
  auto it = std::lower_bound(edges.begin(), edges.end(), e,
                             [](const MinorEdge& m, const Edge& x) { return m.edge < x; });
  return it != edges.end() && it->edge == e;
}

const MinorEdge& FiniteMinor::edge(const Edge& e) const {
  auto it = std::lower_bound(edges.begin(), edges.end(), e,
                             [](const MinorEdge& m, const Edge& x) { return m.edge < x; });
  if (it == edges.end() || it->edge != e)
    throw InvalidParameter("edge " + to_string(e) + " is not in G_" + std::to_string(level));
  return *it;
}

bool FiniteMinor::has_dummy(std::uint64_t id) const {
  return std::any_of(dummies.begin(), dummies.end(), [id](const DummyVertex& d) { return d.id == id; });
}

const DummyVertex& FiniteMinor::dummy(std::uint64_t id) const {
  for (const auto& d : dummies)
    if (d.id == id) return d;
  throw InvalidParameter("no dummy " + std::to_string(id) + " at level " + std::to_string(level));
}

std::vector<MinorNode> FiniteMinor::nodes() const {
  std::vector<MinorNode> out;
  out.reserve(real.size() + dummies.size());
  for (VertexId v : real) out.push_back(MinorNode::real(v));
  for (const auto& d : dummies) out.push_back(MinorNode::dummy(d.id));
  return out;
}

std::size_t FiniteMinor::node_index(const MinorNode& node) const {
  if (!node.is_dummy()) {
    if (node.id >= real.size()) throw InvalidParameter("vertex " + std::to_string(node.id) + " is not real at level " + std::to_string(level));
    return node.id;
  }
  for (std::size_t i = 0; i < dummies.size(); ++i)
    if (dummies[i].id == node.id) return real.size() + i;
  throw InvalidParameter("no dummy " + std::to_string(node.id) + " at level " + std::to_string(level));
}

Multigraph FiniteMinor::multigraph() const {
  Multigraph g;
  g.node_count = real.size() + dummies.size();
  std::map<std::uint64_t, std::size_t> dummy_pos;
  for (std::size_t i = 0; i < dummies.size(); ++i) dummy_pos[dummies[i].id] = real.size() + i;
  auto idx = [&](const MinorNode& n) { return n.is_dummy() ? dummy_pos.at(n.id) : static_cast<std::size_t>(n.id); };
  g.links.reserve(edges.size());
  for (const auto& e : edges) g.links.push_back({idx(e.a), idx(e.b), e.edge});
  return g;
}

FiniteEdges FiniteMinor::edge_set() const {
  FiniteEdges out;
  for (const auto& e : edges) out.insert(out.end(), e.edge);
  return out;
}

std::vector<const MinorEdge*> FiniteMinor::incident(const MinorNode& node) const {
  std::vector<const MinorEdge*> out;
  for (const auto& e : edges)
    if (e.a == node || e.b == node) out.push_back(&e);
  return out;
}

MinorTower::MinorTower(GraphPtr g) : graph_(std::move(g)) {
  if (!graph_) throw InvalidParameter("minor tower needs a graph");
  if (auto n = graph_->vertex_count(); n && *n == 0) throw InvalidParameter("empty graph");
}

std::optional<std::size_t> MinorTower::max_level() const {
  auto n = graph_->vertex_count();
  if (!n) return std::nullopt;
  return static_cast<std::size_t>(*n - 1);
}

std::size_t MinorTower::clamp(std::size_t n) const {
  auto m = max_level();
  return m ? std::min(n, *m) : n;
}

const FiniteMinor& MinorTower::level(std::size_t n) const {
  n = clamp(n);
  std::lock_guard lock(mutex_);
  while (levels_.size() <= n) build_next();
  return *levels_[n];
}

const StarExpansion& MinorTower::expansion(std::size_t k) const {
  level(k);
  std::lock_guard lock(mutex_);
  return expansions_.at(k);
}

const DummyVertex& MinorTower::dummy(std::uint64_t id) const {
  std::lock_guard lock(mutex_);
  auto it = dummies_.find(id);
  if (it == dummies_.end()) throw InvalidParameter("unknown dummy id " + std::to_string(id));
  return it->second;
}

void MinorTower::build_next() const {
  const std::size_t k = levels_.size();
  const LazyGraph& g = *graph_;
  VertexId center = g.vertex(k);
  VertexSet s_prev = k == 0 ? VertexSet{} : prefix_set(k - 1);
  VertexSet s_next = prefix_set(k);

  auto next = std::make_unique<FiniteMinor>();
  next->level = k;
  next->real = s_next;

  StarExpansion star;
  star.level = k;
  star.center = center;

  std::vector<VertexId> query;
  const FiniteMinor* prev = k == 0 ? nullptr : levels_[k - 1].get();
  if (prev) {
    // Find the dummy of level k-1 that contains v_k.
    std::optional<std::uint64_t> host;
    for (const auto& e : prev->edges)
      if (e.edge.hi == center) {
        host = e.b.id;
        break;
      }
    if (!host) {
      std::vector<VertexId> q{center};
      for (const auto& d : prev->dummies) q.push_back(d.representative);
      auto info = g.components_without(s_prev, q);
      for (std::size_t i = 1; i < q.size(); ++i)
        if (info[i].label == info[0].label) host = prev->dummies[i - 1].id;
      if (!host) throw GraphError("vertex " + std::to_string(k) + " lies in no dummy of level " + std::to_string(k - 1));
    }
    star.expanded = host;
    for (const auto& e : prev->edges)
      if (e.b == MinorNode::dummy(*host) && e.edge.hi != center) query.push_back(e.edge.hi);
  }
  for (VertexId y : g.neighbors(center))
    if (y.index > k) query.push_back(y);
  std::sort(query.begin(), query.end());
  query.erase(std::unique(query.begin(), query.end()), query.end());

  std::map<VertexId, std::uint64_t> piece_of;
  if (!query.empty()) {
    auto info = g.components_without(s_next, query);
    std::map<std::uint64_t, std::uint64_t> id_of_label;  // first occurrence is the smallest vertex
    for (std::size_t i = 0; i < query.size(); ++i) {
      auto it = id_of_label.find(info[i].label);
      if (it == id_of_label.end()) {
        DummyVertex d;
        d.id = next_dummy_++;
        d.representative = query[i];
        d.infinite = info[i].infinite;
        d.parent = star.expanded;
        d.created_level = k;
        dummies_.emplace(d.id, d);
        it = id_of_label.emplace(info[i].label, d.id).first;
        star.children.push_back(d.id);
        star.star_edges.emplace_back();
      }
      piece_of[query[i]] = it->second;
    }
  }
  if (star.expanded) absorbed_[center.index] = *star.expanded;

  if (prev) {
    for (const auto& d : prev->dummies)
      if (!star.expanded || d.id != *star.expanded) next->dummies.push_back(d);
    for (const auto& e : prev->edges) {
      MinorEdge m = e;
      if (star.expanded && e.b == MinorNode::dummy(*star.expanded))
        m.b = e.edge.hi == center ? MinorNode::real(center) : MinorNode::dummy(piece_of.at(e.edge.hi));
      next->edges.push_back(m);
    }
  }
  for (std::uint64_t id : star.children) next->dummies.push_back(dummies_.at(id));
  std::sort(next->dummies.begin(), next->dummies.end(), [](const auto& a, const auto& b) { return a.id < b.id; });

  for (VertexId y : g.neighbors(center)) {
    if (y.index <= k) continue;
    Edge e{center, y};
    std::uint64_t piece = piece_of.at(y);
    next->edges.push_back({e, MinorNode::real(center), MinorNode::dummy(piece)});
    auto pos = std::find(star.children.begin(), star.children.end(), piece) - star.children.begin();
    star.star_edges[static_cast<std::size_t>(pos)].push_back(e);
  }
  std::sort(next->edges.begin(), next->edges.end(), [](const auto& a, const auto& b) { return a.edge < b.edge; });
  for (auto& list : star.star_edges) std::sort(list.begin(), list.end());

  levels_.push_back(std::move(next));
  expansions_.push_back(std::move(star));
}

MinorNode MinorTower::collapse(const MinorNode& node, std::size_t n) const {
  n = clamp(n);
  std::lock_guard lock(mutex_);
  std::uint64_t id;
  if (!node.is_dummy()) {
    if (node.id <= n) return node;
    auto it = absorbed_.find(node.id);
    if (it == absorbed_.end()) throw InvalidParameter("vertex " + std::to_string(node.id) + " not yet placed in the tower");
    id = it->second;
  } else {
    id = node.id;
  }
  for (;;) {
    const auto& d = dummies_.at(id);
    if (d.created_level <= n) return MinorNode::dummy(id);
    if (!d.parent) throw GraphError("dummy chain broken at " + std::to_string(id));
    id = *d.parent;
  }
}

MinorNode MinorTower::locate(VertexId v, std::size_t n) const {
  graph_->vertex(v.index);
  const FiniteMinor& m = level(n);
  if (v.index <= m.level) return MinorNode::real(v);
  for (const auto& e : m.edges)
    if (e.edge.hi == v) return e.b;
  std::vector<VertexId> q{v};
  for (const auto& d : m.dummies) q.push_back(d.representative);
  auto info = graph_->components_without(prefix_set(m.level), q);
  for (std::size_t i = 1; i < q.size(); ++i)
    if (info[i].label == info[0].label) return MinorNode::dummy(m.dummies[i - 1].id);
  throw GraphError("vertex " + std::to_string(v.index) + " lies in no dummy of level " + std::to_string(m.level));
}

FiniteEdges MinorTower::restrict(const FiniteEdges& d, std::size_t n) const {
  n = clamp(n);
  FiniteEdges out;
  for (const auto& e : d)
    if (in_level(e, n)) out.insert(out.end(), e);
  return out;
}

LiftedCut lift_cut(const FiniteMinor& m, const std::vector<MinorNode>& side) {
  std::set<MinorNode> a(side.begin(), side.end());
  for (const auto& node : a) m.node_index(node);
  LiftedCut cut;
  cut.side.assign(a.begin(), a.end());
  for (const auto& e : m.edges)
    if (a.count(e.a) != a.count(e.b)) cut.edges.insert(cut.edges.end(), e.edge);
  return cut;
}

}  // namespace infgraph
