#include "infgraph/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <unordered_map>

#include "infgraph/normal_tree.hpp"

namespace infgraph {

Edge Edge::between(VertexId a, VertexId b) {
  if (a == b) throw InvalidParameter("loop at vertex " + std::to_string(a.index));
  return a < b ? Edge{a, b} : Edge{b, a};
}

std::string to_string(const Edge& e) {
  return "(" + std::to_string(e.lo.index) + "," + std::to_string(e.hi.index) + ")";
}

UnknownVertex::UnknownVertex(VertexId v) : GraphError("unknown vertex id " + std::to_string(v.index)) {}

UnresolvableComponents::UnresolvableComponents(std::size_t horizon, const std::string& what)
    : GraphError("unresolvable components within horizon " + std::to_string(horizon) + ": " + what),
      horizon_(horizon) {}

std::string to_string(SepAnswer a) {
  switch (a) {
    case SepAnswer::Same: return "SAME";
    case SepAnswer::Different: return "DIFF";
    case SepAnswer::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

std::string to_string(InfAnswer a) {
  switch (a) {
    case InfAnswer::Infinite: return "INF";
    case InfAnswer::Finite: return "FIN";
    case InfAnswer::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

std::string LazyGraph::vertex_name(VertexId v) const { return "v" + std::to_string(v.index); }

SepAnswer LazyGraph::same_component_without(const VertexSet&, VertexId, VertexId) const {
  return SepAnswer::Unknown;
}

InfAnswer LazyGraph::is_component_infinite(const VertexSet&, VertexId) const { return InfAnswer::Unknown; }

std::optional<NormalTreeWitness> LazyGraph::normal_tree_witness() const { return std::nullopt; }

bool LazyGraph::contains(VertexId v) const {
  auto n = vertex_count();
  return !n || v.index < *n;
}

VertexId LazyGraph::vertex(std::uint64_t index) const {
  VertexId v{index};
  check_vertex(v);
  return v;
}

void LazyGraph::check_vertex(VertexId v) const {
  if (!contains(v)) throw UnknownVertex(v);
}

std::vector<ComponentInfo> LazyGraph::components_without(const VertexSet& s,
                                                         const std::vector<VertexId>& query) const {
  // Union-find over query positions, merged on SAME answers.
  std::vector<std::size_t> parent(query.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::map<std::pair<std::size_t, std::size_t>, bool> proven_different;

  for (std::size_t i = 0; i < query.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (find(i) == find(j)) continue;
      // Only compare against class representatives.
      if (find(j) != j) continue;
      SepAnswer a = same_component_without(s, query[j], query[i]);
      if (a == SepAnswer::Unknown) {
        a = bounded_search(*this, s, query[j], query[i], search_horizon()).separation;
        if (a == SepAnswer::Unknown)
          a = bounded_search(*this, s, query[i], query[j], search_horizon()).separation;
      }
      if (a == SepAnswer::Same) {
        parent[find(i)] = find(j);
      } else if (a == SepAnswer::Unknown) {
        throw UnresolvableComponents(search_horizon(), "vertices " + std::to_string(query[j].index) + " and " +
                                                           std::to_string(query[i].index));
      }
    }
  }

  std::vector<ComponentInfo> out(query.size());
  std::unordered_map<std::size_t, InfAnswer> finiteness;
  for (std::size_t i = 0; i < query.size(); ++i) {
    std::size_t root = find(i);
    out[i].label = query[root].index;
    auto it = finiteness.find(root);
    if (it == finiteness.end()) {
      InfAnswer f = is_component_infinite(s, query[root]);
      if (f == InfAnswer::Unknown) f = bounded_search(*this, s, query[root], std::nullopt, search_horizon()).finiteness;
      it = finiteness.emplace(root, f).first;
    }
    out[i].infinite = it->second;
  }
  return out;
}

BoundedSearch bounded_search(const LazyGraph& g, const VertexSet& s, VertexId u, std::optional<VertexId> target,
                             std::size_t horizon) {
  BoundedSearch result;
  if (set_contains(s, u)) throw InvalidParameter("search start lies in the deleted set");
  std::unordered_set<VertexId> seen{u};
  std::deque<VertexId> queue{u};
  while (!queue.empty()) {
    if (seen.size() > horizon) {
      result.visited.assign(seen.begin(), seen.end());
      std::sort(result.visited.begin(), result.visited.end());
      return result;
    }
    VertexId x = queue.front();
    queue.pop_front();
    if (target && x == *target) {
      result.separation = SepAnswer::Same;
      result.visited.assign(seen.begin(), seen.end());
      std::sort(result.visited.begin(), result.visited.end());
      return result;
    }
    for (VertexId y : g.neighbors(x)) {
      if (set_contains(s, y) || !seen.insert(y).second) continue;
      queue.push_back(y);
    }
  }
  // Component exhausted: it is finite and does not contain the target.
  result.finiteness = InfAnswer::Finite;
  if (target) result.separation = SepAnswer::Different;
  result.visited.assign(seen.begin(), seen.end());
  std::sort(result.visited.begin(), result.visited.end());
  return result;
}

Ball ball(const LazyGraph& g, VertexId v, std::size_t radius) {
  if (!g.contains(v)) throw UnknownVertex(v);
  std::unordered_map<VertexId, std::size_t> dist{{v, 0}};
  std::deque<VertexId> queue{v};
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop_front();
    if (dist[x] == radius) continue;
    for (VertexId y : g.neighbors(x)) {
      if (dist.count(y)) continue;
      dist[y] = dist[x] + 1;
      queue.push_back(y);
    }
  }
  Ball b;
  for (const auto& [x, d] : dist) b.vertices.push_back(x);
  std::sort(b.vertices.begin(), b.vertices.end());
  for (VertexId x : b.vertices)
    for (VertexId y : g.neighbors(x))
      if (x < y && dist.count(y)) b.edges.insert(Edge{x, y});
  return b;
}

VertexSet make_vertex_set(std::vector<VertexId> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

VertexSet prefix_set(std::uint64_t n) {
  VertexSet s(n + 1);
  for (std::uint64_t i = 0; i <= n; ++i) s[i] = VertexId{i};
  return s;
}

bool set_contains(const VertexSet& s, VertexId v) { return std::binary_search(s.begin(), s.end(), v); }

namespace {

// Components of G - S restricted to box \ S plus the tail classes touching it.
struct RegionComponents {
  std::unordered_map<VertexId, std::size_t> box_node;
  std::unordered_map<std::uint64_t, std::size_t> tail_node;
  std::vector<std::size_t> parent;
  std::vector<bool> has_tail;

  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    has_tail[a] = has_tail[a] || has_tail[b];
  }
  std::size_t add(bool tail) {
    parent.push_back(parent.size());
    has_tail.push_back(tail);
    return parent.size() - 1;
  }
};

RegionComponents region_components(const RegionGraph& g, const VertexSet& s, const RegionGraph::Region& r) {
  RegionComponents rc;
  std::vector<VertexId> inside;
  for (VertexId v : r.box)
    if (!set_contains(s, v)) inside.push_back(v);
  std::sort(inside.begin(), inside.end());
  for (VertexId v : inside) rc.box_node.emplace(v, rc.add(false));
  auto tail_of = [&](VertexId y) {
    std::uint64_t c = r.tail_class(y);
    auto it = rc.tail_node.find(c);
    if (it == rc.tail_node.end()) it = rc.tail_node.emplace(c, rc.add(true)).first;
    return it->second;
  };
  for (VertexId v : inside) {
    std::size_t a = rc.box_node.at(v);
    for (VertexId y : g.neighbors(v)) {
      if (set_contains(s, y)) continue;
      if (r.box.count(y))
        rc.unite(a, rc.box_node.at(y));
      else
        rc.unite(a, tail_of(y));
    }
  }
  return rc;
}

}  // namespace

std::vector<ComponentInfo> RegionGraph::components_without(const VertexSet& s,
                                                           const std::vector<VertexId>& query) const {
  for (VertexId v : s) check_vertex(v);
  Region r = region(s);
  for (VertexId v : s)
    if (!r.box.count(v)) throw GraphError("region does not cover the deleted set");
  RegionComponents rc = region_components(*this, s, r);
  std::vector<ComponentInfo> out;
  out.reserve(query.size());
  for (VertexId v : query) {
    check_vertex(v);
    if (set_contains(s, v)) throw InvalidParameter("queried vertex lies in the deleted set");
    std::size_t node;
    if (r.box.count(v)) {
      node = rc.box_node.at(v);
    } else {
      std::uint64_t c = r.tail_class(v);
      auto it = rc.tail_node.find(c);
      if (it == rc.tail_node.end()) {
        // A tail class touching no box vertex outside S is its own component.
        it = rc.tail_node.emplace(c, rc.add(true)).first;
      }
      node = it->second;
    }
    std::size_t root = rc.find(node);
    out.push_back({root, rc.has_tail[root] ? InfAnswer::Infinite : InfAnswer::Finite});
  }
  return out;
}

SepAnswer RegionGraph::same_component_without(const VertexSet& s, VertexId u, VertexId v) const {
  auto c = components_without(s, {u, v});
  return c[0].label == c[1].label ? SepAnswer::Same : SepAnswer::Different;
}

InfAnswer RegionGraph::is_component_infinite(const VertexSet& s, VertexId u) const {
  return components_without(s, {u})[0].infinite;
}

FiniteGraph::FiniteGraph(std::string name, std::uint64_t n,
                         const std::vector<std::pair<std::uint64_t, std::uint64_t>>& edges)
    : name_(std::move(name)), adj_(n) {
  for (auto [a, b] : edges) {
    if (a >= n || b >= n) throw InvalidParameter("edge endpoint outside the vertex range");
    if (a == b) throw InvalidParameter("loops are not allowed");
    adj_[a].push_back(VertexId{b});
    adj_[b].push_back(VertexId{a});
  }
  for (auto& list : adj_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
}

std::vector<VertexId> FiniteGraph::neighbors(VertexId v) const {
  check_vertex(v);
  return adj_[v.index];
}

std::string FiniteGraph::vertex_name(VertexId v) const {
  if (v.index < names_.size()) return names_[v.index];
  return LazyGraph::vertex_name(v);
}

RegionGraph::Region FiniteGraph::region(const VertexSet&) const {
  Region r;
  for (std::uint64_t i = 0; i < adj_.size(); ++i) r.box.insert(VertexId{i});
  r.tail_class = [](VertexId) -> std::uint64_t { throw GraphError("finite graph has no tail"); };
  return r;
}

FiniteEdges FiniteGraph::edges() const {
  FiniteEdges out;
  for (std::uint64_t i = 0; i < adj_.size(); ++i)
    for (VertexId y : adj_[i])
      if (i < y.index) out.insert(Edge{VertexId{i}, y});
  return out;
}

}  // namespace infgraph
