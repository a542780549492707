#include "infgraph/ends.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace infgraph {

std::vector<EndThread> end_threads(const MinorTower& tower, std::size_t n) {
  n = tower.clamp(n);
  const FiniteMinor& m = tower.level(n);
  std::vector<EndThread> out;
  for (const auto& d : m.dummies) {
    if (d.infinite == InfAnswer::Finite) continue;
    EndThread t;
    t.dummies.resize(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
      MinorNode node = tower.collapse(MinorNode::dummy(d.id), k);
      t.dummies[k] = node.id;
      if (tower.dummy(node.id).infinite == InfAnswer::Unknown) t.provisional = true;
    }
    if (t.provisional) t.horizon = tower.graph().search_horizon();
    out.push_back(std::move(t));
  }
  return out;
}

std::optional<std::vector<std::uint64_t>> classify_ray(const MinorTower& tower, const Ray& r, std::size_t n) {
  n = tower.clamp(n);
  std::vector<VertexId> prefix;
  prefix.reserve(r.budget);
  for (std::size_t i = 0; i < r.budget; ++i) prefix.push_back(r.at(i));
  std::vector<std::uint64_t> out(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    std::optional<std::size_t> last;
    for (std::size_t i = 0; i < prefix.size(); ++i)
      if (prefix[i].index <= k) last = i;
    std::size_t tail = last ? *last + 1 : 0;
    if (tail >= prefix.size()) return std::nullopt;
    MinorNode node = tower.locate(prefix[tail], k);
    if (!node.is_dummy()) throw GraphError("ray tail starts inside S_k");
    out[k] = node.id;
  }
  return out;
}

RayComparison distinguish_rays(const MinorTower& tower, const Ray& r1, const Ray& r2, std::size_t n) {
  auto a = classify_ray(tower, r1, n);
  auto b = classify_ray(tower, r2, n);
  if (!a || !b) return RaysUnknown{std::max(r1.budget, r2.budget)};
  for (std::size_t k = 0; k < a->size(); ++k)
    if ((*a)[k] != (*b)[k]) return DifferAtLevel{k};
  return SameThread{a->size() - 1};
}

BoundaryProfile boundary_profile(const MinorTower& tower, const EndThread& t, std::size_t n) {
  n = std::min(tower.clamp(n), t.dummies.size() - 1);
  BoundaryProfile p;
  for (std::size_t k = 0; k <= n; ++k) {
    const FiniteMinor& m = tower.level(k);
    MinorNode d = MinorNode::dummy(t.dummies[k]);
    BoundaryStep s;
    s.level = k;
    std::set<VertexId> inside;
    for (const auto& e : m.edges)
      if (e.b == d) {
        ++s.edge_boundary;
        inside.insert(e.edge.hi);
      }
    s.vertex_boundary = inside.size();
    s.ratio = s.vertex_boundary ? static_cast<double>(s.edge_boundary) / static_cast<double>(s.vertex_boundary) : 0.0;
    p.steps.push_back(s);
  }
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t k = n / 2; k <= n; ++k) best = std::min(best, p.steps[k].ratio);
  p.liminf_upper_estimate = best;
  return p;
}

}  // namespace infgraph
