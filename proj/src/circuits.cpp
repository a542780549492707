#include "infgraph/circuits.hpp"

#include <algorithm>
#include <map>

#include "infgraph/cyclespace.hpp"

namespace infgraph {

const FiniteEdges& CircuitThread::at(std::size_t n) const {
  static const FiniteEdges empty;
  if (n < first_level || levels.empty()) return empty;
  return levels[std::min(n - first_level, levels.size() - 1)];
}

namespace {

// Whether the edges form one cycle of the level minor (every node of degree 0
// or 2, edges connected).
bool single_cycle(const FiniteMinor& m, const FiniteEdges& k) {
  if (k.empty()) return false;
  std::map<MinorNode, std::vector<MinorNode>> adj;
  for (const auto& e : k) {
    const MinorEdge& me = m.edge(e);
    adj[me.a].push_back(me.b);
    adj[me.b].push_back(me.a);
  }
  for (const auto& [_, nbrs] : adj)
    if (nbrs.size() != 2) return false;
  std::set<MinorNode> seen{adj.begin()->first};
  std::vector<MinorNode> stack{adj.begin()->first};
  while (!stack.empty()) {
    MinorNode x = stack.back();
    stack.pop_back();
    for (const auto& y : adj[x])
      if (seen.insert(y).second) stack.push_back(y);
  }
  return seen.size() == adj.size();
}

struct CycleSearch {
  const Multigraph& g;
  const std::vector<std::vector<std::size_t>>& inc;
  std::size_t target;
  std::size_t limit = 0;
  std::size_t steps = 0;
  std::size_t budget;
  std::vector<bool> on_path;
  std::vector<std::size_t> links;
  std::function<bool(const std::vector<std::size_t>&)> accept;

  bool dfs(std::size_t x) {
    if (++steps > budget) return false;
    if (links.size() == limit) return false;
    for (std::size_t li : inc[x]) {
      if (std::find(links.begin(), links.end(), li) != links.end()) continue;
      const auto& l = g.links[li];
      std::size_t y = l.a == x ? l.b : l.a;
      if (y == target) {
        if (links.size() + 1 != limit) continue;
        links.push_back(li);
        bool ok = accept(links);
        links.pop_back();
        if (ok) return true;
        continue;
      }
      if (on_path[y]) continue;
      on_path[y] = true;
      links.push_back(li);
      bool found = dfs(y);
      links.pop_back();
      on_path[y] = false;
      if (found) return true;
    }
    return false;
  }
};

}  // namespace

CircuitThread extract_circuit_through(const MinorTower& tower, const EdgeSet& d, const Edge& e, std::size_t horizon,
                                      std::size_t budget) {
  std::size_t h = tower.clamp(horizon);
  if (!MinorTower::in_level(e, h))
    throw InvalidParameter("edge " + to_string(e) + " does not live at level " + std::to_string(h));
  if (!d.contains(e)) throw InvalidParameter("edge " + to_string(e) + " is not in the set");
  Verdict pre = is_cycle_member(tower, d, h);
  if (pre.is_refuted())
    throw NoCircuitAtLevel(pre.level, "set is not in the cycle space at level " + std::to_string(pre.level));

  const FiniteMinor& m = tower.level(h);
  FiniteEdges dh = d.restrict(tower, h);
  Multigraph full = m.multigraph();
  Multigraph sub;
  sub.node_count = full.node_count;
  std::optional<std::size_t> pinned;
  for (const auto& l : full.links) {
    if (!dh.count(l.edge)) continue;
    if (l.edge == e) pinned = sub.links.size();
    sub.links.push_back(l);
  }
  auto inc = sub.incidence();
  const auto& pl = sub.links[*pinned];

  CircuitThread thread;
  thread.pinned = e;
  thread.first_level = static_cast<std::size_t>(e.lo.index);
  thread.horizon = h;

  CycleSearch search{sub, inc, pl.a, 0, 0, budget, std::vector<bool>(sub.node_count, false), {}, {}};
  // First pass: every restriction must itself be one cycle. Second pass: a
  // circuit of G_h whose lower restrictions may pass a dummy more than once.
  bool strict = true;
  search.accept = [&](const std::vector<std::size_t>& links) {
    FiniteEdges k;
    for (std::size_t li : links) k.insert(sub.links[li].edge);
    std::vector<FiniteEdges> levels;
    for (std::size_t n = thread.first_level; n <= h; ++n) {
      FiniteEdges kn = tower.restrict(k, n);
      if ((strict || n == h) && !single_cycle(tower.level(n), kn)) return false;
      levels.push_back(std::move(kn));
    }
    thread.levels = std::move(levels);
    return true;
  };
  search.on_path[pl.a] = true;
  search.on_path[pl.b] = true;
  for (bool pass : {true, false}) {
    strict = pass;
    for (std::size_t len = 2; len <= sub.links.size(); ++len) {
      search.limit = len;
      search.links = {*pinned};
      if (search.dfs(pl.b)) return thread;
      if (search.steps > budget)
        throw NoCircuitAtLevel(h, "circuit search budget exhausted at level " + std::to_string(h));
    }
  }
  throw NoCircuitAtLevel(h, "no consistent circuit through " + to_string(e) + " at level " + std::to_string(h));
}

std::vector<CircuitThread> decompose(const MinorTower& tower, const EdgeSet& d, std::size_t horizon) {
  std::size_t h = tower.clamp(horizon);
  FiniteEdges rest = d.restrict(tower, h);
  std::vector<CircuitThread> out;
  while (!rest.empty()) {
    Edge e = *rest.begin();
    CircuitThread t = extract_circuit_through(tower, EdgeSet(rest), e, h);
    for (const auto& x : t.levels.back()) rest.erase(x);
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace infgraph
