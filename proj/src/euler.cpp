#include "infgraph/euler.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "infgraph/cyclespace.hpp"

namespace infgraph {

namespace {

using Incidence = std::map<MinorNode, std::vector<std::pair<Edge, MinorNode>>>;

Incidence level_incidence(const FiniteMinor& m, const FiniteEdges& dn) {
  Incidence inc;
  for (const auto& e : dn) {
    const MinorEdge& me = m.edge(e);
    inc[me.a].emplace_back(e, me.b);
    inc[me.b].emplace_back(e, me.a);
  }
  for (auto& [_, list] : inc) std::sort(list.begin(), list.end());
  return inc;
}

// Throws when restrict(D, n) is not an Eulerian edge set around the pin.
FiniteEdges check_level(const MinorTower& tower, const EdgeSet& d, std::size_t n, VertexId pin) {
  Verdict v = is_cycle_member(tower, d, n);
  if (v.is_refuted())
    throw NotEulerianAtLevel(v, "odd degree at level " + std::to_string(v.level) + ": " + v.message);
  if (v.is_unknown()) throw NotEulerianAtLevel(v, "degree check undecided: " + v.message);
  const FiniteMinor& m = tower.level(n);
  FiniteEdges dn = d.restrict(tower, n);
  if (dn.empty()) return dn;
  Incidence inc = level_incidence(m, dn);
  MinorNode start = MinorNode::real(pin);
  if (!inc.count(start))
    throw InvalidParameter("pin " + tower.graph().vertex_name(pin) + " is not incident with the set at level " +
                           std::to_string(n));
  std::set<MinorNode> seen{start};
  std::vector<MinorNode> stack{start};
  while (!stack.empty()) {
    MinorNode x = stack.back();
    stack.pop_back();
    for (const auto& [_, y] : inc[x])
      if (seen.insert(y).second) stack.push_back(y);
  }
  if (seen.size() != inc.size()) {
    FiniteEdges cut;
    for (const auto& e : m.edges)
      if (seen.count(e.a) != seen.count(e.b)) cut.insert(e.edge);
    throw DisconnectedAtLevel(n, cut, "set is disconnected at level " + std::to_string(n));
  }
  return dn;
}

// Hierholzer, always leaving a node by its smallest unused edge.
std::vector<WalkStep> hierholzer(const FiniteMinor& m, const FiniteEdges& dn, VertexId pin) {
  if (dn.empty()) return {};
  Incidence inc = level_incidence(m, dn);
  std::map<MinorNode, std::size_t> next;
  std::set<Edge> used;
  std::vector<std::pair<MinorNode, std::optional<WalkStep>>> stack{{MinorNode::real(pin), std::nullopt}};
  std::vector<WalkStep> circuit;
  while (!stack.empty()) {
    MinorNode v = stack.back().first;
    auto& list = inc[v];
    std::size_t& i = next[v];
    while (i < list.size() && used.count(list[i].first)) ++i;
    if (i < list.size()) {
      auto [e, w] = list[i];
      used.insert(e);
      stack.emplace_back(w, WalkStep{e, v, w});
    } else {
      if (stack.back().second) circuit.push_back(*stack.back().second);
      stack.pop_back();
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  return circuit;
}

WalkStep at_level(const FiniteMinor& m, const WalkStep& s) {
  const MinorEdge& me = m.edge(s.edge);
  return s.forward() ? WalkStep{s.edge, me.a, me.b} : WalkStep{s.edge, me.b, me.a};
}

// Chooses, for each visit of the expanded dummy, a trail through the new star
// edges; leftover edges are closed into loops at the centre.
struct Splicer {
  MinorNode center;
  std::map<MinorNode, std::vector<Edge>> free;  // child -> unused star edges, ascending
  std::vector<std::pair<MinorNode, MinorNode>> segments;
  std::vector<std::vector<WalkStep>> paths;
  std::size_t steps = 0;
  std::size_t budget = 0;

  std::optional<Edge> take(const MinorNode& child) {
    auto& list = free[child];
    if (list.empty()) return std::nullopt;
    Edge e = list.front();
    list.erase(list.begin());
    return e;
  }

  bool finish() {
    std::vector<WalkStep> loops;
    for (auto& [child, list] : free) {
      if (list.size() % 2) return false;
      for (std::size_t i = 0; i < list.size(); i += 2) {
        loops.push_back({list[i], center, child});
        loops.push_back({list[i + 1], child, center});
      }
    }
    if (loops.empty()) return true;
    for (std::size_t j = 0; j < segments.size(); ++j) {
      if (segments[j].first == center) {
        paths[j].insert(paths[j].begin(), loops.begin(), loops.end());
        return true;
      }
      for (std::size_t k = 0; k < paths[j].size(); ++k)
        if (paths[j][k].to == center) {
          paths[j].insert(paths[j].begin() + static_cast<std::ptrdiff_t>(k) + 1, loops.begin(), loops.end());
          return true;
        }
    }
    return false;
  }

  bool solve(std::size_t j) {
    if (++steps > budget) throw NotRefinable("splice search budget exhausted");
    if (j == segments.size()) return finish();
    auto [x, y] = segments[j];
    auto saved = free;
    std::vector<std::vector<WalkStep>> options;
    if (x == y) {
      options.push_back({});
      if (x != center && free[x].size() >= 2) {
        Edge e1 = free[x][0], e2 = free[x][1];
        options.push_back({{e1, x, center}, {e2, center, y}});
      }
    } else if (x == center) {
      if (!free[y].empty()) options.push_back({{free[y].front(), center, y}});
    } else if (y == center) {
      if (!free[x].empty()) options.push_back({{free[x].front(), x, center}});
    } else if (!free[x].empty() && !free[y].empty()) {
      options.push_back({{free[x].front(), x, center}, {free[y].front(), center, y}});
    }
    for (auto& option : options) {
      for (const auto& s : option) {
        MinorNode child = s.from == center ? s.to : s.from;
        auto& list = free[child];
        list.erase(std::find(list.begin(), list.end(), s.edge));
      }
      paths[j] = option;
      if (solve(j + 1)) return true;
      free = saved;
    }
    return false;
  }
};

std::vector<WalkStep> splice_next(const MinorTower& tower, const EdgeSet& d, const std::vector<WalkStep>& walk,
                                  std::size_t p, VertexId pin, std::size_t budget) {
  const std::size_t q = p + 1;
  FiniteEdges dq = check_level(tower, d, q, pin);
  const FiniteMinor& mq = tower.level(q);
  const StarExpansion& ex = tower.expansion(q);
  MinorNode expanded = MinorNode::dummy(*ex.expanded);

  Splicer sp;
  sp.center = MinorNode::real(ex.center);
  sp.budget = budget;
  for (const auto& e : dq)
    if (e.lo == ex.center) sp.free[mq.edge(e).b].push_back(e);

  std::vector<WalkStep> lifted;
  std::vector<std::size_t> visit_after;  // index in `walk` of steps entering the expanded dummy
  for (std::size_t i = 0; i < walk.size(); ++i) {
    lifted.push_back(at_level(mq, walk[i]));
    if (walk[i].to == expanded) visit_after.push_back(i);
  }
  for (std::size_t i : visit_after) sp.segments.emplace_back(lifted[i].to, lifted[(i + 1) % walk.size()].from);
  sp.paths.resize(sp.segments.size());
  if (!sp.solve(0)) throw NotRefinable("no splice of the new star edges at level " + std::to_string(q));

  std::vector<WalkStep> out;
  std::size_t j = 0;
  for (std::size_t i = 0; i < lifted.size(); ++i) {
    out.push_back(lifted[i]);
    if (j < visit_after.size() && visit_after[j] == i) {
      out.insert(out.end(), sp.paths[j].begin(), sp.paths[j].end());
      ++j;
    }
  }
  if (out.empty() && !dq.empty()) throw NotRefinable("set appears only above the plan level");
  return out;
}

}  // namespace

std::vector<WalkStep> project(const MinorTower& tower, const std::vector<WalkStep>& steps, std::size_t n) {
  const FiniteMinor& m = tower.level(n);
  std::vector<WalkStep> out;
  for (const auto& s : steps)
    if (MinorTower::in_level(s.edge, m.level)) out.push_back(at_level(m, s));
  return out;
}

bool is_euler_circuit(const std::vector<WalkStep>& steps, const FiniteEdges& edges) {
  std::set<Edge> seen;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (!seen.insert(steps[i].edge).second) return false;
    if (steps[i].to != steps[(i + 1) % steps.size()].from) return false;
  }
  return seen == std::set<Edge>(edges.begin(), edges.end());
}

LevelWalk euler_tour(const MinorTower& tower, const EdgeSet& d, std::size_t n, VertexId pin, std::size_t lookahead) {
  n = tower.clamp(n);
  if (pin.index > n) throw InvalidParameter("pin must be a real vertex of level " + std::to_string(n));
  FiniteEdges dn = check_level(tower, d, n, pin);
  LevelWalk w;
  w.level = n;
  w.pin = pin;
  if (dn.empty()) return w;

  auto plan = std::make_shared<LevelWalk::Plan>();
  std::size_t h = tower.clamp(n + lookahead);
  try {
    FiniteEdges dh = check_level(tower, d, h, pin);
    plan->level = h;
    plan->steps = hierholzer(tower.level(h), dh, pin);
  } catch (const GraphError&) {
    plan->level = n;
    plan->steps = hierholzer(tower.level(n), dn, pin);
  }
  w.steps = project(tower, plan->steps, n);
  w.plan = std::move(plan);
  return w;
}

LevelWalk refine(const MinorTower& tower, const EdgeSet& d, const LevelWalk& w, std::size_t budget) {
  std::size_t target = tower.clamp(w.level + 1);
  LevelWalk out;
  out.level = target;
  out.pin = w.pin;
  if (target == w.level) {
    out.steps = w.steps;
    out.plan = w.plan;
    return out;
  }
  auto plan = w.plan;
  if (!plan) plan = std::make_shared<const LevelWalk::Plan>(LevelWalk::Plan{w.level, w.steps});
  if (plan->level < target) {
    auto grown = std::make_shared<LevelWalk::Plan>(*plan);
    while (grown->level < target) {
      if (grown->steps.empty()) {
        FiniteEdges next = check_level(tower, d, grown->level + 1, w.pin);
        if (!next.empty()) throw NotRefinable("set appears only above the plan level");
      } else {
        grown->steps = splice_next(tower, d, grown->steps, grown->level, w.pin, budget);
      }
      ++grown->level;
    }
    plan = std::move(grown);
  }
  out.steps = project(tower, plan->steps, target);
  out.plan = std::move(plan);
  return out;
}

}  // namespace infgraph
