// Acceptance runner: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails or overruns its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "infgraph/circuits.hpp"
#include "infgraph/cyclespace.hpp"
#include "infgraph/euler.hpp"
#include "infgraph/flows.hpp"
#include "infgraph/gallai.hpp"
#include "support.hpp"

using namespace infgraph;
using fixtures::Ladder;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::vector<MinorNode> random_side(const FiniteMinor& m, std::mt19937_64& rng) {
  std::vector<MinorNode> side;
  for (const auto& x : m.nodes())
    if (rng() & 1) side.push_back(x);
  return side;
}

FiniteEdges random_squares(const Ladder& l, std::mt19937_64& rng) {
  FiniteEdges d;
  for (int i = 0; i < 8; ++i)
    if (rng() & 1) d = symmetric_difference(d, l.square(static_cast<long long>(rng() % 9) - 4));
  return d;
}

bool single_cycle(const FiniteMinor& m, const FiniteEdges& k) {
  if (k.empty()) return false;
  std::map<MinorNode, std::vector<MinorNode>> adj;
  for (const auto& e : k) {
    const MinorEdge& me = m.edge(e);
    adj[me.a].push_back(me.b);
    adj[me.b].push_back(me.a);
  }
  for (const auto& [_, list] : adj)
    if (list.size() != 2) return false;
  std::set<MinorNode> seen{adj.begin()->first};
  std::vector<MinorNode> stack{adj.begin()->first};
  while (!stack.empty()) {
    auto x = stack.back();
    stack.pop_back();
    for (const auto& y : adj[x])
      if (seen.insert(y).second) stack.push_back(y);
  }
  return seen.size() == adj.size();
}

std::string show(const FiniteEdges& e) {
  std::ostringstream out;
  out << '{';
  for (const auto& x : e) out << ' ' << to_string(x);
  out << " }";
  return out.str();
}

Outcome duality() {
  Outcome o;
  for (const auto& name : {"double_ladder", "grid"}) {
    SpanningTower t(fixtures::tower_of(make_generator(name)));
    const FiniteMinor& m = t.tower().level(15);
    std::map<Edge, FiniteEdges> cuts;
    for (const auto& e : m.edges)
      if (t.contains(e.edge)) cuts[e.edge] = t.fundamental_cut(e.edge);
    for (const auto& e : m.edges) {
      if (t.contains(e.edge)) continue;
      FiniteEdges c = t.fundamental_circuit_at(e.edge, 15);
      for (const auto& [f, df] : cuts)
        o.expect((df.count(e.edge) > 0) == (c.count(f) > 0),
                 std::string(name) + ": chord " + to_string(e.edge) + " vs tree edge " + to_string(f));
    }
  }
  return o;
}

Outcome level_independence() {
  Outcome o;
  for (const auto& name : {"double_ladder", "grid"}) {
    SpanningTower t(fixtures::tower_of(make_generator(name)));
    for (const auto& f : t.tree(10))
      for (std::size_t n = f.lo.index; n <= 10; ++n)
        o.expect(t.fundamental_cut(f, n) == t.fundamental_cut(f, n + 5),
                 std::string(name) + ": D_f differs for " + to_string(f) + " at level " + std::to_string(n));
  }
  return o;
}

Outcome tower_recursion() {
  Outcome o;
  for (const auto& name : generator_names()) {
    if (name == "at_graph") continue;  // finite: its tower stops after a few levels, covered below
    SpanningTower t(fixtures::tower_of(make_generator(name)));
    std::vector<FiniteEdges> trees;
    for (std::size_t n = 0; n <= 30; ++n) trees.push_back(t.tree(n));
    for (std::size_t m = 1; m <= 30; ++m)
      for (std::size_t n = 0; n < m; ++n)
        o.expect(t.tower().restrict(trees[m], n) == trees[n], name + ": T_" + std::to_string(m) + " vs T_" + std::to_string(n));
  }
  SpanningTower at(fixtures::tower_of(make_generator("at_graph")));
  std::size_t top = *at.tower().max_level();
  for (std::size_t m = 1; m <= top; ++m)
    for (std::size_t n = 0; n < m; ++n) o.expect(at.tower().restrict(at.tree(m), n) == at.tree(n), "at_graph recursion");
  return o;
}

Outcome canonical_comb() {
  Outcome o;
  Ladder l;
  SpanningTower t(fixtures::tower_of(l.g));
  for (std::size_t n = 0; n <= 30; ++n) {
    FiniteEdges expected;
    for (const auto& e : t.tower().level(n).edges) {
      auto p = l.g->position(e.edge.lo), q = l.g->position(e.edge.hi);
      bool rung = p.column == q.column;
      bool bottom = p.slot == 1 && q.slot == 1;
      if (rung || bottom) expected.insert(e.edge);
    }
    o.expect(t.tree(n) == expected, "level " + std::to_string(n) + ": got " + show(t.tree(n)));
  }
  return o;
}

Outcome sigma_tau() {
  Outcome o;
  Ladder l;
  MinorTower t(l.g);
  NormalTreeSpace s = normal_space(l.g, 80);
  std::mt19937_64 rng(101);
  for (int i = 0; i < 100; ++i) {
    std::size_t n = rng() % 16;
    FiniteEdges cut = lift_cut(t.level(n), random_side(t.level(n), rng)).edges;
    o.expect(s.sigma(cut).empty(), "sigma of a cut is not empty: " + show(cut));
  }
  for (int i = 0; i < 100; ++i) {
    FiniteEdges d = random_squares(l, rng);
    o.expect(s.tau(d).empty(), "tau of a cycle is not empty: " + show(d));
  }
  int moved = 0;
  FiniteEdges first_moved;
  for (int i = 0; i < 50; ++i) {
    FiniteEdges d = random_squares(l, rng);
    if (s.sigma(d) != d && moved++ == 0) first_moved = d;
  }
  o.expect(moved == 0, "sigma moves " + std::to_string(moved) + " of 50 cycle elements, e.g. " + show(first_moved));
  FiniteEdges cycle{l.a(0), l.b(0), l.r(1), l.a(-1), l.b(-1), l.r(-1)};
  o.expect(s.sigma({l.r(0)}) == cycle, "sigma({r_0}) = " + show(s.sigma({l.r(0)})));
  FiniteEdges cut = lift_cut(t.level(3), {MinorNode::real(l.u(0)), MinorNode::real(l.w(1))}).edges;
  o.expect(cut.size() == 6 && s.tau({l.a(0)}) == cut, "tau({a_0}) = " + show(s.tau({l.a(0)})));
  return o;
}

Outcome verdict_fixtures() {
  Outcome o;
  Ladder l;
  MinorTower t(l.g);
  Verdict h = is_cycle_member(t, named_edge_set(l.g, "all_horizontals"), 50);
  o.expect(h.is_verified() && h.level == 50, "horizontals: " + to_string(h));
  Verdict r = is_cycle_member(t, named_edge_set(l.g, "all_rungs"), 50);
  o.expect(r.is_refuted() && r.level == 0 && r.witness && r.witness->edges == FiniteEdges{l.r(0), l.a(0), l.a(-1)},
           "rungs in cycle space: " + to_string(r));
  Verdict rc = is_cut_member(*l.g, named_edge_set(l.g, "all_rungs"), 50);
  o.expect(rc.is_verified() && rc.level == 50, "rungs in cut space: " + to_string(rc));
  Verdict r0 = is_cut_member(*l.g, EdgeSet(FiniteEdges{l.r(0)}), 50);
  o.expect(r0.is_refuted() && r0.witness && r0.witness->edges == l.square(0), "{r_0} in cut space: " + to_string(r0));
  return o;
}

Outcome extensions() {
  Outcome o;
  Ladder l;
  MinorTower t(l.g);
  std::mt19937_64 rng(103);
  for (int i = 0; i < 100; ++i) {
    std::size_t n = 1 + rng() % 12;
    FiniteEdges e;
    for (const auto& x : lift_cut(t.level(n), random_side(t.level(n), rng)).edges)
      if (rng() & 1) e.insert(x);
    CutExtension ext = extend_to_cut(l.g, e);
    for (const auto& x : e) o.expect(ext.cut.contains(x), "cut extension misses " + to_string(x));
    o.expect(is_cut_member(*l.g, ext.cut, 30).is_verified(), "cut extension fails to verify for " + show(e));
  }
  for (int i = 0; i < 100; ++i) {
    FiniteEdges d = random_squares(l, rng), e;
    for (const auto& x : d)
      if (rng() & 1) e.insert(x);
    EdgeSet c = extend_to_cycle(t, e);
    for (const auto& x : e) o.expect(c.contains(x), "cycle extension misses " + to_string(x));
    o.expect(is_cycle_member(t, c, 30).is_verified(), "cycle extension fails to verify for " + show(e));
  }
  auto strip = std::dynamic_pointer_cast<const StripGraph>(make_generator("triangle_strip"));
  FiniteEdges triangle{Edge::between(strip->at(0, 0), strip->at(0, 1)), Edge::between(strip->at(0, 1), strip->at(1, 1)),
                       Edge::between(strip->at(0, 0), strip->at(1, 1))};
  try {
    extend_to_cut(strip, triangle);
    o.expect(false, "triangle did not raise OddCircuit");
  } catch (const OddCircuit& ex) {
    o.expect(ex.circuit() == triangle, "odd circuit witness " + show(ex.circuit()));
  }
  FiniteEdges atomic{l.r(0), l.a(0), l.a(-1)};
  try {
    extend_to_cycle(t, atomic);
    o.expect(false, "atomic cut did not raise OddBond");
  } catch (const OddBond& ex) {
    o.expect(ex.bond() == atomic, "odd bond witness " + show(ex.bond()));
  }
  return o;
}

Outcome circuits() {
  Outcome o;
  Ladder l;
  MinorTower t(l.g);
  EdgeSet rails = named_edge_set(l.g, "all_horizontals");
  CircuitThread th = extract_circuit_through(t, rails, l.a(0), 30);
  for (std::size_t n = 0; n <= 30; ++n)
    o.expect(th.at(n) == rails.restrict(t, n), "rail thread differs from D at level " + std::to_string(n));

  auto two = decompose(t, named_edge_set(l.g, "square:0+square:3"), 20);
  std::set<FiniteEdges> got;
  for (const auto& x : two) got.insert(x.at(20));
  o.expect(got == std::set<FiniteEdges>{l.square(0), l.square(3)}, "two squares decomposed into " + std::to_string(two.size()));

  MinorTower grid(make_generator("grid"));
  EdgeSet all = named_edge_set(grid.graph_ptr(), "all");
  try {
    auto threads = decompose(grid, all, 12);
    FiniteEdges covered;
    for (const auto& x : threads) {
      for (const auto& e : x.at(12)) o.expect(covered.insert(e).second, "edge covered twice: " + to_string(e));
      for (std::size_t n = x.first_level; n <= 12; ++n)
        o.expect(single_cycle(grid.level(n), x.at(n)), "grid thread not a cycle at level " + std::to_string(n));
    }
    o.expect(covered == all.restrict(grid, 12), "grid threads do not cover E(G_12)");
  } catch (const NoCircuitAtLevel& ex) {
    o.expect(false, std::string("grid decomposition: ") + ex.what());
  }
  return o;
}

Outcome euler_chains() {
  Outcome o;
  Ladder l;
  MinorTower ladder(l.g);
  MinorTower grid(make_generator("grid"));
  std::vector<std::pair<const MinorTower*, EdgeSet>> cases{{&ladder, named_edge_set(l.g, "all_horizontals")},
                                                           {&grid, named_edge_set(grid.graph_ptr(), "all")}};
  for (const auto& [tower, d] : cases) {
    try {
      LevelWalk w = euler_tour(*tower, d, 3, VertexId{0});
      o.expect(is_euler_circuit(w.steps, d.restrict(*tower, 3)), "level 3 walk is not an Euler circuit");
      for (std::size_t n = 4; n <= 15; ++n) {
        LevelWalk next = refine(*tower, d, w);
        o.expect(is_euler_circuit(next.steps, d.restrict(*tower, n)), "walk at level " + std::to_string(n));
        o.expect(project(*tower, next.steps, n - 1) == w.steps, "projection mismatch at level " + std::to_string(n));
        w = next;
      }
    } catch (const GraphError& ex) {
      o.expect(false, tower->graph().name() + ": " + ex.what());
    }
  }
  return o;
}

bool connected(std::size_t n, const std::vector<std::pair<std::uint64_t, std::uint64_t>>& edges) {
  std::vector<std::size_t> comp(n);
  for (std::size_t i = 0; i < n; ++i) comp[i] = i;
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [a, b] : edges) {
      std::size_t m = std::min(comp[a], comp[b]);
      if (comp[a] != m || comp[b] != m) {
        comp[a] = comp[b] = m;
        changed = true;
      }
    }
  }
  return std::all_of(comp.begin(), comp.end(), [](std::size_t c) { return c == 0; });
}

Outcome gallai() {
  Outcome o;
  std::size_t graphs = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    const std::size_t pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
      std::size_t bit = 0;
      for (std::uint64_t i = 0; i < n; ++i)
        for (std::uint64_t j = i + 1; j < n; ++j, ++bit)
          if ((mask >> bit) & 1) edges.emplace_back(i, j);
      if (!connected(n, edges)) continue;
      ++graphs;
      FiniteGraph g("g", n, edges);
      GallaiPartition p = gallai_partition(g);
      std::vector<int> deg(n, 0);
      for (const auto& e : p.even) {
        ++deg[e.lo.index];
        ++deg[e.hi.index];
        o.expect(!p.cut.count(e), "edge in both parts");
      }
      for (int d : deg) o.expect(d % 2 == 0, "odd degree in the even part");
      for (const auto& e : p.cut) o.expect(p.side[e.lo.index] != p.side[e.hi.index], "cut edge inside one side");
      for (const auto& e : p.even) o.expect(p.side[e.lo.index] == p.side[e.hi.index], "even edge across the sides");
      o.expect(p.even.size() + p.cut.size() == edges.size(), "partition not exhaustive");
    }
  }
  FiniteGraph k4("k4", 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  GallaiPartition p = gallai_partition(k4);
  o.expect(p.cut == FiniteEdges{Edge{VertexId{0}, VertexId{1}}, Edge{VertexId{0}, VertexId{2}}, Edge{VertexId{0}, VertexId{3}}},
           "K4 cut is not the star of v_0");
  o.expect(p.even.size() == 3, "K4 even part is not a triangle");
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(graphs) + " connected graphs";
  return o;
}

Outcome flows() {
  Outcome o;
  auto g = make_generator("one_way_ladder");
  MinorTower t(g);
  Network net{g, geometric_resistance(g), VertexId{0}, VertexId{1}};
  double previous = 0.0;
  for (std::size_t n = 1; n <= 20; ++n) {
    FlowAssignment f = min_energy_flow(t, net, n, 1.0);
    const FiniteMinor& m = t.level(n);
    for (const auto& x : m.nodes()) {
      if (x == MinorNode::real(net.s) || x == MinorNode::real(net.t)) continue;
      o.expect(std::abs(node_residual(m, f, x)) <= 1e-9, "node law at " + to_string(x) + ", level " + std::to_string(n));
    }
    Multigraph h = m.multigraph();
    SpanningForest forest = spanning_forest(h);
    for (std::size_t li = 0; li < h.links.size(); ++li) {
      if (forest.in_tree[li]) continue;
      std::vector<OrientedEdge> c;
      for (const auto& step : fundamental_cycle(h, forest, li)) {
        const MinorEdge& me = m.edges[step.link];
        c.push_back({me.edge, step.forward == (me.a == MinorNode::real(me.edge.lo))});
      }
      o.expect(std::abs(circuit_residual(net, f, c)) <= 1e-9, "circuit law at level " + std::to_string(n));
    }
    double energy = energy_partial(net, f, n);
    o.expect(energy >= previous - 1e-12, "energy decreased at level " + std::to_string(n));
    if (n == 20) o.expect(energy - previous < 1e-6, "energy difference at level 20 is " + std::to_string(energy - previous));
    previous = energy;
  }
  ElusivePair p = elusive_pair(5);
  MinorTower et(p.net.graph);
  for (std::size_t n = 1; n <= 20; ++n) {
    o.expect(check_kh1_prime(et, p.net, p.direct, n).is_verified(), "direct flow refuted at level " + std::to_string(n));
    Verdict v = check_kh1_prime(et, p.net, p.escaping, n);
    bool source_side = v.witness && !v.witness->nodes.empty();
    if (source_side)
      for (const auto& x : v.witness->nodes)
        source_side = source_side && x.is_dummy() && ElusiveGraph::side(et.level(n).incident(x).front()->edge.hi) == 0;
    o.expect(v.is_refuted() && source_side && std::abs(v.witness->value - 1.0) <= 1e-12,
             "escaping flow at level " + std::to_string(n) + ": " + to_string(v));
  }
  return o;
}

Outcome tree_packing() {
  Outcome o;
  Ladder l;
  MinorTower t(l.g);
  PackingResult r = tree_packing_condition(t, component_partition(t, 3), 2);
  o.expect(r.classes == 3 && r.count == 4 && r.required == 4 && r.status == PackingResult::Status::Satisfied,
           "count " + std::to_string(r.count) + ", required " + std::to_string(r.required) + ", classes " +
               std::to_string(r.classes));
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    std::string name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"fundamental cut/circuit duality", 5, duality},
      {"fundamental cut level independence", 5, level_independence},
      {"tower tree recursion", 10, tower_recursion},
      {"double ladder comb", 1e9, canonical_comb},
      {"sigma/tau kernels and fixed points", 10, sigma_tau},
      {"verdict fixtures", 5, verdict_fixtures},
      {"cut and cycle extensions", 30, extensions},
      {"circuit extraction and decomposition", 60, circuits},
      {"Euler refinement chains", 30, euler_chains},
      {"Gallai partitions", 60, gallai},
      {"flows", 30, flows},
      {"tree packing fixture", 1e9, tree_packing},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& ex) {
      o.ok = false;
      o.detail = std::string("exception: ") + ex.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs > c.limit_seconds) {
      o.ok = false;
      o.detail = "time limit exceeded";
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (o.ok ? "PASS " : "FAIL ") << (i + 1) << ' ' << c.name << " (" << timing << ')';
    if (!o.detail.empty()) std::cout << ": " << o.detail;
    std::cout << std::endl;
    failures += o.ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
