#include <doctest.h>

#include "infgraph/spanning.hpp"
#include "support.hpp"

using namespace infgraph;
using fixtures::Ladder;

namespace {

// Components of the level minor after removing some edges, by plain DFS.
std::size_t components_without(const FiniteMinor& m, const FiniteEdges& removed) {
  auto nodes = m.nodes();
  std::map<MinorNode, std::vector<MinorNode>> adj;
  for (const auto& e : m.edges)
    if (!removed.count(e.edge)) {
      adj[e.a].push_back(e.b);
      adj[e.b].push_back(e.a);
    }
  std::set<MinorNode> seen;
  std::size_t count = 0;
  for (const auto& start : nodes) {
    if (seen.count(start)) continue;
    ++count;
    std::vector<MinorNode> stack{start};
    seen.insert(start);
    while (!stack.empty()) {
      auto x = stack.back();
      stack.pop_back();
      for (const auto& y : adj[x])
        if (seen.insert(y).second) stack.push_back(y);
    }
  }
  return count;
}

}  // namespace

TEST_CASE("double ladder tower tree is the bottom comb") {
  Ladder l;
  auto tower = fixtures::tower_of(l.g);
  SpanningTower t(tower);
  for (long long i = -6; i <= 6; ++i) {
    CHECK(t.contains(l.r(i)));
    CHECK(t.contains(l.b(i)));
    CHECK_FALSE(t.contains(l.a(i)));
  }
}

TEST_CASE("tree graphs span themselves") {
  auto g = make_generator("binary_tree");
  SpanningTower t(fixtures::tower_of(g));
  for (std::size_t n = 0; n <= 20; ++n) CHECK(t.tree(n) == t.tower().level(n).edge_set());
}

TEST_CASE("one-way ladder tree is the rungs plus one rail") {
  auto g = std::dynamic_pointer_cast<const StripGraph>(make_generator("one_way_ladder"));
  SpanningTower t(fixtures::tower_of(g));
  std::size_t rails = 0;
  for (long long c = 0; c < 12; ++c) {
    CHECK(t.contains(Edge::between(g->at(c, 0), g->at(c, 1))));
    bool top = t.contains(Edge::between(g->at(c, 0), g->at(c + 1, 0)));
    bool bottom = t.contains(Edge::between(g->at(c, 1), g->at(c + 1, 1)));
    CHECK(top != bottom);
    rails += bottom;
  }
  CHECK((rails == 0 || rails == 12));
}

TEST_CASE("each T_n spans G_n and contains no cycle") {
  for (const auto& name : {"double_ladder", "grid", "nn_grid", "one_way_ladder", "triangle_strip", "tree_circles:d=3"}) {
    CAPTURE(name);
    SpanningTower t(fixtures::tower_of(make_generator_from_selector(name)));
    for (std::size_t n = 0; n <= 20; ++n) {
      const FiniteMinor& m = t.tower().level(n);
      FiniteEdges tn = t.tree(n);
      CHECK(tn.size() + 1 == m.nodes().size());
      FiniteEdges chords;
      for (const auto& e : m.edges)
        if (!tn.count(e.edge)) chords.insert(e.edge);
      CHECK(components_without(m, chords) == 1);
    }
  }
}

TEST_CASE("fundamental cuts") {
  Ladder l;
  SpanningTower t(fixtures::tower_of(l.g));
  CHECK(t.fundamental_cut(l.r(0)) == FiniteEdges{l.r(0), l.a(0), l.a(-1)});
  CHECK(t.fundamental_cut(l.b(0)) == FiniteEdges{l.a(0), l.b(0)});
  CHECK_THROWS_AS(t.fundamental_cut(l.a(0)), NotInTree);
  auto tree = make_generator("binary_tree");
  SpanningTower bt(fixtures::tower_of(tree));
  CHECK(bt.fundamental_cut(Edge{VertexId{1}, VertexId{3}}) == FiniteEdges{Edge{VertexId{1}, VertexId{3}}});
}

TEST_CASE("fundamental cuts are bonds") {
  Ladder l;
  SpanningTower t(fixtures::tower_of(l.g));
  for (std::size_t n = 0; n <= 12; ++n)
    for (const auto& f : t.tree(n)) {
      FiniteEdges d = t.fundamental_cut(f);
      for (std::size_t m = n; m <= n + 3; ++m) CHECK(components_without(t.tower().level(m), d) == 2);
    }
}

TEST_CASE("fundamental circuits") {
  Ladder l;
  SpanningTower t(fixtures::tower_of(l.g));
  EdgeSet c = t.fundamental_circuit(l.a(0));
  CHECK(c.restrict(t.tower(), 10) == FiniteEdges{l.a(0), l.r(0), l.b(0), l.r(1)});
  CHECK(t.fundamental_circuit(l.a(1)).restrict(t.tower(), 12) == FiniteEdges{l.a(1), l.r(1), l.b(1), l.r(2)});
  CHECK_THROWS_AS(t.fundamental_circuit(l.r(0)), InvalidParameter);

  // Lazy membership and level restriction agree.
  for (const auto& e : t.tower().level(8).edges) {
    if (t.contains(e.edge)) continue;
    EdgeSet ce = t.fundamental_circuit(e.edge);
    for (const auto& x : t.tower().level(8).edges) CHECK(ce.contains(x.edge) == (t.fundamental_circuit_at(e.edge, 8).count(x.edge) > 0));
  }
}

TEST_CASE("avoided edges are chosen only without alternatives") {
  Ladder l;
  SpanningTower plain(fixtures::tower_of(l.g));
  SpanningTower avoiding(fixtures::tower_of(l.g), {l.r(1)});
  CHECK(plain.contains(l.r(1)));
  CHECK_FALSE(avoiding.contains(l.r(1)));
  for (std::size_t n = 0; n <= 10; ++n) CHECK(avoiding.tree(n).size() + 1 == avoiding.tower().level(n).nodes().size());
}

TEST_CASE("breadth-first tree") {
  auto ray = make_generator("ray");
  LayeredTree r(ray);
  for (std::uint64_t i = 1; i < 30; ++i) CHECK(r.parent_edge(VertexId{i}) == Edge{VertexId{i - 1}, VertexId{i}});

  Ladder l;
  LayeredTree t(l.g);
  CHECK_FALSE(t.parent_edge(l.u(0)).has_value());
  CHECK(t.parent_edge(l.w(0)) == l.r(0));
  CHECK(t.parent_edge(l.u(1)) == l.a(0));
  CHECK(t.parent_edge(l.u(-1)) == l.a(-1));
  // w_1 is at distance 2 from u_0 via u_1 or w_0; the smaller index wins.
  CHECK(t.parent_edge(l.w(1)) == l.b(0));
  for (std::uint64_t v = 0; v < 60; ++v)
    for (VertexId y : l.g->neighbors(VertexId{v})) {
      Edge e = Edge::between(VertexId{v}, y);
      if (t.contains(e)) continue;
      FiniteEdges c = t.fundamental_circuit(e);
      CHECK(c.count(e) == 1);
      std::map<VertexId, int> deg;
      for (const auto& x : c) {
        ++deg[x.lo];
        ++deg[x.hi];
      }
      for (const auto& [_, k] : deg) CHECK(k == 2);
    }
}

TEST_CASE("breadth-first fundamental cuts are lazy and may be infinite") {
  Ladder l;
  LayeredTree t(l.g);
  EdgeSet d = t.fundamental_cut(l.r(0));
  CHECK_FALSE(d.is_finite());
  CHECK(d.contains(l.r(0)));
  MinorTower tower(l.g);
  // Every chord whose circuit uses r_0 lies in D_{r_0}.
  for (const auto& e : tower.level(20).edges) {
    if (t.contains(e.edge)) continue;
    CHECK(d.contains(e.edge) == (t.fundamental_circuit(e.edge).count(l.r(0)) > 0));
  }
}

TEST_CASE("normal witnesses") {
  Ladder l;
  auto snake = l.g->normal_tree_witness();
  REQUIRE(snake);
  CHECK(validate_normal(*l.g, *snake, 20).is_verified());
  CHECK(snake->parent(l.w(0)) == l.u(0));
  CHECK(snake->parent(l.w(1)) == l.w(0));
  CHECK(snake->parent(l.u(1)) == l.w(1));
  CHECK(snake->parent(l.u(2)) == l.u(1));
  CHECK(snake->parent(l.w(-1)) == l.w(0));
  CHECK(snake->parent(l.u(-1)) == l.w(-1));

  NormalTreeWitness as_witness("comb", l.u(0), [&l](VertexId v) -> std::optional<VertexId> {
    auto [c, s] = l.g->position(v);
    if (c == 0) return s == 0 ? std::nullopt : std::optional<VertexId>(l.u(0));
    if (s == 1) return l.w(c > 0 ? c - 1 : c + 1);
    return l.w(c);
  });
  Verdict v = validate_normal(*l.g, as_witness, 20);
  REQUIRE(v.is_refuted());
  REQUIRE(v.witness->edge);
  CHECK(*v.witness->edge == l.a(1));

  auto tree = make_generator("binary_tree");
  auto tw = tree->normal_tree_witness();
  REQUIRE(tw);
  CHECK(validate_normal(*tree, *tw, 100).is_verified());
}
