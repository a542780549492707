#include <doctest.h>

#include "infgraph/edge_set.hpp"
#include "infgraph/minor_tower.hpp"
#include "support.hpp"

using namespace infgraph;
using fixtures::Ladder;

TEST_CASE("double ladder level 0 has three parallel edges to one dummy") {
  Ladder l;
  MinorTower t(l.g);
  const FiniteMinor& m = t.level(0);
  CHECK(m.real == std::vector<VertexId>{l.u(0)});
  REQUIRE(m.dummies.size() == 1);
  CHECK(m.dummies[0].infinite == InfAnswer::Infinite);
  CHECK(m.edge_set() == FiniteEdges{l.r(0), l.a(0), l.a(-1)});
  for (const auto& e : m.edges) CHECK(e.b == MinorNode::dummy(m.dummies[0].id));
}

TEST_CASE("double ladder level 3") {
  Ladder l;
  MinorTower t(l.g);
  const FiniteMinor& m = t.level(3);
  CHECK(m.real == std::vector<VertexId>{l.u(0), l.w(0), l.u(1), l.w(1)});
  CHECK(m.dummies.size() == 2);
  CHECK(m.edge_set() ==
        FiniteEdges{l.r(0), l.r(1), l.a(0), l.b(0), l.a(-1), l.b(-1), l.a(1), l.b(1)});
  CHECK(m.edge(l.a(-1)).b == m.edge(l.b(-1)).b);
  CHECK(m.edge(l.a(1)).b == m.edge(l.b(1)).b);
  CHECK(m.edge(l.a(1)).b != m.edge(l.a(-1)).b);
}

TEST_CASE("binary tree level 0") {
  MinorTower t(make_generator("binary_tree"));
  const FiniteMinor& m = t.level(0);
  CHECK(m.dummies.size() == 2);
  CHECK(m.edges.size() == 2);
}

TEST_CASE("restriction of edge sets") {
  Ladder l;
  MinorTower t(l.g);
  EdgeSet h = named_edge_set(l.g, "all_horizontals");
  CHECK(h.restrict(t, 3) == FiniteEdges{l.a(0), l.b(0), l.a(-1), l.b(-1), l.a(1), l.b(1)});
  CHECK(EdgeSet(FiniteEdges{}).restrict(t, 5).empty());
  CHECK(EdgeSet(FiniteEdges{l.r(0)}).restrict(t, 0) == FiniteEdges{l.r(0)});
  // Monotone consistency of lazy restriction.
  for (std::size_t n = 0; n < 12; ++n)
    for (std::size_t m = n; m < 14; ++m) CHECK(t.restrict(h.restrict(t, m), n) == h.restrict(t, n));
}

TEST_CASE("lifted cuts") {
  Ladder l;
  MinorTower t(l.g);
  const FiniteMinor& m = t.level(3);
  CHECK(lift_cut(m, {MinorNode::real(l.u(0))}).edges == FiniteEdges{l.r(0), l.a(0), l.a(-1)});
  MinorNode left = m.edge(l.a(-1)).b;
  CHECK(lift_cut(m, {left, MinorNode::real(l.u(0)), MinorNode::real(l.w(0))}).edges == FiniteEdges{l.a(0), l.b(0)});
  CHECK(lift_cut(m, {}).edges.empty());
}

TEST_CASE("level structure matches brute-force contraction") {
  for (const auto& name : {"double_ladder", "grid", "nn_grid", "binary_tree", "one_way_ladder", "tree_circles:d=3",
                           "elusive", "triangle_strip"}) {
    CAPTURE(name);
    auto g = make_generator_from_selector(name);
    MinorTower t(g);
    for (std::uint64_t n = 0; n <= 20; ++n) {
      const FiniteMinor& m = t.level(n);
      auto brute = fixtures::brute_minor(*g, n, n + 400);
      REQUIRE(m.edges.size() == brute.ends.size());
      // Same partition of the outside endpoints into dummies.
      std::map<std::int64_t, std::uint64_t> label_to_dummy;
      for (const auto& e : m.edges) {
        auto ends = brute.ends.at(e.edge);
        CHECK(!e.a.is_dummy());
        if (!e.b.is_dummy()) {
          CHECK(ends.second >= 0);
          continue;
        }
        auto [it, fresh] = label_to_dummy.emplace(ends.second, e.b.id);
        CHECK(it->second == e.b.id);
      }
      std::set<std::uint64_t> used;
      for (const auto& [_, id] : label_to_dummy) used.insert(id);
      CHECK(used.size() == label_to_dummy.size());
      // Every dummy has an edge (the graph is connected).
      for (const auto& d : m.dummies) CHECK(!m.incident(MinorNode::dummy(d.id)).empty());
    }
  }
}

TEST_CASE("tower nesting and collapse commute") {
  for (const auto& name : {"double_ladder", "grid", "binary_tree", "one_way_ladder", "elusive"}) {
    CAPTURE(name);
    MinorTower t(make_generator(name));
    for (std::size_t m = 1; m <= 30; ++m) {
      const FiniteMinor& hi = t.level(m);
      for (std::size_t n = m >= 5 ? m - 5 : 0; n < m; ++n) {
        const FiniteMinor& lo = t.level(n);
        for (const auto& e : lo.edges) {
          REQUIRE(hi.has_edge(e.edge));
          const MinorEdge& he = hi.edge(e.edge);
          CHECK(t.collapse(he.b, n) == e.b);
          CHECK(t.collapse(he.a, n) == e.a);
        }
        for (const auto& d : hi.dummies) CHECK(lo.has_dummy(t.collapse(MinorNode::dummy(d.id), n).id));
      }
    }
  }
}

TEST_CASE("finite graphs stop at their last level") {
  auto g = std::make_shared<FiniteGraph>("c4", 4, std::vector<std::pair<std::uint64_t, std::uint64_t>>{{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  MinorTower t(g);
  CHECK(t.max_level() == 3u);
  CHECK(t.level(100).level == 3);
  CHECK(t.level(100).dummies.empty());
  CHECK(t.level(1).dummies.size() == 1);
}

TEST_CASE("undecidable components raise") {
  struct Opaque : LazyGraph {
    GraphPtr inner = make_generator("double_ladder");
    std::string name() const override { return "opaque"; }
    std::vector<VertexId> neighbors(VertexId v) const override { return inner->neighbors(v); }
  };
  auto g = std::make_shared<Opaque>();
  g->set_search_horizon(50);
  MinorTower t(g);
  CHECK_THROWS_AS(t.level(3), UnresolvableComponents);
}

TEST_CASE("lifted cuts meet every cycle of the level evenly") {
  std::mt19937_64 rng(11);
  Ladder l;
  MinorTower t(l.g);
  for (std::size_t n = 0; n <= 10; ++n) {
    const FiniteMinor& m = t.level(n);
    auto nodes = m.nodes();
    Multigraph g = m.multigraph();
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<MinorNode> side;
      for (const auto& x : nodes)
        if (rng() & 1) side.push_back(x);
      FiniteEdges cut = lift_cut(m, side).edges;
      // Check against every fundamental cycle of a spanning forest.
      SpanningForest f = spanning_forest(g);
      for (std::size_t li = 0; li < g.links.size(); ++li) {
        if (f.in_tree[li]) continue;
        std::size_t hits = 0;
        for (const auto& s : fundamental_cycle(g, f, li)) hits += cut.count(g.links[s.link].edge);
        CHECK(hits % 2 == 0);
      }
    }
  }
}
