#include <doctest.h>

#include "infgraph/ends.hpp"
#include "support.hpp"

using namespace infgraph;
using fixtures::Ladder;

namespace {

Ray column_ray(const Ladder& l, int direction, unsigned slot) {
  return Ray{[&l, direction, slot](std::size_t i) { return l.g->at(direction * static_cast<long long>(i), slot); }};
}

}  // namespace

TEST_CASE("thread counts") {
  Ladder l;
  MinorTower t(l.g);
  CHECK(end_threads(t, 3).size() == 2);
  for (std::size_t n = 3; n <= 30; ++n) CHECK(end_threads(t, n).size() == 2);
  MinorTower quadrant(make_generator("nn_grid"));
  for (std::size_t n = 0; n <= 20; ++n) CHECK(end_threads(quadrant, n).size() == 1);
  MinorTower tree(make_generator("binary_tree"));
  CHECK(end_threads(tree, 0).size() == 2);
}

TEST_CASE("threads are nested and split only") {
  for (const auto& name : {"binary_tree", "regular_tree:d=3", "double_ladder", "grid"}) {
    CAPTURE(name);
    MinorTower t(make_generator_from_selector(name));
    for (std::size_t n = 1; n <= 20; ++n) {
      auto hi = end_threads(t, n);
      auto lo = end_threads(t, n - 1);
      std::set<std::uint64_t> lo_tails;
      for (const auto& th : lo) lo_tails.insert(th.dummies.back());
      for (const auto& th : hi) {
        CHECK(th.dummies.size() == n + 1);
        CHECK(lo_tails.count(th.dummies[n - 1]));
        CHECK_FALSE(th.provisional);
        for (std::size_t k = 0; k <= n; ++k) CHECK(t.dummy(th.dummies[k]).infinite == InfAnswer::Infinite);
      }
      std::set<std::uint64_t> tails;
      for (const auto& th : hi) CHECK(tails.insert(th.dummies.back()).second);
      CHECK(hi.size() >= lo.size());
    }
  }
}

TEST_CASE("tree thread count equals infinite components") {
  auto g = make_generator("binary_tree");
  MinorTower t(g);
  for (std::size_t n = 0; n <= 14; ++n) {
    auto comps = fixtures::brute_components(*g, n, 4000);
    std::set<std::uint64_t> labels;
    for (const auto& [v, label] : comps)
      if (v > 2000) labels.insert(label);  // components reaching deep vertices
    CHECK(end_threads(t, n).size() == labels.size());
  }
}

TEST_CASE("ray classification") {
  Ladder l;
  MinorTower t(l.g);
  auto right = classify_ray(t, column_ray(l, 1, 0), 10);
  auto left = classify_ray(t, column_ray(l, -1, 0), 10);
  REQUIRE(right);
  REQUIRE(left);
  auto threads = end_threads(t, 10);
  std::set<std::vector<std::uint64_t>> known;
  for (const auto& th : threads) known.insert(th.dummies);
  CHECK(known.count(*right));
  CHECK(known.count(*left));
  CHECK(*right != *left);
  // The right thread holds the right dummy at level 3.
  CHECK((*right)[3] == t.level(3).edge(l.a(1)).b.id);

  auto same = distinguish_rays(t, column_ray(l, 1, 0), column_ray(l, 1, 1), 20);
  CHECK(std::holds_alternative<SameThread>(same));
  auto differ = distinguish_rays(t, column_ray(l, -1, 0), column_ray(l, 1, 0), 20);
  REQUIRE(std::holds_alternative<DifferAtLevel>(differ));
  CHECK(std::get<DifferAtLevel>(differ).level == 1);
  CHECK(std::holds_alternative<SameThread>(distinguish_rays(t, column_ray(l, 1, 0), column_ray(l, 1, 0), 20)));
}

TEST_CASE("short ray budgets give Unknown") {
  Ladder l;
  MinorTower t(l.g);
  Ray r = column_ray(l, 1, 0);
  r.budget = 3;  // u_0, u_1, u_2; S_7 already contains u_2
  CHECK_FALSE(classify_ray(t, r, 7).has_value());
  auto cmp = distinguish_rays(t, r, column_ray(l, 1, 1), 7);
  CHECK(std::holds_alternative<RaysUnknown>(cmp));
}

TEST_CASE("classification is stable under longer prefixes") {
  Ladder l;
  MinorTower t(l.g);
  Ray shorter = column_ray(l, -1, 1);
  shorter.budget = 40;
  Ray longer = column_ray(l, -1, 1);
  auto a = classify_ray(t, shorter, 12);
  auto b = classify_ray(t, longer, 12);
  REQUIRE(a);
  CHECK(a == b);
}

TEST_CASE("boundary profiles") {
  Ladder l;
  MinorTower t(l.g);
  auto threads = end_threads(t, 3);
  for (const auto& th : threads) {
    BoundaryProfile p = boundary_profile(t, th, 3);
    CHECK(p.steps[3].edge_boundary == 2);
    CHECK(p.steps[3].vertex_boundary == 2);
    CHECK(p.steps[3].ratio == doctest::Approx(1.0));
  }
  MinorTower ray(make_generator("ray"));
  auto single = end_threads(ray, 10);
  REQUIRE(single.size() == 1);
  BoundaryProfile p = boundary_profile(ray, single[0], 10);
  for (const auto& s : p.steps) {
    CHECK(s.edge_boundary == 1);
    CHECK(s.vertex_boundary == 1);
  }
  CHECK(p.liminf_upper_estimate == doctest::Approx(1.0));

  MinorTower grid(make_generator("grid"));
  auto g = end_threads(grid, 24);
  REQUIRE(g.size() == 1);
  BoundaryProfile gp = boundary_profile(grid, g[0], 24);
  CHECK(gp.steps.size() == 25);
  // The 5x5 box S_24 has 20 boundary edges to 20 vertices.
  CHECK(gp.steps[24].edge_boundary == 20);
  CHECK(gp.steps[24].vertex_boundary == 20);
}
