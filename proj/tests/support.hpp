#pragma once

// Shared fixtures and brute-force oracles for the test binaries. The oracles
// deliberately avoid the library's tower, union-find and elimination code.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <vector>

#include "infgraph/generators.hpp"
#include "infgraph/minor_tower.hpp"
#include "infgraph/strip.hpp"

namespace fixtures {

using namespace infgraph;

inline std::shared_ptr<const StripGraph> ladder() {
  return std::dynamic_pointer_cast<const StripGraph>(make_generator("double_ladder"));
}

// Double ladder labels: u_i top, w_i bottom, a_i = u_i u_{i+1}, b_i = w_i
// w_{i+1}, r_i = u_i w_i.
struct Ladder {
  std::shared_ptr<const StripGraph> g = ladder();
  VertexId u(long long i) const { return g->at(i, 0); }
  VertexId w(long long i) const { return g->at(i, 1); }
  Edge a(long long i) const { return Edge::between(u(i), u(i + 1)); }
  Edge b(long long i) const { return Edge::between(w(i), w(i + 1)); }
  Edge r(long long i) const { return Edge::between(u(i), w(i)); }
  FiniteEdges square(long long i) const { return {r(i), a(i), r(i + 1), b(i)}; }
};

inline std::shared_ptr<MinorTower> tower_of(const GraphPtr& g) { return std::make_shared<MinorTower>(g); }

// Components of G - S_n among the vertices of index <= bound, by plain BFS.
// Returns, for each vertex outside S_n up to the bound, a component label.
inline std::map<std::uint64_t, std::uint64_t> brute_components(const LazyGraph& g, std::uint64_t n, std::uint64_t bound) {
  std::map<std::uint64_t, std::uint64_t> label;
  std::uint64_t top = bound;
  if (auto c = g.vertex_count()) top = std::min<std::uint64_t>(top, *c - 1);
  for (std::uint64_t start = n + 1; start <= top; ++start) {
    if (label.count(start)) continue;
    std::deque<std::uint64_t> queue{start};
    label[start] = start;
    while (!queue.empty()) {
      auto x = queue.front();
      queue.pop_front();
      for (VertexId y : g.neighbors(VertexId{x})) {
        if (y.index <= n || y.index > top || label.count(y.index)) continue;
        label[y.index] = start;
        queue.push_back(y.index);
      }
    }
  }
  return label;
}

// Edges of G_n with their endpoints as (real index or component label) pairs.
struct BruteMinor {
  std::map<Edge, std::pair<std::int64_t, std::int64_t>> ends;  // real: index, component: -1 - label
};

inline BruteMinor brute_minor(const LazyGraph& g, std::uint64_t n, std::uint64_t bound) {
  auto comp = brute_components(g, n, bound);
  BruteMinor m;
  for (std::uint64_t i = 0; i <= n; ++i)
    for (VertexId y : g.neighbors(VertexId{i})) {
      if (y.index < i) continue;
      std::int64_t other = y.index <= n ? static_cast<std::int64_t>(y.index) : -1 - static_cast<std::int64_t>(comp.at(y.index));
      m.ends[Edge{VertexId{i}, y}] = {static_cast<std::int64_t>(i), other};
    }
  return m;
}

// Every node of the brute minor has even degree in D.
inline bool brute_even(const BruteMinor& m, const std::set<Edge>& d) {
  std::map<std::int64_t, int> deg;
  for (const auto& [e, ends] : m.ends)
    if (d.count(e)) {
      ++deg[ends.first];
      ++deg[ends.second];
    }
  return std::all_of(deg.begin(), deg.end(), [](const auto& p) { return p.second % 2 == 0; });
}

// F ∩ E(G[S_n]) is a cut of G[S_n]: tries every 2-colouring (small n only).
inline bool brute_is_cut(const LazyGraph& g, std::uint64_t n, const std::set<Edge>& f) {
  std::vector<Edge> inner;
  for (std::uint64_t i = 0; i <= n; ++i)
    for (VertexId y : g.neighbors(VertexId{i}))
      if (y.index > i && y.index <= n) inner.push_back(Edge{VertexId{i}, y});
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {  // vertex n fixed on side 0
    bool ok = true;
    for (const auto& e : inner) {
      bool crosses = ((mask >> e.lo.index) & 1) != (e.hi.index == n ? 0 : (mask >> e.hi.index) & 1);
      if (crosses != (f.count(e) > 0)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

inline std::set<Edge> symdiff(const std::set<Edge>& a, const std::set<Edge>& b) {
  std::set<Edge> out = a;
  for (const auto& e : b)
    if (!out.erase(e)) out.insert(e);
  return out;
}

// Dense Gaussian elimination with partial pivoting (independent of Eigen).
inline std::vector<double> gauss_solve(std::vector<std::vector<double>> a, std::vector<double> b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      double f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= a[i][k] * x[k];
    x[i] = s / a[i][i];
  }
  return x;
}

}  // namespace fixtures
