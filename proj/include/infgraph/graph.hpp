#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace infgraph {

// Position of a vertex in the graph's canonical enumeration v_0, v_1, ...
struct VertexId {
  std::uint64_t index{};

  friend constexpr auto operator<=>(const VertexId&, const VertexId&) = default;
};

// Undirected edge, stored as (lower index, higher index). Edge identity is the
// same at every minor level; the natural orientation is lo -> hi.
struct Edge {
  VertexId lo;
  VertexId hi;

  static Edge between(VertexId a, VertexId b);

  bool has(VertexId v) const { return v == lo || v == hi; }
  VertexId other(VertexId v) const { return v == lo ? hi : lo; }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

using FiniteEdges = std::set<Edge>;
using VertexSet = std::vector<VertexId>;  // sorted, duplicate-free

std::string to_string(const Edge& e);

}  // namespace infgraph

template <>
struct std::hash<infgraph::VertexId> {
  std::size_t operator()(const infgraph::VertexId& v) const noexcept {
    return std::hash<std::uint64_t>{}(v.index);
  }
};

template <>
struct std::hash<infgraph::Edge> {
  std::size_t operator()(const infgraph::Edge& e) const noexcept {
    return std::hash<std::uint64_t>{}(e.lo.index * 0x9E3779B97F4A7C15ull ^ e.hi.index);
  }
};

namespace infgraph {

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownVertex : public GraphError {
 public:
  explicit UnknownVertex(VertexId v);
};

class InvalidParameter : public GraphError {
 public:
  using GraphError::GraphError;
};

// Component identity in G - S could not be decided within the search horizon.
class UnresolvableComponents : public GraphError {
 public:
  UnresolvableComponents(std::size_t horizon, const std::string& what);
  std::size_t horizon() const { return horizon_; }

 private:
  std::size_t horizon_;
};

enum class SepAnswer { Same, Different, Unknown };
enum class InfAnswer { Infinite, Finite, Unknown };

std::string to_string(SepAnswer a);
std::string to_string(InfAnswer a);

// Component of G - S containing a queried vertex. Two queried vertices lie in
// the same component iff their labels are equal.
struct ComponentInfo {
  std::uint64_t label{};
  InfAnswer infinite = InfAnswer::Unknown;
};

class NormalTreeWitness;

// A countable, locally finite, connected graph presented by its canonical
// enumeration and a finite neighbour function. Vertex ids are enumeration
// positions. Finite graphs report their vertex count; infinite ones report
// nullopt.
//
// The component oracles answer questions about G - S for finite S. Built-in
// generators answer exactly; other presentations may answer Unknown, in which
// case callers fall back to a breadth-first search bounded by search_horizon().
class LazyGraph {
 public:
  virtual ~LazyGraph() = default;

  virtual std::string name() const = 0;
  virtual std::optional<std::uint64_t> vertex_count() const { return std::nullopt; }

  // Sorted, duplicate-free. Throws UnknownVertex for ids outside the graph.
  virtual std::vector<VertexId> neighbors(VertexId v) const = 0;

  virtual std::string vertex_name(VertexId v) const;

  virtual SepAnswer same_component_without(const VertexSet& s, VertexId u, VertexId v) const;
  virtual InfAnswer is_component_infinite(const VertexSet& s, VertexId u) const;

  // Batch form used by the minor tower. The default asks the pairwise oracles
  // and falls back to bounded search; throws UnresolvableComponents when
  // component identity stays undecided.
  virtual std::vector<ComponentInfo> components_without(const VertexSet& s,
                                                        const std::vector<VertexId>& query) const;

  // Distance class used by geometric resistance assignments (column for
  // strips, depth for trees, ring for grids). Defaults to the lower endpoint's
  // index.
  virtual std::uint64_t edge_rank(const Edge& e) const { return e.lo.index; }

  // Generator-supplied normal spanning tree, where one is known by hand.
  virtual std::optional<NormalTreeWitness> normal_tree_witness() const;

  bool contains(VertexId v) const;
  VertexId vertex(std::uint64_t index) const;

  std::size_t search_horizon() const { return search_horizon_; }
  void set_search_horizon(std::size_t h) { search_horizon_ = h; }

 protected:
  void check_vertex(VertexId v) const;

 private:
  std::size_t search_horizon_ = 4096;
};

using GraphPtr = std::shared_ptr<const LazyGraph>;

// Bounded BFS in G - S from u. Returns Same/Different for v (Different only
// when u's component is exhausted) and the finiteness of u's component.
struct BoundedSearch {
  SepAnswer separation = SepAnswer::Unknown;
  InfAnswer finiteness = InfAnswer::Unknown;
  std::vector<VertexId> visited;
};

BoundedSearch bounded_search(const LazyGraph& g, const VertexSet& s, VertexId u,
                             std::optional<VertexId> target, std::size_t horizon);

// Finite subgraph of G induced by the ball of radius r around v.
struct Ball {
  std::vector<VertexId> vertices;  // sorted
  FiniteEdges edges;
};

Ball ball(const LazyGraph& g, VertexId v, std::size_t radius);

VertexSet make_vertex_set(std::vector<VertexId> vs);
VertexSet prefix_set(std::uint64_t n);  // S_n = {v_0..v_n}
bool set_contains(const VertexSet& s, VertexId v);

// Graphs whose component oracles reduce to a finite "box" around S plus a
// labelling of the outside by tail classes, each of which is connected in
// G - box and infinite. Subclasses only provide the region; all oracles are
// derived from it and are exact.
class RegionGraph : public LazyGraph {
 public:
  struct Region {
    std::unordered_set<VertexId> box;                  // finite, contains S
    std::function<std::uint64_t(VertexId)> tail_class;  // for vertices outside box
  };

  virtual Region region(const VertexSet& s) const = 0;

  SepAnswer same_component_without(const VertexSet& s, VertexId u, VertexId v) const override;
  InfAnswer is_component_infinite(const VertexSet& s, VertexId u) const override;
  std::vector<ComponentInfo> components_without(const VertexSet& s,
                                                const std::vector<VertexId>& query) const override;
};

// Explicit finite simple graph; vertices 0..n-1.
class FiniteGraph : public RegionGraph {
 public:
  FiniteGraph(std::string name, std::uint64_t n, const std::vector<std::pair<std::uint64_t, std::uint64_t>>& edges);

  std::string name() const override { return name_; }
  std::optional<std::uint64_t> vertex_count() const override { return adj_.size(); }
  std::vector<VertexId> neighbors(VertexId v) const override;
  std::string vertex_name(VertexId v) const override;
  Region region(const VertexSet& s) const override;

  void set_vertex_names(std::vector<std::string> names) { names_ = std::move(names); }
  FiniteEdges edges() const;

 private:
  std::string name_;
  std::vector<std::vector<VertexId>> adj_;
  std::vector<std::string> names_;
};

}  // namespace infgraph
