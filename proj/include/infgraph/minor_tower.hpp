#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "infgraph/graph.hpp"
#include "infgraph/multigraph.hpp"

namespace infgraph {

// A vertex of a level minor G_n: either a real vertex of S_n or a dummy.
struct MinorNode {
  enum class Kind { Real, Dummy };
  Kind kind = Kind::Real;
  std::uint64_t id = 0;  // vertex index for real nodes, dummy id otherwise

  static MinorNode real(VertexId v) { return {Kind::Real, v.index}; }
  static MinorNode dummy(std::uint64_t id) { return {Kind::Dummy, id}; }
  bool is_dummy() const { return kind == Kind::Dummy; }

  friend constexpr auto operator<=>(const MinorNode&, const MinorNode&) = default;
};

std::string to_string(const MinorNode& node);

// Contraction of one component of G - S_n. Ids are stable: a component that
// survives to the next level keeps its id, and the pieces of a split component
// get fresh ids with the split dummy as parent.
struct DummyVertex {
  std::uint64_t id = 0;
  VertexId representative;
  InfAnswer infinite = InfAnswer::Unknown;
  std::optional<std::uint64_t> parent;
  std::size_t created_level = 0;
};

struct MinorEdge {
  Edge edge;
  MinorNode a;  // node of edge.lo
  MinorNode b;  // node of edge.hi
};

class FiniteMinor {
 public:
  std::size_t level = 0;
  std::vector<VertexId> real;         // S_n
  std::vector<DummyVertex> dummies;   // ascending id
  std::vector<MinorEdge> edges;       // ascending edge

  bool has_edge(const Edge& e) const;
  const MinorEdge& edge(const Edge& e) const;  // throws when absent
  const DummyVertex& dummy(std::uint64_t id) const;
  bool has_dummy(std::uint64_t id) const;

  // Real nodes in index order, then dummies in id order. Multigraph node i is
  // nodes()[i] and link i is edges[i].
  std::vector<MinorNode> nodes() const;
  std::size_t node_index(const MinorNode& node) const;
  Multigraph multigraph() const;

  FiniteEdges edge_set() const;
  std::vector<const MinorEdge*> incident(const MinorNode& node) const;
};

// Record of the star expansion that produced level k: the dummy of level k-1
// containing v_k is replaced by v_k and its pieces. Level 0 expands the whole
// graph.
struct StarExpansion {
  std::size_t level = 0;
  VertexId center;
  std::optional<std::uint64_t> expanded;  // dummy id at level k-1; empty for level 0
  std::vector<std::uint64_t> children;    // new dummy ids
  std::vector<std::vector<Edge>> star_edges;  // per child, the edges center -> child, ascending
};

// The tower G_0, G_1, ... of a lazy graph, built incrementally and memoized.
// Finite graphs stop at the level where S_n is everything; higher requests are
// clamped to it.
class MinorTower {
 public:
  explicit MinorTower(GraphPtr g);

  const LazyGraph& graph() const { return *graph_; }
  const GraphPtr& graph_ptr() const { return graph_; }

  std::optional<std::size_t> max_level() const;
  std::size_t clamp(std::size_t n) const;

  // Throws UnresolvableComponents when component identity is undecidable.
  const FiniteMinor& level(std::size_t n) const;
  const StarExpansion& expansion(std::size_t k) const;

  // Node of level n (n at most the level the node comes from) that a node of
  // a higher level projects to.
  MinorNode collapse(const MinorNode& node, std::size_t n) const;

  // Node of level n containing v.
  MinorNode locate(VertexId v, std::size_t n) const;

  const DummyVertex& dummy(std::uint64_t id) const;

  static bool in_level(const Edge& e, std::size_t n) { return e.lo.index <= n; }
  FiniteEdges restrict(const FiniteEdges& d, std::size_t n) const;

 private:
  void build_next() const;  // requires mutex_ held

  GraphPtr graph_;
  mutable std::mutex mutex_;
  mutable std::vector<std::unique_ptr<FiniteMinor>> levels_;
  mutable std::vector<StarExpansion> expansions_;
  mutable std::map<std::uint64_t, DummyVertex> dummies_;
  mutable std::map<std::uint64_t, std::uint64_t> absorbed_;  // vertex index -> dummy id it was taken from
  mutable std::uint64_t next_dummy_ = 0;
};

// Cut of G obtained from a bipartition of V(G_n); the edge set is the G_n cut
// verbatim, and each dummy stands for its whole component.
struct LiftedCut {
  FiniteEdges edges;
  std::vector<MinorNode> side;  // the nodes given as side A
};

LiftedCut lift_cut(const FiniteMinor& m, const std::vector<MinorNode>& side);

}  // namespace infgraph
