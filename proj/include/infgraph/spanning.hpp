#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "infgraph/edge_set.hpp"
#include "infgraph/minor_tower.hpp"
#include "infgraph/normal_tree.hpp"
#include "infgraph/verdict.hpp"

namespace infgraph {

// Topological spanning tree presented as a compatible tower T_0, T_1, ...:
// T_0 joins v_0 to each dummy of G_0, and T_{k} adds one edge from v_k to each
// new dummy of the star expansion at level k. Among parallel candidates the
// lowest edge wins, except that edges in `avoid` are taken only when every
// candidate is avoided.
class SpanningTower {
 public:
  explicit SpanningTower(std::shared_ptr<const MinorTower> tower, FiniteEdges avoid = {});

  const MinorTower& tower() const { return *tower_; }
  const std::shared_ptr<const MinorTower>& tower_ptr() const { return tower_; }

  // Star edges chosen at level k (the construction log).
  const std::vector<Edge>& chosen(std::size_t k) const;

  // Exact membership for a G-edge; decided at the first level containing it.
  bool contains(const Edge& e) const;
  FiniteEdges tree(std::size_t n) const;  // T_n
  EdgeSet as_edge_set() const;

  // Fundamental cut of a tree edge, computed in G_n (n defaults to the first
  // level containing f). Level-independent by uniqueness.
  FiniteEdges fundamental_cut(const Edge& f, std::optional<std::size_t> n = std::nullopt) const;

  // Real edges of the fundamental cycle of chord e in T_m + e, m = max(n, level
  // of e), restricted to E(G_n).
  FiniteEdges fundamental_circuit_at(const Edge& e, std::size_t n) const;

  // Lazy C_e: e itself plus the tree edges g with e in D_g.
  EdgeSet fundamental_circuit(const Edge& e) const;

 private:
  std::shared_ptr<const MinorTower> tower_;
  FiniteEdges avoid_;
  mutable std::mutex mutex_;
  mutable std::vector<std::vector<Edge>> chosen_;
};

class NotInTree : public GraphError {
 public:
  using GraphError::GraphError;
};

// Ordinary spanning tree built by breadth-first layers from v_0. With a seed
// edge set, each component of (V(seed), seed) is kept together: it is spanned
// by its own breadth-first forest and hangs off the previous layer by a single
// lowest edge. Without a seed, the parent of v is its smallest neighbour one
// layer closer to v_0. Everything is computed on demand.
class LayeredTree {
 public:
  explicit LayeredTree(GraphPtr g, FiniteEdges seed = {});

  const LazyGraph& graph() const { return *graph_; }
  VertexId root() const { return VertexId{0}; }

  std::optional<Edge> parent_edge(VertexId v) const;
  std::vector<Edge> root_path(VertexId v) const;  // edges from v up to the root
  std::vector<Edge> path(VertexId u, VertexId v) const;
  bool contains(const Edge& e) const;

  FiniteEdges fundamental_circuit(const Edge& chord) const;
  EdgeSet fundamental_cut(const Edge& f) const;  // may be infinite; lazy

  // Parity of seed edges on the root path of v.
  bool seed_parity(VertexId v) const;

 private:
  struct SeedPart {
    std::uint64_t key = 0;  // smallest vertex of the component
    std::unordered_map<VertexId, VertexId> parent;  // forest parent within the component
    std::unordered_map<VertexId, std::size_t> depth;
  };

  std::uint64_t node_of(VertexId v) const;
  std::vector<VertexId> members(std::uint64_t node) const;
  std::size_t distance(std::uint64_t node) const;  // requires mutex_ held
  std::vector<Edge> seed_path(const SeedPart& part, VertexId a, VertexId b) const;

  struct Attach {
    std::optional<Edge> edge;  // to the previous layer; empty for the root node
    VertexId inside;           // endpoint inside the node
  };
  Attach attach(std::uint64_t node) const;  // requires mutex_ held

  GraphPtr graph_;
  FiniteEdges seed_;
  std::vector<SeedPart> parts_;
  std::unordered_map<VertexId, std::size_t> part_of_;

  mutable std::mutex mutex_;
  mutable std::unordered_map<std::uint64_t, std::size_t> dist_;
  mutable std::vector<std::uint64_t> frontier_;
  mutable std::size_t frontier_dist_ = 0;
  mutable std::unordered_map<std::uint64_t, Attach> attach_;
};

// Checks that every edge of G[S_n] joins vertices comparable in the witness's
// tree order and that witness parents are graph neighbours.
Verdict validate_normal(const LazyGraph& g, const NormalTreeWitness& w, std::size_t n);

}  // namespace infgraph
