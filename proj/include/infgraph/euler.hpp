#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "infgraph/edge_set.hpp"
#include "infgraph/minor_tower.hpp"
#include "infgraph/verdict.hpp"

namespace infgraph {

class NotEulerianAtLevel : public GraphError {
 public:
  NotEulerianAtLevel(Verdict v, const std::string& what) : GraphError(what), verdict_(std::move(v)) {}
  const Verdict& verdict() const { return verdict_; }

 private:
  Verdict verdict_;
};

// The edges of the set at this level do not hang together; the witness is a
// cut of G_n around the pin's part that contains no edge of the set.
class DisconnectedAtLevel : public GraphError {
 public:
  DisconnectedAtLevel(std::size_t level, FiniteEdges cut, const std::string& what)
      : GraphError(what), level_(level), cut_(std::move(cut)) {}
  std::size_t level() const { return level_; }
  const FiniteEdges& cut() const { return cut_; }

 private:
  std::size_t level_;
  FiniteEdges cut_;
};

class NotRefinable : public GraphError {
 public:
  using GraphError::GraphError;
};

struct WalkStep {
  Edge edge;
  MinorNode from;
  MinorNode to;

  bool forward() const { return from == MinorNode::real(edge.lo); }
  friend bool operator==(const WalkStep&, const WalkStep&) = default;
};

// Closed walk of G_n using every edge of restrict(D, n) exactly once. Walks of
// lower levels are projections of a single finer walk (the plan), so walks of
// one chain agree wherever they overlap.
struct LevelWalk {
  std::size_t level = 0;
  VertexId pin;
  std::vector<WalkStep> steps;

  struct Plan {
    std::size_t level = 0;
    std::vector<WalkStep> steps;
  };
  std::shared_ptr<const Plan> plan;
};

// Lookahead: the plan is built at level n + lookahead (clamped), falling back
// to level n when the set is not Eulerian or connected there.
LevelWalk euler_tour(const MinorTower& tower, const EdgeSet& d, std::size_t n, VertexId pin,
                     std::size_t lookahead = 16);

// Walk at level w.level + 1 projecting to w. Beyond the plan the walk is
// extended by splicing the new star edges into the visits of the expanded
// dummy.
LevelWalk refine(const MinorTower& tower, const EdgeSet& d, const LevelWalk& w, std::size_t budget = 200'000);

// Steps of a walk at a level >= n mapped to level n: edges outside E(G_n) are
// dropped and endpoints collapsed.
std::vector<WalkStep> project(const MinorTower& tower, const std::vector<WalkStep>& steps, std::size_t n);

// Checks closedness, adjacency of consecutive steps and that the steps use
// exactly the edges of `edges`, each once.
bool is_euler_circuit(const std::vector<WalkStep>& steps, const FiniteEdges& edges);

}  // namespace infgraph
