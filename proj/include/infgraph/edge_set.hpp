#pragma once

#include <functional>
#include <memory>
#include <string>

#include "infgraph/graph.hpp"
#include "infgraph/minor_tower.hpp"

namespace infgraph {

// Element of the edge space: a finite explicit set, or a lazy set given by a
// membership predicate. Lazy sets restrict to a level by filtering E(G_n)
// unless they bring a faster restriction of their own.
class EdgeSet {
 public:
  using Member = std::function<bool(const Edge&)>;
  using Restrict = std::function<FiniteEdges(const MinorTower&, std::size_t)>;

  EdgeSet() : EdgeSet(FiniteEdges{}) {}
  EdgeSet(FiniteEdges edges);  // NOLINT: finite sets convert implicitly

  static EdgeSet lazy(std::string name, Member member, Restrict restrict = {});

  bool is_finite() const { return finite_ != nullptr; }
  const FiniteEdges& edges() const;  // throws for lazy sets
  const std::string& name() const { return name_; }

  bool contains(const Edge& e) const;
  FiniteEdges restrict(const MinorTower& tower, std::size_t n) const;

  // Symmetric difference; finite when both operands are.
  friend EdgeSet operator^(const EdgeSet& a, const EdgeSet& b);

 private:
  std::string name_;
  std::shared_ptr<const FiniteEdges> finite_;
  Member member_;
  Restrict restrict_;
};

FiniteEdges symmetric_difference(const FiniteEdges& a, const FiniteEdges& b);
FiniteEdges intersection(const FiniteEdges& a, const FiniteEdges& b);

// Named sets for documentation examples: "all", "empty", and on two-slot
// strips "all_rungs", "all_horizontals", "square:<i>" (the square between
// columns i and i+1). Terms joined by '+' are summed.
EdgeSet named_edge_set(const GraphPtr& g, const std::string& expr);

}  // namespace infgraph
