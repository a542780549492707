#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "infgraph/graph.hpp"

namespace infgraph {

// Rooted spanning tree given by parent pointers. The tree is normal when the
// endpoints of every graph edge are comparable in the tree order; that is a
// property of the witness checked by validate_normal, not assumed.
class NormalTreeWitness {
 public:
  using ParentFn = std::function<std::optional<VertexId>(VertexId)>;

  NormalTreeWitness(std::string name, VertexId root, ParentFn parent, std::size_t depth_budget = 1u << 20);

  const std::string& name() const { return name_; }
  VertexId root() const { return root_; }

  std::optional<VertexId> parent(VertexId v) const;

  // Root path v, parent(v), ..., root. Throws GraphError when the chain does
  // not reach the root within the depth budget.
  std::vector<VertexId> ancestors(VertexId v) const;
  std::size_t depth(VertexId v) const;

  bool is_ancestor(VertexId a, VertexId v) const;  // a <= v in the tree order
  bool comparable(VertexId a, VertexId b) const;
  bool is_tree_edge(const Edge& e) const;

  // Tree edge from v to its parent.
  Edge parent_edge(VertexId v) const;

  // Child endpoint of a tree edge.
  VertexId lower_end(const Edge& tree_edge) const;

 private:
  std::string name_;
  VertexId root_;
  ParentFn parent_;
  std::size_t depth_budget_;
};

}  // namespace infgraph
