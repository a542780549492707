#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "infgraph/graph.hpp"

namespace infgraph {

// Finite multigraph on nodes 0..node_count-1 whose edges carry G-edge
// identities. Used for minors, where parallel edges are distinct G-edges.
struct Multigraph {
  struct Link {
    std::size_t a = 0;
    std::size_t b = 0;
    Edge edge;
  };

  std::size_t node_count = 0;
  std::vector<Link> links;

  std::vector<std::vector<std::size_t>> incidence() const;  // node -> link indices, ascending
  std::size_t degree_parity_violations() const;
};

// One step of an oriented walk or circuit: link index and whether it is
// traversed from a to b.
struct OrientedLink {
  std::size_t link = 0;
  bool forward = true;
};

// Breadth-first spanning forest; roots are the smallest node of each
// component, links scanned in ascending index order.
struct SpanningForest {
  std::vector<std::optional<std::size_t>> parent_link;  // per node
  std::vector<std::size_t> parent_node;
  std::vector<std::size_t> depth;
  std::vector<std::size_t> component;
  std::vector<bool> in_tree;  // per link
};

SpanningForest spanning_forest(const Multigraph& g, const std::vector<bool>* usable = nullptr);

// Tree path from x to y in the forest as oriented links (x -> y). Both nodes
// must lie in one component.
std::vector<OrientedLink> forest_path(const Multigraph& g, const SpanningForest& f, std::size_t x, std::size_t y);

// Fundamental cycle of a non-tree link, starting with the link itself
// traversed forward.
std::vector<OrientedLink> fundamental_cycle(const Multigraph& g, const SpanningForest& f, std::size_t chord);

}  // namespace infgraph
