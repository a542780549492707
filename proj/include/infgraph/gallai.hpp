#pragma once

#include <vector>

#include "infgraph/graph.hpp"
#include "infgraph/multigraph.hpp"

namespace infgraph {

struct GallaiPartition {
  std::vector<bool> side;  // X, with F = δ(X)
  FiniteEdges even;        // D: every node has even degree
  FiniteEdges cut;         // F
};

// Splits the links into an even-degree part and a cut. X solves
// deg(v) x_v + Σ_{y~v} x_y = deg(v) over GF(2); pivots are taken in ascending
// column order and free variables are set to 0.
GallaiPartition gallai_partition(const Multigraph& h);
GallaiPartition gallai_partition(const FiniteGraph& h);

}  // namespace infgraph
