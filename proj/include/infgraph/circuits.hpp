#pragma once

#include <cstddef>
#include <vector>

#include "infgraph/edge_set.hpp"
#include "infgraph/minor_tower.hpp"

namespace infgraph {

class NoCircuitAtLevel : public GraphError {
 public:
  NoCircuitAtLevel(std::size_t level, const std::string& what) : GraphError(what), level_(level) {}
  std::size_t level() const { return level_; }

 private:
  std::size_t level_;
};

// Circuits K_n of G_n through a pinned edge, one per level from the first
// level containing the edge up to the horizon, with K_m ∩ E(G_n) = K_n.
// See extract_circuit_through for when a lower K_n is only an even set.
struct CircuitThread {
  Edge pinned;
  std::size_t first_level = 0;
  std::size_t horizon = 0;
  std::vector<FiniteEdges> levels;  // levels[i] is K_{first_level + i}

  // K_n; empty below the first level, K_horizon above the horizon.
  const FiniteEdges& at(std::size_t n) const;
};

// Searches the cycles of G_horizon inside restrict(D, horizon) through e by
// increasing length (links in ascending edge order) and keeps the first whose
// projection to every lower level is again a single cycle through e. If no
// such cycle exists, the first cycle of G_horizon is kept and its lower
// levels are plain restrictions, which can meet a dummy more than once.
CircuitThread extract_circuit_through(const MinorTower& tower, const EdgeSet& d, const Edge& e, std::size_t horizon,
                                      std::size_t budget = 2'000'000);

// Greedy decomposition of restrict(D, horizon): a thread through the least
// uncovered edge, subtracted, repeated.
std::vector<CircuitThread> decompose(const MinorTower& tower, const EdgeSet& d, std::size_t horizon);

}  // namespace infgraph
