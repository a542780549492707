#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "infgraph/graph.hpp"
#include "infgraph/minor_tower.hpp"

namespace infgraph {

// Finite, checkable evidence attached to a Refuted verdict.
struct Witness {
  enum class Kind { Cut, Circuit, Node, Edge };
  Kind kind = Kind::Cut;
  FiniteEdges edges;              // the cut or circuit, or the offending cut of a node
  std::vector<MinorNode> nodes;   // nodes involved (odd node, side of a cut, ...)
  std::optional<Edge> edge;       // single offending edge
  double value = 0.0;             // residual or count where meaningful
};

std::string to_string(Witness::Kind k);

// Resolution-indexed answer. Verified(n) covers every finite cut or circuit
// living at level n, never the whole space.
struct Verdict {
  enum class Kind { Verified, Refuted, Unknown };
  Kind kind = Kind::Unknown;
  std::size_t level = 0;    // verified level, or the level the refutation was found at
  std::size_t horizon = 0;  // for Unknown
  std::optional<Witness> witness;
  std::string message;

  static Verdict verified(std::size_t n) { return {Kind::Verified, n, 0, std::nullopt, {}}; }
  static Verdict refuted(std::size_t n, Witness w, std::string msg = {}) {
    return {Kind::Refuted, n, 0, std::move(w), std::move(msg)};
  }
  static Verdict unknown(std::size_t horizon, std::string msg) {
    return {Kind::Unknown, 0, horizon, std::nullopt, std::move(msg)};
  }

  bool is_verified() const { return kind == Kind::Verified; }
  bool is_refuted() const { return kind == Kind::Refuted; }
  bool is_unknown() const { return kind == Kind::Unknown; }
};

std::string to_string(const Verdict& v);

}  // namespace infgraph
