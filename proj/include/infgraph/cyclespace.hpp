#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "infgraph/edge_set.hpp"
#include "infgraph/minor_tower.hpp"
#include "infgraph/normal_tree.hpp"
#include "infgraph/spanning.hpp"
#include "infgraph/strip.hpp"
#include "infgraph/verdict.hpp"

namespace infgraph {

class OddCircuit : public GraphError {
 public:
  OddCircuit(FiniteEdges circuit, const std::string& what) : GraphError(what), circuit_(std::move(circuit)) {}
  const FiniteEdges& circuit() const { return circuit_; }

 private:
  FiniteEdges circuit_;
};

class OddBond : public GraphError {
 public:
  OddBond(FiniteEdges bond, const std::string& what) : GraphError(what), bond_(std::move(bond)) {}
  const FiniteEdges& bond() const { return bond_; }

 private:
  FiniteEdges bond_;
};

class NoNormalWitness : public GraphError {
 public:
  using GraphError::GraphError;
};

class ThinnessViolation : public GraphError {
 public:
  using GraphError::GraphError;
};

class PartitionNotMeasurable : public GraphError {
 public:
  using GraphError::GraphError;
};

// Verified(n) iff restrict(D, k) has even degree at every node of G_k for all
// k <= n; otherwise Refuted at the first failing level with the atomic cut
// of the odd node.
Verdict is_cycle_member(const MinorTower& tower, const EdgeSet& d, std::size_t n);

// Verified(n) iff F meets every circuit of G[S_n] evenly; otherwise Refuted at
// the first failing level with such a circuit met oddly.
Verdict is_cut_member(const LazyGraph& g, const EdgeSet& f, std::size_t n);

std::pair<Verdict, Verdict> bicycle_check(const MinorTower& tower, const EdgeSet& e, std::size_t n);

// Family of edge sets given through its incidence: for each edge, the indices
// of the members containing it (nullopt if there are infinitely many).
struct ThinFamily {
  std::function<std::optional<std::vector<std::int64_t>>(const Edge&)> incidence;
};

FiniteEdges thin_sum(const MinorTower& tower, const ThinFamily& fam, std::size_t n);

struct Orthogonality {
  enum class Kind { EvenSoFar, OddSoFar, ExactEven, ExactOdd };
  Kind kind = Kind::ExactEven;
  std::size_t count = 0;
  std::size_t level = 0;
};

std::string to_string(const Orthogonality& o);

// Exact whenever one of the sets is finite; otherwise the parity of the
// intersection inside E(G_n).
Orthogonality orthogonal(const MinorTower& tower, const EdgeSet& d, const EdgeSet& f, std::size_t n);

// Finite fundamental cuts and circuits of a normal spanning tree.
class NormalTreeSpace {
 public:
  NormalTreeSpace(GraphPtr g, NormalTreeWitness w);

  const NormalTreeWitness& witness() const { return w_; }
  bool is_tree_edge(const Edge& e) const { return w_.is_tree_edge(e); }
  FiniteEdges fundamental_cut(const Edge& f) const;
  FiniteEdges fundamental_circuit(const Edge& e) const;

  FiniteEdges sigma(const FiniteEdges& e) const;
  FiniteEdges tau(const FiniteEdges& e) const;

 private:
  GraphPtr g_;
  NormalTreeWitness w_;
};

// Uses the graph's own witness after validating it on the levels the input
// touches. Throws NoNormalWitness when there is none or it fails validation.
FiniteEdges sigma(const GraphPtr& g, const FiniteEdges& e);
FiniteEdges tau(const GraphPtr& g, const FiniteEdges& e);
NormalTreeSpace normal_space(const GraphPtr& g, std::size_t validate_to);

// Cut containing E: the sum of the fundamental cuts D_f (f in E, in a layered
// spanning tree seeded with E). Throws OddCircuit when E has an odd circuit.
struct CutExtension {
  std::shared_ptr<const LayeredTree> tree;
  EdgeSet cut;
};
CutExtension extend_to_cut(const GraphPtr& g, const FiniteEdges& e);

// Finite element of the cycle space containing E. Throws OddBond when some
// subset of E is an odd bond.
EdgeSet extend_to_cycle(const MinorTower& tower, const FiniteEdges& e);

// Tree-packing condition: the number of edges between classes compared with
// k(l-1) for l classes.
struct PackingResult {
  enum class Status { Satisfied, Violated, Undetermined };
  Status status = Status::Undetermined;
  std::size_t count = 0;       // exact count inside E(G_n)
  bool unbounded = false;      // certified: classes meet at infinitely many edges
  std::size_t required = 0;    // k(l-1)
  std::size_t classes = 0;     // l
  std::size_t level = 0;
};

std::string to_string(PackingResult::Status s);

// Classes of all real vertices and whole dummies of one level.
struct LevelPartition {
  std::size_t level = 0;
  std::map<MinorNode, int> cls;
};

// Strip partition by slot; measurable at every level through periodicity.
struct SlotPartition {
  std::vector<int> slot_class;
};

PackingResult tree_packing_condition(const MinorTower& tower, const LevelPartition& p, unsigned k);
PackingResult tree_packing_condition(const StripGraph& g, const SlotPartition& p, unsigned k, std::size_t n);

// The partition of level n into S_n and the individual dummies.
LevelPartition component_partition(const MinorTower& tower, std::size_t n);

}  // namespace infgraph
