#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "infgraph/minor_tower.hpp"
#include "infgraph/verdict.hpp"

namespace infgraph {

struct Network {
  GraphPtr graph;
  std::function<double(const Edge&)> r;
  VertexId s;
  VertexId t;
};

// Flow value per edge in the natural orientation lo -> hi; the reverse
// direction carries the negated value.
class FlowAssignment {
 public:
  FlowAssignment() = default;
  explicit FlowAssignment(std::map<Edge, double> values);
  static FlowAssignment lazy(std::function<double(const Edge&)> fn);

  double operator()(const Edge& e) const;
  // Value along e leaving `from`.
  double directed(const Edge& e, VertexId from) const { return from == e.lo ? (*this)(e) : -(*this)(e); }
  FlowAssignment negated() const;

  bool is_finite() const { return !fn_; }
  const std::map<Edge, double>& values() const { return values_; }

 private:
  std::map<Edge, double> values_;
  std::function<double(const Edge&)> fn_;
};

inline constexpr double kFlowTolerance = 1e-9;

// Net outflow at v.
double node_residual(const Network& net, const FlowAssignment& f, VertexId v);

// Net outflow of a node of G_n; for a dummy, over the edges joining it to the
// rest of G_n.
double node_residual(const FiniteMinor& m, const FlowAssignment& f, const MinorNode& node);

// Node law at every node of G_n other than s and t, dummies included. A
// refutation groups the violating nodes by the sign of their inflow and
// reports the group with the larger total (inflow side on ties): a finite cut
// avoiding s and t and the net inflow through it.
Verdict check_kh1_prime(const MinorTower& tower, const Network& net, const FlowAssignment& f, std::size_t n);

struct OrientedEdge {
  Edge edge;
  bool forward = true;  // traversed lo -> hi
};

double circuit_residual(const Network& net, const FlowAssignment& f, const std::vector<OrientedEdge>& circuit);

// Σ f(e)^2 r(e) over E(G_n).
double energy_partial(const Network& net, const FlowAssignment& f, std::size_t n);

// Σ f(e) f'(e) over E(G_n).
double inner_product(const LazyGraph& g, const FlowAssignment& f, const FlowAssignment& f2, std::size_t n);

// Minimum-energy s-t flow of the given value on G_n with every dummy an
// ordinary node. Dense factorisation up to 2000 nodes, conjugate gradient
// beyond.
FlowAssignment min_energy_flow(const MinorTower& tower, const Network& net, std::size_t n, double value);

struct ElusivePair {
  Network net;
  FlowAssignment direct;    // unit flow on st
  FlowAssignment escaping;  // unit flow through both trees, 0 on st
  std::size_t level = 0;    // smallest n with every vertex of depth <= depth in S_n
};

ElusivePair elusive_pair(std::size_t depth);

// Resistance 2^-rank from the graph's edge ranks.
std::function<double(const Edge&)> geometric_resistance(const GraphPtr& g);

}  // namespace infgraph
