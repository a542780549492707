#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "infgraph/graph.hpp"
#include "infgraph/strip.hpp"

namespace infgraph {

// Canonical enumerations
//   strips (ladders, ray):   columns 0, 1, -1, 2, -2, ... (one-way: 0, 1, 2, ...),
//                            slots in order inside each column
//   Z x Z grid:              square spiral, ring r starting at (r, 1-r), counter-clockwise
//   N x N grid:              shells max(x,y) = m, from (m,0) up to (m,m) then left to (0,m)
//   trees:                   breadth-first, children left to right
//   elusive demonstrator:    s = 0, t = 1, then interleaved heap order of the two trees

StripSpec double_ladder_spec();
StripSpec one_way_ladder_spec();
StripSpec ray_spec();
StripSpec triangle_strip_spec();  // double ladder plus diagonals u_i w_{i+1}

std::shared_ptr<const StripGraph> make_strip(const std::string& name, StripSpec spec);

// Z x Z grid with vertices (x, y).
class GridGraph : public RegionGraph {
 public:
  std::string name() const override { return "grid"; }
  std::vector<VertexId> neighbors(VertexId v) const override;
  std::string vertex_name(VertexId v) const override;
  Region region(const VertexSet& s) const override;
  std::uint64_t edge_rank(const Edge& e) const override;

  static VertexId at(long long x, long long y);
  static std::pair<long long, long long> coords(VertexId v);
};

// N x N grid.
class QuadrantGridGraph : public RegionGraph {
 public:
  std::string name() const override { return "nn_grid"; }
  std::vector<VertexId> neighbors(VertexId v) const override;
  std::string vertex_name(VertexId v) const override;
  Region region(const VertexSet& s) const override;
  std::uint64_t edge_rank(const Edge& e) const override;

  static VertexId at(std::uint64_t x, std::uint64_t y);
  static std::pair<std::uint64_t, std::uint64_t> coords(VertexId v);
};

// Rooted tree where the root has `root_children` children and every other
// vertex has `children` children; optionally each depth k >= 1 is closed into a
// cycle through its vertices in breadth-first order.
class TreeGraph : public RegionGraph {
 public:
  TreeGraph(std::string name, unsigned root_children, unsigned children, bool level_circles);

  std::string name() const override { return name_; }
  std::vector<VertexId> neighbors(VertexId v) const override;
  std::string vertex_name(VertexId v) const override;
  Region region(const VertexSet& s) const override;
  std::uint64_t edge_rank(const Edge& e) const override;
  std::optional<NormalTreeWitness> normal_tree_witness() const override;

  std::size_t depth(VertexId v) const;
  std::optional<VertexId> parent(VertexId v) const;
  std::vector<VertexId> children(VertexId v) const;
  std::uint64_t level_size(std::size_t depth) const;
  std::uint64_t level_offset(std::size_t depth) const;

 private:
  std::string name_;
  unsigned root_children_;
  unsigned children_;
  bool level_circles_;
};

// Edge st plus two disjoint infinite binary trees rooted at s and t (the root
// has two children). Vertex 2h + side is heap node h of the tree on that side
// (side 0: s, side 1: t).
class ElusiveGraph : public RegionGraph {
 public:
  std::string name() const override { return "elusive"; }
  std::vector<VertexId> neighbors(VertexId v) const override;
  std::string vertex_name(VertexId v) const override;
  Region region(const VertexSet& s) const override;
  std::uint64_t edge_rank(const Edge& e) const override;  // depth of the deeper endpoint; st has rank 0
  std::optional<NormalTreeWitness> normal_tree_witness() const override;

  static VertexId source() { return VertexId{0}; }
  static VertexId sink() { return VertexId{1}; }
  static unsigned side(VertexId v) { return static_cast<unsigned>(v.index % 2); }
  static std::uint64_t heap(VertexId v) { return v.index / 2; }
  static std::size_t depth(VertexId v);
  static VertexId node(unsigned side, std::uint64_t heap) { return VertexId{2 * heap + side}; }
};

// Aharoni-Thomassen style graph: finite stage G_{stages-1} of the grafting
// recursion started from a seed H with attachment set X (k = |X|). Only
// |X| = k and X within V(H) are checked; k-connectivity and girth of H are the
// caller's responsibility. Parallel edges created by gluing several copies of H
// onto the same attachment vertices collapse to one edge.
struct AtGraphInfo {
  std::shared_ptr<const FiniteGraph> graph;
  std::vector<std::uint64_t> stage_vertex_counts;  // |V(G_0)|, |V(G_1)|, ...
  std::vector<std::size_t> grafted_cycles;         // cycles grafted at each step
};

AtGraphInfo make_at_graph(std::uint64_t h_vertices, const std::vector<std::pair<std::uint64_t, std::uint64_t>>& h_edges,
                          const std::vector<std::uint64_t>& x, unsigned stages, std::size_t max_cycles = 5000);

// Named seed graphs for AT(k): "K<n>", "C<n>", "petersen".
std::pair<std::uint64_t, std::vector<std::pair<std::uint64_t, std::uint64_t>>> seed_graph(const std::string& name);

using GeneratorParams = std::map<std::string, std::string>;

// Names: double_ladder, one_way_ladder, ray, triangle_strip, grid, nn_grid,
// binary_tree, regular_tree (d), tree_circles (d), elusive, at_graph (h, x, stages).
GraphPtr make_generator(const std::string& name, const GeneratorParams& params = {});

// "name" or "name:key=value,key=value".
GraphPtr make_generator_from_selector(const std::string& selector);

std::vector<std::string> generator_names();

}  // namespace infgraph
