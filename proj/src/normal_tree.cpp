#include "infgraph/normal_tree.hpp"

#include <algorithm>

namespace infgraph {

NormalTreeWitness::NormalTreeWitness(std::string name, VertexId root, ParentFn parent, std::size_t depth_budget)
    : name_(std::move(name)), root_(root), parent_(std::move(parent)), depth_budget_(depth_budget) {}

std::optional<VertexId> NormalTreeWitness::parent(VertexId v) const {
  if (v == root_) return std::nullopt;
  auto p = parent_(v);
  if (!p) throw GraphError("witness " + name_ + ": vertex " + std::to_string(v.index) + " has no parent");
  return p;
}

std::vector<VertexId> NormalTreeWitness::ancestors(VertexId v) const {
  std::vector<VertexId> chain{v};
  while (chain.back() != root_) {
    if (chain.size() > depth_budget_)
      throw GraphError("witness " + name_ + ": parent chain of " + std::to_string(v.index) +
                       " does not reach the root within budget");
    chain.push_back(*parent(chain.back()));
  }
  return chain;
}

std::size_t NormalTreeWitness::depth(VertexId v) const { return ancestors(v).size() - 1; }

bool NormalTreeWitness::is_ancestor(VertexId a, VertexId v) const {
  auto chain = ancestors(v);
  return std::find(chain.begin(), chain.end(), a) != chain.end();
}

bool NormalTreeWitness::comparable(VertexId a, VertexId b) const { return is_ancestor(a, b) || is_ancestor(b, a); }

bool NormalTreeWitness::is_tree_edge(const Edge& e) const {
  return parent(e.lo) == e.hi || parent(e.hi) == e.lo;
}

Edge NormalTreeWitness::parent_edge(VertexId v) const {
  auto p = parent(v);
  if (!p) throw InvalidParameter("root has no parent edge");
  return Edge::between(v, *p);
}

VertexId NormalTreeWitness::lower_end(const Edge& tree_edge) const {
  if (parent(tree_edge.lo) == tree_edge.hi) return tree_edge.lo;
  if (parent(tree_edge.hi) == tree_edge.lo) return tree_edge.hi;
  throw InvalidParameter("edge " + to_string(tree_edge) + " is not in witness " + name_);
}

}  // namespace infgraph
