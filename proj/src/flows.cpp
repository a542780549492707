#include "infgraph/flows.hpp"

#include <cmath>
#include <set>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "infgraph/generators.hpp"

namespace infgraph {

FlowAssignment::FlowAssignment(std::map<Edge, double> values) : values_(std::move(values)) {}

FlowAssignment FlowAssignment::lazy(std::function<double(const Edge&)> fn) {
  FlowAssignment f;
  f.fn_ = std::move(fn);
  return f;
}

double FlowAssignment::operator()(const Edge& e) const {
  if (fn_) return fn_(e);
  auto it = values_.find(e);
  return it == values_.end() ? 0.0 : it->second;
}

FlowAssignment FlowAssignment::negated() const {
  if (fn_) return lazy([fn = fn_](const Edge& e) { return -fn(e); });
  std::map<Edge, double> v;
  for (const auto& [e, x] : values_) v[e] = -x;
  return FlowAssignment(std::move(v));
}

double node_residual(const Network& net, const FlowAssignment& f, VertexId v) {
  double sum = 0.0;
  for (VertexId y : net.graph->neighbors(v)) sum += f.directed(Edge::between(v, y), v);
  return sum;
}

double node_residual(const FiniteMinor& m, const FlowAssignment& f, const MinorNode& node) {
  double sum = 0.0;
  for (const MinorEdge* e : m.incident(node)) sum += e->a == node ? f(e->edge) : -f(e->edge);
  return sum;
}

Verdict check_kh1_prime(const MinorTower& tower, const Network& net, const FlowAssignment& f, std::size_t n) {
  n = tower.clamp(n);
  if (net.s.index > n || net.t.index > n)
    throw InvalidParameter("source and sink must lie in S_" + std::to_string(n));
  const FiniteMinor& m = tower.level(n);
  std::vector<MinorNode> gaining, losing;
  double gain = 0.0, loss = 0.0;
  for (const auto& node : m.nodes()) {
    if (node == MinorNode::real(net.s) || node == MinorNode::real(net.t)) continue;
    double inflow = -node_residual(m, f, node);
    if (std::abs(inflow) <= kFlowTolerance) continue;
    if (inflow > 0) {
      gaining.push_back(node);
      gain += inflow;
    } else {
      losing.push_back(node);
      loss += inflow;
    }
  }
  if (gaining.empty() && losing.empty()) return Verdict::verified(n);
  bool take_gain = gain >= -loss;
  Witness w;
  w.kind = Witness::Kind::Cut;
  w.nodes = take_gain ? gaining : losing;
  w.value = take_gain ? gain : loss;
  std::set<MinorNode> side(w.nodes.begin(), w.nodes.end());
  for (const auto& e : m.edges)
    if (side.count(e.a) != side.count(e.b)) w.edges.insert(e.edge);
  std::string names;
  for (const auto& x : w.nodes) names += (names.empty() ? "" : " ") + to_string(x);
  return Verdict::refuted(n, w, "net inflow " + std::to_string(w.value) + " into {" + names + "}");
}

double circuit_residual(const Network& net, const FlowAssignment& f, const std::vector<OrientedEdge>& circuit) {
  double sum = 0.0;
  for (const auto& s : circuit) sum += (s.forward ? f(s.edge) : -f(s.edge)) * net.r(s.edge);
  return sum;
}

namespace {

template <typename Fn>
void for_each_level_edge(const LazyGraph& g, std::size_t n, Fn&& fn) {
  if (auto c = g.vertex_count()) n = std::min<std::size_t>(n, *c - 1);
  for (std::uint64_t i = 0; i <= n; ++i)
    for (VertexId y : g.neighbors(VertexId{i}))
      if (y.index > i) fn(Edge{VertexId{i}, y});
}

}  // namespace

double energy_partial(const Network& net, const FlowAssignment& f, std::size_t n) {
  double sum = 0.0;
  for_each_level_edge(*net.graph, n, [&](const Edge& e) {
    double x = f(e);
    sum += x * x * net.r(e);
  });
  return sum;
}

double inner_product(const LazyGraph& g, const FlowAssignment& f, const FlowAssignment& f2, std::size_t n) {
  double sum = 0.0;
  for_each_level_edge(g, n, [&](const Edge& e) { sum += f(e) * f2(e); });
  return sum;
}

FlowAssignment min_energy_flow(const MinorTower& tower, const Network& net, std::size_t n, double value) {
  n = tower.clamp(n);
  if (net.s == net.t) throw InvalidParameter("source and sink coincide");
  if (net.s.index > n || net.t.index > n)
    throw InvalidParameter("source and sink must lie in S_" + std::to_string(n));
  const FiniteMinor& m = tower.level(n);
  Multigraph g = m.multigraph();
  SpanningForest forest = spanning_forest(g);
  for (std::size_t x = 0; x < g.node_count; ++x)
    if (forest.component[x] != forest.component[0])
      throw GraphError("level " + std::to_string(n) + " is disconnected; the potential system is singular");

  const std::size_t ground = m.node_index(MinorNode::real(net.t));
  const std::size_t source = m.node_index(MinorNode::real(net.s));
  auto row = [ground](std::size_t x) { return x < ground ? x : x - 1; };
  const auto dim = static_cast<Eigen::Index>(g.node_count - 1);

  std::vector<Eigen::Triplet<double>> entries;
  std::vector<double> conductance(g.links.size());
  for (std::size_t i = 0; i < g.links.size(); ++i) {
    const auto& l = g.links[i];
    double r = net.r(l.edge);
    if (!(r > 0)) throw InvalidParameter("resistance of " + to_string(l.edge) + " is not positive");
    double c = 1.0 / r;
    conductance[i] = c;
    bool ga = l.a == ground, gb = l.b == ground;
    auto ra = static_cast<Eigen::Index>(row(l.a)), rb = static_cast<Eigen::Index>(row(l.b));
    if (!ga) entries.emplace_back(ra, ra, c);
    if (!gb) entries.emplace_back(rb, rb, c);
    if (!ga && !gb) {
      entries.emplace_back(ra, rb, -c);
      entries.emplace_back(rb, ra, -c);
    }
  }
  Eigen::SparseMatrix<double> lap(dim, dim);
  lap.setFromTriplets(entries.begin(), entries.end());
  Eigen::VectorXd b = Eigen::VectorXd::Zero(dim);
  b(static_cast<Eigen::Index>(row(source))) = value;

  Eigen::VectorXd phi;
  if (dim <= 2000) {
    Eigen::MatrixXd dense(lap);
    Eigen::LDLT<Eigen::MatrixXd> ldlt(dense);
    if (ldlt.info() != Eigen::Success) throw GraphError("potential system factorisation failed");
    phi = ldlt.solve(b);
  } else {
    Eigen::ConjugateGradient<Eigen::SparseMatrix<double>, Eigen::Lower | Eigen::Upper> cg;
    cg.setTolerance(1e-12);
    cg.setMaxIterations(100000);
    cg.compute(lap);
    phi = cg.solve(b);
    if (cg.info() != Eigen::Success) throw GraphError("conjugate gradient did not converge");
  }
  auto potential = [&](std::size_t x) { return x == ground ? 0.0 : phi(static_cast<Eigen::Index>(row(x))); };

  std::map<Edge, double> values;
  for (std::size_t i = 0; i < g.links.size(); ++i) {
    const auto& l = g.links[i];
    values[l.edge] = (potential(l.a) - potential(l.b)) * conductance[i];
  }
  return FlowAssignment(std::move(values));
}

std::function<double(const Edge&)> geometric_resistance(const GraphPtr& g) {
  return [g](const Edge& e) { return std::ldexp(1.0, -static_cast<int>(g->edge_rank(e))); };
}

ElusivePair elusive_pair(std::size_t depth) {
  if (depth < 1) throw InvalidParameter("depth must be at least 1");
  auto g = std::make_shared<const ElusiveGraph>();
  ElusivePair out;
  out.net = Network{g, geometric_resistance(g), ElusiveGraph::source(), ElusiveGraph::sink()};
  const Edge st{ElusiveGraph::source(), ElusiveGraph::sink()};
  out.direct = FlowAssignment(std::map<Edge, double>{{st, 1.0}});
  out.escaping = FlowAssignment::lazy([st](const Edge& e) {
    if (e == st) return 0.0;
    // Tree edge parent (lo) -> child (hi): downward on the source side, upward
    // on the sink side, halving with every level.
    double x = std::ldexp(1.0, -static_cast<int>(ElusiveGraph::depth(e.hi)));
    return ElusiveGraph::side(e.hi) == 0 ? x : -x;
  });
  out.level = static_cast<std::size_t>((std::uint64_t{1} << (depth + 2)) - 3);
  return out;
}

}  // namespace infgraph
