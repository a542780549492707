#include "infgraph/io.hpp"

#include <fstream>
#include <sstream>

namespace infgraph {

json edge_to_json(const Edge& e) { return json::array({e.lo.index, e.hi.index}); }

json edges_to_json(const FiniteEdges& edges) {
  json out = json::array();
  for (const auto& e : edges) out.push_back(edge_to_json(e));
  return out;
}

json node_to_json(const MinorNode& node) { return to_string(node); }

FiniteEdges edges_from_json(const json& doc) {
  if (!doc.is_array()) throw InvalidParameter("edge set must be a JSON array of [u, v] pairs");
  FiniteEdges out;
  for (const auto& item : doc) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_unsigned() || !item[1].is_number_unsigned())
      throw InvalidParameter("malformed edge " + item.dump());
    VertexId a{item[0].get<std::uint64_t>()}, b{item[1].get<std::uint64_t>()};
    if (a == b) throw InvalidParameter("loop " + item.dump() + " is not an edge");
    out.insert(Edge::between(a, b));
  }
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidParameter("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& ex) {
    throw InvalidParameter(path + ": " + ex.what());
  }
}

FiniteEdges read_edges_file(const std::string& path) { return edges_from_json(read_json_file(path)); }

json minor_to_json(const FiniteMinor& m) {
  json real = json::array();
  for (VertexId v : m.real) real.push_back(v.index);
  json dummies = json::array();
  for (const auto& d : m.dummies) {
    json inf = nullptr;
    if (d.infinite == InfAnswer::Infinite) inf = true;
    if (d.infinite == InfAnswer::Finite) inf = false;
    dummies.push_back({{"id", d.id}, {"rep", d.representative.index}, {"infinite", inf}});
  }
  json edges = json::array(), nodes = json::array();
  for (const auto& e : m.edges) {
    edges.push_back(edge_to_json(e.edge));
    nodes.push_back(json::array({to_string(e.a), to_string(e.b)}));
  }
  return {{"level", m.level}, {"real", real}, {"dummies", dummies}, {"edges", edges}, {"edge_nodes", nodes}};
}

std::string minor_to_dot(const FiniteMinor& m, const LazyGraph& g) {
  std::ostringstream out;
  out << "graph G" << m.level << " {\n";
  for (VertexId v : m.real) out << "  v" << v.index << " [label=\"" << g.vertex_name(v) << "\"];\n";
  for (const auto& d : m.dummies) {
    std::string flag = d.infinite == InfAnswer::Infinite ? "inf" : d.infinite == InfAnswer::Finite ? "fin" : "?";
    out << "  d" << d.id << " [shape=box,label=\"d" << d.id << " (" << flag << ")\"];\n";
  }
  for (const auto& e : m.edges)
    out << "  " << to_string(e.a) << " -- " << to_string(e.b) << " [label=\"" << e.edge.lo.index << "-"
        << e.edge.hi.index << "\"];\n";
  out << "}\n";
  return out.str();
}

json threads_to_json(std::size_t level, const std::vector<EndThread>& threads) {
  json list = json::array();
  for (const auto& t : threads) list.push_back(t.dummies);
  json out = {{"level", level}, {"threads", list}};
  bool provisional = false;
  for (const auto& t : threads) provisional = provisional || t.provisional;
  if (provisional) out["provisional"] = true;
  return out;
}

json verdict_to_json(const Verdict& v) {
  json out;
  switch (v.kind) {
    case Verdict::Kind::Verified:
      out = {{"verdict", "Verified"}, {"level", v.level}};
      break;
    case Verdict::Kind::Refuted:
      out = {{"verdict", "Refuted"}, {"level", v.level}};
      break;
    case Verdict::Kind::Unknown:
      out = {{"verdict", "Unknown"}, {"horizon", v.horizon}};
      break;
  }
  if (v.witness) {
    const Witness& w = *v.witness;
    json nodes = json::array();
    for (const auto& n : w.nodes) nodes.push_back(node_to_json(n));
    out["witness"] = {{"kind", to_string(w.kind)}, {"edges", edges_to_json(w.edges)}, {"nodes", nodes}, {"value", w.value}};
    if (w.edge) out["witness"]["edge"] = edge_to_json(*w.edge);
  }
  if (!v.message.empty()) out["message"] = v.message;
  return out;
}

json walk_to_json(const LevelWalk& w) {
  json steps = json::array();
  for (const auto& s : w.steps) {
    VertexId from = s.forward() ? s.edge.lo : s.edge.hi;
    VertexId to = s.edge.other(from);
    steps.push_back({{"edge", json::array({from.index, to.index})}, {"from", to_string(s.from)}, {"to", to_string(s.to)}});
  }
  return {{"level", w.level}, {"pin", w.pin.index}, {"walk", steps}};
}

json thread_to_json(const CircuitThread& t) {
  json levels = json::array();
  for (std::size_t i = 0; i < t.levels.size(); ++i)
    levels.push_back({{"level", t.first_level + i}, {"edges", edges_to_json(t.levels[i])}});
  return {{"pinned", edge_to_json(t.pinned)}, {"horizon", t.horizon}, {"levels", levels}};
}

json flow_to_json(const FlowAssignment& f) {
  if (!f.is_finite()) throw InvalidParameter("lazy flows cannot be written out");
  json out = json::array();
  for (const auto& [e, x] : f.values()) out.push_back(json::array({e.lo.index, e.hi.index, x}));
  return out;
}

FlowAssignment flow_from_json(const json& doc) {
  if (!doc.is_array()) throw InvalidParameter("flow must be a JSON array of [u, v, value] triples");
  std::map<Edge, double> values;
  for (const auto& item : doc) {
    if (!item.is_array() || item.size() != 3 || !item[0].is_number_unsigned() || !item[1].is_number_unsigned() ||
        !item[2].is_number())
      throw InvalidParameter("malformed flow entry " + item.dump());
    VertexId u{item[0].get<std::uint64_t>()}, v{item[1].get<std::uint64_t>()};
    if (u == v) throw InvalidParameter("loop in flow entry " + item.dump());
    double x = item[2].get<double>();
    values[Edge::between(u, v)] = u < v ? x : -x;
  }
  return FlowAssignment(std::move(values));
}

ReloadedMinor reload_minor(const json& dump) {
  try {
    std::map<std::string, std::uint64_t> index;
    std::vector<std::string> names;
    for (const auto& v : dump.at("real")) {
      auto i = v.get<std::uint64_t>();
      if (i != names.size()) throw InvalidParameter("real vertices must be 0..n in order");
      index["v" + std::to_string(i)] = i;
      names.push_back("v" + std::to_string(i));
    }
    for (const auto& d : dump.at("dummies")) {
      std::string key = "d" + std::to_string(d.at("id").get<std::uint64_t>());
      index[key] = names.size();
      names.push_back(key);
    }
    const auto& edges = dump.at("edges");
    const auto& nodes = dump.at("edge_nodes");
    if (edges.size() != nodes.size()) throw InvalidParameter("edges and edge_nodes differ in length");
    ReloadedMinor out;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> list;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      Edge original = Edge::between(VertexId{edges[i].at(0).get<std::uint64_t>()}, VertexId{edges[i].at(1).get<std::uint64_t>()});
      std::uint64_t a = index.at(nodes[i].at(0).get<std::string>());
      std::uint64_t b = index.at(nodes[i].at(1).get<std::string>());
      Edge image = Edge::between(VertexId{a}, VertexId{b});
      for (const auto& [_, seen] : out.edge_map)
        if (seen == image) throw InvalidParameter("dump has parallel edges; it is not a simple graph");
      out.edge_map[original] = image;
      list.emplace_back(a, b);
    }
    auto g = std::make_shared<FiniteGraph>("minor" + std::to_string(dump.at("level").get<std::size_t>()), names.size(), list);
    g->set_vertex_names(names);
    out.graph = g;
    return out;
  } catch (const json::exception& ex) {
    throw InvalidParameter(std::string("malformed minor dump: ") + ex.what());
  } catch (const std::out_of_range&) {
    throw InvalidParameter("minor dump refers to an unknown node");
  }
}

}  // namespace infgraph
