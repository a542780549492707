#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "infgraph/circuits.hpp"
#include "infgraph/ends.hpp"
#include "infgraph/euler.hpp"
#include "infgraph/flows.hpp"
#include "infgraph/minor_tower.hpp"
#include "infgraph/verdict.hpp"

namespace infgraph {

using nlohmann::json;

json edge_to_json(const Edge& e);
json edges_to_json(const FiniteEdges& edges);
json node_to_json(const MinorNode& node);

// Parses [[u, v], ...]; throws InvalidParameter on malformed input or loops.
FiniteEdges edges_from_json(const json& doc);
FiniteEdges read_edges_file(const std::string& path);

// {"level", "real", "dummies": [{"id", "rep", "infinite"}], "edges": [[u, v]],
//  "edge_nodes": [[a, b]]}; edge_nodes names the level nodes of each edge
// ("v<i>" or "d<id>") so the dump can be reloaded as a finite graph.
json minor_to_json(const FiniteMinor& m);
std::string minor_to_dot(const FiniteMinor& m, const LazyGraph& g);

json threads_to_json(std::size_t level, const std::vector<EndThread>& threads);
json verdict_to_json(const Verdict& v);
json walk_to_json(const LevelWalk& w);
json thread_to_json(const CircuitThread& t);

// [[u, v, value], ...] with u < v.
json flow_to_json(const FlowAssignment& f);
FlowAssignment flow_from_json(const json& doc);

// A minor dump as an explicit finite graph: real vertices keep their index,
// dummies follow in dump order. edge_map sends each original edge to its
// image.
struct ReloadedMinor {
  std::shared_ptr<const FiniteGraph> graph;
  std::map<Edge, Edge> edge_map;
};

ReloadedMinor reload_minor(const json& dump);

json read_json_file(const std::string& path);

}  // namespace infgraph
