// Command-line front end. Exit codes: 0 success, 2 a Refuted verdict (or a
// refuted precondition with witness), 3 Unknown, 1 usage or internal error.

#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "infgraph/circuits.hpp"
#include "infgraph/cyclespace.hpp"
#include "infgraph/ends.hpp"
#include "infgraph/euler.hpp"
#include "infgraph/flows.hpp"
#include "infgraph/gallai.hpp"
#include "infgraph/generators.hpp"
#include "infgraph/io.hpp"
#include "infgraph/oracle_adapter.hpp"
#include "infgraph/spanning.hpp"

using namespace infgraph;

namespace {

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kRefuted = 2;
constexpr int kUnknown = 3;

struct GraphOptions {
  std::string graph = "double_ladder";
  std::string strip;
  std::string oracle;
  std::size_t horizon = 0;

  GraphPtr load() const {
    GraphPtr g;
    if (!oracle.empty()) {
      g = make_oracle_graph(oracle);
    } else if (!strip.empty()) {
      auto loaded = load_strip_spec_file(strip);
      for (const auto& w : loaded.warnings) std::cerr << "warning: " << w << "\n";
      g = loaded.graph;
    } else {
      g = make_generator_from_selector(graph);
    }
    if (horizon) std::const_pointer_cast<LazyGraph>(g)->set_search_horizon(horizon);
    return g;
  }
};

void add_graph_options(CLI::App* cmd, GraphOptions& o) {
  auto* g = cmd->add_option("--graph", o.graph, "generator selector, e.g. regular_tree:d=3");
  auto* s = cmd->add_option("--strip", o.strip, "strip specification file (JSON)")->check(CLI::ExistingFile);
  auto* c = cmd->add_option("--oracle", o.oracle, "command speaking the oracle line protocol");
  g->excludes(s)->excludes(c);
  s->excludes(c);
  cmd->add_option("--horizon", o.horizon, "search horizon for undecided component questions");
}

Edge parse_edge(const std::string& text) {
  auto sep = text.find_first_of(",-");
  if (sep == std::string::npos) throw InvalidParameter("edge '" + text + "' must look like u,v");
  try {
    return Edge::between(VertexId{std::stoull(text.substr(0, sep))}, VertexId{std::stoull(text.substr(sep + 1))});
  } catch (const std::logic_error&) {
    throw InvalidParameter("edge '" + text + "' must look like u,v");
  }
}

// A file of [u, v] pairs or a named set expression.
EdgeSet parse_set(const GraphPtr& g, const std::string& text) {
  if (std::filesystem::exists(text)) return EdgeSet(read_edges_file(text));
  return named_edge_set(g, text);
}

FiniteEdges parse_finite_set(const GraphPtr& g, const std::string& text) {
  EdgeSet s = parse_set(g, text);
  if (!s.is_finite()) throw InvalidParameter("'" + text + "' is not a finite edge set");
  return s.edges();
}

int emit_verdict(const Verdict& v) {
  std::cout << verdict_to_json(v).dump(2) << "\n";
  if (v.is_refuted()) return kRefuted;
  if (v.is_unknown()) return kUnknown;
  return kOk;
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-resolution computations on locally finite infinite graphs"};
  app.require_subcommand(1);
  GraphOptions go;
  std::size_t depth = 3;
  std::string format = "json";
  std::string set_text, edge_text, space = "cycle", kind = "cut", partition = "components";
  std::string flow_file, resistance = "geometric";
  unsigned k = 2, refine_steps = 0, count = 20;
  std::uint64_t pin = 0, s = 0, t = 1;
  double value = 1.0;
  bool profile = false;

  auto with_graph = [&](const char* name, const char* help) {
    auto* cmd = app.add_subcommand(name, help);
    add_graph_options(cmd, go);
    return cmd;
  };
  auto add_depth = [&](CLI::App* cmd) { cmd->add_option("--depth,-n", depth, "level")->capture_default_str(); };

  auto* gen = with_graph("gen", "list the first vertices with names and neighbours");
  gen->add_option("--count", count, "number of vertices")->capture_default_str();

  auto* minor = with_graph("minor", "dump the level minor G_n");
  add_depth(minor);
  minor->add_option("--format", format, "json, dot or text")->check(CLI::IsMember({"json", "dot", "text"}));

  auto* ends = with_graph("ends", "end threads up to level n");
  add_depth(ends);
  ends->add_flag("--profile", profile, "include boundary profiles");

  auto* tst = with_graph("tst", "edges of the tower spanning tree T_n");
  add_depth(tst);

  auto* fcut = with_graph("fcut", "fundamental cut of a tree edge");
  fcut->add_option("--edge", edge_text, "tree edge u,v")->required();

  auto* fcirc = with_graph("fcirc", "fundamental circuit of a chord, restricted to level n");
  fcirc->add_option("--edge", edge_text, "chord u,v")->required();
  add_depth(fcirc);

  auto* verify = with_graph("verify", "membership verdict in the cycle or cut space");
  verify->add_option("--space", space, "cycle or cut")->check(CLI::IsMember({"cycle", "cut"}));
  verify->add_option("--set", set_text, "edge-set file or expression")->required();
  add_depth(verify);

  auto* sigma_cmd = with_graph("sigma", "projection onto the cycle space along a normal spanning tree");
  sigma_cmd->add_option("--set", set_text, "finite edge set")->required();
  auto* tau_cmd = with_graph("tau", "projection onto the cut space along a normal spanning tree");
  tau_cmd->add_option("--set", set_text, "finite edge set")->required();

  auto* extend = with_graph("extend", "extend a finite edge set to a cut or a cycle-space element");
  extend->add_option("--kind", kind, "cut or cycle")->check(CLI::IsMember({"cut", "cycle"}));
  extend->add_option("--set", set_text, "finite edge set")->required();
  add_depth(extend);

  auto* decomp = with_graph("decompose", "decompose a set into circuit threads");
  decomp->add_option("--set", set_text, "edge-set file or expression")->required();
  add_depth(decomp);

  auto* euler = with_graph("euler", "Euler tour of a set at level n");
  euler->add_option("--set", set_text, "edge-set file or expression")->required();
  add_depth(euler);
  euler->add_option("--pin", pin, "start vertex")->capture_default_str();
  euler->add_option("--refine", refine_steps, "number of refinement steps to print after the tour");

  auto* pack = with_graph("pack", "tree-packing condition for a partition");
  pack->add_option("--partition", partition, "components or rails")->check(CLI::IsMember({"components", "rails"}));
  pack->add_option("--k", k, "number of trees")->capture_default_str();
  add_depth(pack);

  auto* flow = app.add_subcommand("flow", "flows on networks");
  flow->require_subcommand(1);
  auto* solve = flow->add_subcommand("solve", "minimum-energy flow on the wired level network");
  add_graph_options(solve, go);
  add_depth(solve);
  solve->add_option("--r", resistance, "geometric (2^-rank) or unit")->check(CLI::IsMember({"geometric", "unit"}));
  solve->add_option("--s", s, "source")->capture_default_str();
  solve->add_option("--t", t, "sink")->capture_default_str();
  solve->add_option("--value", value, "flow value")->capture_default_str();
  auto* check = flow->add_subcommand("check", "node law at every node of G_n, dummies included");
  add_graph_options(check, go);
  add_depth(check);
  check->add_option("--file", flow_file, "flow file [[u,v,value],...]")->required()->check(CLI::ExistingFile);
  check->add_option("--s", s, "source")->capture_default_str();
  check->add_option("--t", t, "sink")->capture_default_str();
  auto* elusive = flow->add_subcommand("elusive", "check both flows of the elusive demonstrator");
  add_depth(elusive);

  auto* gallai = with_graph("gallai", "split the level minor into an even part and a cut");
  add_depth(gallai);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*flow && *elusive) {
      ElusivePair p = elusive_pair(1);
      auto tower = std::make_shared<MinorTower>(p.net.graph);
      json out = json::array();
      int code = kOk;
      for (std::size_t n = 1; n <= depth; ++n) {
        Verdict a = check_kh1_prime(*tower, p.net, p.direct, n);
        Verdict b = check_kh1_prime(*tower, p.net, p.escaping, n);
        out.push_back({{"level", n}, {"direct", verdict_to_json(a)}, {"escaping", verdict_to_json(b)}});
        if (a.is_refuted() || b.is_refuted()) code = kRefuted;
      }
      print(out);
      return code;
    }

    GraphPtr g = go.load();
    auto tower = std::make_shared<MinorTower>(g);

    if (*gen) {
      json out = json::array();
      for (std::uint64_t i = 0; i < count; ++i) {
        if (auto c = g->vertex_count(); c && i >= *c) break;
        json nbrs = json::array();
        for (VertexId y : g->neighbors(VertexId{i})) nbrs.push_back(y.index);
        out.push_back({{"id", i}, {"name", g->vertex_name(VertexId{i})}, {"neighbors", nbrs}});
      }
      print(out);
    } else if (*minor) {
      const FiniteMinor& m = tower->level(depth);
      if (format == "dot") {
        std::cout << minor_to_dot(m, *g);
      } else if (format == "text") {
        std::cout << "level " << m.level << ": " << m.real.size() << " real, " << m.dummies.size() << " dummies, "
                  << m.edges.size() << " edges\n";
        for (const auto& e : m.edges)
          std::cout << "  " << to_string(e.a) << " -- " << to_string(e.b) << "  (" << g->vertex_name(e.edge.lo) << " "
                    << g->vertex_name(e.edge.hi) << ")\n";
      } else {
        print(minor_to_json(m));
      }
    } else if (*ends) {
      auto threads = end_threads(*tower, depth);
      json out = threads_to_json(tower->clamp(depth), threads);
      if (profile) {
        json profiles = json::array();
        for (const auto& th : threads) {
          BoundaryProfile bp = boundary_profile(*tower, th, depth);
          json steps = json::array();
          for (const auto& st : bp.steps)
            steps.push_back({{"level", st.level}, {"edges", st.edge_boundary}, {"vertices", st.vertex_boundary}});
          profiles.push_back({{"steps", steps}, {"liminf_upper_estimate", bp.liminf_upper_estimate}});
        }
        out["profiles"] = profiles;
      }
      print(out);
      bool provisional = false;
      for (const auto& th : threads) provisional = provisional || th.provisional;
      return provisional ? kUnknown : kOk;
    } else if (*tst) {
      SpanningTower tree(tower);
      print({{"level", tower->clamp(depth)}, {"edges", edges_to_json(tree.tree(depth))}});
    } else if (*fcut) {
      SpanningTower tree(tower);
      Edge f = parse_edge(edge_text);
      print({{"edge", edge_to_json(f)}, {"cut", edges_to_json(tree.fundamental_cut(f))}});
    } else if (*fcirc) {
      SpanningTower tree(tower);
      Edge e = parse_edge(edge_text);
      print({{"edge", edge_to_json(e)}, {"level", depth}, {"circuit", edges_to_json(tree.fundamental_circuit_at(e, depth))}});
    } else if (*verify) {
      EdgeSet set = parse_set(g, set_text);
      return emit_verdict(space == "cycle" ? is_cycle_member(*tower, set, depth) : is_cut_member(*g, set, depth));
    } else if (*sigma_cmd) {
      print(edges_to_json(sigma(g, parse_finite_set(g, set_text))));
    } else if (*tau_cmd) {
      print(edges_to_json(tau(g, parse_finite_set(g, set_text))));
    } else if (*extend) {
      FiniteEdges e = parse_finite_set(g, set_text);
      try {
        if (kind == "cut") {
          CutExtension x = extend_to_cut(g, e);
          Verdict v = is_cut_member(*g, x.cut, depth);
          print({{"restriction", edges_to_json(x.cut.restrict(*tower, depth))}, {"verdict", verdict_to_json(v)}});
          return v.is_verified() ? kOk : v.is_refuted() ? kRefuted : kUnknown;
        }
        EdgeSet d = extend_to_cycle(*tower, e);
        Verdict v = is_cycle_member(*tower, d, depth);
        print({{"set", edges_to_json(d.edges())}, {"verdict", verdict_to_json(v)}});
        return v.is_verified() ? kOk : v.is_refuted() ? kRefuted : kUnknown;
      } catch (const OddCircuit& ex) {
        print({{"error", "OddCircuit"}, {"witness", edges_to_json(ex.circuit())}, {"message", ex.what()}});
        return kRefuted;
      } catch (const OddBond& ex) {
        print({{"error", "OddBond"}, {"witness", edges_to_json(ex.bond())}, {"message", ex.what()}});
        return kRefuted;
      }
    } else if (*decomp) {
      json out = json::array();
      for (const auto& th : decompose(*tower, parse_set(g, set_text), depth)) out.push_back(thread_to_json(th));
      print(out);
    } else if (*euler) {
      EdgeSet set = parse_set(g, set_text);
      LevelWalk w = euler_tour(*tower, set, depth, VertexId{pin});
      json out = json::array({walk_to_json(w)});
      for (unsigned i = 0; i < refine_steps; ++i) {
        w = refine(*tower, set, w);
        out.push_back(walk_to_json(w));
      }
      print(refine_steps ? out : out[0]);
    } else if (*pack) {
      PackingResult r;
      if (partition == "rails") {
        auto strip = std::dynamic_pointer_cast<const StripGraph>(g);
        if (!strip) throw InvalidParameter("the rails partition needs a strip graph");
        SlotPartition p;
        for (unsigned i = 0; i < strip->spec().width; ++i) p.slot_class.push_back(static_cast<int>(i));
        r = tree_packing_condition(*strip, p, k, depth);
      } else {
        r = tree_packing_condition(*tower, component_partition(*tower, depth), k);
      }
      print({{"status", to_string(r.status)},
             {"count", r.count},
             {"unbounded", r.unbounded},
             {"required", r.required},
             {"classes", r.classes},
             {"level", r.level}});
      return r.status == PackingResult::Status::Violated ? kRefuted : kOk;
    } else if (*flow && *solve) {
      Network net{g, resistance == "unit" ? std::function<double(const Edge&)>([](const Edge&) { return 1.0; })
                                          : geometric_resistance(g),
                  VertexId{s}, VertexId{t}};
      FlowAssignment f = min_energy_flow(*tower, net, depth, value);
      print({{"level", tower->clamp(depth)}, {"energy", energy_partial(net, f, depth)}, {"flow", flow_to_json(f)}});
    } else if (*flow && *check) {
      Network net{g, geometric_resistance(g), VertexId{s}, VertexId{t}};
      return emit_verdict(check_kh1_prime(*tower, net, flow_from_json(read_json_file(flow_file)), depth));
    } else if (*gallai) {
      const FiniteMinor& m = tower->level(depth);
      GallaiPartition p = gallai_partition(m.multigraph());
      json side = json::array();
      auto nodes = m.nodes();
      for (std::size_t i = 0; i < nodes.size(); ++i)
        if (p.side[i]) side.push_back(to_string(nodes[i]));
      print({{"level", m.level}, {"even", edges_to_json(p.even)}, {"cut", edges_to_json(p.cut)}, {"side", side}});
    }
    return kOk;
  } catch (const UnresolvableComponents& ex) {
    std::cerr << "unknown: " << ex.what() << " (horizon " << ex.horizon() << ")\n";
    return kUnknown;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kError;
  }
}
