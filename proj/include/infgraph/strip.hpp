#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "infgraph/graph.hpp"

namespace infgraph {

// Bounded-width strip: a copy of `width` slots at every column (a "level" in
// the document), columns ranging over Z (two-way) or N (one-way). Edge
// templates repeat at every column; extra templates may be restricted to even
// or odd columns.
struct StripSpec {
  enum class Levels { TwoWay, OneWay };
  enum class Parity { All, Even, Odd };

  struct Template {
    unsigned from = 0;
    unsigned to = 0;
    int offset = 0;  // 0: within a column, 1: to the next column
    Parity parity = Parity::All;
  };

  unsigned width = 1;
  Levels levels = Levels::TwoWay;
  std::vector<std::pair<unsigned, unsigned>> intra_level_edges;
  std::vector<std::pair<unsigned, unsigned>> inter_level_edges;  // (slot at column i, slot at column i+1)
  std::vector<Template> extra;
};

StripSpec strip_spec_from_json(const nlohmann::json& doc);  // throws InvalidParameter on schema violations
nlohmann::json to_json(const StripSpec& spec);

struct StripPosition {
  long long column = 0;
  unsigned slot = 0;
};

class StripGraph : public RegionGraph {
 public:
  StripGraph(std::string name, StripSpec spec);

  std::string name() const override { return name_; }
  std::vector<VertexId> neighbors(VertexId v) const override;
  std::string vertex_name(VertexId v) const override;
  Region region(const VertexSet& s) const override;
  std::vector<ComponentInfo> components_without(const VertexSet& s,
                                                const std::vector<VertexId>& query) const override;
  std::uint64_t edge_rank(const Edge& e) const override;
  std::optional<NormalTreeWitness> normal_tree_witness() const override;

  const StripSpec& spec() const { return spec_; }
  StripPosition position(VertexId v) const;
  VertexId at(long long column, unsigned slot) const;
  bool has_column(long long column) const;

  // Smallest window length for which every window of that many consecutive
  // columns is connected; 0 when none up to the probe bound was found, in which
  // case the component oracles are not exact and fall back to bounded search.
  unsigned connectivity_window() const { return window_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  bool is_rung(const Edge& e) const;        // both ends in one column
  bool is_horizontal(const Edge& e) const;  // same slot, adjacent columns

 private:
  bool window_connected(long long first, unsigned length) const;
  bool plain_ladder() const;

  std::string name_;
  StripSpec spec_;
  unsigned window_ = 0;
  std::vector<std::string> warnings_;
};

struct StripLoad {
  std::shared_ptr<const StripGraph> graph;
  std::vector<std::string> warnings;
};

StripLoad load_strip_spec(const nlohmann::json& doc, std::string name = "strip");
StripLoad load_strip_spec_file(const std::string& path);

}  // namespace infgraph
