#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "infgraph/graph.hpp"

namespace infgraph {

class ProtocolError : public GraphError {
 public:
  using GraphError::GraphError;
};

// Lazy graph served by an external process over a line protocol on its
// stdin/stdout:
//   NBRS <v>                      ->  <k> <u1> ... <uk>
//   SEP <u> <v> : <s1> ... <sm>   ->  SAME | DIFF | UNKNOWN
//   INF <u> : <s1> ... <sm>       ->  INF | FIN | UNKNOWN
// Every query is sent twice; differing replies are a hard error. Replies are
// cached. The process is started with `sh -c <command>`.
class OracleGraph : public LazyGraph {
 public:
  explicit OracleGraph(std::string command, std::string name = "oracle");
  ~OracleGraph() override;
  OracleGraph(const OracleGraph&) = delete;
  OracleGraph& operator=(const OracleGraph&) = delete;

  std::string name() const override { return name_; }
  std::vector<VertexId> neighbors(VertexId v) const override;
  SepAnswer same_component_without(const VertexSet& s, VertexId u, VertexId v) const override;
  InfAnswer is_component_infinite(const VertexSet& s, VertexId u) const override;

  std::size_t queries_sent() const;

 private:
  std::string ask(const std::string& request) const;  // cached, asked twice
  std::string exchange(const std::string& request) const;  // requires mutex_ held

  std::string command_;
  std::string name_;
  int pid_ = -1;
  int to_child_ = -1;
  int from_child_ = -1;
  mutable std::string buffer_;
  mutable std::mutex mutex_;
  mutable std::map<std::string, std::string> cache_;
  mutable std::size_t sent_ = 0;
};

std::shared_ptr<const OracleGraph> make_oracle_graph(const std::string& command);

}  // namespace infgraph
