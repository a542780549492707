#include "infgraph/oracle_adapter.hpp"

#include <algorithm>
#include <csignal>
#include <sstream>

#include <sys/types.h>
#include <sys/wait.h>
#include <unistd.h>

namespace infgraph {

OracleGraph::OracleGraph(std::string command, std::string name) : command_(std::move(command)), name_(std::move(name)) {
  int in[2], out[2];
  if (pipe(in) != 0 || pipe(out) != 0) throw GraphError("cannot create pipes for oracle process");
  pid_t pid = fork();
  if (pid < 0) throw GraphError("cannot fork oracle process");
  if (pid == 0) {
    dup2(in[0], STDIN_FILENO);
    dup2(out[1], STDOUT_FILENO);
    close(in[0]);
    close(in[1]);
    close(out[0]);
    close(out[1]);
    execl("/bin/sh", "sh", "-c", command_.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }
  close(in[0]);
  close(out[1]);
  pid_ = pid;
  to_child_ = in[1];
  from_child_ = out[0];
  std::signal(SIGPIPE, SIG_IGN);
}

OracleGraph::~OracleGraph() {
  if (to_child_ >= 0) close(to_child_);
  if (from_child_ >= 0) close(from_child_);
  if (pid_ > 0) {
    int status = 0;
    if (waitpid(pid_, &status, WNOHANG) == 0) {
      kill(pid_, SIGTERM);
      waitpid(pid_, &status, 0);
    }
  }
}

std::size_t OracleGraph::queries_sent() const {
  std::lock_guard lock(mutex_);
  return sent_;
}

std::string OracleGraph::exchange(const std::string& request) const {
  std::string line = request + "\n";
  const char* p = line.data();
  std::size_t left = line.size();
  while (left > 0) {
    ssize_t w = write(to_child_, p, left);
    if (w <= 0) throw ProtocolError("oracle process closed its input");
    p += w;
    left -= static_cast<std::size_t>(w);
  }
  ++sent_;
  for (;;) {
    auto nl = buffer_.find('\n');
    if (nl != std::string::npos) {
      std::string reply = buffer_.substr(0, nl);
      buffer_.erase(0, nl + 1);
      if (!reply.empty() && reply.back() == '\r') reply.pop_back();
      return reply;
    }
    char chunk[4096];
    ssize_t r = read(from_child_, chunk, sizeof chunk);
    if (r <= 0) throw ProtocolError("oracle process ended before replying to '" + request + "'");
    buffer_.append(chunk, static_cast<std::size_t>(r));
  }
}

std::string OracleGraph::ask(const std::string& request) const {
  std::lock_guard lock(mutex_);
  if (auto it = cache_.find(request); it != cache_.end()) return it->second;
  std::string first = exchange(request);
  std::string second = exchange(request);
  if (first != second)
    throw ProtocolError("oracle answered '" + request + "' with '" + first + "' and then '" + second + "'");
  cache_[request] = first;
  return first;
}

namespace {

std::string set_suffix(const VertexSet& s) {
  std::string out = " :";
  for (VertexId v : s) out += " " + std::to_string(v.index);
  return out;
}

}  // namespace

std::vector<VertexId> OracleGraph::neighbors(VertexId v) const {
  std::string request = "NBRS " + std::to_string(v.index);
  std::string reply = ask(request);
  std::istringstream in(reply);
  long long k = -1;
  if (!(in >> k) || k < 0) throw ProtocolError("malformed reply to '" + request + "': '" + reply + "'");
  std::vector<VertexId> out;
  for (long long i = 0; i < k; ++i) {
    long long u = -1;
    if (!(in >> u) || u < 0) throw ProtocolError("malformed reply to '" + request + "': '" + reply + "'");
    out.push_back(VertexId{static_cast<std::uint64_t>(u)});
  }
  std::string extra;
  if (in >> extra) throw ProtocolError("trailing data in reply to '" + request + "': '" + reply + "'");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SepAnswer OracleGraph::same_component_without(const VertexSet& s, VertexId u, VertexId v) const {
  std::string request = "SEP " + std::to_string(u.index) + " " + std::to_string(v.index) + set_suffix(s);
  std::string reply = ask(request);
  if (reply == "SAME") return SepAnswer::Same;
  if (reply == "DIFF") return SepAnswer::Different;
  if (reply == "UNKNOWN") return SepAnswer::Unknown;
  throw ProtocolError("malformed reply to '" + request + "': '" + reply + "'");
}

InfAnswer OracleGraph::is_component_infinite(const VertexSet& s, VertexId u) const {
  std::string request = "INF " + std::to_string(u.index) + set_suffix(s);
  std::string reply = ask(request);
  if (reply == "INF") return InfAnswer::Infinite;
  if (reply == "FIN") return InfAnswer::Finite;
  if (reply == "UNKNOWN") return InfAnswer::Unknown;
  throw ProtocolError("malformed reply to '" + request + "': '" + reply + "'");
}

std::shared_ptr<const OracleGraph> make_oracle_graph(const std::string& command) {
  return std::make_shared<const OracleGraph>(command);
}

}  // namespace infgraph
