#include "infgraph/generators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include "infgraph/normal_tree.hpp"

namespace infgraph {

namespace {

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

unsigned parse_unsigned(const GeneratorParams& params, const std::string& key, unsigned fallback) {
  auto it = params.find(key);
  if (it == params.end()) return fallback;
  try {
    std::size_t used = 0;
    long long v = std::stoll(it->second, &used);
    if (used != it->second.size() || v < 0) throw std::invalid_argument("bad");
    return static_cast<unsigned>(v);
  } catch (const std::exception&) {
    throw InvalidParameter("parameter " + key + " must be a non-negative integer, got '" + it->second + "'");
  }
}

}  // namespace

StripSpec double_ladder_spec() {
  StripSpec s;
  s.width = 2;
  s.levels = StripSpec::Levels::TwoWay;
  s.intra_level_edges = {{0, 1}};
  s.inter_level_edges = {{0, 0}, {1, 1}};
  return s;
}

StripSpec one_way_ladder_spec() {
  StripSpec s = double_ladder_spec();
  s.levels = StripSpec::Levels::OneWay;
  return s;
}

StripSpec ray_spec() {
  StripSpec s;
  s.width = 1;
  s.levels = StripSpec::Levels::OneWay;
  s.inter_level_edges = {{0, 0}};
  return s;
}

StripSpec triangle_strip_spec() {
  StripSpec s = double_ladder_spec();
  s.extra.push_back({0, 1, 1, StripSpec::Parity::All});
  return s;
}

std::shared_ptr<const StripGraph> make_strip(const std::string& name, StripSpec spec) {
  return std::make_shared<StripGraph>(name, std::move(spec));
}

// ---------------------------------------------------------------------------
// Z x Z grid

VertexId GridGraph::at(long long x, long long y) {
  long long r = std::max(x < 0 ? -x : x, y < 0 ? -y : y);
  if (r == 0) return VertexId{0};
  auto base = static_cast<std::uint64_t>((2 * r - 1) * (2 * r - 1));
  long long offset;
  if (x == r && y > -r)
    offset = y + r - 1;
  else if (y == r)
    offset = 2 * r + (r - 1 - x);
  else if (x == -r)
    offset = 4 * r + (r - 1 - y);
  else
    offset = 6 * r + x + r - 1;
  return VertexId{base + static_cast<std::uint64_t>(offset)};
}

std::pair<long long, long long> GridGraph::coords(VertexId v) {
  if (v.index == 0) return {0, 0};
  auto r = static_cast<long long>((isqrt(v.index) + 1) / 2);
  auto o = static_cast<long long>(v.index) - (2 * r - 1) * (2 * r - 1);
  long long side = o / (2 * r);
  long long t = o % (2 * r);
  switch (side) {
    case 0: return {r, -r + 1 + t};
    case 1: return {r - 1 - t, r};
    case 2: return {-r, r - 1 - t};
    default: return {-r + 1 + t, -r};
  }
}

std::vector<VertexId> GridGraph::neighbors(VertexId v) const {
  auto [x, y] = coords(v);
  std::vector<VertexId> out{at(x + 1, y), at(x - 1, y), at(x, y + 1), at(x, y - 1)};
  std::sort(out.begin(), out.end());
  return out;
}

std::string GridGraph::vertex_name(VertexId v) const {
  auto [x, y] = coords(v);
  return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

RegionGraph::Region GridGraph::region(const VertexSet& s) const {
  long long x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  bool first = true;
  for (VertexId v : s) {
    auto [x, y] = coords(v);
    if (first) {
      x0 = x1 = x;
      y0 = y1 = y;
      first = false;
    }
    x0 = std::min(x0, x);
    x1 = std::max(x1, x);
    y0 = std::min(y0, y);
    y1 = std::max(y1, y);
  }
  // The complement of a box in Z x Z is connected and infinite.
  Region r;
  for (long long x = x0 - 1; x <= x1 + 1; ++x)
    for (long long y = y0 - 1; y <= y1 + 1; ++y) r.box.insert(at(x, y));
  r.tail_class = [](VertexId) -> std::uint64_t { return 0; };
  return r;
}

std::uint64_t GridGraph::edge_rank(const Edge& e) const {
  auto ring = [](VertexId v) {
    auto [x, y] = coords(v);
    return static_cast<std::uint64_t>(std::max(x < 0 ? -x : x, y < 0 ? -y : y));
  };
  return std::min(ring(e.lo), ring(e.hi));
}

// ---------------------------------------------------------------------------
// N x N grid

VertexId QuadrantGridGraph::at(std::uint64_t x, std::uint64_t y) {
  std::uint64_t m = std::max(x, y);
  std::uint64_t offset = (x == m) ? y : m + (m - x);
  return VertexId{m * m + offset};
}

std::pair<std::uint64_t, std::uint64_t> QuadrantGridGraph::coords(VertexId v) {
  std::uint64_t m = isqrt(v.index);
  std::uint64_t o = v.index - m * m;
  if (o <= m) return {m, o};
  return {2 * m - o, m};
}

std::vector<VertexId> QuadrantGridGraph::neighbors(VertexId v) const {
  auto [x, y] = coords(v);
  std::vector<VertexId> out{at(x + 1, y), at(x, y + 1)};
  if (x > 0) out.push_back(at(x - 1, y));
  if (y > 0) out.push_back(at(x, y - 1));
  std::sort(out.begin(), out.end());
  return out;
}

std::string QuadrantGridGraph::vertex_name(VertexId v) const {
  auto [x, y] = coords(v);
  return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

RegionGraph::Region QuadrantGridGraph::region(const VertexSet& s) const {
  std::uint64_t x1 = 0, y1 = 0;
  for (VertexId v : s) {
    auto [x, y] = coords(v);
    x1 = std::max(x1, x);
    y1 = std::max(y1, y);
  }
  Region r;
  for (std::uint64_t x = 0; x <= x1 + 1; ++x)
    for (std::uint64_t y = 0; y <= y1 + 1; ++y) r.box.insert(at(x, y));
  r.tail_class = [](VertexId) -> std::uint64_t { return 0; };
  return r;
}

std::uint64_t QuadrantGridGraph::edge_rank(const Edge& e) const {
  auto shell = [](VertexId v) {
    auto [x, y] = coords(v);
    return std::max(x, y);
  };
  return std::min(shell(e.lo), shell(e.hi));
}

// ---------------------------------------------------------------------------
// Trees

TreeGraph::TreeGraph(std::string name, unsigned root_children, unsigned children, bool level_circles)
    : name_(std::move(name)), root_children_(root_children), children_(children), level_circles_(level_circles) {
  if (root_children_ == 0 || children_ == 0) throw InvalidParameter("tree generator needs positive branching");
}

std::uint64_t TreeGraph::level_size(std::size_t depth) const {
  if (depth == 0) return 1;
  std::uint64_t size = root_children_;
  for (std::size_t k = 1; k < depth; ++k) {
    if (size > std::numeric_limits<std::uint64_t>::max() / children_) throw GraphError("tree depth overflows ids");
    size *= children_;
  }
  return size;
}

std::uint64_t TreeGraph::level_offset(std::size_t depth) const {
  std::uint64_t offset = 0;
  for (std::size_t k = 0; k < depth; ++k) offset += level_size(k);
  return offset;
}

std::size_t TreeGraph::depth(VertexId v) const {
  std::size_t k = 0;
  std::uint64_t offset = 0;
  while (v.index >= offset + level_size(k)) {
    offset += level_size(k);
    ++k;
  }
  return k;
}

std::optional<VertexId> TreeGraph::parent(VertexId v) const {
  std::size_t k = depth(v);
  if (k == 0) return std::nullopt;
  if (k == 1) return VertexId{0};
  std::uint64_t p = v.index - level_offset(k);
  return VertexId{level_offset(k - 1) + p / children_};
}

std::vector<VertexId> TreeGraph::children(VertexId v) const {
  std::size_t k = depth(v);
  std::uint64_t p = v.index - level_offset(k);
  std::uint64_t count = k == 0 ? root_children_ : children_;
  std::uint64_t first = level_offset(k + 1) + (k == 0 ? 0 : p * children_);
  std::vector<VertexId> out;
  for (std::uint64_t j = 0; j < count; ++j) out.push_back(VertexId{first + j});
  return out;
}

std::vector<VertexId> TreeGraph::neighbors(VertexId v) const {
  std::vector<VertexId> out = children(v);
  if (auto p = parent(v)) out.push_back(*p);
  std::size_t k = depth(v);
  if (level_circles_ && k >= 1) {
    std::uint64_t size = level_size(k);
    std::uint64_t offset = level_offset(k);
    std::uint64_t p = v.index - offset;
    if (size >= 2) {
      out.push_back(VertexId{offset + (p + 1) % size});
      out.push_back(VertexId{offset + (p + size - 1) % size});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  out.erase(std::remove(out.begin(), out.end(), v), out.end());
  return out;
}

std::string TreeGraph::vertex_name(VertexId v) const {
  std::size_t k = depth(v);
  return "t" + std::to_string(k) + "." + std::to_string(v.index - level_offset(k));
}

RegionGraph::Region TreeGraph::region(const VertexSet& s) const {
  std::size_t d = 0;
  for (VertexId v : s) d = std::max(d, depth(v));
  Region r;
  std::uint64_t end = level_offset(d + 2);
  for (std::uint64_t i = 0; i < end; ++i) r.box.insert(VertexId{i});
  if (level_circles_) {
    // Everything below depth d+1 is joined up by the level circles.
    r.tail_class = [](VertexId) -> std::uint64_t { return 0; };
  } else {
    std::size_t cut = d + 2;
    r.tail_class = [this, cut](VertexId v) -> std::uint64_t {
      while (depth(v) > cut) v = *parent(v);
      return v.index;
    };
  }
  return r;
}

std::uint64_t TreeGraph::edge_rank(const Edge& e) const { return std::max(depth(e.lo), depth(e.hi)); }

std::optional<NormalTreeWitness> TreeGraph::normal_tree_witness() const {
  if (level_circles_) return std::nullopt;
  return NormalTreeWitness(name_, VertexId{0}, [this](VertexId v) { return parent(v); });
}

// ---------------------------------------------------------------------------
// Elusive-flow demonstrator

std::size_t ElusiveGraph::depth(VertexId v) {
  std::uint64_t h = heap(v) + 1;
  std::size_t d = 0;
  while (h > 1) {
    h >>= 1;
    ++d;
  }
  return d;
}

std::vector<VertexId> ElusiveGraph::neighbors(VertexId v) const {
  unsigned sd = side(v);
  std::uint64_t h = heap(v);
  std::vector<VertexId> out{node(sd, 2 * h + 1), node(sd, 2 * h + 2)};
  if (h == 0)
    out.push_back(node(1 - sd, 0));
  else
    out.push_back(node(sd, (h - 1) / 2));
  std::sort(out.begin(), out.end());
  return out;
}

std::string ElusiveGraph::vertex_name(VertexId v) const {
  if (v == source()) return "s";
  if (v == sink()) return "t";
  return std::string(side(v) == 0 ? "s" : "t") + "." + std::to_string(heap(v));
}

RegionGraph::Region ElusiveGraph::region(const VertexSet& s) const {
  std::size_t d = 0;
  for (VertexId v : s) d = std::max(d, depth(v));
  Region r;
  std::uint64_t end = (std::uint64_t{1} << (d + 2)) - 1;  // heap nodes of depth <= d+1
  for (std::uint64_t h = 0; h < end; ++h) {
    r.box.insert(node(0, h));
    r.box.insert(node(1, h));
  }
  std::size_t cut = d + 2;
  r.tail_class = [cut](VertexId v) -> std::uint64_t {
    std::uint64_t h = heap(v);
    while (depth(node(0, h)) > cut) h = (h - 1) / 2;
    return node(side(v), h).index;
  };
  return r;
}

std::uint64_t ElusiveGraph::edge_rank(const Edge& e) const {
  if (e == Edge{source(), sink()}) return 0;
  return std::max(depth(e.lo), depth(e.hi));
}

std::optional<NormalTreeWitness> ElusiveGraph::normal_tree_witness() const {
  return NormalTreeWitness("elusive", source(), [](VertexId v) -> std::optional<VertexId> {
    if (v == source()) return std::nullopt;
    if (v == sink()) return source();
    return node(side(v), (heap(v) - 1) / 2);
  });
}

// ---------------------------------------------------------------------------
// AT(k)

namespace {

using EdgeKey = std::pair<std::uint64_t, std::uint64_t>;

EdgeKey key(std::uint64_t a, std::uint64_t b) { return a < b ? EdgeKey{a, b} : EdgeKey{b, a}; }

// All simple cycles (length >= 3) as vertex sequences starting at their
// smallest vertex, each listed once.
std::vector<std::vector<std::uint64_t>> simple_cycles(std::uint64_t n, const std::map<EdgeKey, unsigned>& edges,
                                                      std::size_t cap) {
  std::vector<std::vector<std::uint64_t>> adj(n);
  for (const auto& [e, _] : edges) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  std::vector<std::vector<std::uint64_t>> cycles;
  std::vector<bool> on_path(n, false);
  std::vector<std::uint64_t> path;
  for (std::uint64_t start = 0; start < n; ++start) {
    path = {start};
    on_path[start] = true;
    // Iterative DFS with explicit neighbour cursors.
    std::vector<std::size_t> cursor{0};
    while (!path.empty()) {
      std::uint64_t x = path.back();
      if (cursor.back() >= adj[x].size()) {
        on_path[x] = false;
        path.pop_back();
        cursor.pop_back();
        continue;
      }
      std::uint64_t y = adj[x][cursor.back()++];
      if (y == start && path.size() >= 3 && path[1] < path.back()) {
        cycles.push_back(path);
        if (cycles.size() > cap) throw GraphError("AT(k) stage has more than " + std::to_string(cap) + " cycles");
        continue;
      }
      if (y <= start || on_path[y]) continue;
      on_path[y] = true;
      path.push_back(y);
      cursor.push_back(0);
    }
    on_path[start] = false;
  }
  return cycles;
}

}  // namespace

AtGraphInfo make_at_graph(std::uint64_t h_vertices, const std::vector<std::pair<std::uint64_t, std::uint64_t>>& h_edges,
                          const std::vector<std::uint64_t>& x, unsigned stages, std::size_t max_cycles) {
  const std::size_t k = x.size();
  if (k == 0) throw InvalidParameter("AT(k): k must be positive");
  if (stages == 0) throw InvalidParameter("AT(k): at least one stage is required");
  for (auto v : x)
    if (v >= h_vertices) throw InvalidParameter("AT(k): X is not a subset of V(H)");
  {
    auto sorted = x;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InvalidParameter("AT(k): X must have k distinct vertices");
  }
  std::map<EdgeKey, unsigned> seed;
  for (auto [a, b] : h_edges) {
    if (a >= h_vertices || b >= h_vertices || a == b) throw InvalidParameter("AT(k): bad seed edge");
    seed.emplace(key(a, b), 0);
  }

  AtGraphInfo info;
  std::uint64_t n = h_vertices;
  std::map<EdgeKey, unsigned> edges = seed;  // edge -> stage it belongs to
  info.stage_vertex_counts.push_back(n);

  for (unsigned stage = 0; stage + 1 < stages; ++stage) {
    auto all_cycles = simple_cycles(n, edges, max_cycles);
    std::vector<std::vector<EdgeKey>> chosen;  // per grafted cycle, its k subdivided edges
    for (const auto& cyc : all_cycles) {
      std::vector<EdgeKey> fresh;
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        EdgeKey e = key(cyc[i], cyc[(i + 1) % cyc.size()]);
        if (edges.at(e) == stage) fresh.push_back(e);
      }
      if (fresh.empty()) continue;  // lies in the previous stage
      if (fresh.size() < k)
        throw InvalidParameter("AT(k): a new cycle has fewer than k new edges; the seed violates the girth precondition");
      fresh.resize(k);
      chosen.push_back(std::move(fresh));
    }

    std::map<EdgeKey, std::vector<std::uint64_t>> subdivisions;
    std::map<EdgeKey, unsigned> next;
    std::vector<std::pair<EdgeKey, unsigned>> copy_edges;
    for (const auto& cyc_edges : chosen) {
      std::vector<std::uint64_t> sv;
      for (const auto& e : cyc_edges) {
        sv.push_back(n);
        subdivisions[e].push_back(n++);
      }
      for (std::size_t copy = 0; copy < k; ++copy) {
        std::vector<std::uint64_t> image(h_vertices, std::numeric_limits<std::uint64_t>::max());
        for (std::size_t i = 0; i < k; ++i) image[x[i]] = sv[i];
        for (std::uint64_t h = 0; h < h_vertices; ++h)
          if (image[h] == std::numeric_limits<std::uint64_t>::max()) image[h] = n++;
        for (const auto& [e, _] : seed) copy_edges.push_back({key(image[e.first], image[e.second]), stage + 1});
      }
    }
    for (const auto& [e, st] : edges) {
      auto it = subdivisions.find(e);
      if (it == subdivisions.end()) {
        next.emplace(e, st);
        continue;
      }
      std::uint64_t prev = e.first;
      for (std::uint64_t s : it->second) {
        next.emplace(key(prev, s), st);
        prev = s;
      }
      next.emplace(key(prev, e.second), st);
    }
    for (const auto& [e, st] : copy_edges) next.emplace(e, st);
    edges = std::move(next);
    info.stage_vertex_counts.push_back(n);
    info.grafted_cycles.push_back(chosen.size());
  }

  std::vector<std::pair<std::uint64_t, std::uint64_t>> list(edges.size());
  std::transform(edges.begin(), edges.end(), list.begin(), [](const auto& kv) { return kv.first; });
  info.graph = std::make_shared<FiniteGraph>("at_graph", n, list);
  return info;
}

std::pair<std::uint64_t, std::vector<std::pair<std::uint64_t, std::uint64_t>>> seed_graph(const std::string& name) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
  if (name == "petersen") {
    for (std::uint64_t i = 0; i < 5; ++i) {
      edges.push_back({i, (i + 1) % 5});
      edges.push_back({i, i + 5});
      edges.push_back({5 + i, 5 + (i + 2) % 5});
    }
    return {10, edges};
  }
  if (name.size() >= 2 && (name[0] == 'K' || name[0] == 'C')) {
    std::uint64_t n = 0;
    try {
      n = std::stoull(name.substr(1));
    } catch (const std::exception&) {
      throw InvalidParameter("unknown seed graph " + name);
    }
    if (name[0] == 'K') {
      if (n < 2) throw InvalidParameter("K_n needs n >= 2");
      for (std::uint64_t a = 0; a < n; ++a)
        for (std::uint64_t b = a + 1; b < n; ++b) edges.push_back({a, b});
    } else {
      if (n < 3) throw InvalidParameter("C_n needs n >= 3");
      for (std::uint64_t a = 0; a < n; ++a) edges.push_back({a, (a + 1) % n});
    }
    return {n, edges};
  }
  throw InvalidParameter("unknown seed graph " + name);
}

// ---------------------------------------------------------------------------
// Registry

GraphPtr make_generator(const std::string& name, const GeneratorParams& params) {
  if (name == "double_ladder") return make_strip(name, double_ladder_spec());
  if (name == "one_way_ladder") return make_strip(name, one_way_ladder_spec());
  if (name == "ray") return make_strip(name, ray_spec());
  if (name == "triangle_strip") return make_strip(name, triangle_strip_spec());
  if (name == "grid") return std::make_shared<GridGraph>();
  if (name == "nn_grid") return std::make_shared<QuadrantGridGraph>();
  if (name == "binary_tree") return std::make_shared<TreeGraph>(name, 2, 2, false);
  if (name == "regular_tree") {
    unsigned d = parse_unsigned(params, "d", 3);
    if (d < 2) throw InvalidParameter("regular_tree needs d >= 2");
    return std::make_shared<TreeGraph>(name + "(" + std::to_string(d) + ")", d, d - 1, false);
  }
  if (name == "tree_circles") {
    unsigned d = parse_unsigned(params, "d", 3);
    if (d < 3) throw InvalidParameter("tree_circles needs d >= 3");
    return std::make_shared<TreeGraph>(name + "(" + std::to_string(d) + ")", d, d - 1, true);
  }
  if (name == "elusive") return std::make_shared<ElusiveGraph>();
  if (name == "at_graph") {
    auto h = params.count("h") ? params.at("h") : std::string("K4");
    auto [hn, he] = seed_graph(h);
    std::vector<std::uint64_t> x;
    if (params.count("x")) {
      std::stringstream ss(params.at("x"));
      std::string item;
      while (std::getline(ss, item, ';')) {
        try {
          x.push_back(std::stoull(item));
        } catch (const std::exception&) {
          throw InvalidParameter("at_graph: bad X entry '" + item + "'");
        }
      }
    } else {
      unsigned k = parse_unsigned(params, "k", 3);
      for (unsigned i = 0; i < k; ++i) x.push_back(i);
    }
    if (params.count("k") && parse_unsigned(params, "k", 0) != x.size())
      throw InvalidParameter("at_graph: |X| must equal k");
    unsigned stages = parse_unsigned(params, "stages", 2);
    return make_at_graph(hn, he, x, stages).graph;
  }
  throw InvalidParameter("unknown generator '" + name + "'");
}

GraphPtr make_generator_from_selector(const std::string& selector) {
  auto colon = selector.find(':');
  std::string name = selector.substr(0, colon);
  GeneratorParams params;
  if (colon != std::string::npos) {
    std::stringstream ss(selector.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto eq = item.find('=');
      if (eq == std::string::npos) throw InvalidParameter("generator parameter '" + item + "' is not key=value");
      params[item.substr(0, eq)] = item.substr(eq + 1);
    }
  }
  return make_generator(name, params);
}

std::vector<std::string> generator_names() {
  return {"double_ladder", "one_way_ladder", "ray",         "triangle_strip", "grid",    "nn_grid",
          "binary_tree",   "regular_tree",   "tree_circles", "elusive",        "at_graph"};
}

}  // namespace infgraph
