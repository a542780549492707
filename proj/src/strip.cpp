#include "infgraph/strip.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <limits>
#include <unordered_map>

#include "infgraph/normal_tree.hpp"

namespace infgraph {

namespace {

bool parity_ok(StripSpec::Parity p, long long column) {
  long long r = ((column % 2) + 2) % 2;
  switch (p) {
    case StripSpec::Parity::All: return true;
    case StripSpec::Parity::Even: return r == 0;
    case StripSpec::Parity::Odd: return r == 1;
  }
  return false;
}

std::pair<unsigned, unsigned> slot_pair(const nlohmann::json& j, const char* field) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_unsigned() || !j[1].is_number_unsigned())
    throw InvalidParameter(std::string("StripSpec: ") + field + " entries must be [slot, slot]");
  return {j[0].get<unsigned>(), j[1].get<unsigned>()};
}

}  // namespace

StripSpec strip_spec_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw InvalidParameter("StripSpec: document must be an object");
  static const std::vector<std::string> known{"width", "levels", "intra_level_edges", "inter_level_edges", "extra"};
  for (const auto& [key, _] : doc.items())
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw InvalidParameter("StripSpec: unknown field '" + key + "'");

  StripSpec spec;
  if (!doc.contains("width") || !doc["width"].is_number_unsigned() || doc["width"].get<unsigned>() == 0)
    throw InvalidParameter("StripSpec: width must be a positive integer");
  spec.width = doc["width"].get<unsigned>();

  if (!doc.contains("levels") || !doc["levels"].is_string())
    throw InvalidParameter("StripSpec: levels must be \"two-way\" or \"one-way\"");
  const auto levels = doc["levels"].get<std::string>();
  if (levels == "two-way")
    spec.levels = StripSpec::Levels::TwoWay;
  else if (levels == "one-way")
    spec.levels = StripSpec::Levels::OneWay;
  else
    throw InvalidParameter("StripSpec: levels must be \"two-way\" or \"one-way\"");

  auto check_slot = [&](unsigned s) {
    if (s >= spec.width) throw InvalidParameter("StripSpec: slot " + std::to_string(s) + " out of range");
  };
  for (const char* field : {"intra_level_edges", "inter_level_edges"}) {
    if (!doc.contains(field)) continue;
    if (!doc[field].is_array()) throw InvalidParameter(std::string("StripSpec: ") + field + " must be an array");
    for (const auto& item : doc[field]) {
      auto p = slot_pair(item, field);
      check_slot(p.first);
      check_slot(p.second);
      if (std::string(field) == "intra_level_edges") {
        if (p.first == p.second) throw InvalidParameter("StripSpec: intra-level loop");
        spec.intra_level_edges.push_back(p);
      } else {
        spec.inter_level_edges.push_back(p);
      }
    }
  }
  if (doc.contains("extra")) {
    if (!doc["extra"].is_array()) throw InvalidParameter("StripSpec: extra must be an array");
    for (const auto& item : doc["extra"]) {
      if (!item.is_object()) throw InvalidParameter("StripSpec: extra entries must be objects");
      StripSpec::Template t;
      if (!item.contains("from") || !item.contains("to"))
        throw InvalidParameter("StripSpec: extra entries need from and to");
      t.from = item["from"].get<unsigned>();
      t.to = item["to"].get<unsigned>();
      t.offset = item.value("offset", 0);
      if (t.offset != 0 && t.offset != 1) throw InvalidParameter("StripSpec: extra offset must be 0 or 1");
      const auto parity = item.value("parity", std::string("all"));
      if (parity == "all")
        t.parity = StripSpec::Parity::All;
      else if (parity == "even")
        t.parity = StripSpec::Parity::Even;
      else if (parity == "odd")
        t.parity = StripSpec::Parity::Odd;
      else
        throw InvalidParameter("StripSpec: parity must be all, even or odd");
      check_slot(t.from);
      check_slot(t.to);
      if (t.offset == 0 && t.from == t.to) throw InvalidParameter("StripSpec: extra template is a loop");
      spec.extra.push_back(t);
    }
  }
  return spec;
}

nlohmann::json to_json(const StripSpec& spec) {
  nlohmann::json doc;
  doc["width"] = spec.width;
  doc["levels"] = spec.levels == StripSpec::Levels::TwoWay ? "two-way" : "one-way";
  doc["intra_level_edges"] = nlohmann::json::array();
  for (auto [a, b] : spec.intra_level_edges) doc["intra_level_edges"].push_back({a, b});
  doc["inter_level_edges"] = nlohmann::json::array();
  for (auto [a, b] : spec.inter_level_edges) doc["inter_level_edges"].push_back({a, b});
  if (!spec.extra.empty()) {
    doc["extra"] = nlohmann::json::array();
    for (const auto& t : spec.extra) {
      const char* parity = t.parity == StripSpec::Parity::All ? "all" : t.parity == StripSpec::Parity::Even ? "even" : "odd";
      doc["extra"].push_back({{"from", t.from}, {"to", t.to}, {"offset", t.offset}, {"parity", parity}});
    }
  }
  return doc;
}

StripGraph::StripGraph(std::string name, StripSpec spec) : name_(std::move(name)), spec_(std::move(spec)) {
  if (spec_.width == 0) throw InvalidParameter("strip width must be positive");
  // Every window of `length` consecutive columns connected (both parities)
  // implies every half-strip is connected, which is what the region oracle needs.
  const long long base = spec_.levels == StripSpec::Levels::OneWay ? 0 : -4;
  for (unsigned length = 2; length <= 2 * spec_.width + 4; ++length) {
    if (window_connected(base, length) && window_connected(base + 1, length)) {
      window_ = length;
      break;
    }
  }
  if (window_ == 0)
    warnings_.push_back("strip appears disconnected on windows of up to " + std::to_string(2 * spec_.width + 4) +
                        " columns; component oracles fall back to bounded search (horizon " +
                        std::to_string(search_horizon()) + ")");
}

bool StripGraph::has_column(long long column) const {
  return spec_.levels == StripSpec::Levels::TwoWay || column >= 0;
}

StripPosition StripGraph::position(VertexId v) const {
  std::uint64_t k = v.index / spec_.width;
  unsigned slot = static_cast<unsigned>(v.index % spec_.width);
  long long column;
  if (spec_.levels == StripSpec::Levels::OneWay)
    column = static_cast<long long>(k);
  else
    column = (k % 2 == 1) ? static_cast<long long>((k + 1) / 2) : -static_cast<long long>(k / 2);
  return {column, slot};
}

VertexId StripGraph::at(long long column, unsigned slot) const {
  if (!has_column(column) || slot >= spec_.width)
    throw InvalidParameter("no strip vertex at column " + std::to_string(column));
  std::uint64_t k;
  if (spec_.levels == StripSpec::Levels::OneWay)
    k = static_cast<std::uint64_t>(column);
  else
    k = column > 0 ? static_cast<std::uint64_t>(2 * column - 1) : static_cast<std::uint64_t>(-2 * column);
  return VertexId{k * spec_.width + slot};
}

std::vector<VertexId> StripGraph::neighbors(VertexId v) const {
  auto [c, s] = position(v);
  std::vector<VertexId> out;
  auto add = [&](long long column, unsigned slot) {
    if (has_column(column)) out.push_back(at(column, slot));
  };
  for (auto [a, b] : spec_.intra_level_edges) {
    if (s == a) add(c, b);
    if (s == b) add(c, a);
  }
  for (auto [a, b] : spec_.inter_level_edges) {
    if (s == a) add(c + 1, b);
    if (s == b) add(c - 1, a);
  }
  for (const auto& t : spec_.extra) {
    if (s == t.from && parity_ok(t.parity, c)) add(c + t.offset, t.to);
    if (s == t.to && parity_ok(t.parity, c - t.offset)) add(c - t.offset, t.from);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  out.erase(std::remove(out.begin(), out.end(), v), out.end());
  return out;
}

std::string StripGraph::vertex_name(VertexId v) const {
  auto [c, s] = position(v);
  if (spec_.width == 2) return std::string(s == 0 ? "u" : "w") + "_" + std::to_string(c);
  if (spec_.width == 1) return "x_" + std::to_string(c);
  return "s" + std::to_string(s) + "_" + std::to_string(c);
}

bool StripGraph::window_connected(long long first, unsigned length) const {
  std::vector<VertexId> verts;
  for (long long c = first; c < first + static_cast<long long>(length); ++c)
    for (unsigned s = 0; s < spec_.width; ++s)
      if (has_column(c)) verts.push_back(at(c, s));
  if (verts.empty()) return false;
  std::sort(verts.begin(), verts.end());
  std::vector<bool> seen(verts.size(), false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!queue.empty()) {
    VertexId x = verts[queue.front()];
    queue.pop_front();
    for (VertexId y : neighbors(x)) {
      auto it = std::lower_bound(verts.begin(), verts.end(), y);
      if (it == verts.end() || *it != y) continue;
      std::size_t i = static_cast<std::size_t>(it - verts.begin());
      if (seen[i]) continue;
      seen[i] = true;
      ++count;
      queue.push_back(i);
    }
  }
  return count == verts.size();
}

RegionGraph::Region StripGraph::region(const VertexSet& s) const {
  long long lo = std::numeric_limits<long long>::max();
  long long hi = std::numeric_limits<long long>::min();
  for (VertexId v : s) {
    long long c = position(v).column;
    lo = std::min(lo, c);
    hi = std::max(hi, c);
  }
  if (s.empty()) lo = hi = 0;
  if (spec_.levels == StripSpec::Levels::OneWay) lo = 0;
  Region r;
  for (long long c = lo; c <= hi; ++c)
    for (unsigned slot = 0; slot < spec_.width; ++slot) r.box.insert(at(c, slot));
  r.tail_class = [this, lo](VertexId v) -> std::uint64_t { return position(v).column < lo ? 0 : 1; };
  return r;
}

std::vector<ComponentInfo> StripGraph::components_without(const VertexSet& s,
                                                          const std::vector<VertexId>& query) const {
  if (window_ == 0) return LazyGraph::components_without(s, query);
  return RegionGraph::components_without(s, query);
}

std::uint64_t StripGraph::edge_rank(const Edge& e) const {
  auto a = position(e.lo).column;
  auto b = position(e.hi).column;
  return static_cast<std::uint64_t>(std::min(a < 0 ? -a : a, b < 0 ? -b : b));
}

bool StripGraph::is_rung(const Edge& e) const { return position(e.lo).column == position(e.hi).column; }

bool StripGraph::is_horizontal(const Edge& e) const {
  auto a = position(e.lo);
  auto b = position(e.hi);
  return a.slot == b.slot && (a.column - b.column == 1 || b.column - a.column == 1);
}

bool StripGraph::plain_ladder() const {
  if (spec_.width == 1) return spec_.intra_level_edges.empty() && spec_.extra.empty() &&
                               spec_.inter_level_edges.size() == 1;
  if (spec_.width != 2 || !spec_.extra.empty()) return false;
  auto intra = spec_.intra_level_edges;
  auto inter = spec_.inter_level_edges;
  for (auto& [a, b] : intra)
    if (a > b) std::swap(a, b);
  std::sort(intra.begin(), intra.end());
  intra.erase(std::unique(intra.begin(), intra.end()), intra.end());
  std::sort(inter.begin(), inter.end());
  inter.erase(std::unique(inter.begin(), inter.end()), inter.end());
  using P = std::pair<unsigned, unsigned>;
  return intra == std::vector<P>{{0, 1}} && inter == std::vector<P>{{0, 0}, {1, 1}};
}

std::optional<NormalTreeWitness> StripGraph::normal_tree_witness() const {
  if (!plain_ladder()) return std::nullopt;
  if (spec_.width == 1) {
    // Ray or double ray rooted at column 0: parents point toward column 0.
    return NormalTreeWitness(name_ + "-path", at(0, 0), [this](VertexId v) -> std::optional<VertexId> {
      long long c = position(v).column;
      if (c == 0) return std::nullopt;
      return at(c > 0 ? c - 1 : c + 1, 0);
    });
  }
  // Snake: root u_0, stem w_0, then in column c != 0 the entry slot is w for
  // odd |c| and u for even |c|; the other vertex of the column hangs off it.
  return NormalTreeWitness(name_ + "-snake", at(0, 0), [this](VertexId v) -> std::optional<VertexId> {
    auto [c, s] = position(v);
    if (c == 0) return s == 0 ? std::nullopt : std::optional<VertexId>(at(0, 0));
    long long a = c < 0 ? -c : c;
    unsigned entry = (a % 2 == 1) ? 1u : 0u;
    if (s == entry) return at(c > 0 ? c - 1 : c + 1, entry);
    return at(c, entry);
  });
}

StripLoad load_strip_spec(const nlohmann::json& doc, std::string name) {
  auto spec = strip_spec_from_json(doc);
  auto g = std::make_shared<StripGraph>(std::move(name), std::move(spec));
  return {g, g->warnings()};
}

StripLoad load_strip_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidParameter("cannot open strip spec " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidParameter(std::string("StripSpec: ") + e.what());
  }
  return load_strip_spec(doc, path);
}

}  // namespace infgraph
