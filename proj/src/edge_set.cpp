#include "infgraph/edge_set.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

#include "infgraph/strip.hpp"
#include "infgraph/verdict.hpp"

namespace infgraph {

EdgeSet::EdgeSet(FiniteEdges edges)
    : name_("finite"), finite_(std::make_shared<const FiniteEdges>(std::move(edges))) {}

EdgeSet EdgeSet::lazy(std::string name, Member member, Restrict restrict) {
  EdgeSet s;
  s.name_ = std::move(name);
  s.finite_.reset();
  s.member_ = std::move(member);
  s.restrict_ = std::move(restrict);
  return s;
}

const FiniteEdges& EdgeSet::edges() const {
  if (!finite_) throw InvalidParameter("edge set '" + name_ + "' is not finite");
  return *finite_;
}

bool EdgeSet::contains(const Edge& e) const { return finite_ ? finite_->count(e) > 0 : member_(e); }

FiniteEdges EdgeSet::restrict(const MinorTower& tower, std::size_t n) const {
  n = tower.clamp(n);
  if (finite_) return tower.restrict(*finite_, n);
  if (restrict_) return restrict_(tower, n);
  FiniteEdges out;
  for (const auto& e : tower.level(n).edges)
    if (member_(e.edge)) out.insert(out.end(), e.edge);
  return out;
}

FiniteEdges symmetric_difference(const FiniteEdges& a, const FiniteEdges& b) {
  FiniteEdges out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

FiniteEdges intersection(const FiniteEdges& a, const FiniteEdges& b) {
  FiniteEdges out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

EdgeSet operator^(const EdgeSet& a, const EdgeSet& b) {
  if (a.is_finite() && b.is_finite()) return EdgeSet(symmetric_difference(a.edges(), b.edges()));
  return EdgeSet::lazy(a.name() + "+" + b.name(), [a, b](const Edge& e) { return a.contains(e) != b.contains(e); },
                       [a, b](const MinorTower& t, std::size_t n) {
                         return symmetric_difference(a.restrict(t, n), b.restrict(t, n));
                       });
}

namespace {

EdgeSet named_term(const GraphPtr& g, const std::string& term) {
  if (term == "all") return EdgeSet::lazy("all", [](const Edge&) { return true; });
  if (term == "empty") return EdgeSet(FiniteEdges{});
  auto strip = std::dynamic_pointer_cast<const StripGraph>(g);
  if (term == "all_rungs" || term == "all_horizontals" || term.rfind("square:", 0) == 0) {
    if (!strip || strip->spec().width != 2)
      throw InvalidParameter("edge set '" + term + "' needs a two-slot strip graph");
  }
  if (term == "all_rungs") return EdgeSet::lazy("all_rungs", [strip](const Edge& e) { return strip->is_rung(e); });
  if (term == "all_horizontals")
    return EdgeSet::lazy("all_horizontals", [strip](const Edge& e) { return strip->is_horizontal(e); });
  if (term.rfind("square:", 0) == 0) {
    long long i = 0;
    try {
      std::size_t used = 0;
      i = std::stoll(term.substr(7), &used);
      if (used != term.size() - 7) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw InvalidParameter("bad square index in '" + term + "'");
    }
    if (!strip->has_column(i) || !strip->has_column(i + 1))
      throw InvalidParameter("square " + std::to_string(i) + " is outside the strip");
    VertexId u0 = strip->at(i, 0), w0 = strip->at(i, 1), u1 = strip->at(i + 1, 0), w1 = strip->at(i + 1, 1);
    return EdgeSet(FiniteEdges{Edge::between(u0, w0), Edge::between(u0, u1), Edge::between(u1, w1),
                               Edge::between(w0, w1)});
  }
  throw InvalidParameter("unknown edge set name '" + term + "'");
}

}  // namespace

EdgeSet named_edge_set(const GraphPtr& g, const std::string& expr) {
  std::stringstream ss(expr);
  std::string term;
  std::optional<EdgeSet> acc;
  while (std::getline(ss, term, '+')) {
    EdgeSet s = named_term(g, term);
    acc = acc ? (*acc ^ s) : s;
  }
  if (!acc) throw InvalidParameter("empty edge set expression");
  return *acc;
}

std::string to_string(Witness::Kind k) {
  switch (k) {
    case Witness::Kind::Cut: return "cut";
    case Witness::Kind::Circuit: return "circuit";
    case Witness::Kind::Node: return "node";
    case Witness::Kind::Edge: return "edge";
  }
  return "?";
}

std::string to_string(const Verdict& v) {
  switch (v.kind) {
    case Verdict::Kind::Verified: return "Verified(" + std::to_string(v.level) + ")";
    case Verdict::Kind::Refuted: {
      std::string s = "Refuted(level " + std::to_string(v.level);
      if (v.witness) {
        s += ", " + to_string(v.witness->kind) + " {";
        bool first = true;
        for (const auto& e : v.witness->edges) {
          s += (first ? "" : " ") + to_string(e);
          first = false;
        }
        s += "}";
      }
      return s + ")";
    }
    case Verdict::Kind::Unknown: return "Unknown(" + std::to_string(v.horizon) + ")";
  }
  return "?";
}

}  // namespace infgraph
