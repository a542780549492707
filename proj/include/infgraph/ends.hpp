#pragma once

#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "infgraph/minor_tower.hpp"

namespace infgraph {

// Nested chain of infinite components, one dummy id per level 0..n.
struct EndThread {
  std::vector<std::uint64_t> dummies;
  bool provisional = false;  // some component's finiteness was Unknown
  std::size_t horizon = 0;   // search horizon behind a provisional flag
};

// One thread per infinite dummy of level n, ordered by dummy id.
std::vector<EndThread> end_threads(const MinorTower& tower, std::size_t n);

// Lazily generated injective ray.
struct Ray {
  std::function<VertexId(std::size_t)> at;
  std::size_t budget = 4096;  // prefix length inspected
};

// Thread prefix (levels 0..n) containing a tail of the ray: at level k the
// tail starts right after the ray's last visit to S_k within the budget.
// nullopt (Unknown) when the last visit is the final inspected vertex.
std::optional<std::vector<std::uint64_t>> classify_ray(const MinorTower& tower, const Ray& r, std::size_t n);

struct SameThread {
  std::size_t level = 0;
};
struct DifferAtLevel {
  std::size_t level = 0;
};
struct RaysUnknown {
  std::size_t budget = 0;
};
using RayComparison = std::variant<SameThread, DifferAtLevel, RaysUnknown>;

RayComparison distinguish_rays(const MinorTower& tower, const Ray& r1, const Ray& r2, std::size_t n);

struct BoundaryStep {
  std::size_t level = 0;
  std::size_t edge_boundary = 0;    // |B_e(C_k)|
  std::size_t vertex_boundary = 0;  // |B_v(C_k)|
  double ratio = 0.0;
};

struct BoundaryProfile {
  std::vector<BoundaryStep> steps;
  // Minimum ratio over levels n/2..n. An upper bound for the relative degree
  // along this defining sequence only.
  double liminf_upper_estimate = 0.0;
};

BoundaryProfile boundary_profile(const MinorTower& tower, const EndThread& t, std::size_t n);

}  // namespace infgraph
