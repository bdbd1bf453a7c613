#pragma once

#include <cstddef>
#include <string>

#include "netcx/graph.hpp"

namespace netcx {

struct EdgeCounts {
  std::size_t loose = 0;
  std::size_t tight = 0;
  std::size_t contains = 0;

  std::size_t total() const noexcept { return loose + tight + contains; }
  bool operator==(const EdgeCounts &) const = default;
};

struct TypeCounts {
  std::size_t infrastructure = 0;
  std::size_t policy = 0;

  bool operator==(const TypeCounts &) const = default;
};

/// One row of a comparison table.
struct MetricsRow {
  std::string topology_name;
  std::size_t vertex_count = 0;
  std::size_t endpoint_count = 0;
  double nodes_per_endpoint = 0.0; ///< exact vertex_count / endpoint_count
  std::size_t l_edges = 0;
  std::size_t t_edges = 0;
  std::size_t contains_edges = 0;
  std::size_t i_types = 0;
  std::size_t p_types = 0;
  std::size_t ip_excess_degree = 0;

  bool operator==(const MetricsRow &) const = default;
};

std::size_t count_endpoints(const NetGraph &graph);

/// Sum over address literals of max(0, d - 1), where d ignores contains
/// edges. A literal nobody references contributes 0.
std::size_t ip_excess_degree(const NetGraph &graph);

EdgeCounts count_edges_by_kind(const NetGraph &graph);

/// Distinct type names per category among vertices present in the graph.
TypeCounts count_types_by_category(const NetGraph &graph);

/// Throws MetricsError naming the topology when the graph has no endpoints.
MetricsRow compute_metrics(const NetGraph &graph, const std::string &name);

} // namespace netcx
