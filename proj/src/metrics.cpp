#include "netcx/metrics.hpp"

#include <set>
#include <vector>

#include "netcx/error.hpp"

namespace netcx {

std::size_t count_endpoints(const NetGraph &graph) {
  std::size_t n = 0;
  for (const auto &v : graph.vertices())
    n += v.is_endpoint ? 1 : 0;
  return n;
}

std::size_t ip_excess_degree(const NetGraph &graph) {
  std::vector<std::size_t> degree(graph.vertex_count(), 0);
  for (const auto &e : graph.edges()) {
    if (e.kind == EdgeKind::contains)
      continue;
    ++degree[e.a];
    ++degree[e.b];
  }
  std::size_t total = 0;
  auto vertices = graph.vertices();
  for (VertexIndex v = 0; v < vertices.size(); ++v)
    if (vertices[v].category == VertexCategory::address_literal && degree[v] > 1)
      total += degree[v] - 1;
  return total;
}

EdgeCounts count_edges_by_kind(const NetGraph &graph) {
  EdgeCounts counts;
  for (const auto &e : graph.edges()) {
    switch (e.kind) {
    case EdgeKind::loose:
      ++counts.loose;
      break;
    case EdgeKind::tight:
      ++counts.tight;
      break;
    case EdgeKind::contains:
      ++counts.contains;
      break;
    }
  }
  return counts;
}

TypeCounts count_types_by_category(const NetGraph &graph) {
  std::set<std::string_view> infrastructure, policy;
  for (const auto &v : graph.vertices()) {
    if (v.category == VertexCategory::infrastructure)
      infrastructure.insert(v.type_name);
    else if (v.category == VertexCategory::policy)
      policy.insert(v.type_name);
  }
  return {infrastructure.size(), policy.size()};
}

MetricsRow compute_metrics(const NetGraph &graph, const std::string &name) {
  MetricsRow row;
  row.topology_name = name;
  row.vertex_count = graph.vertex_count();
  row.endpoint_count = count_endpoints(graph);
  if (row.endpoint_count == 0)
    throw MetricsError("no endpoints in topology '" + name + "'");
  row.nodes_per_endpoint = static_cast<double>(row.vertex_count) / static_cast<double>(row.endpoint_count);
  auto edges = count_edges_by_kind(graph);
  row.l_edges = edges.loose;
  row.t_edges = edges.tight;
  row.contains_edges = edges.contains;
  auto types = count_types_by_category(graph);
  row.i_types = types.infrastructure;
  row.p_types = types.policy;
  row.ip_excess_degree = ip_excess_degree(graph);
  return row;
}

} // namespace netcx
