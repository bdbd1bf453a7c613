#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "netcx/graph.hpp"
#include "netcx/metrics.hpp"

namespace netcx {

struct TypeNode {
  std::string type_name;
  VertexCategory category = VertexCategory::infrastructure;
  std::size_t vertex_count = 0;

  bool operator==(const TypeNode &) const = default;
};

/// Bundle of all edges of one kind between two types; type_a <= type_b.
struct TypeEdge {
  std::string type_a;
  std::string type_b;
  EdgeKind kind = EdgeKind::loose;
  std::size_t edge_count = 0;

  bool operator==(const TypeEdge &) const = default;
};

/// Graph aggregated by vertex type. Both lists are sorted.
struct TypeSummaryGraph {
  std::vector<TypeNode> type_nodes;
  std::vector<TypeEdge> type_edges;

  bool operator==(const TypeSummaryGraph &) const = default;
};

TypeSummaryGraph summarize_types(const NetGraph &graph);

/// Undirected DOT document. Sizes and pen widths grow with log(1 + count).
/// Colours: loose blue, tight red, anything touching an address-literal
/// type grey, contains dashed grey.
std::string export_dot(const TypeSummaryGraph &summary, std::string_view graph_name = "summary");

/// Full graph as GraphML. Vertices and edges keep graph order.
std::string export_graphml(const NetGraph &graph);

enum class TableFormat { markdown, csv };

/// "%.2f"
std::string format_ratio(double value);

/// Throws ValidationError on an empty row list.
std::string render_comparison(std::span<const MetricsRow> rows, TableFormat format);

} // namespace netcx
