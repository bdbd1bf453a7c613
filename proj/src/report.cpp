#include "netcx/report.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <tuple>

#include "netcx/error.hpp"

namespace netcx {

namespace {

std::string fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

std::string dot_id(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\')
      out += '\\';
    out += c;
  }
  return out + '"';
}

std::string xml_escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
    case '&': out += "&amp;"; break;
    case '<': out += "&lt;"; break;
    case '>': out += "&gt;"; break;
    case '"': out += "&quot;"; break;
    case '\'': out += "&apos;"; break;
    default: out += c;
    }
  }
  return out;
}

double log_scale(std::size_t count) { return std::log1p(static_cast<double>(count)); }

} // namespace

TypeSummaryGraph summarize_types(const NetGraph &graph) {
  std::map<std::string, TypeNode> nodes;
  for (const auto &v : graph.vertices()) {
    auto [it, inserted] = nodes.try_emplace(v.type_name, TypeNode{v.type_name, v.category, 0});
    ++it->second.vertex_count;
  }
  std::map<std::tuple<std::string, std::string, EdgeKind>, std::size_t> bundles;
  for (const auto &e : graph.edges()) {
    std::string a = graph.vertex(e.a).type_name;
    std::string b = graph.vertex(e.b).type_name;
    if (b < a)
      std::swap(a, b);
    ++bundles[{std::move(a), std::move(b), e.kind}];
  }
  TypeSummaryGraph out;
  for (auto &[name, node] : nodes)
    out.type_nodes.push_back(std::move(node));
  for (const auto &[key, count] : bundles)
    out.type_edges.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), count});
  return out;
}

std::string export_dot(const TypeSummaryGraph &summary, std::string_view graph_name) {
  std::map<std::string, VertexCategory, std::less<>> categories;
  for (const auto &n : summary.type_nodes)
    categories[n.type_name] = n.category;
  auto is_literal = [&](const std::string &type) {
    auto it = categories.find(type);
    return it != categories.end() && it->second == VertexCategory::address_literal;
  };

  std::ostringstream out;
  out << "graph " << dot_id(graph_name) << " {\n";
  out << "  node [shape=ellipse, fixedsize=true];\n";
  for (const auto &n : summary.type_nodes) {
    double width = 0.75 + 0.4 * log_scale(n.vertex_count);
    out << "  " << dot_id(n.type_name) << " [label=" << dot_id(n.type_name + "\\n" + std::to_string(n.vertex_count))
        << ", category=" << dot_id(to_string(n.category)) << ", count=" << n.vertex_count
        << ", width=" << fixed(width, 3) << ", height=" << fixed(width * 0.6, 3) << "];\n";
  }
  for (const auto &e : summary.type_edges) {
    std::string color = "blue";
    std::string style = "solid";
    if (e.kind == EdgeKind::contains) {
      color = "grey";
      style = "dashed";
    } else if (is_literal(e.type_a) || is_literal(e.type_b)) {
      color = "grey";
    } else if (e.kind == EdgeKind::tight) {
      color = "red";
    }
    out << "  " << dot_id(e.type_a) << " -- " << dot_id(e.type_b) << " [kind=" << to_string(e.kind)
        << ", label=" << e.edge_count << ", color=" << color << ", style=" << style
        << ", penwidth=" << fixed(1.0 + log_scale(e.edge_count), 3) << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string export_graphml(const NetGraph &graph) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\" "
         "xmlns:xsi=\"http://www.w3.org/2001/XMLSchema-instance\" "
         "xsi:schemaLocation=\"http://graphml.graphdrawing.org/xmlns "
         "http://graphml.graphdrawing.org/xmlns/1.0/graphml.xsd\">\n"
         "  <key id=\"type_name\" for=\"node\" attr.name=\"type_name\" attr.type=\"string\"/>\n"
         "  <key id=\"category\" for=\"node\" attr.name=\"category\" attr.type=\"string\"/>\n"
         "  <key id=\"is_endpoint\" for=\"node\" attr.name=\"is_endpoint\" attr.type=\"boolean\"/>\n"
         "  <key id=\"cidr\" for=\"node\" attr.name=\"cidr\" attr.type=\"string\"/>\n"
         "  <key id=\"dialect\" for=\"node\" attr.name=\"dialect\" attr.type=\"string\"/>\n"
         "  <key id=\"kind\" for=\"edge\" attr.name=\"kind\" attr.type=\"string\"/>\n"
         "  <key id=\"label\" for=\"edge\" attr.name=\"label\" attr.type=\"string\"/>\n";
  out << "  <graph id=\"" << xml_escape(graph.name().empty() ? "G" : graph.name()) << "\" edgedefault=\"undirected\">\n";
  for (const auto &v : graph.vertices()) {
    out << "    <node id=\"" << xml_escape(v.id) << "\">\n"
        << "      <data key=\"type_name\">" << xml_escape(v.type_name) << "</data>\n"
        << "      <data key=\"category\">" << to_string(v.category) << "</data>\n"
        << "      <data key=\"is_endpoint\">" << (v.is_endpoint ? "true" : "false") << "</data>\n"
        << "      <data key=\"cidr\">" << (v.cidr ? v.cidr->to_string() : "") << "</data>\n"
        << "      <data key=\"dialect\">" << xml_escape(v.dialect) << "</data>\n"
        << "    </node>\n";
  }
  std::size_t n = 0;
  for (const auto &e : graph.edges()) {
    out << "    <edge id=\"e" << n++ << "\" source=\"" << xml_escape(graph.vertex(e.a).id) << "\" target=\""
        << xml_escape(graph.vertex(e.b).id) << "\">\n"
        << "      <data key=\"kind\">" << to_string(e.kind) << "</data>\n"
        << "      <data key=\"label\">" << xml_escape(e.label) << "</data>\n"
        << "    </edge>\n";
  }
  out << "  </graph>\n</graphml>\n";
  return out.str();
}

std::string format_ratio(double value) { return fixed(value, 2); }

std::string render_comparison(std::span<const MetricsRow> rows, TableFormat format) {
  if (rows.empty())
    throw ValidationError("comparison needs at least one row");
  static constexpr const char *kHeader[] = {"Topology", "Nodes/N_E", "L-Edges", "T-Edges", "I-Types", "P-Types", "IP-ED"};
  auto cells = [](const MetricsRow &r) {
    return std::vector<std::string>{r.topology_name,         format_ratio(r.nodes_per_endpoint),
                                    std::to_string(r.l_edges), std::to_string(r.t_edges),
                                    std::to_string(r.i_types), std::to_string(r.p_types),
                                    std::to_string(r.ip_excess_degree)};
  };
  std::ostringstream out;
  if (format == TableFormat::csv) {
    auto line = [&](const std::vector<std::string> &values) {
      for (std::size_t i = 0; i < values.size(); ++i)
        out << (i ? "," : "") << values[i];
      out << '\n';
    };
    line({std::begin(kHeader), std::end(kHeader)});
    for (const auto &r : rows)
      line(cells(r));
    return out.str();
  }
  auto line = [&](const std::vector<std::string> &values) {
    out << '|';
    for (const auto &v : values)
      out << ' ' << v << " |";
    out << '\n';
  };
  line({std::begin(kHeader), std::end(kHeader)});
  out << "|---|---:|---:|---:|---:|---:|---:|\n";
  for (const auto &r : rows)
    line(cells(r));
  return out.str();
}

} // namespace netcx
