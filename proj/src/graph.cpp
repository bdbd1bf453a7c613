#include "netcx/graph.hpp"

#include <algorithm>
#include <map>

#include "netcx/error.hpp"

namespace netcx {

std::string_view to_string(EdgeKind kind) noexcept {
  switch (kind) {
  case EdgeKind::loose:
    return "loose";
  case EdgeKind::tight:
    return "tight";
  case EdgeKind::contains:
    return "contains";
  }
  return "?";
}

std::optional<EdgeKind> parse_edge_kind(std::string_view text) noexcept {
  if (text == "loose")
    return EdgeKind::loose;
  if (text == "tight")
    return EdgeKind::tight;
  if (text == "contains")
    return EdgeKind::contains;
  return std::nullopt;
}

VertexIndex NetGraph::add_vertex(Vertex vertex) {
  auto [it, inserted] = index_.try_emplace(vertex.id, vertices_.size());
  if (!inserted)
    throw BuildError("duplicate vertex id '" + vertex.id + "'");
  vertices_.push_back(std::move(vertex));
  return it->second;
}

void NetGraph::add_edge(VertexIndex a, VertexIndex b, EdgeKind kind, std::string label) {
  if (a >= vertices_.size() || b >= vertices_.size())
    throw BuildError("edge '" + label + "' references a vertex outside the graph");
  edges_.push_back(Edge{a, b, kind, std::move(label)});
}

std::optional<VertexIndex> NetGraph::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

bool NetGraph::has_edge(VertexIndex a, VertexIndex b, EdgeKind kind, std::string_view label) const {
  return std::any_of(edges_.begin(), edges_.end(), [&](const Edge &e) {
    return e.kind == kind && e.label == label && ((e.a == a && e.b == b) || (e.a == b && e.b == a));
  });
}

Vertex make_address_vertex(const Ipv4Prefix &prefix, std::string dialect) {
  auto text = prefix.to_string();
  Vertex v;
  v.id = std::string(kAddressType) + ':' + text;
  v.dialect = std::move(dialect);
  v.type_name = std::string(kAddressType);
  v.display_name = text;
  v.category = VertexCategory::address_literal;
  v.cidr = prefix;
  return v;
}

NetGraph derive_contains_edges(NetGraph graph) {
  std::map<Ipv4Prefix, std::vector<VertexIndex>> by_prefix;
  for (VertexIndex v = 0; v < graph.vertex_count(); ++v) {
    const auto &vertex = graph.vertex(v);
    if (vertex.category == VertexCategory::address_literal && vertex.cidr)
      by_prefix[*vertex.cidr].push_back(v);
  }

  for (const auto &[prefix, inners] : by_prefix) {
    // walk up the covering prefixes; the first one present is the parent
    for (int length = prefix.length - 1; length >= 0; --length) {
      auto it = by_prefix.find(Ipv4Prefix::network_of(prefix.address, static_cast<std::uint8_t>(length)));
      if (it == by_prefix.end())
        continue;
      for (VertexIndex outer : it->second)
        for (VertexIndex inner : inners)
          if (!graph.has_edge(outer, inner, EdgeKind::contains, "contains"))
            graph.add_edge(outer, inner, EdgeKind::contains, "contains");
      break;
    }
  }
  return graph;
}

std::vector<Violation> validate_graph(const NetGraph &graph, const Taxonomy &taxonomy) {
  std::vector<Violation> out;
  auto vertices = graph.vertices();

  std::map<std::string_view, int> seen;
  for (const auto &v : vertices)
    if (++seen[v.id] == 2)
      out.push_back({"duplicate id", v.id});

  for (const auto &v : vertices) {
    auto info = taxonomy.find(v.dialect, v.type_name);
    if (!info) {
      out.push_back({"unmapped type", v.dialect + "/" + v.type_name + " (vertex " + v.id + ")"});
    } else if (info->category != v.category || info->is_endpoint != v.is_endpoint) {
      out.push_back({"category mismatch", v.id});
    }
    bool literal = v.category == VertexCategory::address_literal;
    if (literal != v.cidr.has_value())
      out.push_back({"cidr iff address literal", v.id});
    if (v.is_endpoint && v.category != VertexCategory::infrastructure)
      out.push_back({"endpoint must be infrastructure", v.id});
  }

  auto describe = [&](const Edge &e) {
    auto name = [&](VertexIndex i) { return i < vertices.size() ? vertices[i].id : "#" + std::to_string(i); };
    return name(e.a) + " -[" + e.label + "/" + std::string(to_string(e.kind)) + "]- " + name(e.b);
  };

  for (const auto &e : graph.edges()) {
    if (e.a >= vertices.size() || e.b >= vertices.size()) {
      out.push_back({"dangling edge", describe(e)});
      continue;
    }
    bool a_lit = vertices[e.a].category == VertexCategory::address_literal;
    bool b_lit = vertices[e.b].category == VertexCategory::address_literal;
    if (e.kind == EdgeKind::contains && !(a_lit && b_lit))
      out.push_back({"contains edge between non-literals", describe(e)});
    if (e.kind == EdgeKind::tight && (a_lit || b_lit))
      out.push_back({"tight edge on address literal", describe(e)});
  }
  return out;
}

} // namespace netcx
