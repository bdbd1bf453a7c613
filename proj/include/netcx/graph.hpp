#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "netcx/cidr.hpp"
#include "netcx/taxonomy.hpp"

namespace netcx {

/// Type name shared by every address-literal vertex.
inline constexpr std::string_view kAddressType = "ipv4";

enum class EdgeKind { loose, tight, contains };

std::string_view to_string(EdgeKind kind) noexcept;
std::optional<EdgeKind> parse_edge_kind(std::string_view text) noexcept;

using VertexIndex = std::size_t;

struct Vertex {
  std::string id;
  std::string dialect;
  std::string type_name;
  std::string display_name;
  VertexCategory category = VertexCategory::infrastructure;
  bool is_endpoint = false;
  std::optional<Ipv4Prefix> cidr; ///< present iff category == address_literal
};

/// Undirected edge between two vertex positions of the owning graph.
struct Edge {
  VertexIndex a = 0;
  VertexIndex b = 0;
  EdgeKind kind = EdgeKind::loose;
  std::string label;

  bool touches(VertexIndex v) const noexcept { return a == v || b == v; }
};

/// Typed undirected multigraph of one network configuration.
///
/// Construction is append-only. Once built, a graph is safe to share for
/// concurrent reads.
class NetGraph {
public:
  NetGraph() = default;
  explicit NetGraph(std::string name) : name_(std::move(name)) {}

  const std::string &name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  /// Throws BuildError when the id is already taken.
  VertexIndex add_vertex(Vertex vertex);

  /// Throws BuildError when an endpoint index is out of range.
  void add_edge(VertexIndex a, VertexIndex b, EdgeKind kind, std::string label);

  std::optional<VertexIndex> find(std::string_view id) const;
  bool has_edge(VertexIndex a, VertexIndex b, EdgeKind kind, std::string_view label) const;

  std::span<const Vertex> vertices() const noexcept { return vertices_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  const Vertex &vertex(VertexIndex v) const { return vertices_.at(v); }

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

private:
  std::string name_;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, VertexIndex> index_;
};

/// Builds a literal vertex for `prefix` (id "ipv4:<cidr>").
Vertex make_address_vertex(const Ipv4Prefix &prefix, std::string dialect);

/// Links every address literal to its immediate covering literal with a
/// contains edge (transitive reduction of strict containment). Idempotent.
NetGraph derive_contains_edges(NetGraph graph);

struct Violation {
  std::string rule;
  std::string detail;
};

/// All invariant violations of the graph, plus vertices whose
/// (dialect, type_name) is missing from the taxonomy. Empty iff well-formed.
std::vector<Violation> validate_graph(const NetGraph &graph, const Taxonomy &taxonomy);

} // namespace netcx
