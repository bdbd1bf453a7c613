#pragma once

#include <map>
#include <string>
#include <vector>

#include "netcx/graph.hpp"
#include "netcx/taxonomy.hpp"

namespace netcx {

enum class Coupling { loose, tight };

/// Reference from one resource to another resource or to an address
/// literal (target_type == "ipv4", target_key == canonical CIDR).
struct ResourceRef {
  std::string target_type;
  std::string target_key;
  Coupling coupling = Coupling::loose;
  std::string relationship;

  bool operator==(const ResourceRef &) const = default;
};

struct Resource {
  std::string dialect;
  std::string type_name;
  std::string key;
  std::map<std::string, std::string> attributes;
  std::vector<ResourceRef> refs;
  /// Prefixes this resource carries. Each becomes a literal vertex; only
  /// refs create edges.
  std::vector<std::string> cidrs;

  bool operator==(const Resource &) const = default;
};

/// Dialect-neutral intermediate form shared by parsers and generators.
struct ResourceSet {
  std::string dialect;
  std::vector<Resource> resources;
  std::vector<std::string> warnings;

  bool empty() const noexcept { return resources.empty(); }
  const Resource *find(std::string_view type_name, std::string_view key) const;

  bool operator==(const ResourceSet &) const = default;
};

/// Fluent helper used by generators and parsers to assemble resources.
class ResourceBuilder {
public:
  ResourceBuilder(std::string dialect, std::string type_name, std::string key);

  ResourceBuilder &tight(std::string type_name, std::string key, std::string relationship);
  ResourceBuilder &loose(std::string type_name, std::string key, std::string relationship);
  /// Loose reference to an address literal; validates and canonicalises.
  ResourceBuilder &address(std::string_view cidr, std::string relationship);
  ResourceBuilder &declare(std::string_view cidr);
  ResourceBuilder &attr(std::string name, std::string value);

  Resource build() && { return std::move(resource_); }
  const Resource &peek() const noexcept { return resource_; }

private:
  Resource resource_;
};

/// Vertex id used for a resource ("<type>:<key>").
std::string resource_vertex_id(std::string_view type_name, std::string_view key);

/// One vertex per resource plus one shared vertex per distinct CIDR; one
/// edge per reference; contains edges derived last.
///
/// Throws TaxonomyError for an unmapped type, BuildError for an
/// unresolved tight reference, a tight reference to a literal, or a
/// duplicate (type, key).
NetGraph build_graph(const ResourceSet &set, const Taxonomy &taxonomy, std::string name = {});

/// Neutral JSON serialisation (stable key order, 2-space indent).
std::string to_ir_json(const ResourceSet &set);
ResourceSet from_ir_json(std::string_view text);

} // namespace netcx
