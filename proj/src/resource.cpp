#include "netcx/resource.hpp"

#include <json.hpp>

#include "netcx/error.hpp"

namespace netcx {

using nlohmann::json;

const Resource *ResourceSet::find(std::string_view type_name, std::string_view key) const {
  for (const auto &r : resources)
    if (r.type_name == type_name && r.key == key)
      return &r;
  return nullptr;
}

ResourceBuilder::ResourceBuilder(std::string dialect, std::string type_name, std::string key) {
  resource_.dialect = std::move(dialect);
  resource_.type_name = std::move(type_name);
  resource_.key = std::move(key);
}

ResourceBuilder &ResourceBuilder::tight(std::string type_name, std::string key, std::string relationship) {
  resource_.refs.push_back({std::move(type_name), std::move(key), Coupling::tight, std::move(relationship)});
  return *this;
}

ResourceBuilder &ResourceBuilder::loose(std::string type_name, std::string key, std::string relationship) {
  resource_.refs.push_back({std::move(type_name), std::move(key), Coupling::loose, std::move(relationship)});
  return *this;
}

ResourceBuilder &ResourceBuilder::address(std::string_view cidr, std::string relationship) {
  return loose(std::string(kAddressType), Ipv4Prefix::parse(cidr).to_string(), std::move(relationship));
}

ResourceBuilder &ResourceBuilder::declare(std::string_view cidr) {
  resource_.cidrs.push_back(Ipv4Prefix::parse(cidr).to_string());
  return *this;
}

ResourceBuilder &ResourceBuilder::attr(std::string name, std::string value) {
  resource_.attributes[std::move(name)] = std::move(value);
  return *this;
}

std::string resource_vertex_id(std::string_view type_name, std::string_view key) {
  std::string id(type_name);
  id += ':';
  id += key;
  return id;
}

NetGraph build_graph(const ResourceSet &set, const Taxonomy &taxonomy, std::string name) {
  NetGraph graph(name.empty() ? set.dialect : std::move(name));

  auto make_vertex = [&](const std::string &dialect, const std::string &type_name, const std::string &key) {
    auto info = taxonomy.lookup(dialect, type_name);
    if (info.category == VertexCategory::address_literal)
      throw BuildError("type '" + type_name + "' is mapped as address_literal but carries no prefix");
    Vertex v;
    v.id = resource_vertex_id(type_name, key);
    v.dialect = dialect;
    v.type_name = type_name;
    v.display_name = key;
    v.category = info.category;
    v.is_endpoint = info.is_endpoint;
    return v;
  };

  for (const auto &r : set.resources) {
    auto vertex = make_vertex(r.dialect.empty() ? set.dialect : r.dialect, r.type_name, r.key);
    if (graph.find(vertex.id))
      throw BuildError("duplicate resource " + r.type_name + " '" + r.key + "'");
    graph.add_vertex(std::move(vertex));
  }

  auto literal_info = std::optional<TypeInfo>{};
  auto literal = [&](const std::string &dialect, const std::string &cidr) {
    auto prefix = Ipv4Prefix::parse(cidr);
    auto vertex = make_address_vertex(prefix, dialect);
    if (auto existing = graph.find(vertex.id))
      return *existing;
    if (!literal_info) {
      literal_info = taxonomy.lookup(dialect, kAddressType);
      if (literal_info->category != VertexCategory::address_literal)
        throw BuildError("taxonomy maps '" + std::string(kAddressType) + "' to a non-literal category");
    }
    return graph.add_vertex(std::move(vertex));
  };

  for (const auto &r : set.resources)
    for (const auto &cidr : r.cidrs)
      literal(r.dialect.empty() ? set.dialect : r.dialect, cidr);

  std::vector<std::string> unresolved;
  for (const auto &r : set.resources) {
    const auto &dialect = r.dialect.empty() ? set.dialect : r.dialect;
    auto source = *graph.find(resource_vertex_id(r.type_name, r.key));
    for (const auto &ref : r.refs) {
      if (ref.target_type == kAddressType) {
        if (ref.coupling == Coupling::tight)
          throw BuildError("tight reference from " + r.type_name + " '" + r.key + "' to address literal " +
                           ref.target_key);
        graph.add_edge(source, literal(dialect, ref.target_key), EdgeKind::loose, ref.relationship);
        continue;
      }
      auto target = graph.find(resource_vertex_id(ref.target_type, ref.target_key));
      if (!target) {
        if (ref.coupling == Coupling::tight) {
          unresolved.push_back(r.type_name + " '" + r.key + "' -> " + ref.target_type + " '" + ref.target_key +
                               "' (" + ref.relationship + ")");
          continue;
        }
        // loose coupling tolerates dangling names: materialise the name
        target = graph.add_vertex(make_vertex(dialect, ref.target_type, ref.target_key));
      }
      graph.add_edge(source, *target, ref.coupling == Coupling::tight ? EdgeKind::tight : EdgeKind::loose,
                     ref.relationship);
    }
  }
  if (!unresolved.empty()) {
    std::string message = "unresolved tight reference(s):";
    for (const auto &u : unresolved)
      message += "\n  " + u;
    throw BuildError(message);
  }
  return derive_contains_edges(std::move(graph));
}

std::string to_ir_json(const ResourceSet &set) {
  json resources = json::array();
  for (const auto &r : set.resources) {
    json refs = json::array();
    for (const auto &ref : r.refs)
      refs.push_back({{"type", ref.target_type},
                      {"key", ref.target_key},
                      {"coupling", ref.coupling == Coupling::tight ? "tight" : "loose"},
                      {"relationship", ref.relationship}});
    json entry = {{"dialect", r.dialect}, {"type", r.type_name}, {"key", r.key}, {"refs", refs}};
    entry["attributes"] = r.attributes;
    entry["cidrs"] = r.cidrs;
    resources.push_back(std::move(entry));
  }
  json doc = {{"dialect", set.dialect}, {"resources", resources}};
  doc["warnings"] = set.warnings;
  return doc.dump(2) + "\n";
}

ResourceSet from_ir_json(std::string_view text) {
  try {
    auto doc = json::parse(text);
    ResourceSet set;
    set.dialect = doc.at("dialect").get<std::string>();
    for (const auto &entry : doc.at("resources")) {
      Resource r;
      r.dialect = entry.value("dialect", set.dialect);
      r.type_name = entry.at("type").get<std::string>();
      r.key = entry.at("key").get<std::string>();
      if (entry.contains("attributes"))
        r.attributes = entry["attributes"].get<std::map<std::string, std::string>>();
      if (entry.contains("cidrs"))
        r.cidrs = entry["cidrs"].get<std::vector<std::string>>();
      for (const auto &ref : entry.value("refs", json::array())) {
        auto coupling = ref.at("coupling").get<std::string>();
        if (coupling != "tight" && coupling != "loose")
          throw ParseError("unknown coupling '" + coupling + "'");
        r.refs.push_back({ref.at("type").get<std::string>(), ref.at("key").get<std::string>(),
                          coupling == "tight" ? Coupling::tight : Coupling::loose,
                          ref.value("relationship", std::string{})});
      }
      set.resources.push_back(std::move(r));
    }
    if (doc.contains("warnings"))
      set.warnings = doc["warnings"].get<std::vector<std::string>>();
    return set;
  } catch (const json::exception &e) {
    throw ParseError(std::string("IR document: ") + e.what());
  }
}

} // namespace netcx
