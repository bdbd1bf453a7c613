#include <algorithm>
#include <array>
#include <regex>
#include <set>

#include <json.hpp>

#include "netcx/azure_types.hpp"
#include "netcx/error.hpp"
#include "netcx/ingest.hpp"

namespace netcx {

namespace azure {

namespace {

struct TypeMapping {
  std::string_view type_name;
  std::string_view arm_type;
};

// first entry per type name is the canonical one used when emitting
constexpr std::array kTypes{
    TypeMapping{"vnet", "Microsoft.Network/virtualNetworks"},
    TypeMapping{"subnet", "Microsoft.Network/virtualNetworks/subnets"},
    TypeMapping{"peering", "Microsoft.Network/virtualNetworks/virtualNetworkPeerings"},
    TypeMapping{"vm", "Microsoft.Compute/virtualMachines"},
    TypeMapping{"nic", "Microsoft.Network/networkInterfaces"},
    TypeMapping{"ipconfig", "Microsoft.Network/networkInterfaces/ipConfigurations"},
    TypeMapping{"ipconfig", "Microsoft.Network/azureFirewalls/ipConfigurations"},
    TypeMapping{"publicIp", "Microsoft.Network/publicIPAddresses"},
    TypeMapping{"routeTable", "Microsoft.Network/routeTables"},
    TypeMapping{"route", "Microsoft.Network/routeTables/routes"},
    TypeMapping{"nsg", "Microsoft.Network/networkSecurityGroups"},
    TypeMapping{"nsgRule", "Microsoft.Network/networkSecurityGroups/securityRules"},
    TypeMapping{"nsgRule", "Microsoft.Network/networkSecurityGroups/defaultSecurityRules"},
    TypeMapping{"asg", "Microsoft.Network/applicationSecurityGroups"},
    TypeMapping{"firewall", "Microsoft.Network/azureFirewalls"},
    TypeMapping{"firewallPolicy", "Microsoft.Network/firewallPolicies"},
    TypeMapping{"ruleCollection", "Microsoft.Network/firewallPolicies/ruleCollections"},
    TypeMapping{"fwRule", "Microsoft.Network/firewallPolicies/ruleCollections/rules"},
    TypeMapping{"ipGroup", "Microsoft.Network/ipGroups"},
};

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) == std::tolower(static_cast<unsigned char>(y));
         });
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  while (true) {
    auto pos = text.find(sep);
    parts.push_back(text.substr(0, pos));
    if (pos == std::string_view::npos)
      break;
    text.remove_prefix(pos + 1);
  }
  return parts;
}

} // namespace

std::optional<std::string> arm_type_for(std::string_view type_name) {
  for (const auto &m : kTypes)
    if (m.type_name == type_name)
      return std::string(m.arm_type);
  return std::nullopt;
}

std::optional<std::string> type_name_for(std::string_view arm_type) {
  // resource-manager types are case-insensitive
  for (const auto &m : kTypes)
    if (iequals(m.arm_type, arm_type))
      return std::string(m.type_name);
  return std::nullopt;
}

std::string resource_id(std::string_view arm_type, std::string_view name) {
  auto types = split(arm_type, '/');
  auto names = split(name, '/');
  std::string id = "/subscriptions/" + std::string(kSubscription) + "/resourceGroups/" +
                   std::string(kResourceGroup) + "/providers/" + std::string(types.at(0));
  for (std::size_t i = 1; i < types.size(); ++i) {
    id += '/';
    id += types[i];
    id += '/';
    id += i - 1 < names.size() ? names[i - 1] : std::string_view{};
  }
  return id;
}

std::optional<ParsedId> parse_resource_id(std::string_view id) {
  auto parts = split(id, '/');
  // "", subscriptions, sub, resourceGroups, rg, providers, ns, type, name, ...
  if (parts.size() < 9 || !parts[0].empty() || !iequals(parts[1], "subscriptions") ||
      !iequals(parts[3], "resourceGroups") || !iequals(parts[5], "providers") || (parts.size() - 7) % 2 != 0)
    return std::nullopt;
  ParsedId parsed;
  parsed.arm_type = std::string(parts[6]);
  for (std::size_t i = 7; i < parts.size(); i += 2) {
    if (parts[i].empty() || parts[i + 1].empty())
      return std::nullopt;
    parsed.arm_type += '/';
    parsed.arm_type += parts[i];
    if (!parsed.name.empty())
      parsed.name += '/';
    parsed.name += parts[i + 1];
  }
  return parsed;
}

} // namespace azure

namespace {

using nlohmann::json;

const std::regex &ip_like() {
  static const std::regex pattern(R"(^\d{1,3}(\.\d{1,3}){3}(/\d{1,2})?$)");
  return pattern;
}

struct AzureWalker {
  std::size_t document;
  ResourceBuilder &builder;

  [[noreturn]] void fail(const std::string &path, const std::string &why) const {
    throw ParseError("document " + std::to_string(document) + ", " + path + ": " + why);
  }

  void add_id_ref(const std::string &path, const std::string &relationship, const std::string &id) {
    auto parsed = azure::parse_resource_id(id);
    if (!parsed)
      fail(path, "malformed resource id '" + id + "'");
    auto type_name = azure::type_name_for(parsed->arm_type);
    if (!type_name)
      fail(path, "reference to unsupported resource type '" + parsed->arm_type + "'");
    builder.tight(*type_name, parsed->name, relationship);
  }

  void visit_string(const std::string &path, const std::string &relationship, const std::string &value) {
    if (value.starts_with("/subscriptions/")) {
      add_id_ref(path, relationship, value);
    } else if (std::regex_match(value, ip_like())) {
      auto prefix = Ipv4Prefix::try_parse(value);
      if (!prefix)
        fail(path, "invalid IPv4 prefix '" + value + "'");
      builder.address(prefix->to_string(), relationship);
    }
  }

  void visit(const json &node, const std::string &path, const std::string &relationship) {
    if (node.is_string()) {
      visit_string(path, relationship, node.get<std::string>());
    } else if (node.is_array()) {
      for (std::size_t i = 0; i < node.size(); ++i)
        visit(node[i], path + "[" + std::to_string(i) + "]", relationship);
    } else if (node.is_object()) {
      bool dynamic = node.contains("privateIPAllocationMethod") && node["privateIPAllocationMethod"].is_string() &&
                     node["privateIPAllocationMethod"].get<std::string>() == "Dynamic";
      for (const auto &[name, child] : node.items()) {
        // platform-assigned address: present in the export, never typed
        if (dynamic && name == "privateIPAddress")
          continue;
        visit(child, path + "." + name, name == "id" ? relationship : name);
      }
    }
  }
};

void parse_resource(const json &node, std::size_t document, const std::string &path, ResourceSet &set) {
  auto fail = [&](const std::string &why) {
    throw ParseError("document " + std::to_string(document) + ", " + path + ": " + why);
  };
  if (!node.is_object())
    fail("resource must be an object");
  if (!node.contains("type") || !node["type"].is_string())
    fail("missing 'type'");
  if (!node.contains("name") || !node["name"].is_string())
    fail("missing 'name'");
  auto arm_type = node["type"].get<std::string>();
  auto name = node["name"].get<std::string>();
  auto type_name = azure::type_name_for(arm_type);
  if (!type_name) {
    set.warnings.push_back("document " + std::to_string(document) + ": ignored resource type '" + arm_type + "'");
    return;
  }

  ResourceBuilder builder("azure", *type_name, name);
  if (*azure::arm_type_for(*type_name) != arm_type)
    builder.attr("armType", arm_type);

  // child resources are tightly bound to their parent
  auto segments = std::count(arm_type.begin(), arm_type.end(), '/');
  if (segments >= 2) {
    auto slash = name.rfind('/');
    if (slash == std::string::npos)
      fail("child resource name '" + name + "' lacks its parent segment");
    auto parent_arm = arm_type.substr(0, arm_type.rfind('/'));
    auto parent_type = azure::type_name_for(parent_arm);
    if (!parent_type)
      fail("unsupported parent type '" + parent_arm + "'");
    builder.tight(*parent_type, name.substr(0, slash), "parent");
  }

  if (node.contains("properties")) {
    const auto &props = node["properties"];
    if (!props.is_object())
      fail("'properties' must be an object");
    AzureWalker walker{document, builder};
    bool dynamic = props.contains("privateIPAllocationMethod") && props["privateIPAllocationMethod"] == "Dynamic";
    for (const auto &[key, value] : props.items()) {
      if (dynamic && key == "privateIPAddress" && value.is_string())
        builder.attr(key, value.get<std::string>());
      else if (value.is_string() && !value.get<std::string>().starts_with("/subscriptions/") &&
          !std::regex_match(value.get<std::string>(), ip_like()))
        builder.attr(key, value.get<std::string>());
      else
        walker.visit(value, path + ".properties." + key, key);
    }
  }

  auto resource = std::move(builder).build();
  // a value typed twice under the same property is one coupling
  std::vector<ResourceRef> unique;
  for (auto &ref : resource.refs)
    if (std::find(unique.begin(), unique.end(), ref) == unique.end())
      unique.push_back(std::move(ref));
  resource.refs = std::move(unique);
  set.resources.push_back(std::move(resource));
}

} // namespace

ResourceSet parse_azure(std::span<const std::string> documents) {
  ResourceSet set;
  set.dialect = "azure";
  for (std::size_t d = 0; d < documents.size(); ++d) {
    json doc;
    try {
      doc = json::parse(documents[d]);
    } catch (const json::parse_error &e) {
      throw ParseError("document " + std::to_string(d) + ": " + e.what());
    }
    const json *list = &doc;
    std::string base = "$";
    if (doc.is_object() && doc.contains("value")) {
      list = &doc["value"];
      base = "$.value";
    } else if (doc.is_object() && doc.contains("resources")) {
      list = &doc["resources"];
      base = "$.resources";
    }
    if (list->is_array()) {
      for (std::size_t i = 0; i < list->size(); ++i)
        parse_resource((*list)[i], d, base + "[" + std::to_string(i) + "]", set);
    } else {
      parse_resource(*list, d, base, set);
    }
  }

  std::sort(set.resources.begin(), set.resources.end(), [](const Resource &a, const Resource &b) {
    return std::tie(a.type_name, a.key) < std::tie(b.type_name, b.key);
  });
  for (std::size_t i = 1; i < set.resources.size(); ++i)
    if (set.resources[i].type_name == set.resources[i - 1].type_name &&
        set.resources[i].key == set.resources[i - 1].key)
      throw ParseError("duplicate resource " + set.resources[i].type_name + " '" + set.resources[i].key + "'");

  std::set<std::pair<std::string_view, std::string_view>> known;
  for (const auto &r : set.resources)
    known.emplace(r.type_name, r.key);
  for (const auto &r : set.resources)
    for (const auto &ref : r.refs)
      if (ref.coupling == Coupling::tight && !known.contains({ref.target_type, ref.target_key}))
        throw BuildError("unresolved tight reference: " + r.type_name + " '" + r.key + "' -> " + ref.target_type +
                         " '" + ref.target_key + "' (" + ref.relationship + ")");
  return set;
}

} // namespace netcx
