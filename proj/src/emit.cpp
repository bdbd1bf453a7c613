#include "netcx/emit.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>
#include <yaml-cpp/yaml.h>

#include "netcx/azure_types.hpp"
#include "netcx/error.hpp"

namespace netcx {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string attribute(const Resource &r, const std::string &name, std::string fallback = {}) {
  auto it = r.attributes.find(name);
  return it == r.attributes.end() ? fallback : it->second;
}

[[noreturn]] void unsupported(const Resource &r, const ResourceRef &ref, std::string_view dialect) {
  throw Error(std::string(dialect) + ": cannot express " + r.type_name + " '" + r.key + "' -> " + ref.target_type +
              " '" + ref.target_key + "' (" + ref.relationship + ")");
}

std::pair<std::string, std::string> split_label(const std::string &label) {
  auto eq = label.find('=');
  if (eq == std::string::npos)
    return {label, ""};
  return {label.substr(0, eq), label.substr(eq + 1)};
}

std::string after_first_slash(const std::string &key) {
  auto slash = key.find('/');
  return slash == std::string::npos ? key : key.substr(slash + 1);
}

std::string after_last(const std::string &key, char sep) {
  auto pos = key.rfind(sep);
  return pos == std::string::npos ? key : key.substr(pos + 1);
}

// ---------------------------------------------------------------- azure

std::string arm_type_of(const ResourceSet &set, const std::string &type_name, const std::string &key) {
  if (const auto *target = set.find(type_name, key))
    if (auto arm = attribute(*target, "armType"); !arm.empty())
      return arm;
  auto arm = azure::arm_type_for(type_name);
  if (!arm)
    throw Error("azure: no resource type for '" + type_name + "'");
  return *arm;
}

} // namespace

std::string emit_azure(const ResourceSet &set) {
  ordered_json resources = ordered_json::array();
  for (const auto &r : set.resources) {
    auto arm = arm_type_of(set, r.type_name, r.key);
    ordered_json props = ordered_json::object();
    for (const auto &[name, value] : r.attributes)
      if (name != "armType")
        props[name] = value;
    std::vector<std::string> order;
    std::map<std::string, std::vector<ordered_json>> grouped;
    bool child = std::count(arm.begin(), arm.end(), '/') >= 2;
    for (const auto &ref : r.refs) {
      if (child && ref.coupling == Coupling::tight && ref.relationship == "parent")
        continue; // implied by the name
      ordered_json value;
      if (ref.coupling == Coupling::tight)
        value = ordered_json{{"id", azure::resource_id(arm_type_of(set, ref.target_type, ref.target_key), ref.target_key)}};
      else if (ref.target_type == kAddressType)
        value = ref.target_key;
      else
        unsupported(r, ref, "azure");
      if (!grouped.contains(ref.relationship))
        order.push_back(ref.relationship);
      grouped[ref.relationship].push_back(std::move(value));
    }
    for (const auto &rel : order) {
      if (props.contains(rel))
        throw Error("azure: relationship '" + rel + "' of " + r.type_name + " '" + r.key + "' clashes with an attribute");
      auto &values = grouped[rel];
      props[rel] = values.size() == 1 ? values.front() : ordered_json(values);
    }
    ordered_json item;
    item["type"] = arm;
    item["name"] = r.key;
    item["id"] = azure::resource_id(arm, r.key);
    item["properties"] = std::move(props);
    resources.push_back(std::move(item));
  }
  return ordered_json{{"value", std::move(resources)}}.dump(2) + "\n";
}

// ---------------------------------------------------------------- k8s

namespace {

constexpr std::string_view kNamespaceNameLabel = "kubernetes.io/metadata.name";

void emit_label_map(YAML::Emitter &out, const Resource &r, const std::vector<std::string> &labels) {
  std::set<std::string> keys;
  out << YAML::BeginMap;
  for (const auto &label : labels) {
    auto [k, v] = split_label(label);
    if (!keys.insert(k).second)
      throw Error("k8s: " + r.type_name + " '" + r.key + "' carries two values for label key '" + k + "'");
    out << YAML::Key << k << YAML::Value << v;
  }
  out << YAML::EndMap;
}

void emit_selector(YAML::Emitter &out, const std::vector<std::string> &labels) {
  if (labels.empty()) {
    out << YAML::Flow << YAML::BeginMap << YAML::EndMap;
    return;
  }
  std::vector<std::string> key_order;
  std::map<std::string, std::vector<std::string>> by_key;
  for (const auto &label : labels) {
    auto [k, v] = split_label(label);
    if (!by_key.contains(k))
      key_order.push_back(k);
    by_key[k].push_back(v);
  }
  out << YAML::BeginMap;
  bool any_single = std::any_of(key_order.begin(), key_order.end(), [&](auto &k) { return by_key[k].size() == 1; });
  bool any_multi = std::any_of(key_order.begin(), key_order.end(), [&](auto &k) { return by_key[k].size() > 1; });
  if (any_single) {
    out << YAML::Key << "matchLabels" << YAML::Value << YAML::BeginMap;
    for (const auto &k : key_order)
      if (by_key[k].size() == 1)
        out << YAML::Key << k << YAML::Value << by_key[k].front();
    out << YAML::EndMap;
  }
  if (any_multi) {
    out << YAML::Key << "matchExpressions" << YAML::Value << YAML::BeginSeq;
    for (const auto &k : key_order)
      if (by_key[k].size() > 1) {
        out << YAML::BeginMap << YAML::Key << "key" << YAML::Value << k << YAML::Key << "operator" << YAML::Value
            << "In" << YAML::Key << "values" << YAML::Value << YAML::Flow << by_key[k] << YAML::EndMap;
      }
    out << YAML::EndSeq;
  }
  out << YAML::EndMap;
}

std::vector<std::string> refs_with(const Resource &r, std::string_view relationship) {
  std::vector<std::string> keys;
  for (const auto &ref : r.refs)
    if (ref.relationship == relationship)
      keys.push_back(ref.target_key);
  return keys;
}

void begin_object(YAML::Emitter &out, const char *api, const char *kind, const std::string &name,
                  const std::string &ns) {
  out << YAML::BeginDoc << YAML::BeginMap;
  out << YAML::Key << "apiVersion" << YAML::Value << api;
  out << YAML::Key << "kind" << YAML::Value << kind;
  out << YAML::Key << "metadata" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "name" << YAML::Value << name;
  if (!ns.empty())
    out << YAML::Key << "namespace" << YAML::Value << ns;
}

void emit_peers(YAML::Emitter &out, const Resource &r, const std::string &direction) {
  const std::set<std::string> known{"allows" + direction, "allows" + direction + "Namespace",
                                    "allows" + direction + "NamespaceLabel", "ipBlock" + direction,
                                    "ipBlock" + direction + "Except"};
  auto excepts = refs_with(r, "ipBlock" + direction + "Except");
  bool excepts_placed = false;
  out << YAML::BeginSeq;
  for (const auto &ref : r.refs) {
    if (!known.contains(ref.relationship) || ref.relationship.ends_with("Except"))
      continue;
    out << YAML::BeginMap;
    if (ref.relationship == "allows" + direction) {
      out << YAML::Key << "podSelector" << YAML::Value;
      emit_selector(out, {ref.target_key});
    } else if (ref.relationship == "allows" + direction + "Namespace") {
      out << YAML::Key << "namespaceSelector" << YAML::Value;
      emit_selector(out, {std::string(kNamespaceNameLabel) + "=" + ref.target_key});
    } else if (ref.relationship == "allows" + direction + "NamespaceLabel") {
      out << YAML::Key << "namespaceSelector" << YAML::Value;
      emit_selector(out, {ref.target_key});
    } else {
      out << YAML::Key << "ipBlock" << YAML::Value << YAML::BeginMap;
      out << YAML::Key << "cidr" << YAML::Value << ref.target_key;
      if (!excepts_placed && !excepts.empty())
        out << YAML::Key << "except" << YAML::Value << excepts;
      excepts_placed = true;
      out << YAML::EndMap;
    }
    out << YAML::EndMap;
  }
  out << YAML::EndSeq;
  if (!excepts.empty() && !excepts_placed)
    throw Error("k8s: networkPolicy '" + r.key + "' has ipBlock exceptions without an ipBlock");
}

bool has_direction(const Resource &r, const std::string &direction) {
  return std::any_of(r.refs.begin(), r.refs.end(), [&](const ResourceRef &ref) {
    return ref.relationship.starts_with("allows" + direction) || ref.relationship.starts_with("ipBlock" + direction);
  });
}

} // namespace

std::string emit_k8s(const ResourceSet &set) {
  static const std::map<std::string, std::set<std::string>> allowed{
      {"namespace", {"labeledWith"}},
      {"pod", {"namespace", "labeledWith"}},
      {"service", {"namespace", "selects"}},
      {"networkPolicy",
       {"namespace", "appliesTo", "allowsFrom", "allowsFromNamespace", "allowsFromNamespaceLabel", "ipBlockFrom",
        "ipBlockFromExcept", "allowsTo", "allowsToNamespace", "allowsToNamespaceLabel", "ipBlockTo",
        "ipBlockToExcept"}},
      {"label", {}},
  };
  YAML::Emitter out;
  for (const auto &r : set.resources) {
    auto kind_rules = allowed.find(r.type_name);
    if (kind_rules == allowed.end())
      throw Error("k8s: cannot express resource type '" + r.type_name + "'");
    for (const auto &ref : r.refs)
      if (!kind_rules->second.contains(ref.relationship))
        unsupported(r, ref, "k8s");
    if (r.type_name == "label")
      continue; // implied by the objects carrying or selecting it

    auto slash = r.key.find('/');
    auto ns = r.type_name == "namespace" ? std::string{} : r.key.substr(0, slash);
    auto name = r.type_name == "namespace" ? r.key : r.key.substr(slash + 1);
    if (r.type_name != "namespace" && slash == std::string::npos)
      throw Error("k8s: " + r.type_name + " key '" + r.key + "' lacks a namespace");
    auto labels = refs_with(r, "labeledWith");

    if (r.type_name == "namespace") {
      begin_object(out, "v1", "Namespace", name, ns);
    } else if (r.type_name == "pod") {
      begin_object(out, "v1", "Pod", name, ns);
    } else if (r.type_name == "service") {
      begin_object(out, "v1", "Service", name, ns);
    } else {
      begin_object(out, "networking.k8s.io/v1", "NetworkPolicy", name, ns);
    }
    if (!labels.empty()) {
      out << YAML::Key << "labels" << YAML::Value;
      emit_label_map(out, r, labels);
    }
    out << YAML::EndMap; // metadata

    if (r.type_name == "pod") {
      out << YAML::Key << "spec" << YAML::Value << YAML::BeginMap << YAML::Key << "containers" << YAML::Value
          << YAML::BeginSeq << YAML::BeginMap << YAML::Key << "name" << YAML::Value << "app" << YAML::Key << "image"
          << YAML::Value << "registry.local/app:1" << YAML::EndMap << YAML::EndSeq << YAML::EndMap;
    } else if (r.type_name == "service") {
      out << YAML::Key << "spec" << YAML::Value << YAML::BeginMap;
      out << YAML::Key << "selector" << YAML::Value;
      emit_label_map(out, r, refs_with(r, "selects"));
      out << YAML::Key << "ports" << YAML::Value << YAML::BeginSeq << YAML::BeginMap << YAML::Key << "port"
          << YAML::Value << 8080 << YAML::EndMap << YAML::EndSeq;
      out << YAML::EndMap;
    } else if (r.type_name == "networkPolicy") {
      out << YAML::Key << "spec" << YAML::Value << YAML::BeginMap;
      out << YAML::Key << "podSelector" << YAML::Value;
      emit_selector(out, refs_with(r, "appliesTo"));
      std::vector<std::string> types;
      if (has_direction(r, "From"))
        types.push_back("Ingress");
      if (has_direction(r, "To"))
        types.push_back("Egress");
      out << YAML::Key << "policyTypes" << YAML::Value << YAML::Flow << types;
      if (has_direction(r, "From")) {
        out << YAML::Key << "ingress" << YAML::Value << YAML::BeginSeq << YAML::BeginMap << YAML::Key << "from"
            << YAML::Value;
        emit_peers(out, r, "From");
        out << YAML::EndMap << YAML::EndSeq;
      }
      if (has_direction(r, "To")) {
        out << YAML::Key << "egress" << YAML::Value << YAML::BeginSeq << YAML::BeginMap << YAML::Key << "to"
            << YAML::Value;
        emit_peers(out, r, "To");
        out << YAML::EndMap << YAML::EndSeq;
      }
      out << YAML::EndMap;
    }
    out << YAML::EndMap;
  }
  if (!out.good())
    throw Error(std::string("k8s: ") + out.GetLastError());
  return std::string(out.c_str()) + "\n";
}

// ---------------------------------------------------------------- cli

namespace {

std::string dotted(std::uint32_t value) { return format_ipv4_address(value); }

std::string acl_operand(const Resource &acl, const std::string &relationship) {
  for (const auto &ref : acl.refs)
    if (ref.relationship == relationship) {
      auto p = Ipv4Prefix::parse(ref.target_key);
      if (p.length == 32)
        return "host " + dotted(p.address);
      return dotted(p.address) + " " + dotted(~p.mask());
    }
  return "any";
}

std::string interface_lines(const Resource &itf, bool svi) {
  std::string text;
  if (auto mode = attribute(itf, "switchport.mode"); !mode.empty())
    text += " switchport mode " + mode + "\n";
  for (const auto &ref : itf.refs) {
    if (ref.relationship == "memberOf" || ref.relationship == "vlanInterface")
      continue;
    if (ref.relationship == "accessVlan" && !svi)
      text += " switchport access vlan " + ref.target_key + "\n";
    else if (ref.relationship == "ipAddress" && svi)
      ; // written from the address attribute below
    else if (ref.relationship == "accessGroupIn" || ref.relationship == "accessGroupOut")
      text += " ip access-group " + after_last(ref.target_key, ':') +
              (ref.relationship == "accessGroupIn" ? " in\n" : " out\n");
    else
      unsupported(itf, ref, "cli");
  }
  if (svi) {
    auto address = attribute(itf, "address");
    if (address.empty())
      for (const auto &ref : itf.refs)
        if (ref.relationship == "ipAddress")
          address = ref.target_key;
    if (!address.empty()) {
      auto slash = address.find('/');
      auto length = static_cast<std::uint8_t>(std::stoi(address.substr(slash + 1)));
      text += " ip address " + address.substr(0, slash) + " " + dotted(Ipv4Prefix{0, length}.mask()) + "\n";
    }
  }
  if (auto shutdown = attribute(itf, "shutdown"); !shutdown.empty())
    text += shutdown == "true" ? " shutdown\n" : " no shutdown\n";
  return text;
}

std::string acl_lines(const Resource &acl) {
  auto kind = attribute(acl, "kind", "extended");
  auto name = after_last(acl.key, ':');
  std::string text = "ip access-list " + kind + " " + name + "\n";
  for (int n = 1;; ++n) {
    auto ace = "ace" + std::to_string(n);
    auto action = attribute(acl, ace + ".action");
    if (action.empty())
      break;
    std::string line = " " + action;
    if (kind != "standard")
      line += " " + attribute(acl, ace + ".protocol", "ip");
    line += " " + acl_operand(acl, ace + ":src");
    if (kind != "standard") {
      if (auto sport = attribute(acl, ace + ".srcPort"); !sport.empty())
        line += " " + sport;
      line += " " + acl_operand(acl, ace + ":dst");
      if (auto dport = attribute(acl, ace + ".dstPort"); !dport.empty())
        line += " " + dport;
      if (auto options = attribute(acl, ace + ".options"); !options.empty())
        line += " " + options;
    }
    text += line + "\n";
  }
  return text;
}

} // namespace

std::vector<SourceText> emit_cli(const ResourceSet &set) {
  std::vector<SourceText> configs;
  for (const auto &sw : set.resources) {
    if (sw.type_name != "switch")
      continue;
    std::string text = "hostname " + attribute(sw, "hostname", sw.key) + "\n!\n";
    std::map<int, std::pair<std::string, std::string>> routes;
    for (const auto &ref : sw.refs) {
      if (ref.relationship == "declaresVlan") {
        text += "vlan " + ref.target_key + "\n";
        if (const auto *vlan = set.find("vlan", ref.target_key); vlan && vlan->attributes.contains("name"))
          text += " name " + vlan->attributes.at("name") + "\n";
        text += "!\n";
      } else if (ref.relationship.starts_with("route") && ref.target_type == kAddressType) {
        auto colon = ref.relationship.find(':');
        auto n = std::stoi(ref.relationship.substr(5, colon - 5));
        auto role = ref.relationship.substr(colon + 1);
        (role == "prefix" ? routes[n].first : routes[n].second) = ref.target_key;
      } else {
        unsupported(sw, ref, "cli");
      }
    }
    auto prefix = sw.key + ":";
    for (const auto *type_name : {"port", "svi"})
      for (const auto &itf : set.resources)
        if (itf.type_name == type_name && itf.key.starts_with(prefix)) {
          text += "interface " + itf.key.substr(prefix.size()) + "\n";
          text += interface_lines(itf, itf.type_name == "svi");
          text += "!\n";
        }
    for (const auto &acl : set.resources)
      if (acl.type_name == "acl" && acl.key.starts_with(prefix) && attribute(acl, "undefined") != "true") {
        text += acl_lines(acl);
        text += "!\n";
      }
    for (const auto &[n, route] : routes) {
      if (route.first.empty() || route.second.empty())
        throw Error("cli: route" + std::to_string(n) + " of switch '" + sw.key + "' is incomplete");
      auto p = Ipv4Prefix::parse(route.first);
      text += "ip route " + dotted(p.address) + " " + dotted(p.mask()) + " " +
              dotted(Ipv4Prefix::parse(route.second).address) + "\n";
    }
    text += "end\n";
    configs.push_back({sw.key, std::move(text)});
  }
  return configs;
}

// ---------------------------------------------------------------- aci

namespace {

ordered_json mo(const char *cls, ordered_json attributes, ordered_json children = ordered_json::array()) {
  ordered_json body;
  body["attributes"] = std::move(attributes);
  if (!children.empty())
    body["children"] = std::move(children);
  return ordered_json{{cls, std::move(body)}};
}

std::string tenant_of(const Resource &r) {
  return r.type_name == "tenant" ? r.key : r.key.substr(0, r.key.find('/'));
}

} // namespace

std::string emit_aci(const ResourceSet &set) {
  std::map<std::string, std::string> node_ids;
  int next_id = 101;
  for (const auto &r : set.resources)
    if (r.type_name == "leaf")
      node_ids[r.key] = attribute(r, "nodeId", std::to_string(next_id++));

  auto contract_children = [](const Resource &r, ordered_json &children) {
    for (const auto &ref : r.refs) {
      if (ref.relationship == "provides")
        children.push_back(mo(r.type_name == "vrf" ? "vzRsAnyToProv" : "fvRsProv",
                              {{"tnVzBrCPName", after_first_slash(ref.target_key)}}));
      else if (ref.relationship == "consumes")
        children.push_back(mo(r.type_name == "vrf" ? "vzRsAnyToCons" : "fvRsCons",
                              {{"tnVzBrCPName", after_first_slash(ref.target_key)}}));
    }
  };
  auto check_refs = [](const Resource &r, std::set<std::string> relationships) {
    for (const auto &ref : r.refs)
      if (!relationships.contains(ref.relationship) || ref.coupling != Coupling::tight)
        unsupported(r, ref, "aci");
  };

  ordered_json uni_children = ordered_json::array();

  ordered_json nodes = ordered_json::array();
  for (const auto &leaf : set.resources) {
    if (leaf.type_name != "leaf")
      continue;
    check_refs(leaf, {});
    ordered_json ports = ordered_json::array();
    for (const auto &port : set.resources)
      if (port.type_name == "port" && port.key.starts_with(leaf.key + "/")) {
        check_refs(port, {"memberOf"});
        ports.push_back(mo("l1PhysIf", {{"id", port.key.substr(leaf.key.size() + 1)}}));
      }
    nodes.push_back(mo("fabricNode", {{"name", leaf.key}, {"id", node_ids[leaf.key]}, {"role", "leaf"}}, ports));
  }
  if (!nodes.empty())
    uni_children.push_back(mo("fabricInst", ordered_json::object(), nodes));

  for (const auto &tenant : set.resources) {
    if (tenant.type_name != "tenant")
      continue;
    ordered_json children = ordered_json::array();
    std::map<std::string, ordered_json> apps;
    for (const auto &r : set.resources) {
      if (r.type_name == "tenant" || r.type_name == "leaf" || r.type_name == "port" || tenant_of(r) != tenant.key)
        continue;
      auto name = after_first_slash(r.key);
      ordered_json sub = ordered_json::array();
      if (r.type_name == "vrf") {
        check_refs(r, {"parent", "provides", "consumes"});
        ordered_json any = ordered_json::array();
        contract_children(r, any);
        if (!any.empty())
          sub.push_back(mo("vzAny", ordered_json::object(), any));
        children.push_back(mo("fvCtx", {{"name", name}}, sub));
      } else if (r.type_name == "bridgeDomain") {
        check_refs(r, {"parent", "vrf", "l3out"});
        for (const auto &ref : r.refs) {
          if (ref.relationship == "vrf")
            sub.push_back(mo("fvRsCtx", {{"tnFvCtxName", after_first_slash(ref.target_key)}}));
          else if (ref.relationship == "l3out")
            sub.push_back(mo("fvRsBDToOut", {{"tnL3extOutName", after_first_slash(ref.target_key)}}));
        }
        for (const auto &cidr : r.cidrs)
          sub.push_back(mo("fvSubnet", {{"ip", attribute(r, "gateway." + cidr, cidr)}}));
        children.push_back(mo("fvBD", {{"name", name}}, sub));
      } else if (r.type_name == "l3out") {
        check_refs(r, {"parent", "vrf", "provides", "consumes"});
        for (const auto &ref : r.refs)
          if (ref.relationship == "vrf")
            sub.push_back(mo("l3extRsEctx", {{"tnFvCtxName", after_first_slash(ref.target_key)}}));
        ordered_json inst = ordered_json::array();
        contract_children(r, inst);
        if (!inst.empty())
          sub.push_back(mo("l3extInstP", {{"name", "external"}}, inst));
        children.push_back(mo("l3extOut", {{"name", name}}, sub));
      } else if (r.type_name == "epg") {
        check_refs(r, {"bridgeDomain", "pathAttachment", "provides", "consumes"});
        auto ap_slash = name.find('/');
        if (ap_slash == std::string::npos)
          throw Error("aci: epg key '" + r.key + "' lacks its application profile");
        for (const auto &ref : r.refs) {
          if (ref.relationship == "bridgeDomain") {
            sub.push_back(mo("fvRsBd", {{"tnFvBDName", after_first_slash(ref.target_key)}}));
          } else if (ref.relationship == "pathAttachment") {
            auto slash = ref.target_key.find('/');
            auto leaf = ref.target_key.substr(0, slash);
            auto itf = ref.target_key.substr(slash + 1);
            if (!node_ids.contains(leaf))
              unsupported(r, ref, "aci");
            ordered_json attrs{{"tDn", "topology/pod-1/paths-" + node_ids[leaf] + "/pathep-[" + itf + "]"}};
            if (auto encap = attribute(r, "encap." + node_ids[leaf] + "/" + itf); !encap.empty())
              attrs["encap"] = encap;
            sub.push_back(mo("fvRsPathAtt", attrs));
          }
        }
        contract_children(r, sub);
        apps[name.substr(0, ap_slash)].push_back(mo("fvAEPg", {{"name", name.substr(ap_slash + 1)}}, sub));
      } else if (r.type_name == "contract") {
        check_refs(r, {"parent", "filter"});
        ordered_json filters = ordered_json::array();
        for (const auto &ref : r.refs)
          if (ref.relationship == "filter")
            filters.push_back(mo("vzRsSubjFiltAtt", {{"tnVzFilterName", after_first_slash(ref.target_key)}}));
        sub.push_back(mo("vzSubj", {{"name", "subject"}}, filters));
        ordered_json attrs{{"name", name}};
        if (auto scope = attribute(r, "scope"); !scope.empty())
          attrs["scope"] = scope;
        children.push_back(mo("vzBrCP", attrs, sub));
      } else if (r.type_name == "filter") {
        check_refs(r, {"parent"});
        for (const auto &[attr_name, spec] : r.attributes) {
          if (!attr_name.starts_with("entry."))
            continue;
          std::istringstream fields(spec);
          ordered_json attrs{{"name", attr_name.substr(6)}};
          for (const char *field : {"etherT", "prot", "dFromPort", "dToPort"}) {
            std::string v;
            if (fields >> v)
              attrs[field] = v;
          }
          sub.push_back(mo("vzEntry", attrs));
        }
        children.push_back(mo("vzFilter", {{"name", name}}, sub));
      } else {
        throw Error("aci: cannot express resource type '" + r.type_name + "'");
      }
    }
    for (auto &[ap, epgs] : apps)
      children.push_back(mo("fvAp", {{"name", ap}}, std::move(epgs)));
    uni_children.push_back(mo("fvTenant", {{"name", tenant.key}}, std::move(children)));
  }
  return mo("polUni", ordered_json::object(), std::move(uni_children)).dump(2) + "\n";
}

std::vector<SourceText> emit_native(Dialect dialect, const ResourceSet &set) {
  switch (dialect) {
  case Dialect::azure: return {{"resources", emit_azure(set)}};
  case Dialect::k8s: return {{"manifests", emit_k8s(set)}};
  case Dialect::cli: return emit_cli(set);
  case Dialect::aci: return {{"policy", emit_aci(set)}};
  }
  return {};
}

std::string_view native_extension(Dialect dialect) noexcept {
  switch (dialect) {
  case Dialect::azure:
  case Dialect::aci: return "json";
  case Dialect::k8s: return "yaml";
  case Dialect::cli: return "cfg";
  }
  return "txt";
}

} // namespace netcx
