#include <algorithm>
#include <functional>
#include <map>
#include <regex>

#include <json.hpp>

#include "netcx/error.hpp"
#include "netcx/ingest.hpp"

namespace netcx {

namespace {

using nlohmann::json;

struct PendingRef {
  std::pair<std::string, std::string> owner;
  std::string target_type;
  std::string tenant;
  std::string name; // unqualified name, or node id for ports
  std::string relationship;
};

struct AciCollector {
  ResourceSet set;
  std::map<std::pair<std::string, std::string>, Resource> resources;
  std::vector<PendingRef> pending;
  std::map<std::string, std::string> leaf_by_node_id;

  Resource &add(const std::string &type_name, const std::string &key, const std::string &path) {
    auto [it, inserted] = resources.try_emplace({type_name, key});
    if (!inserted)
      throw ParseError(path + ": duplicate " + type_name + " '" + key + "'");
    it->second.dialect = "aci";
    it->second.type_name = type_name;
    it->second.key = key;
    return it->second;
  }

  static void tight(Resource &r, std::string type_name, std::string key, std::string relationship) {
    ResourceRef ref{std::move(type_name), std::move(key), Coupling::tight, std::move(relationship)};
    if (std::find(r.refs.begin(), r.refs.end(), ref) == r.refs.end())
      r.refs.push_back(std::move(ref));
  }

  void defer(const Resource &owner, std::string type_name, const std::string &tenant, std::string name,
             std::string relationship, const std::string &path) {
    if (name.empty())
      throw ParseError(path + ": empty relation target");
    pending.push_back({{owner.type_name, owner.key}, std::move(type_name), tenant, std::move(name), std::move(relationship)});
  }

  static std::string attr(const json &body, const char *name, const std::string &path, bool required = true) {
    if (body.contains("attributes") && body["attributes"].is_object()) {
      const auto &attrs = body["attributes"];
      if (auto it = attrs.find(name); it != attrs.end() && it->is_string())
        return it->get<std::string>();
    }
    if (required)
      throw ParseError(path + ": missing attribute '" + name + "'");
    return {};
  }

  /// Visits the (class, body) pairs of an object's "children" array.
  template <class F>
  static void each_child(const json &body, const std::string &path, F &&f) {
    if (!body.contains("children"))
      return;
    const auto &children = body["children"];
    if (!children.is_array())
      throw ParseError(path + ": 'children' is not an array");
    for (std::size_t i = 0; i < children.size(); ++i) {
      const auto &child = children[i];
      if (!child.is_object() || child.size() != 1 || !child.begin().value().is_object())
        throw ParseError(path + "/children[" + std::to_string(i) + "]: expected one class object");
      f(child.begin().key(), child.begin().value(), path + "/" + child.begin().key());
    }
  }

  void unknown(const std::string &cls, const std::string &path) {
    set.warnings.push_back(path + ": skipped class '" + cls + "'");
  }

  void contract_refs(Resource &owner, const std::string &tenant, const std::string &cls, const json &body,
                     const std::string &path) {
    if (cls == "fvRsProv" || cls == "vzRsAnyToProv")
      defer(owner, "contract", tenant, attr(body, "tnVzBrCPName", path), "provides", path);
    else if (cls == "fvRsCons" || cls == "vzRsAnyToCons")
      defer(owner, "contract", tenant, attr(body, "tnVzBrCPName", path), "consumes", path);
    else
      unknown(cls, path);
  }

  void epg(const std::string &tenant, const std::string &ap, const json &body, const std::string &path) {
    auto name = attr(body, "name", path);
    auto &r = add("epg", tenant + "/" + ap + "/" + name, path);
    r.attributes["ap"] = ap;
    each_child(body, path, [&](const std::string &cls, const json &child, const std::string &p) {
      if (cls == "fvRsBd") {
        defer(r, "bridgeDomain", tenant, attr(child, "tnFvBDName", p), "bridgeDomain", p);
      } else if (cls == "fvRsPathAtt") {
        static const std::regex path_dn(R"(topology/pod-\d+/paths-(\d+)/pathep-\[([^\]]+)\])");
        auto dn = attr(child, "tDn", p);
        std::smatch m;
        if (!std::regex_match(dn, m, path_dn))
          throw ParseError(p + ": unsupported path '" + dn + "'");
        defer(r, "port", m[1].str(), m[2].str(), "pathAttachment", p);
        if (auto encap = attr(child, "encap", p, false); !encap.empty())
          r.attributes["encap." + m[1].str() + "/" + m[2].str()] = encap;
      } else {
        contract_refs(r, tenant, cls, child, p);
      }
    });
  }

  void tenant_child(const std::string &tenant, const std::string &cls, const json &body, const std::string &path) {
    auto parented = [&](const char *type_name) -> Resource & {
      auto &r = add(type_name, tenant + "/" + attr(body, "name", path), path);
      tight(r, "tenant", tenant, "parent");
      return r;
    };
    if (cls == "fvCtx") {
      auto &vrf = parented("vrf");
      each_child(body, path, [&](const std::string &c, const json &child, const std::string &p) {
        if (c != "vzAny")
          return unknown(c, p);
        each_child(child, p, [&](const std::string &cc, const json &rel, const std::string &pp) {
          contract_refs(vrf, tenant, cc, rel, pp);
        });
      });
    } else if (cls == "fvBD") {
      auto &bd = parented("bridgeDomain");
      each_child(body, path, [&](const std::string &c, const json &child, const std::string &p) {
        if (c == "fvRsCtx") {
          defer(bd, "vrf", tenant, attr(child, "tnFvCtxName", p), "vrf", p);
        } else if (c == "fvRsBDToOut") {
          defer(bd, "l3out", tenant, attr(child, "tnL3extOutName", p), "l3out", p);
        } else if (c == "fvSubnet") {
          auto gateway = attr(child, "ip", p);
          auto slash = gateway.find('/');
          auto host = parse_ipv4_address(std::string_view(gateway).substr(0, slash));
          int length = slash == std::string::npos ? -1 : std::atoi(gateway.c_str() + slash + 1);
          if (!host || length < 0 || length > 32)
            throw ParseError(p + ": invalid subnet '" + gateway + "'");
          auto network = Ipv4Prefix::network_of(*host, static_cast<std::uint8_t>(length)).to_string();
          bd.attributes["gateway." + network] = gateway;
          if (std::find(bd.cidrs.begin(), bd.cidrs.end(), network) == bd.cidrs.end())
            bd.cidrs.push_back(network);
        } else {
          unknown(c, p);
        }
      });
    } else if (cls == "l3extOut") {
      auto &out = parented("l3out");
      std::function<void(const std::string &, const json &, const std::string &)> visit =
          [&](const std::string &c, const json &child, const std::string &p) {
            if (c == "l3extRsEctx")
              defer(out, "vrf", tenant, attr(child, "tnFvCtxName", p), "vrf", p);
            else if (c == "l3extInstP")
              each_child(child, p, visit);
            else
              contract_refs(out, tenant, c, child, p);
          };
      each_child(body, path, visit);
    } else if (cls == "fvAp") {
      auto ap = attr(body, "name", path);
      each_child(body, path, [&](const std::string &c, const json &child, const std::string &p) {
        if (c == "fvAEPg")
          epg(tenant, ap, child, p);
        else
          unknown(c, p);
      });
    } else if (cls == "vzBrCP") {
      auto &contract = parented("contract");
      if (auto scope = attr(body, "scope", path, false); !scope.empty())
        contract.attributes["scope"] = scope;
      each_child(body, path, [&](const std::string &c, const json &subject, const std::string &p) {
        if (c != "vzSubj")
          return unknown(c, p);
        each_child(subject, p, [&](const std::string &cc, const json &rel, const std::string &pp) {
          if (cc == "vzRsSubjFiltAtt")
            defer(contract, "filter", tenant, attr(rel, "tnVzFilterName", pp), "filter", pp);
          else
            unknown(cc, pp);
        });
      });
    } else if (cls == "vzFilter") {
      auto &filter = parented("filter");
      each_child(body, path, [&](const std::string &c, const json &entry, const std::string &p) {
        if (c != "vzEntry")
          return unknown(c, p);
        std::string spec = attr(entry, "etherT", p, false);
        for (const char *field : {"prot", "dFromPort", "dToPort"})
          if (auto v = attr(entry, field, p, false); !v.empty())
            spec += (spec.empty() ? "" : " ") + v;
        filter.attributes["entry." + attr(entry, "name", p)] = spec;
      });
    } else {
      unknown(cls, path);
    }
  }

  void tenant(const json &body, const std::string &path) {
    auto name = attr(body, "name", path);
    add("tenant", name, path);
    each_child(body, path, [&](const std::string &cls, const json &child, const std::string &p) {
      tenant_child(name, cls, child, p);
    });
  }

  void fabric(const json &body, const std::string &path) {
    each_child(body, path, [&](const std::string &cls, const json &node, const std::string &p) {
      if (cls != "fabricNode")
        return unknown(cls, p);
      auto name = attr(node, "name", p);
      auto id = attr(node, "id", p);
      if (!leaf_by_node_id.emplace(id, name).second)
        throw ParseError(p + ": duplicate node id '" + id + "'");
      add("leaf", name, p).attributes["nodeId"] = id;
      each_child(node, p, [&](const std::string &c, const json &itf, const std::string &pp) {
        if (c != "l1PhysIf")
          return unknown(c, pp);
        auto &port = add("port", name + "/" + attr(itf, "id", pp), pp);
        tight(port, "leaf", name, "memberOf");
      });
    });
  }

  void root(const std::string &cls, const json &body, const std::string &path) {
    if (cls == "polUni")
      each_child(body, path, [&](const std::string &c, const json &child, const std::string &p) { root(c, child, p); });
    else if (cls == "fvTenant")
      tenant(body, path);
    else if (cls == "fabricInst")
      fabric(body, path);
    else
      unknown(cls, path);
  }

  ResourceSet finish() {
    std::vector<std::string> unresolved;
    for (const auto &ref : pending) {
      std::string key;
      if (ref.target_type == "port") {
        auto leaf = leaf_by_node_id.find(ref.tenant);
        if (leaf != leaf_by_node_id.end())
          key = leaf->second + "/" + ref.name;
      } else {
        for (const auto &scope : {ref.tenant, std::string("common")})
          if (resources.contains({ref.target_type, scope + "/" + ref.name})) {
            key = scope + "/" + ref.name;
            break;
          }
      }
      if (key.empty()) {
        unresolved.push_back(ref.owner.first + ":" + ref.owner.second + " -> " + ref.target_type + " '" + ref.name + "'");
        continue;
      }
      tight(resources.at(ref.owner), ref.target_type, key, ref.relationship);
    }
    if (!unresolved.empty()) {
      std::string message = "unresolved relations:";
      for (const auto &u : unresolved)
        message += "\n  " + u;
      throw BuildError(message);
    }
    set.dialect = "aci";
    for (auto &[_, r] : resources)
      set.resources.push_back(std::move(r));
    return std::move(set);
  }
};

} // namespace

ResourceSet parse_aci(std::string_view policy_document) {
  json doc;
  try {
    doc = json::parse(policy_document);
  } catch (const json::parse_error &e) {
    throw ParseError(std::string("policy document: ") + e.what());
  }
  AciCollector collector;
  auto visit_object = [&](const json &obj, const std::string &path) {
    if (!obj.is_object() || obj.size() != 1 || !obj.begin().value().is_object())
      throw ParseError(path + ": expected one class object");
    collector.root(obj.begin().key(), obj.begin().value(), path + "/" + obj.begin().key());
  };
  if (doc.is_object() && doc.contains("imdata")) {
    if (!doc["imdata"].is_array())
      throw ParseError("imdata is not an array");
    for (std::size_t i = 0; i < doc["imdata"].size(); ++i)
      visit_object(doc["imdata"][i], "imdata[" + std::to_string(i) + "]");
  } else {
    visit_object(doc, "");
  }
  return collector.finish();
}

std::string_view to_string(Dialect dialect) noexcept {
  switch (dialect) {
  case Dialect::azure: return "azure";
  case Dialect::k8s: return "k8s";
  case Dialect::cli: return "cli";
  case Dialect::aci: return "aci";
  }
  return "?";
}

std::optional<Dialect> parse_dialect_name(std::string_view text) noexcept {
  for (auto d : {Dialect::azure, Dialect::k8s, Dialect::cli, Dialect::aci})
    if (to_string(d) == text)
      return d;
  return std::nullopt;
}

ResourceSet parse_sources(Dialect dialect, std::span<const SourceText> sources) {
  if (dialect == Dialect::cli)
    return parse_cli(sources);
  if (dialect == Dialect::aci) {
    if (sources.size() != 1)
      throw ParseError("the aci dialect takes exactly one policy document");
    return parse_aci(sources.front().text);
  }
  std::vector<std::string> texts;
  for (const auto &s : sources)
    texts.push_back(s.text);
  return dialect == Dialect::azure ? parse_azure(texts) : parse_k8s(texts);
}

} // namespace netcx
