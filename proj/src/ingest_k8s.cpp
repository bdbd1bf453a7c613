#include <algorithm>
#include <map>
#include <set>

#include <yaml-cpp/yaml.h>

#include "netcx/error.hpp"
#include "netcx/ingest.hpp"

namespace netcx {

namespace {

constexpr std::string_view kNamespaceNameLabel = "kubernetes.io/metadata.name";

struct K8sCollector {
  ResourceSet set;
  std::map<std::pair<std::string, std::string>, Resource> resources;
  std::set<std::string> carried_labels; // labels that some object carries
  std::set<std::string> selected_labels;
  std::set<std::string> declared_namespaces;
  std::set<std::string> used_namespaces;

  void add(Resource r, const std::string &where) {
    auto key = std::make_pair(r.type_name, r.key);
    if (resources.contains(key))
      throw ParseError(where + ": duplicate " + r.type_name + " '" + r.key + "'");
    resources.emplace(std::move(key), std::move(r));
  }

  void ensure_label(const std::string &label) {
    auto key = std::make_pair(std::string("label"), label);
    if (!resources.contains(key))
      resources.emplace(key, ResourceBuilder("k8s", "label", label).build());
  }

  void carry_labels(ResourceBuilder &builder, const YAML::Node &labels) {
    if (!labels || !labels.IsMap())
      return;
    for (const auto &kv : labels) {
      auto label = kv.first.as<std::string>() + "=" + kv.second.as<std::string>();
      ensure_label(label);
      carried_labels.insert(label);
      builder.loose("label", label, "labeledWith");
    }
  }

  void select(ResourceBuilder &builder, const std::string &label, const std::string &relationship) {
    ensure_label(label);
    selected_labels.insert(label);
    builder.loose("label", label, relationship);
  }

  /// matchLabels plus In-expressions of a label selector.
  void selector(ResourceBuilder &builder, const YAML::Node &node, const std::string &relationship,
                const std::string &where) {
    if (!node || node.IsNull())
      return;
    if (!node.IsMap())
      throw ParseError(where + ": selector must be a mapping");
    if (auto match = node["matchLabels"]; match && match.IsMap())
      for (const auto &kv : match)
        select(builder, kv.first.as<std::string>() + "=" + kv.second.as<std::string>(), relationship);
    if (auto exprs = node["matchExpressions"]; exprs && exprs.IsSequence()) {
      for (const auto &expr : exprs) {
        auto op = expr["operator"] ? expr["operator"].as<std::string>() : "";
        if (op != "In") {
          set.warnings.push_back(where + ": ignored selector operator '" + op + "'");
          continue;
        }
        auto key = expr["key"].as<std::string>();
        for (const auto &value : expr["values"])
          select(builder, key + "=" + value.as<std::string>(), relationship);
      }
    }
  }

  void peers(ResourceBuilder &builder, const YAML::Node &list, const std::string &direction,
             const std::string &where) {
    if (!list || !list.IsSequence())
      return;
    for (const auto &peer : list) {
      if (auto pod_sel = peer["podSelector"])
        selector(builder, pod_sel, "allows" + direction, where);
      if (auto ns_sel = peer["namespaceSelector"]; ns_sel && ns_sel.IsMap()) {
        YAML::Node rest = YAML::Clone(ns_sel);
        if (auto match = ns_sel["matchLabels"]; match && match.IsMap() && match[std::string(kNamespaceNameLabel)]) {
          auto ns = match[std::string(kNamespaceNameLabel)].as<std::string>();
          builder.loose("namespace", ns, "allows" + direction + "Namespace");
          rest["matchLabels"].remove(std::string(kNamespaceNameLabel));
        }
        selector(builder, rest, "allows" + direction + "NamespaceLabel", where);
      }
      if (auto block = peer["ipBlock"]) {
        if (!block["cidr"])
          throw ParseError(where + ": ipBlock without cidr");
        builder.address(block["cidr"].as<std::string>(), "ipBlock" + direction);
        if (auto except = block["except"]; except && except.IsSequence())
          for (const auto &c : except)
            builder.address(c.as<std::string>(), "ipBlock" + direction + "Except");
      }
    }
  }

  void pod(const std::string &ns, const std::string &name, const YAML::Node &labels, const std::string &where) {
    used_namespaces.insert(ns);
    ResourceBuilder builder("k8s", "pod", ns + "/" + name);
    builder.tight("namespace", ns, "namespace");
    carry_labels(builder, labels);
    add(std::move(builder).build(), where);
  }

  void document(const YAML::Node &doc, const std::string &where) {
    if (!doc || doc.IsNull())
      return;
    if (!doc.IsMap())
      throw ParseError(where + ": manifest must be a mapping");
    if (!doc["kind"])
      throw ParseError(where + ": manifest missing 'kind'");
    auto kind = doc["kind"].as<std::string>();
    if (kind == "List") {
      std::size_t i = 0;
      for (const auto &item : doc["items"])
        document(item, where + ".items[" + std::to_string(i++) + "]");
      return;
    }
    auto meta = doc["metadata"];
    if (!meta || !meta["name"])
      throw ParseError(where + ": " + kind + " missing metadata.name");
    auto name = meta["name"].as<std::string>();
    auto ns = meta["namespace"] ? meta["namespace"].as<std::string>() : std::string("default");
    auto spec = doc["spec"];
    auto here = where + " (" + kind + " " + name + ")";

    if (kind == "Namespace") {
      ResourceBuilder builder("k8s", "namespace", name);
      carry_labels(builder, meta["labels"]);
      declared_namespaces.insert(name);
      add(std::move(builder).build(), here);
    } else if (kind == "Pod") {
      pod(ns, name, meta["labels"], here);
    } else if (kind == "Deployment" || kind == "StatefulSet" || kind == "ReplicaSet" || kind == "DaemonSet") {
      int replicas = 1;
      if (kind != "DaemonSet" && spec && spec["replicas"])
        replicas = spec["replicas"].as<int>();
      auto labels = spec ? spec["template"]["metadata"]["labels"] : YAML::Node{};
      for (int i = 0; i < replicas; ++i)
        pod(ns, name + "-" + std::to_string(i), labels, here);
    } else if (kind == "Service") {
      used_namespaces.insert(ns);
      ResourceBuilder builder("k8s", "service", ns + "/" + name);
      builder.tight("namespace", ns, "namespace");
      if (spec && spec["selector"] && spec["selector"].IsMap())
        for (const auto &kv : spec["selector"])
          select(builder, kv.first.as<std::string>() + "=" + kv.second.as<std::string>(), "selects");
      add(std::move(builder).build(), here);
    } else if (kind == "NetworkPolicy") {
      used_namespaces.insert(ns);
      ResourceBuilder builder("k8s", "networkPolicy", ns + "/" + name);
      builder.tight("namespace", ns, "namespace");
      if (spec) {
        selector(builder, spec["podSelector"], "appliesTo", here);
        if (auto ingress = spec["ingress"]; ingress && ingress.IsSequence())
          for (const auto &rule : ingress)
            peers(builder, rule["from"], "From", here);
        if (auto egress = spec["egress"]; egress && egress.IsSequence())
          for (const auto &rule : egress)
            peers(builder, rule["to"], "To", here);
      }
      add(std::move(builder).build(), here);
    } else {
      set.warnings.push_back(here + ": ignored kind");
    }
  }

  ResourceSet finish() {
    for (const auto &ns : used_namespaces) {
      if (declared_namespaces.contains(ns))
        continue;
      set.warnings.push_back("namespace '" + ns + "' used but not declared; assumed to exist");
      resources.emplace(std::make_pair(std::string("namespace"), ns), ResourceBuilder("k8s", "namespace", ns).build());
    }
    for (const auto &label : selected_labels)
      if (!carried_labels.contains(label))
        set.warnings.push_back("selector label '" + label + "' is carried by no object");
    set.dialect = "k8s";
    for (auto &[key, r] : resources) {
      std::vector<ResourceRef> unique;
      for (auto &ref : r.refs)
        if (std::find(unique.begin(), unique.end(), ref) == unique.end())
          unique.push_back(std::move(ref));
      r.refs = std::move(unique);
      set.resources.push_back(std::move(r));
    }
    return std::move(set);
  }
};

} // namespace

ResourceSet parse_k8s(std::span<const std::string> manifests) {
  K8sCollector collector;
  for (std::size_t m = 0; m < manifests.size(); ++m) {
    std::vector<YAML::Node> docs;
    try {
      docs = YAML::LoadAll(manifests[m]);
    } catch (const YAML::Exception &e) {
      throw ParseError("manifest " + std::to_string(m) + ": " + e.what());
    }
    for (std::size_t d = 0; d < docs.size(); ++d) {
      auto where = "manifest " + std::to_string(m) + " document " + std::to_string(d);
      try {
        collector.document(docs[d], where);
      } catch (const YAML::Exception &e) {
        throw ParseError(where + ": " + e.what());
      }
    }
  }
  return collector.finish();
}

} // namespace netcx
