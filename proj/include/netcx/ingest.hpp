#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "netcx/resource.hpp"

namespace netcx {

enum class Dialect { azure, k8s, cli, aci };

std::string_view to_string(Dialect dialect) noexcept;
std::optional<Dialect> parse_dialect_name(std::string_view text) noexcept;

/// A named input text. For the CLI dialect the name is the switch name
/// used when the config carries no hostname line.
struct SourceText {
  std::string name;
  std::string text;
};

/// Cloud resource export documents (JSON). Each document may hold one
/// resource object, an array of them, or an object with a "value" or
/// "resources" array. Id references become tight refs, typed IPv4
/// strings become loose literal refs.
///
/// Throws ParseError (document index and path) on malformed input and
/// BuildError when an id reference names no resource in the set.
ResourceSet parse_azure(std::span<const std::string> documents);

/// Kubernetes manifests, each possibly holding several YAML documents.
/// Supports Namespace, Pod, Service, NetworkPolicy and pod-template
/// workloads (Deployment, StatefulSet, ReplicaSet: one pod per replica;
/// DaemonSet: one pod).
ResourceSet parse_k8s(std::span<const std::string> manifests);

/// Switch CLI configs, one text per switch.
ResourceSet parse_cli(std::span<const SourceText> configs);
ResourceSet parse_cli(std::string_view config_text, std::string_view switch_name);

/// Group-based policy tree (APIC-style JSON).
ResourceSet parse_aci(std::string_view policy_document);

/// Dispatches to the dialect parser.
ResourceSet parse_sources(Dialect dialect, std::span<const SourceText> sources);

} // namespace netcx
