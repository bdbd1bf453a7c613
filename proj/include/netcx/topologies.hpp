#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "netcx/ingest.hpp"

namespace netcx {

enum class TopologyId { azure1, azure2, azure3, cli3, k8s3, aci3 };

/// Size knobs shared by all generators. Defaults: two 4-tier apps, four
/// shared services, two endpoints per tier (24 endpoints).
struct TopologyParams {
  int app_units = 2;
  int tiers = 4;
  int shared_services = 4;
  int endpoints_per_tier = 2;
  /// CLI only: emit access lists (and the interface bindings to them).
  bool cli_acls = true;
};

struct TopologySpec {
  TopologyId id = TopologyId::azure1;
  TopologyParams params;
};

/// "azure-1" ... "aci-3".
std::string_view to_string(TopologyId id) noexcept;
std::optional<TopologyId> parse_topology_id(std::string_view text) noexcept;
/// Table label, e.g. "Topology 3 (ACI)".
std::string_view display_name(TopologyId id) noexcept;
Dialect dialect_of(TopologyId id) noexcept;
/// All six, in table order.
std::span<const TopologyId> all_topologies() noexcept;

/// Throws ValidationError for counts outside 1..250 (app_units may be 0,
/// leaving only the shared-services unit); every count lands in an octet.
void validate(const TopologyParams &params);

ResourceSet gen_azure(int variant, const TopologyParams &params = {});
ResourceSet gen_cli(const TopologyParams &params = {});
ResourceSet gen_k8s(const TopologyParams &params = {});
ResourceSet gen_aci(const TopologyParams &params = {});
ResourceSet generate(const TopologySpec &spec);

} // namespace netcx
