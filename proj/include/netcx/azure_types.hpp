#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace netcx::azure {

inline constexpr std::string_view kSubscription = "00000000-0000-0000-0000-000000000000";
inline constexpr std::string_view kResourceGroup = "netcx";

/// Resource-manager type for a dialect type name, e.g. "subnet" ->
/// "Microsoft.Network/virtualNetworks/subnets".
std::optional<std::string> arm_type_for(std::string_view type_name);

/// Inverse of arm_type_for; several resource-manager types may map to
/// one type name (ipconfigs of NICs and of firewalls).
std::optional<std::string> type_name_for(std::string_view arm_type);

/// "/subscriptions/.../providers/Microsoft.Network/virtualNetworks/a/subnets/b"
/// for arm type ".../virtualNetworks/subnets" and name "a/b".
std::string resource_id(std::string_view arm_type, std::string_view name);

struct ParsedId {
  std::string arm_type;
  std::string name;
};

/// nullopt when `id` is not a resource id.
std::optional<ParsedId> parse_resource_id(std::string_view id);

} // namespace netcx::azure
