#include "netcx/taxonomy.hpp"

#include <fstream>
#include <sstream>

#include "netcx/error.hpp"

namespace netcx {

namespace {

// Calibrated against the I-Type/P-Type columns of the six reference
// topologies; see CALIBRATION.md for the reasoning behind each row.
constexpr std::string_view kBuiltin = R"(# dialect  type_name       category         endpoint
azure       vnet            infrastructure   0
azure       subnet          infrastructure   0
azure       vm              infrastructure   1
azure       nic             infrastructure   0
azure       ipconfig        infrastructure   0
azure       publicIp        infrastructure   0
azure       firewall        infrastructure   0
azure       routeTable      infrastructure   0
azure       peering         policy           0
azure       route           policy           0
azure       nsg             policy           0
azure       nsgRule         policy           0
azure       asg             policy           0
azure       firewallPolicy  policy           0
azure       ruleCollection  policy           0
azure       fwRule          policy           0
azure       ipGroup         policy           0
azure       ipv4            address_literal  0

k8s         namespace       infrastructure   0
k8s         pod             infrastructure   1
k8s         service         policy           0
k8s         networkPolicy   policy           0
k8s         label           policy           0
k8s         ipv4            address_literal  0

cli         switch          infrastructure   0
cli         port            infrastructure   1
cli         svi             infrastructure   0
cli         vlan            infrastructure   0
cli         acl             policy           0
cli         ipv4            address_literal  0

aci         tenant          infrastructure   0
aci         vrf             infrastructure   0
aci         bridgeDomain    infrastructure   0
aci         l3out           infrastructure   0
aci         leaf            infrastructure   0
aci         port            infrastructure   1
aci         epg             policy           0
aci         contract        policy           0
aci         filter          policy           0
aci         ipv4            address_literal  0
)";

} // namespace

std::string_view to_string(VertexCategory category) noexcept {
  switch (category) {
  case VertexCategory::policy:
    return "policy";
  case VertexCategory::infrastructure:
    return "infrastructure";
  case VertexCategory::address_literal:
    return "address_literal";
  }
  return "?";
}

std::optional<VertexCategory> parse_category(std::string_view text) noexcept {
  if (text == "policy")
    return VertexCategory::policy;
  if (text == "infrastructure")
    return VertexCategory::infrastructure;
  if (text == "address_literal")
    return VertexCategory::address_literal;
  return std::nullopt;
}

void Taxonomy::add(std::string dialect, std::string type_name, TypeInfo info) {
  if (info.is_endpoint && info.category != VertexCategory::infrastructure)
    throw ValidationError("endpoint flag on non-infrastructure type '" + type_name + "'");
  auto key = std::make_pair(std::move(dialect), std::move(type_name));
  if (entries_.contains(key))
    throw ValidationError("duplicate taxonomy entry '" + key.first + " " + key.second + "'");
  entries_.emplace(std::move(key), info);
}

std::optional<TypeInfo> Taxonomy::find(std::string_view dialect, std::string_view type_name) const {
  auto it = entries_.find(std::make_pair(std::string(dialect), std::string(type_name)));
  if (it == entries_.end())
    return std::nullopt;
  return it->second;
}

TypeInfo Taxonomy::lookup(std::string_view dialect, std::string_view type_name) const {
  if (auto info = find(dialect, type_name))
    return *info;
  throw TaxonomyError(std::string(dialect), std::string(type_name));
}

Taxonomy Taxonomy::parse(std::string_view text) {
  Taxonomy taxonomy;
  std::istringstream in{std::string(text)};
  std::string line;
  for (int number = 1; std::getline(in, line); ++number) {
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream fields(line);
    std::string dialect, type_name, category, flag, extra;
    if (!(fields >> dialect))
      continue;
    auto fail = [&](const std::string &why) {
      throw ValidationError("taxonomy line " + std::to_string(number) + ": " + why);
    };
    if (!(fields >> type_name >> category >> flag) || (fields >> extra))
      fail("expected 4 columns");
    auto parsed = parse_category(category);
    if (!parsed)
      fail("unknown category '" + category + "'");
    if (flag != "0" && flag != "1")
      fail("endpoint flag must be 0 or 1");
    try {
      taxonomy.add(dialect, type_name, TypeInfo{*parsed, flag == "1"});
    } catch (const ValidationError &e) {
      fail(e.what());
    }
  }
  return taxonomy;
}

Taxonomy Taxonomy::load(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw ValidationError("cannot read taxonomy file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

std::string Taxonomy::to_text() const {
  std::string out;
  for (const auto &[key, info] : entries_) {
    out += key.first + ' ' + key.second + ' ' + std::string(to_string(info.category)) + ' ' +
           (info.is_endpoint ? "1" : "0") + '\n';
  }
  return out;
}

const Taxonomy &Taxonomy::builtin() {
  static const Taxonomy instance = parse(kBuiltin);
  return instance;
}

std::string_view Taxonomy::builtin_text() noexcept { return kBuiltin; }

} // namespace netcx
