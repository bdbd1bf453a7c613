#include "netcx/topologies.hpp"

#include <array>

#include "netcx/error.hpp"

// Fan-out constants below were tuned once against the reference rows;
// CALIBRATION.md lists target and achieved values per topology.

namespace netcx {

namespace {

constexpr std::array kAll{TopologyId::azure1, TopologyId::azure2, TopologyId::azure3,
                          TopologyId::cli3,   TopologyId::k8s3,   TopologyId::aci3};

std::string ip4(int a, int b, int c, int d) {
  return std::to_string(a) + "." + std::to_string(b) + "." + std::to_string(c) + "." + std::to_string(d);
}

std::string num(int n) { return std::to_string(n); }

// ------------------------------------------------------------------ azure

constexpr std::string_view kHubPrefix = "10.0.0.0/16";
constexpr std::string_view kFirewallSubnetPrefix = "10.0.1.0/26";
constexpr std::string_view kFirewallIp = "10.0.1.4";
constexpr std::string_view kPublicIp = "203.0.113.10";
constexpr std::string_view kJumpHost = "10.0.2.4";
constexpr std::string_view kOnPrem = "192.168.0.0/16";

class AzureGen {
public:
  AzureGen(int variant, const TopologyParams &p) : v_(variant), p_(p) { set_.dialect = "azure"; }

  ResourceSet run() {
    if (v_ != 3)
      hub();
    for (int s = 1; s <= spokes(); ++s)
      spoke(s);
    peerings();
    if (v_ != 3) {
      firewall();
      policy();
      routing();
    } else {
      for (int k = 1; k <= p_.shared_services; ++k)
        add(ResourceBuilder("azure", "asg", "asg-" + label(shared(), k)));
    }
    nsgs();
    return std::move(set_);
  }

private:
  int v_;
  const TopologyParams &p_;
  ResourceSet set_;

  void add(ResourceBuilder &&b) { set_.resources.push_back(std::move(b).build()); }

  int spokes() const { return p_.app_units + 1; }
  int shared() const { return spokes(); }
  bool is_app(int s) const { return s <= p_.app_units; }
  std::string spoke_name(int s) const { return is_app(s) ? "app" + num(s) : "shared"; }
  int subnets_in(int s) const { return is_app(s) ? p_.tiers : p_.shared_services; }
  std::string label(int s, int k) const { return (is_app(s) ? "tier" : "svc") + num(k); }
  std::string vnet(int s) const { return "vnet-" + spoke_name(s); }
  std::string vnet_prefix(int s) const { return ip4(10, s, 0, 0) + "/16"; }
  std::string subnet(int s, int k) const { return vnet(s) + "/snet-" + label(s, k); }
  std::string subnet_prefix(int s, int k) const { return ip4(10, s, k, 0) + "/24"; }
  std::string host(int s, int k, int e) const { return ip4(10, s, k, 3 + e); }
  std::string unit(int s, int k, int e) const { return spoke_name(s) + "-" + label(s, k) + "-" + num(e); }
  std::string route_table(int s, int k) const { return v_ == 1 ? "rt-" + spoke_name(s) + "-" + label(s, k) : "rt-spokes"; }
  std::string nsg(int s, int k) const {
    if (v_ == 1)
      return "nsg-baseline";
    if (v_ == 2)
      return "nsg-" + spoke_name(s);
    return "nsg-" + spoke_name(s) + "-" + label(s, k);
  }

  void hub() {
    add(std::move(ResourceBuilder("azure", "vnet", "vnet-hub").address(kHubPrefix, "addressPrefixes")));
    add(std::move(ResourceBuilder("azure", "subnet", "vnet-hub/AzureFirewallSubnet")
                      .tight("vnet", "vnet-hub", "parent")
                      .address(kFirewallSubnetPrefix, "addressPrefix")));
  }

  void spoke(int s) {
    add(std::move(ResourceBuilder("azure", "vnet", vnet(s)).address(vnet_prefix(s), "addressPrefixes")));
    for (int k = 1; k <= subnets_in(s); ++k) {
      ResourceBuilder sn("azure", "subnet", subnet(s, k));
      sn.tight("vnet", vnet(s), "parent").address(subnet_prefix(s, k), "addressPrefix");
      sn.tight("nsg", nsg(s, k), "networkSecurityGroup");
      if (v_ != 3)
        sn.tight("routeTable", route_table(s, k), "routeTable");
      add(std::move(sn));
      for (int e = 1; e <= p_.endpoints_per_tier; ++e) {
        auto nic = "nic-" + unit(s, k, e);
        add(std::move(ResourceBuilder("azure", "vm", "vm-" + unit(s, k, e))
                          .attr("vmSize", "Standard_B2s")
                          .tight("nic", nic, "networkInterfaces")));
        ResourceBuilder n("azure", "nic", nic);
        if (v_ == 1)
          n.tight("nsg", nsg(s, k), "networkSecurityGroup");
        add(std::move(n));
        ResourceBuilder ipc("azure", "ipconfig", nic + "/ipconfig1");
        ipc.tight("nic", nic, "parent")
            .tight("subnet", subnet(s, k), "subnet")
            .attr("privateIPAllocationMethod", "Dynamic")
            .attr("privateIPAddress", host(s, k, e));
        if (v_ == 3 && !is_app(s))
          ipc.tight("asg", "asg-" + label(s, k), "applicationSecurityGroups");
        add(std::move(ipc));
      }
    }
  }

  void peering(const std::string &from_vnet, const std::string &from, const std::string &to_vnet,
               const std::string &to) {
    add(std::move(ResourceBuilder("azure", "peering", from_vnet + "/peer-" + from + "-to-" + to)
                      .tight("vnet", from_vnet, "parent")
                      .tight("vnet", to_vnet, "remoteVirtualNetwork")
                      .attr("allowForwardedTraffic", "true")));
  }

  void peerings() {
    if (v_ == 3) {
      for (int a = 1; a <= spokes(); ++a)
        for (int b = 1; b <= spokes(); ++b)
          if (a != b)
            peering(vnet(a), spoke_name(a), vnet(b), spoke_name(b));
      return;
    }
    for (int s = 1; s <= spokes(); ++s) {
      peering("vnet-hub", "hub", vnet(s), spoke_name(s));
      peering(vnet(s), spoke_name(s), "vnet-hub", "hub");
    }
  }

  void firewall() {
    add(std::move(ResourceBuilder("azure", "publicIp", "pip-fw-hub")
                      .attr("publicIPAllocationMethod", "Static")
                      .address(kPublicIp, "ipAddress")));
    add(std::move(ResourceBuilder("azure", "firewall", "fw-hub")
                      .attr("skuTier", "Standard")
                      .tight("firewallPolicy", "fwp-hub", "firewallPolicy")));
    add(std::move(ResourceBuilder("azure", "ipconfig", "fw-hub/fw-ipconfig")
                      .attr("armType", "Microsoft.Network/azureFirewalls/ipConfigurations")
                      .tight("firewall", "fw-hub", "parent")
                      .tight("subnet", "vnet-hub/AzureFirewallSubnet", "subnet")
                      .tight("publicIp", "pip-fw-hub", "publicIPAddress")
                      .attr("privateIPAllocationMethod", "Static")
                      .address(kFirewallIp, "privateIPAddress")));
  }

  void collection(const std::string &name, const char *kind, int priority) {
    add(std::move(ResourceBuilder("azure", "ruleCollection", "fwp-hub/" + name)
                      .tight("firewallPolicy", "fwp-hub", "parent")
                      .attr("ruleCollectionType", kind)
                      .attr("priority", num(priority))));
  }

  ResourceBuilder rule(const std::string &collection_name, const std::string &name, const char *type) {
    ResourceBuilder r("azure", "fwRule", "fwp-hub/" + collection_name + "/" + name);
    r.tight("ruleCollection", "fwp-hub/" + collection_name, "parent").attr("ruleType", type);
    return r;
  }

  void policy() {
    add(std::move(ResourceBuilder("azure", "firewallPolicy", "fwp-hub").attr("threatIntelMode", "Alert")));
    for (int s = 1; s <= spokes(); ++s)
      add(std::move(ResourceBuilder("azure", "ipGroup", "ipg-" + spoke_name(s)).address(vnet_prefix(s), "ipAddresses")));

    collection("rc-dnat", "FirewallPolicyNatRuleCollection", 100);
    for (int a = 1; a <= p_.app_units; ++a)
      add(std::move(rule("rc-dnat", "web-" + spoke_name(a), "NatRule")
                        .address(kPublicIp, "destinationAddresses")
                        .attr("destinationPorts", num(8442 + a))
                        .attr("translatedFqdn", "web." + spoke_name(a) + ".internal")
                        .attr("translatedPort", "443")));

    collection("rc-shared-access", "FirewallPolicyFilterRuleCollection", 200);
    for (int a = 1; a <= p_.app_units; ++a)
      add(std::move(rule("rc-shared-access", spoke_name(a) + "-to-shared", "NetworkRule")
                        .tight("ipGroup", "ipg-" + spoke_name(a), "sourceIpGroups")
                        .tight("ipGroup", "ipg-shared", "destinationIpGroups")
                        .attr("destinationPorts", "443")));
    auto back = rule("rc-shared-access", "shared-to-apps", "NetworkRule");
    back.tight("ipGroup", "ipg-shared", "sourceIpGroups");
    for (int a = 1; a <= p_.app_units; ++a)
      back.tight("ipGroup", "ipg-" + spoke_name(a), "destinationIpGroups");
    add(std::move(back.attr("destinationPorts", "443")));

    if (v_ == 2) {
      collection("rc-internet", "FirewallPolicyFilterRuleCollection", 300);
      auto out = rule("rc-internet", "apps-out", "ApplicationRule");
      for (int a = 1; a <= p_.app_units; ++a)
        out.tight("ipGroup", "ipg-" + spoke_name(a), "sourceIpGroups");
      add(std::move(out.attr("targetFqdns", "*.ubuntu.com")));
    }

    if (v_ == 1) {
      // intra-vnet traffic reaches the firewall too, so tiers get host rules
      collection("rc-east-west", "FirewallPolicyFilterRuleCollection", 150);
      for (int k = 1; k < p_.tiers; ++k) {
        auto r = rule("rc-east-west", "tier" + num(k) + "-to-tier" + num(k + 1), "NetworkRule");
        for (int a = 1; a <= p_.app_units; ++a)
          r.address(subnet_prefix(a, k), "sourceAddresses");
        for (int a = 1; a <= p_.app_units; ++a)
          for (int e = 1; e <= p_.endpoints_per_tier; ++e)
            r.address(host(a, k + 1, e), "destinationAddresses");
        add(std::move(r.attr("destinationPorts", num(8000 + k + 1))));
      }
      auto backup = rule("rc-east-west", "db-backup", "NetworkRule");
      for (int a = 1; a <= p_.app_units; ++a)
        backup.address(subnet_prefix(a, p_.tiers), "sourceAddresses");
      for (int e = 1; e <= p_.endpoints_per_tier; ++e)
        backup.address(host(shared(), 1, e), "destinationAddresses");
      add(std::move(backup.attr("destinationPorts", "445")));
      auto mgmt = rule("rc-east-west", "jumphost-mgmt", "NetworkRule");
      mgmt.address(kJumpHost, "sourceAddresses");
      for (int s = 1; s <= spokes(); ++s)
        mgmt.tight("ipGroup", "ipg-" + spoke_name(s), "destinationIpGroups");
      add(std::move(mgmt.attr("destinationPorts", "22")));
    }
  }

  void route(const std::string &table, const std::string &name, std::string_view prefix) {
    add(std::move(ResourceBuilder("azure", "route", table + "/" + name)
                      .tight("routeTable", table, "parent")
                      .address(prefix, "addressPrefix")
                      .attr("nextHopType", "VirtualAppliance")
                      .address(kFirewallIp, "nextHopIpAddress")));
  }

  void routing() {
    if (v_ == 2) {
      add(std::move(ResourceBuilder("azure", "routeTable", "rt-spokes").attr("disableBgpRoutePropagation", "true")));
      route("rt-spokes", "default", "0.0.0.0/0");
      return;
    }
    for (int s = 1; s <= spokes(); ++s)
      for (int k = 1; k <= subnets_in(s); ++k) {
        add(std::move(ResourceBuilder("azure", "routeTable", route_table(s, k)).attr("disableBgpRoutePropagation", "true")));
        route(route_table(s, k), "intra-vnet", vnet_prefix(s));
      }
  }

  ResourceBuilder nsg_rule(const std::string &nsg_name, const std::string &name, bool default_rule) {
    ResourceBuilder r("azure", "nsgRule", nsg_name + "/" + name);
    r.tight("nsg", nsg_name, "parent");
    if (default_rule)
      r.attr("armType", "Microsoft.Network/networkSecurityGroups/defaultSecurityRules");
    return r;
  }

  void nsgs() {
    if (v_ == 1) {
      add(ResourceBuilder("azure", "nsg", "nsg-baseline"));
      add(std::move(nsg_rule("nsg-baseline", "allow-vnet-inbound", false)
                        .attr("access", "Allow").attr("direction", "Inbound").attr("priority", "3000")
                        .attr("sourceAddressPrefix", "VirtualNetwork").attr("destinationAddressPrefix", "*")));
      add(std::move(nsg_rule("nsg-baseline", "deny-internet-inbound", false)
                        .attr("access", "Deny").attr("direction", "Inbound").attr("priority", "4000")
                        .attr("sourceAddressPrefix", "Internet").attr("destinationAddressPrefix", "*")));
      return;
    }
    if (v_ == 2) {
      struct Default { const char *name, *access, *direction, *priority, *source, *destination; };
      static constexpr std::array kDefaults{
          Default{"AllowVnetInBound", "Allow", "Inbound", "65000", "VirtualNetwork", "VirtualNetwork"},
          Default{"AllowAzureLoadBalancerInBound", "Allow", "Inbound", "65001", "AzureLoadBalancer", "*"},
          Default{"DenyAllInBound", "Deny", "Inbound", "65500", "*", "*"},
          Default{"AllowVnetOutBound", "Allow", "Outbound", "65000", "VirtualNetwork", "VirtualNetwork"},
          Default{"AllowInternetOutBound", "Allow", "Outbound", "65001", "*", "Internet"},
          Default{"DenyAllOutBound", "Deny", "Outbound", "65500", "*", "*"},
      };
      for (int s = 1; s <= spokes(); ++s) {
        add(ResourceBuilder("azure", "nsg", nsg(s, 1)));
        for (const auto &d : kDefaults)
          add(std::move(nsg_rule(nsg(s, 1), d.name, true)
                            .attr("access", d.access).attr("direction", d.direction).attr("priority", d.priority)
                            .attr("sourceAddressPrefix", d.source).attr("destinationAddressPrefix", d.destination)));
      }
      return;
    }
    for (int s = 1; s <= spokes(); ++s)
      for (int k = 1; k <= subnets_in(s); ++k) {
        auto name = nsg(s, k);
        add(ResourceBuilder("azure", "nsg", name));
        if (!is_app(s)) {
          auto r = nsg_rule(name, "allow-apps", false);
          r.attr("access", "Allow").attr("direction", "Inbound").attr("priority", "200")
              .attr("sourceAddressPrefix", "VirtualNetwork")
              .tight("asg", "asg-" + label(s, k), "destinationApplicationSecurityGroups");
          if (k == 1)
            r.address(kOnPrem, "sourceAddressPrefixes");
          add(std::move(r));
        } else if (k == 1) {
          add(std::move(nsg_rule(name, "allow-https-inbound", false)
                            .attr("access", "Allow").attr("direction", "Inbound").attr("priority", "100")
                            .attr("sourceAddressPrefix", "Internet").attr("destinationPortRange", "443")));
        } else {
          add(std::move(nsg_rule(name, "allow-from-tier" + num(k - 1), false)
                            .attr("access", "Allow").attr("direction", "Inbound").attr("priority", "100")
                            .address(subnet_prefix(s, k - 1), "sourceAddressPrefix")
                            .attr("destinationPortRange", num(8000 + k))));
          add(std::move(nsg_rule(name, "deny-vnet-inbound", false)
                            .attr("access", "Deny").attr("direction", "Inbound").attr("priority", "4000")
                            .attr("sourceAddressPrefix", "VirtualNetwork")));
        }
      }
  }
};

// -------------------------------------------------------------------- cli

class CliGen {
public:
  explicit CliGen(const TopologyParams &p) : p_(p) { set_.dialect = "cli"; }

  ResourceSet run() {
    for (int s = 1; s <= 2; ++s)
      switch_config(s);
    for (int u = 1; u <= units(); ++u)
      for (int k = 1; k <= segments(u); ++k)
        add(std::move(ResourceBuilder("cli", "vlan", num(vlan(u, k))).attr("name", name(u, k))));
    return std::move(set_);
  }

private:
  const TopologyParams &p_;
  ResourceSet set_;

  void add(ResourceBuilder &&b) { set_.resources.push_back(std::move(b).build()); }

  // units 1..app_units are apps, the last one is the shared-services block
  int units() const { return p_.app_units + 1; }
  bool is_app(int u) const { return u <= p_.app_units; }
  int segments(int u) const { return is_app(u) ? p_.tiers : p_.shared_services; }
  int vlan(int u, int k) const { return 100 * u + k; }
  std::string name(int u, int k) const {
    return is_app(u) ? "app" + num(u) + "-tier" + num(k) : "shared-svc" + num(k);
  }
  int home(int u) const { return (u - 1) % 2 + 1; }
  bool has_svi(int u, int sw) const { return !is_app(u) || home(u) == sw; }
  int switch_of(int e) const { return (e - 1) % 2 + 1; }
  std::string sw(int s) const { return "sw" + num(s); }
  std::string host(int u, int k, int e) const { return ip4(10, u, k, 10 + e); }
  std::string gateway(int u, int k) const { return ip4(10, u, k, 1); }
  std::string acl(int s, int u, int k) const { return sw(s) + ":VLAN" + num(vlan(u, k)) + "-IN"; }

  void apply_acl(ResourceBuilder &itf, int s, int u, int k) const {
    if (!p_.cli_acls)
      return;
    itf.loose("acl", acl(s, u, k), "accessGroupIn").loose("acl", acl(s, u, k), "accessGroupOut");
  }

  void switch_config(int s) {
    ResourceBuilder sw_res("cli", "switch", sw(s));
    sw_res.attr("hostname", sw(s));
    for (int u = 1; u <= units(); ++u)
      for (int k = 1; k <= segments(u); ++k)
        sw_res.loose("vlan", num(vlan(u, k)), "declaresVlan");
    sw_res.address("0.0.0.0/0", "route1:prefix").address(ip4(10, 0, 0, s), "route1:nextHop");
    add(std::move(sw_res));

    int port = 0;
    for (int u = 1; u <= units(); ++u)
      for (int k = 1; k <= segments(u); ++k)
        for (int e = 1; e <= p_.endpoints_per_tier; ++e) {
          if (switch_of(e) != s)
            continue;
          ResourceBuilder itf("cli", "port", sw(s) + ":GigabitEthernet1/0/" + num(++port));
          itf.tight("switch", sw(s), "memberOf").attr("switchport.mode", "access").loose("vlan", num(vlan(u, k)), "accessVlan");
          if (has_svi(u, s))
            apply_acl(itf, s, u, k);
          add(std::move(itf));
        }

    for (int u = 1; u <= units(); ++u)
      for (int k = 1; k <= segments(u); ++k) {
        if (!has_svi(u, s))
          continue;
        ResourceBuilder svi("cli", "svi", sw(s) + ":Vlan" + num(vlan(u, k)));
        svi.tight("switch", sw(s), "memberOf")
            .loose("vlan", num(vlan(u, k)), "vlanInterface")
            .attr("address", gateway(u, k) + "/24")
            .address(ip4(10, u, k, 0) + "/24", "ipAddress");
        apply_acl(svi, s, u, k);
        add(std::move(svi));
        if (p_.cli_acls)
          access_list(s, u, k);
      }
  }

  void access_list(int s, int u, int k) {
    ResourceBuilder a("cli", "acl", acl(s, u, k));
    a.attr("kind", "extended");
    int n = 0;
    auto entry = [&](const char *action, const char *protocol, const std::string &port) {
      auto ace = "ace" + num(++n);
      a.attr(ace + ".action", action).attr(ace + ".protocol", protocol);
      if (!port.empty())
        a.attr(ace + ".dstPort", port);
      return ace;
    };
    a.address(gateway(u, k), entry("deny", "ip", "") + ":dst");
    if (!is_app(u)) {
      for (int app = 1; app <= p_.app_units; ++app)
        if (home(app) == s)
          a.address(ip4(10, app, 0, 0) + "/16", entry("permit", "tcp", "eq " + num(8100 + k)) + ":src");
    } else if (k == 1) {
      a.address(ip4(10, u, 1, 100), entry("permit", "tcp", "eq 443") + ":dst");
    } else {
      for (int e = 1; e <= p_.endpoints_per_tier; ++e)
        a.address(host(u, k - 1, e), entry("permit", "tcp", "eq " + num(8000 + k)) + ":src");
    }
    entry("deny", "ip", "");
    add(std::move(a));
  }
};

// -------------------------------------------------------------------- k8s

ResourceSet k8s(const TopologyParams &p) {
  ResourceSet set;
  set.dialect = "k8s";
  auto add = [&](ResourceBuilder b) { set.resources.push_back(std::move(b).build()); };
  std::vector<std::string> namespaces;
  for (int a = 1; a <= p.app_units; ++a)
    namespaces.push_back("app" + num(a));
  namespaces.push_back("shared");

  auto tier_label = [](int k) { return "tier=tier" + num(k); };
  int max_tiers = std::max(p.app_units > 0 ? p.tiers : 0, p.shared_services);
  for (int k = 1; k <= max_tiers; ++k)
    add(ResourceBuilder("k8s", "label", tier_label(k)));

  for (std::size_t i = 0; i < namespaces.size(); ++i) {
    const auto &ns = namespaces[i];
    bool shared = i + 1 == namespaces.size();
    add(ResourceBuilder("k8s", "namespace", ns));
    int tiers = shared ? p.shared_services : p.tiers;
    for (int k = 1; k <= tiers; ++k) {
      for (int e = 1; e <= p.endpoints_per_tier; ++e) {
        auto pod = "tier" + num(k) + "-" + num(e);
        auto instance = "app.kubernetes.io/instance=" + ns + "-" + pod;
        add(ResourceBuilder("k8s", "label", instance));
        add(std::move(ResourceBuilder("k8s", "pod", ns + "/" + pod)
                          .tight("namespace", ns, "namespace")
                          .loose("label", instance, "labeledWith")
                          .loose("label", tier_label(k), "labeledWith")));
      }
      add(std::move(ResourceBuilder("k8s", "service", ns + "/tier" + num(k))
                        .tight("namespace", ns, "namespace")
                        .loose("label", tier_label(k), "selects")));
      if (!shared && k > 1)
        add(std::move(ResourceBuilder("k8s", "networkPolicy", ns + "/allow-tier" + num(k))
                          .tight("namespace", ns, "namespace")
                          .loose("label", tier_label(k), "appliesTo")
                          .loose("label", tier_label(k - 1), "allowsFrom")
                          .loose("namespace", "shared", "allowsFromNamespace")));
    }
    if (shared) {
      ResourceBuilder policy("k8s", "networkPolicy", ns + "/allow-apps");
      policy.tight("namespace", ns, "namespace");
      for (int a = 1; a <= p.app_units; ++a)
        policy.loose("namespace", namespaces[a - 1], "allowsFromNamespace");
      for (int a = 1; a <= p.app_units; ++a)
        policy.loose("namespace", namespaces[a - 1], "allowsToNamespace");
      add(std::move(policy));
    }
  }
  return set;
}

// -------------------------------------------------------------------- aci

ResourceSet aci(const TopologyParams &p) {
  ResourceSet set;
  set.dialect = "aci";
  auto add = [&](ResourceBuilder b) { set.resources.push_back(std::move(b).build()); };
  const std::string t = "netcx";
  auto in_tenant = [&](const char *type, const std::string &name) {
    return std::move(ResourceBuilder("aci", type, t + "/" + name).tight("tenant", t, "parent"));
  };

  add(ResourceBuilder("aci", "tenant", t));
  add(in_tenant("vrf", "vrf-main").tight("contract", t + "/shared-services", "consumes"));
  add(in_tenant("bridgeDomain", "bd-main")
          .tight("vrf", t + "/vrf-main", "vrf")
          .tight("l3out", t + "/l3out-internet", "l3out"));
  add(in_tenant("l3out", "l3out-internet")
          .tight("vrf", t + "/vrf-main", "vrf")
          .tight("contract", t + "/web-access", "consumes"));
  add(in_tenant("filter", "allow-tcp").attr("entry.tcp", "ip tcp unspecified unspecified"));

  std::vector<std::string> contracts{"web-access", "shared-services"};
  for (int k = 1; k < p.tiers; ++k)
    contracts.push_back("tier" + num(k) + "-to-tier" + num(k + 1));
  for (const auto &c : contracts)
    add(in_tenant("contract", c).attr("scope", "context").tight("filter", t + "/allow-tcp", "filter"));

  std::array<std::string, 2> leaves{"leaf-101", "leaf-102"};
  std::array<int, 2> next_port{0, 0};
  for (int l = 0; l < 2; ++l)
    add(std::move(ResourceBuilder("aci", "leaf", leaves[l]).attr("nodeId", num(101 + l))));

  auto epg = [&](const std::string &ap, const std::string &name, int vlan_id) {
    ResourceBuilder g("aci", "epg", t + "/" + ap + "/" + name);
    g.attr("ap", ap).tight("bridgeDomain", t + "/bd-main", "bridgeDomain");
    for (int e = 1; e <= p.endpoints_per_tier; ++e) {
      int l = (e - 1) % 2;
      auto itf = "eth1/" + num(++next_port[l]);
      auto port = leaves[l] + "/" + itf;
      add(std::move(ResourceBuilder("aci", "port", port).tight("leaf", leaves[l], "memberOf")));
      g.tight("port", port, "pathAttachment").attr("encap." + num(101 + l) + "/" + itf, "vlan-" + num(vlan_id));
    }
    return g;
  };
  for (int a = 1; a <= p.app_units; ++a)
    for (int k = 1; k <= p.tiers; ++k) {
      auto g = epg("app" + num(a), "tier" + num(k), 100 * a + k);
      if (k == 1)
        g.tight("contract", t + "/web-access", "provides");
      else
        g.tight("contract", t + "/tier" + num(k - 1) + "-to-tier" + num(k), "provides");
      if (k < p.tiers)
        g.tight("contract", t + "/tier" + num(k) + "-to-tier" + num(k + 1), "consumes");
      add(std::move(g));
    }
  for (int s = 1; s <= p.shared_services; ++s)
    add(std::move(epg("shared", "svc" + num(s), 100 * (p.app_units + 1) + s)
                      .tight("contract", t + "/shared-services", "provides")));
  return set;
}

} // namespace

std::string_view to_string(TopologyId id) noexcept {
  switch (id) {
  case TopologyId::azure1: return "azure-1";
  case TopologyId::azure2: return "azure-2";
  case TopologyId::azure3: return "azure-3";
  case TopologyId::cli3: return "cli-3";
  case TopologyId::k8s3: return "k8s-3";
  case TopologyId::aci3: return "aci-3";
  }
  return "?";
}

std::optional<TopologyId> parse_topology_id(std::string_view text) noexcept {
  for (auto id : kAll)
    if (to_string(id) == text)
      return id;
  return std::nullopt;
}

std::string_view display_name(TopologyId id) noexcept {
  switch (id) {
  case TopologyId::azure1: return "Topology 1 (Azure)";
  case TopologyId::azure2: return "Topology 2 (Azure)";
  case TopologyId::azure3: return "Topology 3 (Azure)";
  case TopologyId::cli3: return "Topology 3 (CLI)";
  case TopologyId::k8s3: return "Topology 3 (Kubernetes)";
  case TopologyId::aci3: return "Topology 3 (ACI)";
  }
  return "?";
}

Dialect dialect_of(TopologyId id) noexcept {
  switch (id) {
  case TopologyId::cli3: return Dialect::cli;
  case TopologyId::k8s3: return Dialect::k8s;
  case TopologyId::aci3: return Dialect::aci;
  default: return Dialect::azure;
  }
}

std::span<const TopologyId> all_topologies() noexcept { return kAll; }

void validate(const TopologyParams &params) {
  auto check = [](int value, const char *what, int low = 1) {
    if (value < low || value > 250)
      throw ValidationError(std::string(what) + " must be in " + std::to_string(low) + "..250, got " +
                            std::to_string(value));
  };
  check(params.app_units, "app_units", 0);
  check(params.tiers, "tiers");
  check(params.shared_services, "shared_services");
  check(params.endpoints_per_tier, "endpoints_per_tier");
  if (params.app_units + 1 > 250)
    throw ValidationError("app_units must be below 250");
}

ResourceSet gen_azure(int variant, const TopologyParams &params) {
  if (variant < 1 || variant > 3)
    throw ValidationError("unknown azure variant " + std::to_string(variant));
  validate(params);
  return AzureGen(variant, params).run();
}

ResourceSet gen_cli(const TopologyParams &params) {
  validate(params);
  return CliGen(params).run();
}

ResourceSet gen_k8s(const TopologyParams &params) {
  validate(params);
  return k8s(params);
}

ResourceSet gen_aci(const TopologyParams &params) {
  validate(params);
  return aci(params);
}

ResourceSet generate(const TopologySpec &spec) {
  switch (spec.id) {
  case TopologyId::azure1: return gen_azure(1, spec.params);
  case TopologyId::azure2: return gen_azure(2, spec.params);
  case TopologyId::azure3: return gen_azure(3, spec.params);
  case TopologyId::cli3: return gen_cli(spec.params);
  case TopologyId::k8s3: return gen_k8s(spec.params);
  case TopologyId::aci3: return gen_aci(spec.params);
  }
  throw ValidationError("unknown topology");
}

} // namespace netcx
