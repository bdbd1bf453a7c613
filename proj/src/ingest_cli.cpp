#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "netcx/error.hpp"
#include "netcx/ingest.hpp"

namespace netcx {

namespace {

std::vector<std::string> tokens(const std::string &line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string t; in >> t;)
    out.push_back(t);
  return out;
}

bool is_number(const std::string &s) {
  return !s.empty() && s.size() <= 4 && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

enum class Block { none, ignored, vlan, port, svi, acl };

struct CliParser {
  std::string switch_name;
  ResourceSet &set;
  std::map<std::pair<std::string, std::string>, Resource> &resources;

  CliParser(std::string name, ResourceSet &out, std::map<std::pair<std::string, std::string>, Resource> &store)
      : switch_name(std::move(name)), set(out), resources(store) {}

  int line_number = 0;
  Block block = Block::none;
  std::string current; // key of the resource the block belongs to
  std::string current_type;
  int ace_count = 0;
  int route_count = 0;
  std::set<std::string> defined_acls;
  std::vector<std::string> applied_acls;
  std::set<std::string> declared_vlans;
  std::vector<std::string> cited_vlans;

  [[noreturn]] void fail(const std::string &why) const {
    throw ParseError(switch_name + " line " + std::to_string(line_number) + ": " + why);
  }

  void warn(const std::string &why) {
    set.warnings.push_back(switch_name + " line " + std::to_string(line_number) + ": " + why);
  }

  Resource &resource(const std::string &type_name, const std::string &key) {
    auto [it, inserted] = resources.try_emplace({type_name, key});
    if (inserted) {
      it->second.dialect = "cli";
      it->second.type_name = type_name;
      it->second.key = key;
    }
    return it->second;
  }

  Resource &self() { return resource(current_type, current); }

  static void add_ref(Resource &r, ResourceRef ref) {
    if (std::find(r.refs.begin(), r.refs.end(), ref) == r.refs.end())
      r.refs.push_back(std::move(ref));
  }

  void add_address(Resource &r, const Ipv4Prefix &prefix, const std::string &relationship) {
    add_ref(r, {std::string(kAddressType), prefix.to_string(), Coupling::loose, relationship});
  }

  std::uint32_t address(const std::string &text) const {
    auto a = parse_ipv4_address(text);
    if (!a)
      fail("invalid IPv4 address '" + text + "'");
    return *a;
  }

  std::uint8_t mask_length(const std::string &text, bool wildcard) const {
    auto m = address(text);
    auto length = wildcard ? wildcard_length(m) : netmask_length(m);
    if (!length)
      fail("non-contiguous mask '" + text + "'");
    return *length;
  }

  /// Consumes one address operand of an ACL entry; nullopt for "any".
  std::optional<Ipv4Prefix> operand(const std::vector<std::string> &t, std::size_t &i) const {
    if (i >= t.size())
      fail("truncated access-list entry");
    if (t[i] == "any") {
      ++i;
      return std::nullopt;
    }
    if (t[i] == "host") {
      if (i + 1 >= t.size())
        fail("'host' without address");
      auto a = address(t[i + 1]);
      i += 2;
      return Ipv4Prefix{a, 32};
    }
    if (t[i].find('/') != std::string::npos) {
      auto p = Ipv4Prefix::try_parse(t[i]);
      if (!p)
        fail("invalid prefix '" + t[i] + "'");
      ++i;
      return p;
    }
    if (i + 1 >= t.size())
      fail("address '" + t[i] + "' without wildcard");
    auto a = address(t[i]);
    auto length = mask_length(t[i + 1], true);
    if ((a & ~Ipv4Prefix::network_of(a, length).mask()) != 0)
      fail("address '" + t[i] + "' has bits outside wildcard '" + t[i + 1] + "'");
    i += 2;
    return Ipv4Prefix{a, length};
  }

  std::string port_spec(const std::vector<std::string> &t, std::size_t &i) const {
    static const std::set<std::string> ops{"eq", "neq", "gt", "lt"};
    std::string spec;
    if (i < t.size() && ops.contains(t[i])) {
      if (i + 1 >= t.size())
        fail("'" + t[i] + "' without port");
      spec = t[i] + " " + t[i + 1];
      i += 2;
    } else if (i < t.size() && t[i] == "range") {
      if (i + 2 >= t.size())
        fail("'range' needs two ports");
      spec = "range " + t[i + 1] + " " + t[i + 2];
      i += 3;
    }
    return spec;
  }

  void acl_entry(const std::vector<std::string> &t) {
    std::size_t i = 0;
    if (is_number(t[0]))
      ++i; // sequence number
    if (i < t.size() && t[i] == "remark")
      return;
    if (i >= t.size() || (t[i] != "permit" && t[i] != "deny"))
      fail("expected permit or deny");
    auto &acl = self();
    auto n = "ace" + std::to_string(++ace_count);
    acl.attributes[n + ".action"] = t[i++];
    bool standard = acl.attributes["kind"] == "standard";
    if (!standard) {
      if (i >= t.size())
        fail("missing protocol");
      acl.attributes[n + ".protocol"] = t[i++];
    }
    if (auto src = operand(t, i))
      add_address(acl, *src, n + ":src");
    if (!standard) {
      if (auto sport = port_spec(t, i); !sport.empty())
        acl.attributes[n + ".srcPort"] = sport;
      if (auto dst = operand(t, i))
        add_address(acl, *dst, n + ":dst");
      if (auto dport = port_spec(t, i); !dport.empty())
        acl.attributes[n + ".dstPort"] = dport;
    }
    if (i < t.size())
      acl.attributes[n + ".options"] = [&] {
        std::string rest;
        for (; i < t.size(); ++i)
          rest += (rest.empty() ? "" : " ") + t[i];
        return rest;
      }();
  }

  void interface_command(const std::vector<std::string> &t) {
    auto &itf = self();
    if (t[0] == "switchport") {
      if (t.size() >= 4 && t[1] == "access" && t[2] == "vlan") {
        if (!is_number(t[3]))
          fail("invalid VLAN '" + t[3] + "'");
        add_ref(itf, {"vlan", t[3], Coupling::loose, "accessVlan"});
        cited_vlans.push_back(t[3]);
      } else if (t.size() >= 2 && (t[1] == "mode" || t[1] == "nonegotiate")) {
        if (t.size() >= 3)
          itf.attributes["switchport.mode"] = t[2];
      } else {
        warn("ignored '" + t[0] + " " + (t.size() > 1 ? t[1] : "") + "'");
      }
    } else if (t[0] == "ip" && t.size() >= 2 && t[1] == "address") {
      if (block != Block::svi)
        fail("ip address on a switched port");
      if (t.size() < 4)
        fail("ip address needs address and mask");
      auto a = address(t[2]);
      auto length = mask_length(t[3], false);
      itf.attributes["address"] = format_ipv4_address(a) + "/" + std::to_string(length);
      add_address(itf, Ipv4Prefix::network_of(a, length), "ipAddress");
    } else if (t[0] == "ip" && t.size() >= 2 && t[1] == "access-group") {
      if (t.size() < 4 || (t[3] != "in" && t[3] != "out"))
        fail("ip access-group needs a name and in|out");
      add_ref(itf, {"acl", switch_name + ":" + t[2], Coupling::loose, t[3] == "in" ? "accessGroupIn" : "accessGroupOut"});
      applied_acls.push_back(t[2]);
    } else if (t[0] == "description") {
      // free text
    } else if (t[0] == "shutdown" || (t[0] == "no" && t.size() > 1 && t[1] == "shutdown")) {
      itf.attributes["shutdown"] = t[0] == "shutdown" ? "true" : "false";
    } else {
      warn("ignored interface command '" + t[0] + "'");
    }
  }

  void top_level(const std::vector<std::string> &t) {
    block = Block::none;
    if (t[0] == "hostname") {
      if (t.size() != 2)
        fail("hostname takes one argument");
      resource("switch", switch_name).attributes["hostname"] = t[1];
    } else if (t[0] == "vlan") {
      if (t.size() != 2 || !is_number(t[1]))
        fail("vlan needs a numeric id");
      resource("vlan", t[1]);
      add_ref(resource("switch", switch_name), {"vlan", t[1], Coupling::loose, "declaresVlan"});
      declared_vlans.insert(t[1]);
      block = Block::vlan;
      current_type = "vlan";
      current = t[1];
    } else if (t[0] == "interface") {
      if (t.size() != 2)
        fail("interface takes one name");
      const auto &name = t[1];
      if (name.rfind("Vlan", 0) == 0 || name.rfind("vlan", 0) == 0) {
        auto id = name.substr(4);
        if (!is_number(id))
          fail("invalid SVI '" + name + "'");
        block = Block::svi;
        current_type = "svi";
        current = switch_name + ":" + name;
        auto &svi = resource("svi", current);
        add_ref(svi, {"switch", switch_name, Coupling::tight, "memberOf"});
        add_ref(svi, {"vlan", id, Coupling::loose, "vlanInterface"});
        cited_vlans.push_back(id);
      } else if (name.rfind("Loopback", 0) == 0 || name.rfind("Port-channel", 0) == 0 ||
                 name.rfind("Tunnel", 0) == 0 || name.rfind("mgmt", 0) == 0) {
        warn("ignored interface '" + name + "'");
        block = Block::ignored;
      } else {
        block = Block::port;
        current_type = "port";
        current = switch_name + ":" + name;
        add_ref(resource("port", current), {"switch", switch_name, Coupling::tight, "memberOf"});
      }
    } else if (t[0] == "ip" && t.size() >= 2 && t[1] == "access-list") {
      if (t.size() != 4 || (t[2] != "extended" && t[2] != "standard"))
        fail("expected 'ip access-list extended|standard NAME'");
      block = Block::acl;
      current_type = "acl";
      current = switch_name + ":" + t[3];
      auto &acl = resource("acl", current);
      acl.attributes["kind"] = t[2];
      ace_count = 0;
      for (const auto &[name, _] : acl.attributes)
        if (name.rfind("ace", 0) == 0)
          fail("access-list '" + t[3] + "' defined twice");
      defined_acls.insert(t[3]);
    } else if (t[0] == "ip" && t.size() >= 2 && t[1] == "route") {
      if (t.size() < 5)
        fail("ip route needs prefix, mask and next hop");
      auto a = address(t[2]);
      auto length = mask_length(t[3], false);
      auto prefix = Ipv4Prefix::network_of(a, length);
      if (prefix.address != a)
        fail("route prefix '" + t[2] + "' has host bits set");
      auto &sw = resource("switch", switch_name);
      auto n = "route" + std::to_string(++route_count);
      add_address(sw, prefix, n + ":prefix");
      add_address(sw, Ipv4Prefix{address(t[4]), 32}, n + ":nextHop");
    } else if (t[0] == "end") {
    } else {
      warn("ignored command '" + t[0] + "'");
      block = Block::ignored;
    }
  }

  void run(std::string_view text) {
    resource("switch", switch_name);
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
      ++line_number;
      if (!line.empty() && line.back() == '\r')
        line.pop_back();
      auto t = tokens(line);
      if (t.empty() || t[0].front() == '!')
        continue;
      bool indented = line.front() == ' ' || line.front() == '\t';
      if (!indented) {
        top_level(t);
        continue;
      }
      switch (block) {
      case Block::none:
        fail("indented line outside of a block");
      case Block::ignored:
        break;
      case Block::vlan:
        if (t[0] == "name" && t.size() >= 2)
          resource("vlan", current).attributes.try_emplace("name", t[1]);
        else
          warn("ignored vlan command '" + t[0] + "'");
        break;
      case Block::port:
      case Block::svi:
        interface_command(t);
        break;
      case Block::acl:
        acl_entry(t);
        break;
      }
    }
    for (const auto &name : applied_acls) {
      if (defined_acls.contains(name))
        continue;
      warn("access-list '" + name + "' applied but never defined");
      resource("acl", switch_name + ":" + name).attributes["undefined"] = "true";
    }
    for (const auto &vlan : cited_vlans)
      if (!declared_vlans.contains(vlan))
        resource("vlan", vlan);
  }
};

std::string hostname_of(std::string_view text) {
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    auto t = tokens(line);
    if (t.size() == 2 && t[0] == "hostname" && line.front() != ' ')
      return t[1];
  }
  return {};
}

} // namespace

ResourceSet parse_cli(std::span<const SourceText> configs) {
  ResourceSet set;
  set.dialect = "cli";
  std::map<std::pair<std::string, std::string>, Resource> resources;
  std::set<std::string> switches;
  for (const auto &config : configs) {
    auto name = config.name.empty() ? hostname_of(config.text) : config.name;
    if (name.empty())
      throw ParseError("switch config without a name or hostname");
    if (!switches.insert(name).second)
      throw ParseError("switch '" + name + "' configured twice");
    CliParser parser{name, set, resources};
    parser.run(config.text);
  }
  for (auto &[key, r] : resources)
    set.resources.push_back(std::move(r));
  return set;
}

ResourceSet parse_cli(std::string_view config_text, std::string_view switch_name) {
  SourceText source{std::string(switch_name), std::string(config_text)};
  return parse_cli(std::span<const SourceText>(&source, 1));
}

} // namespace netcx
