#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace netcx {

/// IPv4 prefix in canonical form: host bits below the mask are zero.
struct Ipv4Prefix {
  std::uint32_t address = 0;
  std::uint8_t length = 0;

  /// Parses "a.b.c.d/len" or a bare "a.b.c.d" (taken as /32).
  /// Throws ValidationError naming the input when malformed or when host
  /// bits are set.
  static Ipv4Prefix parse(std::string_view text);

  /// Same as parse() but returns nullopt instead of throwing.
  static std::optional<Ipv4Prefix> try_parse(std::string_view text);

  /// Builds the network prefix covering `address` with the given length,
  /// clearing host bits.
  static Ipv4Prefix network_of(std::uint32_t address, std::uint8_t length);

  std::uint32_t mask() const noexcept;
  std::uint32_t first() const noexcept { return address; }
  std::uint32_t last() const noexcept { return address | ~mask(); }

  std::string to_string() const;

  auto operator<=>(const Ipv4Prefix &) const = default;
};

/// Parses a dotted quad. nullopt on any syntax error.
std::optional<std::uint32_t> parse_ipv4_address(std::string_view text);

std::string format_ipv4_address(std::uint32_t address);

/// Converts a contiguous netmask ("255.255.255.0") or wildcard
/// ("0.0.0.255") to a prefix length; nullopt if not contiguous.
std::optional<std::uint8_t> netmask_length(std::uint32_t mask);
std::optional<std::uint8_t> wildcard_length(std::uint32_t wildcard);

/// True iff inner lies inside outer and is strictly longer.
bool cidr_contains(const Ipv4Prefix &outer, const Ipv4Prefix &inner) noexcept;

/// String overload; validates both prefixes.
bool cidr_contains(std::string_view outer, std::string_view inner);

} // namespace netcx
