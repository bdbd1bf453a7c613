#include "netcx/cidr.hpp"

#include <charconv>

#include "netcx/error.hpp"

namespace netcx {

namespace {

std::optional<unsigned> parse_decimal(std::string_view text, unsigned max) {
  if (text.empty() || text.size() > 3)
    return std::nullopt;
  unsigned value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value > max)
    return std::nullopt;
  // no leading zeros ("010" is ambiguous in many tools)
  if (text.size() > 1 && text.front() == '0')
    return std::nullopt;
  return value;
}

} // namespace

std::optional<std::uint32_t> parse_ipv4_address(std::string_view text) {
  std::uint32_t result = 0;
  for (int octet = 0; octet < 4; ++octet) {
    auto dot = text.find('.');
    if ((octet < 3) == (dot == std::string_view::npos))
      return std::nullopt;
    auto part = parse_decimal(text.substr(0, dot), 255);
    if (!part)
      return std::nullopt;
    result = (result << 8) | *part;
    text = octet < 3 ? text.substr(dot + 1) : std::string_view{};
  }
  return result;
}

std::string format_ipv4_address(std::uint32_t address) {
  return std::to_string(address >> 24) + '.' + std::to_string((address >> 16) & 0xff) + '.' +
         std::to_string((address >> 8) & 0xff) + '.' + std::to_string(address & 0xff);
}

std::optional<std::uint8_t> netmask_length(std::uint32_t mask) {
  std::uint32_t inverted = ~mask;
  // contiguous iff inverted is of the form 0..01..1
  if ((inverted & (inverted + 1)) != 0)
    return std::nullopt;
  std::uint8_t length = 0;
  for (std::uint32_t m = mask; m != 0; m <<= 1)
    ++length;
  return length;
}

std::optional<std::uint8_t> wildcard_length(std::uint32_t wildcard) {
  return netmask_length(~wildcard);
}

std::uint32_t Ipv4Prefix::mask() const noexcept {
  return length == 0 ? 0u : ~std::uint32_t{0} << (32 - length);
}

Ipv4Prefix Ipv4Prefix::network_of(std::uint32_t address, std::uint8_t length) {
  Ipv4Prefix prefix{0, length};
  prefix.address = address & prefix.mask();
  return prefix;
}

std::optional<Ipv4Prefix> Ipv4Prefix::try_parse(std::string_view text) {
  auto slash = text.find('/');
  auto address = parse_ipv4_address(text.substr(0, slash));
  if (!address)
    return std::nullopt;
  unsigned length = 32;
  if (slash != std::string_view::npos) {
    auto parsed = parse_decimal(text.substr(slash + 1), 32);
    if (!parsed)
      return std::nullopt;
    length = *parsed;
  }
  Ipv4Prefix prefix{*address, static_cast<std::uint8_t>(length)};
  if ((prefix.address & ~prefix.mask()) != 0)
    return std::nullopt;
  return prefix;
}

Ipv4Prefix Ipv4Prefix::parse(std::string_view text) {
  if (auto prefix = try_parse(text))
    return *prefix;
  throw ValidationError("invalid IPv4 prefix '" + std::string(text) + "'");
}

std::string Ipv4Prefix::to_string() const {
  return format_ipv4_address(address) + '/' + std::to_string(length);
}

bool cidr_contains(const Ipv4Prefix &outer, const Ipv4Prefix &inner) noexcept {
  return inner.length > outer.length && (inner.address & outer.mask()) == outer.address;
}

bool cidr_contains(std::string_view outer, std::string_view inner) {
  return cidr_contains(Ipv4Prefix::parse(outer), Ipv4Prefix::parse(inner));
}

} // namespace netcx
