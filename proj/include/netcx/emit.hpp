#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "netcx/ingest.hpp"

namespace netcx {

/// Native-format writers. Each output parses back, under the matching
/// parser, into a set with the same graph metrics. Refs a dialect cannot
/// express raise Error.

std::string emit_azure(const ResourceSet &set);
std::string emit_k8s(const ResourceSet &set);
/// One config per switch; SourceText::name is the switch name.
std::vector<SourceText> emit_cli(const ResourceSet &set);
std::string emit_aci(const ResourceSet &set);

/// Files for `dialect`: names are stems, see native_extension.
std::vector<SourceText> emit_native(Dialect dialect, const ResourceSet &set);
std::string_view native_extension(Dialect dialect) noexcept;

} // namespace netcx
