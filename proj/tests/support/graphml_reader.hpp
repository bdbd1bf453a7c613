#pragma once

#include <string>

#include "netcx/graph.hpp"

namespace graphml {

/// Rebuilds a NetGraph from the exporter's GraphML. Only the element
/// subset the exporter writes is understood; anything else throws.
netcx::NetGraph read(const std::string &text);

} // namespace graphml
