#pragma once

#include <span>
#include <string>
#include <vector>

#include "netcx/metrics.hpp"
#include "netcx/taxonomy.hpp"
#include "netcx/topologies.hpp"

namespace netcx {

/// Target metric values for one default topology.
struct ReferenceRow {
  TopologyId id = TopologyId::azure1;
  double nodes_per_endpoint = 0.0;
  std::size_t l_edges = 0;
  std::size_t t_edges = 0;
  std::size_t i_types = 0;
  std::size_t p_types = 0;
  std::size_t ip_excess_degree = 0;
};

inline constexpr double kRatioTolerance = 0.05;
inline constexpr double kEdgeRelativeTolerance = 0.10;

std::span<const ReferenceRow> reference_rows() noexcept;
const ReferenceRow &reference_row(TopologyId id);

struct CellCheck {
  std::string column;
  std::string expected;
  std::string actual;
  bool pass = false;
};

/// Ratio within kRatioTolerance after 2-decimal rendering, L/T within
/// kEdgeRelativeTolerance (a zero reference must match exactly), the rest exact.
std::vector<CellCheck> check_row(const MetricsRow &row, const ReferenceRow &reference);

/// Generate, build and measure one topology; the row is named by its id.
MetricsRow measure(const TopologySpec &spec, const Taxonomy &taxonomy = Taxonomy::builtin());

/// Markdown table of the six defaults (display names) followed by one
/// check line per cell. Deterministic.
std::string reproduce_report(const Taxonomy &taxonomy = Taxonomy::builtin());

} // namespace netcx
