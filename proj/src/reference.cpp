#include "netcx/reference.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "netcx/error.hpp"
#include "netcx/report.hpp"
#include "netcx/resource.hpp"

namespace netcx {

namespace {

constexpr std::array<ReferenceRow, 6> kReference{{
    {TopologyId::azure1, 7.33, 55, 203, 8, 8, 37},
    {TopologyId::azure2, 6.42, 24, 163, 8, 8, 6},
    {TopologyId::azure3, 5.96, 22, 138, 5, 4, 6},
    {TopologyId::cli3, 4.71, 186, 40, 4, 1, 15},
    {TopologyId::k8s3, 3.08, 82, 43, 2, 3, 0},
    {TopologyId::aci3, 2.00, 0, 99, 6, 3, 0},
}};

CellCheck exact(const char *column, std::size_t expected, std::size_t actual) {
  return {column, std::to_string(expected), std::to_string(actual), expected == actual};
}

CellCheck relative(const char *column, std::size_t expected, std::size_t actual) {
  auto diff = std::abs(static_cast<double>(actual) - static_cast<double>(expected));
  bool pass = expected == 0 ? actual == 0 : diff <= kEdgeRelativeTolerance * static_cast<double>(expected) + 1e-9;
  return {column, std::to_string(expected), std::to_string(actual), pass};
}

} // namespace

std::span<const ReferenceRow> reference_rows() noexcept { return kReference; }

const ReferenceRow &reference_row(TopologyId id) {
  for (const auto &r : kReference)
    if (r.id == id)
      return r;
  throw ValidationError("no reference row for " + std::string(to_string(id)));
}

std::vector<CellCheck> check_row(const MetricsRow &row, const ReferenceRow &ref) {
  std::vector<CellCheck> out;
  auto rendered = format_ratio(row.nodes_per_endpoint);
  out.push_back({"Nodes/N_E", format_ratio(ref.nodes_per_endpoint), rendered,
                 std::abs(std::stod(rendered) - ref.nodes_per_endpoint) <= kRatioTolerance + 1e-9});
  out.push_back(relative("L-Edges", ref.l_edges, row.l_edges));
  out.push_back(relative("T-Edges", ref.t_edges, row.t_edges));
  out.push_back(exact("I-Types", ref.i_types, row.i_types));
  out.push_back(exact("P-Types", ref.p_types, row.p_types));
  out.push_back(exact("IP-ED", ref.ip_excess_degree, row.ip_excess_degree));
  return out;
}

MetricsRow measure(const TopologySpec &spec, const Taxonomy &taxonomy) {
  std::string name(to_string(spec.id));
  return compute_metrics(build_graph(generate(spec), taxonomy, name), name);
}

std::string reproduce_report(const Taxonomy &taxonomy) {
  std::vector<MetricsRow> rows;
  std::vector<MetricsRow> named;
  for (auto id : all_topologies()) {
    rows.push_back(measure({id, {}}, taxonomy));
    named.push_back(rows.back());
    named.back().topology_name = std::string(display_name(id));
  }
  std::ostringstream out;
  out << render_comparison(named, TableFormat::markdown) << '\n';
  std::size_t passed = 0, total = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (const auto &c : check_row(rows[i], reference_row(all_topologies()[i]))) {
      ++total;
      passed += c.pass;
      out << (c.pass ? "PASS " : "FAIL ") << rows[i].topology_name << ' ' << c.column << " expected " << c.expected
          << " got " << c.actual << '\n';
    }
  }
  out << passed << '/' << total << " cells within tolerance\n";
  return out.str();
}

} // namespace netcx
