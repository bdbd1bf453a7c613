// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "netcx/emit.hpp"
#include "netcx/reference.hpp"
#include "netcx/report.hpp"
#include "netcx/resource.hpp"
#include "support/oracles.hpp"

using namespace netcx;

namespace {

constexpr double kMetricsBudgetSeconds = 1.0;
constexpr double kReproduceBudgetSeconds = 5.0;
constexpr int kOracleGraphs = 200;
constexpr int kMetamorphicGraphs = 100;
constexpr int kSummaryRandomGraphs = 100;
constexpr std::size_t kTopology1Literals = 34;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string &why) {
    pass = false;
    if (!detail.empty())
      detail += "; ";
    detail += why;
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

NetGraph topology(TopologyId id) {
  return build_graph(generate({id, {}}), Taxonomy::builtin(), std::string(to_string(id)));
}

std::string name(TopologyId id) { return std::string(to_string(id)); }

Outcome ip_excess_exact() {
  Outcome o;
  auto start = std::chrono::steady_clock::now();
  std::string got;
  for (const auto &ref : reference_rows()) {
    auto row = measure({ref.id, {}});
    got += (got.empty() ? "" : ",") + std::to_string(row.ip_excess_degree);
    if (row.ip_excess_degree != ref.ip_excess_degree)
      o.fail(name(ref.id) + " expected " + std::to_string(ref.ip_excess_degree));
  }
  double elapsed = seconds_since(start);
  if (elapsed >= kMetricsBudgetSeconds)
    o.fail("took " + std::to_string(elapsed) + " s");
  o.detail = "IP-ED " + got + (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

Outcome types_exact() {
  Outcome o;
  for (const auto &ref : reference_rows()) {
    auto row = measure({ref.id, {}});
    if (row.i_types != ref.i_types || row.p_types != ref.p_types)
      o.fail(name(ref.id) + " (" + std::to_string(row.i_types) + "," + std::to_string(row.p_types) + ")");
  }
  return o;
}

Outcome density_within_tolerance() {
  Outcome o;
  std::string got;
  for (const auto &ref : reference_rows()) {
    auto rendered = format_ratio(measure({ref.id, {}}).nodes_per_endpoint);
    got += (got.empty() ? "" : ",") + rendered;
    if (std::abs(std::stod(rendered) - ref.nodes_per_endpoint) > kRatioTolerance + 1e-9)
      o.fail(name(ref.id) + " " + rendered);
  }
  o.detail = "Nodes/N_E " + got + (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

std::string read_file(const std::string &path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome edges_within_tolerance() {
  Outcome o;
  auto ledger = read_file(NETCX_SOURCE_DIR "/CALIBRATION.md");
  for (const auto &ref : reference_rows()) {
    auto row = measure({ref.id, {}});
    for (const auto &cell : check_row(row, ref)) {
      if (cell.column != "L-Edges" && cell.column != "T-Edges")
        continue;
      if (!cell.pass)
        o.fail(name(ref.id) + " " + cell.column + " " + cell.actual + " vs " + cell.expected);
      // every deviation, passing or not, must be itemised in the ledger
      if (cell.actual != cell.expected &&
          ledger.find(name(ref.id) + " | " + cell.column + " | " + cell.expected + " | " + cell.actual) ==
              std::string::npos)
        o.fail(name(ref.id) + " " + cell.column + " deviation missing from CALIBRATION.md");
    }
  }
  if (measure({TopologyId::aci3, {}}).l_edges != 0)
    o.fail("aci-3 has loose edges");
  return o;
}

Outcome density_ordering() {
  Outcome o;
  double previous = INFINITY;
  for (auto id : all_topologies()) {
    double ratio = measure({id, {}}).nodes_per_endpoint;
    if (!(ratio < previous))
      o.fail(name(id) + " not below its predecessor");
    previous = ratio;
  }
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::mt19937 rng(20240607);
  int agree = 0;
  for (int i = 0; i < kOracleGraphs; ++i) {
    auto g = oracle::random_graph(rng);
    bool ok = ip_excess_degree(g) == oracle::ip_excess_degree(g) && count_edges_by_kind(g).total() == g.edge_count();
    agree += ok;
  }
  o.detail = std::to_string(agree) + "/" + std::to_string(kOracleGraphs) + " graphs agree";
  if (agree != kOracleGraphs)
    o.pass = false;
  return o;
}

Outcome metamorphic() {
  Outcome o;
  std::mt19937 rng(777);
  int relabel_ok = 0, contains_ok = 0, monotone_ok = 0, monotone_total = 0;
  for (int i = 0; i < kMetamorphicGraphs; ++i) {
    auto g = oracle::random_graph(rng);
    auto r = oracle::relabel(g, rng);
    bool same = ip_excess_degree(r) == ip_excess_degree(g) && count_edges_by_kind(r) == count_edges_by_kind(g) &&
                count_types_by_category(r) == count_types_by_category(g) && count_endpoints(r) == count_endpoints(g);
    if (same && count_endpoints(g) > 0)
      same = compute_metrics(r, "t") == compute_metrics(g, "t");
    relabel_ok += same;

    auto stripped = oracle::drop_contains(g);
    auto a = count_edges_by_kind(g), b = count_edges_by_kind(stripped);
    contains_ok += b.loose == a.loose && b.tight == a.tight && b.contains == 0 &&
                   ip_excess_degree(stripped) == ip_excess_degree(g) &&
                   count_types_by_category(stripped) == count_types_by_category(g);
  }
  // monotonicity needs a literal that is already referenced; draw until 100 such graphs
  for (int tries = 0; monotone_total < kMetamorphicGraphs && tries < 100 * kMetamorphicGraphs; ++tries) {
    auto g = oracle::random_graph(rng);
    std::optional<VertexIndex> lit, other;
    for (const auto &e : g.edges())
      if (e.kind != EdgeKind::contains)
        for (auto v : {e.a, e.b})
          if (!lit && g.vertex(v).category == VertexCategory::address_literal)
            lit = v;
    for (VertexIndex v = 0; v < g.vertex_count() && !other; ++v)
      if (g.vertex(v).category != VertexCategory::address_literal)
        other = v;
    if (!lit || !other)
      continue;
    ++monotone_total;
    auto before = ip_excess_degree(g);
    g.add_edge(*other, *lit, EdgeKind::loose, "extra");
    monotone_ok += ip_excess_degree(g) == before + 1;
  }
  o.detail = "relabel " + std::to_string(relabel_ok) + "/" + std::to_string(kMetamorphicGraphs) + ", contains " +
             std::to_string(contains_ok) + "/" + std::to_string(kMetamorphicGraphs) + ", +1 literal edge " +
             std::to_string(monotone_ok) + "/" + std::to_string(monotone_total);
  o.pass = relabel_ok == kMetamorphicGraphs && contains_ok == kMetamorphicGraphs && monotone_ok == monotone_total &&
           monotone_total == kMetamorphicGraphs;
  return o;
}

Outcome round_trip() {
  Outcome o;
  for (auto id : all_topologies()) {
    auto set = generate({id, {}});
    auto parsed = parse_sources(dialect_of(id), emit_native(dialect_of(id), set));
    auto direct = compute_metrics(build_graph(set, Taxonomy::builtin()), "t");
    auto again = compute_metrics(build_graph(parsed, Taxonomy::builtin()), "t");
    if (!(direct == again))
      o.fail(name(id) + " row differs after " + std::string(to_string(dialect_of(id))) + " round trip");
  }
  return o;
}

bool conserves(const NetGraph &g) {
  auto s = summarize_types(g);
  std::size_t v = 0, e = 0;
  for (const auto &n : s.type_nodes)
    v += n.vertex_count;
  for (const auto &b : s.type_edges)
    e += b.edge_count;
  return v == g.vertex_count() && e == g.edge_count();
}

Outcome summary_conservation() {
  Outcome o;
  for (auto id : all_topologies())
    if (!conserves(topology(id)))
      o.fail(name(id));
  std::mt19937 rng(99);
  for (int i = 0; i < kSummaryRandomGraphs; ++i)
    if (!conserves(oracle::random_graph(rng)))
      o.fail("random graph " + std::to_string(i));
  auto summary = summarize_types(topology(TopologyId::azure1));
  bool found = false;
  for (const auto &n : summary.type_nodes)
    found |= n.type_name == "ipv4" && n.category == VertexCategory::address_literal &&
             n.vertex_count == kTopology1Literals;
  if (!found)
    o.fail("azure-1 summary lacks (ipv4, 34)");
  return o;
}

Outcome reproduce_deterministic() {
  Outcome o;
  auto start = std::chrono::steady_clock::now();
  auto first = reproduce_report();
  auto second = reproduce_report();
  double elapsed = seconds_since(start);
  if (first != second)
    o.fail("outputs differ");
  if (elapsed >= kReproduceBudgetSeconds)
    o.fail("took " + std::to_string(elapsed) + " s");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f s for two runs", elapsed);
  o.detail = buf + (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

} // namespace

int main() {
  struct Criterion {
    int number;
    const char *title;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "IP-ED exact on six defaults, under 1 s", ip_excess_exact},
      {2, "I-Types/P-Types exact", types_exact},
      {3, "Nodes/N_E within 0.05", density_within_tolerance},
      {4, "L/T edges within 10%, ACI L = 0, deviations itemised", edges_within_tolerance},
      {5, "Nodes/N_E strictly decreasing", density_ordering},
      {6, "IP-ED oracle equivalence on 200 random graphs", oracle_equivalence},
      {7, "metamorphic relations on 100 random graphs", metamorphic},
      {8, "native round-trip keeps MetricsRow", round_trip},
      {9, "type summary conservation", summary_conservation},
      {10, "reproduce deterministic, under 5 s", reproduce_deterministic},
  };
  int failed = 0;
  for (const auto &c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception &e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += !o.pass;
    std::printf("%s criterion %d: %s%s%s\n", o.pass ? "PASS" : "FAIL", c.number, c.title,
                o.detail.empty() ? "" : " | ", o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
