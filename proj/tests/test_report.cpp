#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "netcx/error.hpp"
#include "netcx/reference.hpp"
#include "netcx/report.hpp"
#include "netcx/resource.hpp"
#include "support/dot_reader.hpp"
#include "support/graphml_reader.hpp"
#include "support/oracles.hpp"

using namespace netcx;

namespace {

NetGraph vms_and_nics() {
  NetGraph g("pair");
  for (int i = 0; i < 2; ++i) {
    Vertex vm{"vm:" + std::to_string(i), "azure", "vm", "vm", VertexCategory::infrastructure, true, {}};
    Vertex nic{"nic:" + std::to_string(i), "azure", "nic", "nic", VertexCategory::infrastructure, false, {}};
    auto a = g.add_vertex(vm);
    auto b = g.add_vertex(nic);
    g.add_edge(a, b, EdgeKind::tight, "networkInterfaces");
  }
  return g;
}

void check_conservation(const NetGraph &g) {
  auto s = summarize_types(g);
  std::size_t vertices = 0, edges = 0;
  for (const auto &n : s.type_nodes)
    vertices += n.vertex_count;
  std::set<std::tuple<std::string, std::string, EdgeKind>> seen;
  for (const auto &e : s.type_edges) {
    edges += e.edge_count;
    CHECK(e.type_a <= e.type_b);
    CHECK(seen.insert({e.type_a, e.type_b, e.kind}).second);
  }
  CHECK(vertices == g.vertex_count());
  CHECK(edges == g.edge_count());
}

NetGraph topology(TopologyId id) {
  return build_graph(generate({id, {}}), Taxonomy::builtin(), std::string(to_string(id)));
}

std::string read_file(const std::string &path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

} // namespace

TEST_CASE("summaries aggregate by type and kind") {
  auto s = summarize_types(vms_and_nics());
  REQUIRE(s.type_nodes.size() == 2);
  CHECK(s.type_nodes[0] == TypeNode{"nic", VertexCategory::infrastructure, 2});
  CHECK(s.type_nodes[1] == TypeNode{"vm", VertexCategory::infrastructure, 2});
  REQUIRE(s.type_edges.size() == 1);
  CHECK(s.type_edges[0] == TypeEdge{"nic", "vm", EdgeKind::tight, 2});
  CHECK(summarize_types(NetGraph{}) == TypeSummaryGraph{});
}

TEST_CASE("summaries conserve vertex and edge totals") {
  for (auto id : all_topologies())
    check_conservation(topology(id));
  std::mt19937 rng(3);
  for (int i = 0; i < 100; ++i)
    check_conservation(oracle::random_graph(rng));
}

TEST_CASE("dot export") {
  SUBCASE("empty summary is a valid empty graph") {
    auto doc = dot::parse(export_dot({}));
    CHECK_FALSE(doc.directed);
    CHECK(doc.nodes.empty());
    CHECK(doc.edges.empty());
  }
  SUBCASE("one type gives one node statement") {
    TypeSummaryGraph s{{{"vm", VertexCategory::infrastructure, 3}}, {}};
    auto doc = dot::parse(export_dot(s));
    REQUIRE(doc.nodes.size() == 1);
    CHECK(doc.nodes[0].id == "vm");
  }
  SUBCASE("topology 3 summary parses and keeps every bundle") {
    auto summary = summarize_types(topology(TopologyId::azure3));
    auto text = export_dot(summary, "Topology 3 (Azure)");
    auto doc = dot::parse(text);
    CHECK(doc.name == "Topology 3 (Azure)");
    CHECK(doc.nodes.size() == summary.type_nodes.size());
    CHECK(doc.edges.size() == summary.type_edges.size());
    CHECK(export_dot(summary, "Topology 3 (Azure)") == text);
  }
  SUBCASE("colours and scaling") {
    auto g = topology(TopologyId::cli3);
    auto doc = dot::parse(export_dot(summarize_types(g)));
    bool saw_red = false, saw_blue = false, saw_grey = false;
    for (const auto &e : doc.edges) {
      auto literal = e.a == "ipv4" || e.b == "ipv4";
      const auto &color = e.attributes.at("color");
      if (literal)
        CHECK(color == "grey");
      else if (e.attributes.at("kind") == "tight")
        CHECK(color == "red");
      else
        CHECK(color == "blue");
      if (e.attributes.at("kind") == "contains")
        CHECK(e.attributes.at("style") == "dashed");
      saw_red |= color == "red";
      saw_blue |= color == "blue";
      saw_grey |= color == "grey";
    }
    CHECK((saw_red && saw_blue && saw_grey));

    TypeSummaryGraph s{{{"a", VertexCategory::policy, 1}, {"b", VertexCategory::policy, 200}},
                       {{"a", "a", EdgeKind::loose, 1}, {"a", "b", EdgeKind::loose, 200}}};
    auto scaled = dot::parse(export_dot(s));
    CHECK(std::stod(scaled.nodes[0].attributes.at("width")) < std::stod(scaled.nodes[1].attributes.at("width")));
    CHECK(std::stod(scaled.edges[0].attributes.at("penwidth")) < std::stod(scaled.edges[1].attributes.at("penwidth")));
  }
  SUBCASE("names needing quotes survive") {
    TypeSummaryGraph s{{{"we\"ird type", VertexCategory::policy, 1}}, {}};
    CHECK(dot::parse(export_dot(s, "a \"b\"")).nodes[0].id == "we\"ird type");
  }
}

TEST_CASE("graphml export") {
  SUBCASE("empty graph") {
    auto g = graphml::read(export_graphml(NetGraph{}));
    CHECK(g.vertex_count() == 0);
  }
  SUBCASE("one vertex carries all attributes") {
    NetGraph g("one");
    g.add_vertex(make_address_vertex(Ipv4Prefix::parse("10.0.0.0/8"), "azure"));
    auto text = export_graphml(g);
    for (const char *key : {"type_name", "category", "is_endpoint", "cidr"})
      CHECK(text.find(std::string("<data key=\"") + key + "\">") != std::string::npos);
    auto back = graphml::read(text);
    REQUIRE(back.vertex_count() == 1);
    CHECK(back.vertex(0).cidr == Ipv4Prefix::parse("10.0.0.0/8"));
  }
  SUBCASE("round trip keeps the metrics row") {
    for (auto id : all_topologies()) {
      CAPTURE(to_string(id));
      auto g = topology(id);
      auto text = export_graphml(g);
      CHECK(export_graphml(g) == text);
      auto back = graphml::read(text);
      CHECK(compute_metrics(back, "x") == compute_metrics(g, "x"));
    }
    std::mt19937 rng(17);
    for (int i = 0; i < 50; ++i) {
      auto g = oracle::random_graph(rng);
      auto back = graphml::read(export_graphml(g));
      CHECK(back.vertex_count() == g.vertex_count());
      CHECK(count_edges_by_kind(back) == count_edges_by_kind(g));
      CHECK(ip_excess_degree(back) == ip_excess_degree(g));
    }
  }
}

TEST_CASE("comparison tables") {
  MetricsRow row;
  row.topology_name = "azure-1";
  row.nodes_per_endpoint = 176.0 / 24.0;
  row.l_edges = 55;
  row.t_edges = 203;
  row.i_types = 8;
  row.p_types = 8;
  row.ip_excess_degree = 37;
  auto csv = render_comparison(std::span(&row, 1), TableFormat::csv);
  CHECK(csv == "Topology,Nodes/N_E,L-Edges,T-Edges,I-Types,P-Types,IP-ED\nazure-1,7.33,55,203,8,8,37\n");

  row.nodes_per_endpoint = 2.0;
  auto md = render_comparison(std::span(&row, 1), TableFormat::markdown);
  CHECK(md.find("| azure-1 | 2.00 | 55 | 203 | 8 | 8 | 37 |") != std::string::npos);
  CHECK(std::count(md.begin(), md.end(), '\n') == 3);

  CHECK_THROWS_AS(render_comparison({}, TableFormat::csv), ValidationError);

  std::vector<MetricsRow> six;
  for (auto id : all_topologies())
    six.push_back(measure({id, {}}));
  auto table = render_comparison(six, TableFormat::csv);
  CHECK(std::count(table.begin(), table.end(), '\n') == 7);
  CHECK(table.find("aci-3,2.00,0,97,6,3,0") != std::string::npos);
}

TEST_CASE("reproduce report matches the golden file") {
  auto text = reproduce_report();
  CHECK(text == reproduce_report());
  CHECK(text == read_file(NETCX_GOLDEN_DIR "/reproduce.md"));
  CHECK(text.find("| Topology 3 (ACI) | 2.00 | 0 |") != std::string::npos);
  CHECK(text.find("| Topology 1 (Azure) | 7.33 |") != std::string::npos);
}
