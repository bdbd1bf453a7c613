#include <doctest.h>

#include <random>

#include "netcx/error.hpp"
#include "netcx/reference.hpp"
#include "netcx/report.hpp"
#include "netcx/resource.hpp"
#include "netcx/topologies.hpp"
#include "support/oracles.hpp"

using namespace netcx;

namespace {

NetGraph graph_of(TopologyId id, const TopologyParams &params = {}) {
  return build_graph(generate({id, params}), Taxonomy::builtin(), std::string(to_string(id)));
}

} // namespace

TEST_CASE("default topologies: columns held exactly to the reference rows") {
  for (const auto &ref : reference_rows()) {
    CAPTURE(to_string(ref.id));
    auto row = measure({ref.id, {}});
    CHECK(row.endpoint_count == 24);
    CHECK(row.ip_excess_degree == ref.ip_excess_degree);
    CHECK(row.i_types == ref.i_types);
    CHECK(row.p_types == ref.p_types);
    CHECK(format_ratio(row.nodes_per_endpoint) == format_ratio(ref.nodes_per_endpoint));
  }
}

TEST_CASE("default topologies: calibrated rows") {
  // achieved values recorded in CALIBRATION.md
  struct Expected {
    TopologyId id;
    std::size_t vertices, loose, tight, contains;
  };
  const Expected rows[] = {
      {TopologyId::azure1, 176, 71, 186, 0}, {TopologyId::azure2, 154, 26, 162, 0},
      {TopologyId::azure3, 143, 22, 138, 0}, {TopologyId::cli3, 113, 186, 40, 0},
      {TopologyId::k8s3, 74, 82, 43, 0},     {TopologyId::aci3, 48, 0, 97, 0},
  };
  for (const auto &e : rows) {
    CAPTURE(to_string(e.id));
    auto row = measure({e.id, {}});
    CHECK(row.vertex_count == e.vertices);
    CHECK(row.l_edges == e.loose);
    CHECK(row.t_edges == e.tight);
    CHECK(row.contains_edges >= e.contains);
  }
}

TEST_CASE("topology 1 carries 34 address literals") {
  auto g = graph_of(TopologyId::azure1);
  auto summary = summarize_types(g);
  auto it = std::find_if(summary.type_nodes.begin(), summary.type_nodes.end(),
                         [](const TypeNode &n) { return n.type_name == "ipv4"; });
  REQUIRE(it != summary.type_nodes.end());
  CHECK(it->vertex_count == 34);
  CHECK(oracle::ip_excess_degree(g) == 37);
}

TEST_CASE("node density strictly decreases across the six defaults") {
  double previous = 1e9;
  for (auto id : all_topologies()) {
    auto ratio = measure({id, {}}).nodes_per_endpoint;
    CHECK(ratio < previous);
    previous = ratio;
  }
}

TEST_CASE("generated graphs are well-formed and deterministic") {
  for (auto id : all_topologies()) {
    CAPTURE(to_string(id));
    CHECK(validate_graph(graph_of(id), Taxonomy::builtin()).empty());
    CHECK(to_ir_json(generate({id, {}})) == to_ir_json(generate({id, {}})));
  }
}

TEST_CASE("type sets do not depend on size") {
  TopologyParams doubled;
  doubled.endpoints_per_tier = 4;
  for (auto id : all_topologies()) {
    CAPTURE(to_string(id));
    auto base = measure({id, {}});
    auto big = measure({id, doubled});
    CHECK(big.endpoint_count == 48);
    CHECK(big.i_types == base.i_types);
    CHECK(big.p_types == base.p_types);
  }
}

TEST_CASE("k8s and aci never type an address") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> small(1, 6);
  for (int i = 0; i < 25; ++i) {
    TopologyParams p;
    p.app_units = small(rng) - 1;
    p.tiers = small(rng);
    p.shared_services = small(rng);
    p.endpoints_per_tier = small(rng);
    for (auto id : {TopologyId::k8s3, TopologyId::aci3}) {
      auto g = graph_of(id, p);
      CHECK(ip_excess_degree(g) == 0);
      if (id == TopologyId::aci3)
        CHECK(count_edges_by_kind(g).loose == 0);
    }
  }
}

TEST_CASE("cli without access lists keeps only svi and route reuse") {
  TopologyParams p;
  p.cli_acls = false;
  auto g = graph_of(TopologyId::cli3, p);
  // 4 shared svis repeat their subnet on the second switch, the default route is typed on both
  CHECK(ip_excess_degree(g) == 5);
  CHECK(oracle::ip_excess_degree(g) == 5);
  CHECK(count_types_by_category(g).policy == 0);
}

TEST_CASE("k8s with a single namespace, tier and pod") {
  TopologyParams p;
  p.app_units = 0;
  p.shared_services = 1;
  p.endpoints_per_tier = 1;
  auto set = gen_k8s(p);
  // namespace, pod, two labels on the pod, service, policy
  CHECK(set.resources.size() == 6);
  auto row = compute_metrics(build_graph(set, Taxonomy::builtin()), "tiny");
  CHECK(row.vertex_count == 6);
  CHECK(row.nodes_per_endpoint == 6.0);
}

TEST_CASE("parameters and ids are validated") {
  TopologyParams bad;
  bad.tiers = 0;
  CHECK_THROWS_AS(gen_azure(1, bad), ValidationError);
  bad = {};
  bad.endpoints_per_tier = 251;
  CHECK_THROWS_AS(gen_cli(bad), ValidationError);
  CHECK_THROWS_AS(gen_azure(4), ValidationError);
  for (auto id : all_topologies())
    CHECK(parse_topology_id(to_string(id)) == id);
  CHECK_FALSE(parse_topology_id("azure-4"));
  CHECK(display_name(TopologyId::aci3) == "Topology 3 (ACI)");
  CHECK(dialect_of(TopologyId::k8s3) == Dialect::k8s);
}
