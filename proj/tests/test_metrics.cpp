#include <doctest.h>

#include <random>

#include "netcx/error.hpp"
#include "netcx/metrics.hpp"
#include "support/oracles.hpp"

using namespace netcx;

namespace {

VertexIndex add_object(NetGraph &g, const std::string &type, const std::string &name,
                       VertexCategory category = VertexCategory::policy, bool endpoint = false) {
  Vertex v;
  v.id = type + ":" + name;
  v.dialect = "azure";
  v.type_name = type;
  v.display_name = name;
  v.category = category;
  v.is_endpoint = endpoint;
  return g.add_vertex(std::move(v));
}

VertexIndex add_literal(NetGraph &g, const char *cidr) {
  return g.add_vertex(make_address_vertex(Ipv4Prefix::parse(cidr), "azure"));
}

} // namespace

TEST_CASE("empty graph") {
  NetGraph g;
  CHECK(count_endpoints(g) == 0);
  CHECK(ip_excess_degree(g) == 0);
  CHECK(count_edges_by_kind(g) == EdgeCounts{});
  CHECK(count_types_by_category(g) == TypeCounts{});
}

TEST_CASE("a literal typed once has no excess") {
  NetGraph g;
  auto r = add_object(g, "route", "r1");
  g.add_edge(r, add_literal(g, "10.0.0.0/16"), EdgeKind::loose, "addressPrefix");
  CHECK(ip_excess_degree(g) == 0);
}

TEST_CASE("contains edges are excluded from the excess degree") {
  NetGraph g;
  auto lit = add_literal(g, "10.0.0.0/16");
  for (int i = 0; i < 3; ++i)
    g.add_edge(add_object(g, "route", "r" + std::to_string(i)), lit, EdgeKind::loose, "addressPrefix");
  g.add_edge(add_object(g, "vnet", "v", VertexCategory::infrastructure), lit, EdgeKind::loose, "addressPrefixes");
  g.add_vertex(make_address_vertex(Ipv4Prefix::parse("10.0.1.0/24"), "azure"));
  g.add_vertex(make_address_vertex(Ipv4Prefix::parse("10.0.2.0/24"), "azure"));
  g = derive_contains_edges(std::move(g));
  REQUIRE(count_edges_by_kind(g).contains == 2);
  CHECK(ip_excess_degree(g) == 3);
  CHECK(oracle::ip_excess_degree(g) == 3);
}

TEST_CASE("self-loop on a literal counts twice") {
  NetGraph g;
  auto lit = add_literal(g, "10.0.0.0/8");
  g.add_edge(lit, lit, EdgeKind::loose, "self");
  CHECK(ip_excess_degree(g) == 1);
  CHECK(oracle::ip_excess_degree(g) == 1);
}

TEST_CASE("literals count in neither type column") {
  NetGraph g;
  add_literal(g, "10.0.0.0/8");
  add_literal(g, "10.1.0.0/16");
  CHECK(count_types_by_category(g) == TypeCounts{0, 0});
}

TEST_CASE("types are distinct names, not vertices") {
  NetGraph g;
  add_object(g, "vm", "a", VertexCategory::infrastructure, true);
  add_object(g, "vm", "b", VertexCategory::infrastructure, true);
  add_object(g, "nsg", "n");
  add_object(g, "nsgRule", "r1");
  add_object(g, "nsgRule", "r2");
  CHECK(count_types_by_category(g) == TypeCounts{1, 2});
  CHECK(count_endpoints(g) == 2);
}

TEST_CASE("compute_metrics") {
  SUBCASE("48 vertices over 24 endpoints is exactly 2") {
    NetGraph g;
    for (int i = 0; i < 24; ++i)
      add_object(g, "port", std::to_string(i), VertexCategory::infrastructure, true);
    for (int i = 0; i < 24; ++i)
      add_object(g, "epg", std::to_string(i));
    auto row = compute_metrics(g, "x");
    CHECK(row.vertex_count == 48);
    CHECK(row.nodes_per_endpoint == 2.0);
  }
  SUBCASE("endpoints only gives exactly 1") {
    NetGraph g;
    for (int i = 0; i < 5; ++i)
      add_object(g, "vm", std::to_string(i), VertexCategory::infrastructure, true);
    CHECK(compute_metrics(g, "x").nodes_per_endpoint == 1.0);
  }
  SUBCASE("no endpoints is an error naming the topology") {
    NetGraph g;
    add_object(g, "nsg", "n");
    try {
      compute_metrics(g, "my-topology");
      FAIL("expected MetricsError");
    } catch (const MetricsError &e) {
      CHECK(std::string(e.what()).find("my-topology") != std::string::npos);
      CHECK(std::string(e.what()).find("no endpoints") != std::string::npos);
    }
  }
}

TEST_CASE("random graphs: oracle agreement and kind counts sum to the total") {
  std::mt19937 rng(42);
  for (int i = 0; i < 200; ++i) {
    auto g = oracle::random_graph(rng);
    CHECK(ip_excess_degree(g) == oracle::ip_excess_degree(g));
    CHECK(count_edges_by_kind(g).total() == g.edge_count());
  }
}

TEST_CASE("random graphs: metamorphic relations") {
  std::mt19937 rng(4242);
  int rows_checked = 0;
  for (int i = 0; i < 100; ++i) {
    auto g = oracle::random_graph(rng);
    auto relabelled = oracle::relabel(g, rng);
    CHECK(ip_excess_degree(relabelled) == ip_excess_degree(g));
    CHECK(count_edges_by_kind(relabelled) == count_edges_by_kind(g));
    CHECK(count_types_by_category(relabelled) == count_types_by_category(g));
    if (count_endpoints(g) > 0) {
      auto a = compute_metrics(g, "t");
      auto b = compute_metrics(relabelled, "t");
      CHECK(a == b);
      ++rows_checked;
    }

    auto stripped = oracle::drop_contains(g);
    auto before = count_edges_by_kind(g), after = count_edges_by_kind(stripped);
    CHECK(after.contains == 0);
    CHECK(after.loose == before.loose);
    CHECK(after.tight == before.tight);
    CHECK(ip_excess_degree(stripped) == ip_excess_degree(g));
  }
  CHECK(rows_checked > 30);
}

TEST_CASE("one more loose edge on a referenced literal adds exactly one") {
  std::mt19937 rng(99);
  int applied = 0;
  for (int i = 0; i < 100; ++i) {
    auto g = oracle::random_graph(rng);
    std::optional<VertexIndex> lit, other;
    for (const auto &e : g.edges()) {
      if (e.kind == EdgeKind::contains)
        continue;
      for (auto v : {e.a, e.b})
        if (!lit && g.vertex(v).category == VertexCategory::address_literal)
          lit = v;
    }
    for (VertexIndex v = 0; v < g.vertex_count(); ++v)
      if (g.vertex(v).category != VertexCategory::address_literal)
        other = v;
    if (!lit || !other)
      continue;
    auto before = ip_excess_degree(g);
    g.add_edge(*other, *lit, EdgeKind::loose, "extra");
    CHECK(ip_excess_degree(g) == before + 1);
    ++applied;
  }
  CHECK(applied > 30);
}
