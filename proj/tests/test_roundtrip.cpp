#include <doctest.h>

#include "netcx/emit.hpp"
#include "netcx/reference.hpp"
#include "netcx/resource.hpp"

using namespace netcx;

namespace {

MetricsRow row_of(const ResourceSet &set) {
  return compute_metrics(build_graph(set, Taxonomy::builtin(), "t"), "t");
}

ResourceSet reparse(TopologyId id, const ResourceSet &set) {
  return parse_sources(dialect_of(id), emit_native(dialect_of(id), set));
}

} // namespace

TEST_CASE("native formats round-trip to the same metrics") {
  TopologyParams odd;
  odd.app_units = 3;
  odd.tiers = 3;
  odd.shared_services = 2;
  odd.endpoints_per_tier = 3;
  for (const auto &params : {TopologyParams{}, odd}) {
    for (auto id : all_topologies()) {
      CAPTURE(to_string(id));
      CAPTURE(params.endpoints_per_tier);
      auto set = generate({id, params});
      auto parsed = reparse(id, set);
      CHECK(parsed.warnings.empty());
      CHECK(row_of(parsed) == row_of(set));
    }
  }
}

TEST_CASE("emit and parse reach a fixed point after one pass") {
  for (auto id : all_topologies()) {
    CAPTURE(to_string(id));
    auto d = dialect_of(id);
    auto first = emit_native(d, parse_sources(d, emit_native(d, generate({id, {}}))));
    auto second = emit_native(d, parse_sources(d, first));
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
      CHECK(first[i].name == second[i].name);
      CHECK(first[i].text == second[i].text);
    }
  }
}

TEST_CASE("neutral IR round-trips exactly") {
  for (auto id : all_topologies()) {
    auto set = generate({id, {}});
    auto text = to_ir_json(set);
    auto back = from_ir_json(text);
    CHECK(back == set);
    CHECK(to_ir_json(back) == text);
  }
}

TEST_CASE("cli without acls round-trips") {
  TopologyParams p;
  p.cli_acls = false;
  auto set = gen_cli(p);
  CHECK(row_of(reparse(TopologyId::cli3, set)) == row_of(set));
}
