#pragma once

// Independent reference implementations used to cross-check the library.
// They deliberately avoid the library's own algorithms.

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "netcx/graph.hpp"

namespace oracle {

/// Parses "a.b.c.d/len" by hand into an inclusive [first, last] range.
std::pair<std::uint64_t, std::uint64_t> range_of(const std::string &cidr);

bool contains_by_range(const std::string &outer, const std::string &inner);

/// All (outer, inner) literal pairs of strict containment with no literal
/// strictly between them. Quadratic/cubic on purpose.
std::set<std::pair<std::string, std::string>> reduced_containment(const std::vector<std::string> &cidrs);

/// Edge-by-edge incidence tally per literal vertex, contains edges skipped.
std::size_t ip_excess_degree(const netcx::NetGraph &graph);

/// Contains edges of the graph as (outer, inner) cidr strings.
std::set<std::pair<std::string, std::string>> contains_pairs(const netcx::NetGraph &graph);

/// Random canonical prefix drawn from a small pool so containment is common.
std::string random_cidr(std::mt19937 &rng);

struct RandomGraphOptions {
  std::size_t max_vertices = 50;
  std::size_t max_edges = 120;
  bool derive_contains = true;
};

/// Random well-formed graph over a fixed test taxonomy ("rnd" dialect):
/// types p0..p2 policy, i0..i2 infrastructure (i0 endpoint), ipv4 literal.
netcx::NetGraph random_graph(std::mt19937 &rng, const RandomGraphOptions &options = {});

const netcx::Taxonomy &random_taxonomy();

/// Copy of `graph` with vertex ids/display names renamed by a random
/// bijection and the vertex order shuffled.
netcx::NetGraph relabel(const netcx::NetGraph &graph, std::mt19937 &rng);

/// Copy of `graph` without its contains edges.
netcx::NetGraph drop_contains(const netcx::NetGraph &graph);

} // namespace oracle
