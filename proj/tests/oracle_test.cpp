#include <doctest.h>

#include <algorithm>

#include "hkcut/cut_ops.hpp"
#include "hkcut/oracle.hpp"
#include "test_helpers.hpp"

using namespace hkcut;
using testing::InstanceStream;

TEST_CASE("partition enumeration counts match Stirling numbers") {
  auto count = [](int n, int k) {
    std::int64_t c = 0;
    for_each_k_partition(n, k, [&](const std::vector<int>&) { ++c; });
    return c;
  };
  CHECK(count(4, 2) == 7);
  CHECK(count(5, 2) == 15);
  CHECK(count(5, 3) == 25);
  CHECK(count(8, 3) == 966);
  CHECK(count(4, 4) == 1);
}

TEST_CASE("brute force on the spanning hyperedge scans 7 partitions for n=4, k=2") {
  Hypergraph g = make_spanning(4);
  EnumerationReport report = brute_force_min_k_cutsets(g, 2);
  CHECK(report.opt_value == 1);
  REQUIRE(report.family.size() == 1);
  CHECK(report.family[0].edge_ids == std::vector<EdgeId>{0});
  CHECK(report.stats.candidate_sets == 7);  // partitions scanned
}

TEST_CASE("brute force on the 4-cycle finds 6 minimum cut-sets") {
  Hypergraph g = testing::cycle4();
  EnumerationReport report = brute_force_min_k_cutsets(g, 2);
  CHECK(report.opt_value == 2);
  CHECK(report.family.size() == 6);  // every pair of the 4 edges
  for (const CutSet& cut : report.family) {
    CHECK(cut.edge_ids.size() == 2);
    CHECK(cut.total_cost == 2);
  }
}

TEST_CASE("brute force on the triangle for k=3 returns all three edges") {
  Hypergraph g = testing::triangle();
  EnumerationReport report = brute_force_min_k_cutsets(g, 3);
  CHECK(report.opt_value == 3);
  REQUIRE(report.family.size() == 1);
  CHECK(report.family[0].edge_ids == std::vector<EdgeId>{0, 1, 2});
}

TEST_CASE("brute force includes the empty cut-set when enough components exist") {
  Hypergraph g(5, {EdgeSpec{{0, 1}}, EdgeSpec{{2, 3}}});  // 3 components
  EnumerationReport report = brute_force_min_k_cutsets(g, 2);
  CHECK(report.opt_value == 0);
  REQUIRE(report.family.size() == 1);
  CHECK(report.family[0].edge_ids.empty());
}

TEST_CASE("brute force guards") {
  Hypergraph big = make_spanning(13);
  CHECK_THROWS_AS(brute_force_min_k_cutsets(big, 2), std::invalid_argument);
  Hypergraph g = testing::cycle4();
  CHECK_THROWS_AS(brute_force_min_k_cutsets(g, 1), std::invalid_argument);
  CHECK_THROWS_AS(brute_force_min_k_cutsets(g, 5), std::invalid_argument);
}

TEST_CASE("oracle family for k=2 never exceeds n(n-1)/2") {
  InstanceStream stream(606);
  for (int trial = 0; trial < 60; ++trial) {
    Hypergraph g = stream.next();
    const int n = g.num_vertices();
    EnumerationReport report = brute_force_min_k_cutsets(g, 2);
    CHECK(static_cast<int>(report.family.size()) <= n * (n - 1) / 2);
  }
}

TEST_CASE("oracle output is invariant under edge relabeling") {
  InstanceStream stream(707);
  for (int trial = 0; trial < 25; ++trial) {
    Hypergraph g = stream.next();
    const int m = g.num_edges();
    // Reverse the edge list and map the result's ids back.
    std::vector<EdgeSpec> reversed;
    for (EdgeId id = m - 1; id >= 0; --id) {
      reversed.push_back(EdgeSpec{g.edge(id).vertices.to_vertices(), g.edge(id).cost});
    }
    Hypergraph h(g.num_vertices(), reversed);
    EnumerationReport expect = brute_force_min_k_cutsets(g, 2);
    EnumerationReport actual = brute_force_min_k_cutsets(h, 2);
    CHECK(expect.opt_value == actual.opt_value);
    std::vector<CutSet> remapped;
    for (const CutSet& cut : actual.family) {
      CutSet back;
      back.total_cost = cut.total_cost;
      for (EdgeId id : cut.edge_ids) back.edge_ids.push_back(m - 1 - id);
      std::sort(back.edge_ids.begin(), back.edge_ids.end());
      remapped.push_back(std::move(back));
    }
    std::sort(remapped.begin(), remapped.end());
    CHECK(expect.family == remapped);
  }
}

TEST_CASE("all minimum terminal cuts on the spanning hyperedge") {
  Hypergraph g = make_spanning(5);
  auto cuts = brute_force_all_min_terminal_cuts(g, VertexSet(5, {0}), VertexSet(5, {1}));
  CHECK(cuts.size() == 8);  // 2^{n-2} sets containing 0 avoiding 1
  for (const VertexSet& u : cuts) {
    CHECK(u.test(0));
    CHECK(!u.test(1));
    CHECK(cut_value(g, u) == 1);
  }
}

TEST_CASE("all minimum terminal cuts on the 4-cycle separating opposite vertices") {
  Hypergraph g = testing::cycle4();
  auto cuts = brute_force_all_min_terminal_cuts(g, VertexSet(4, {0}), VertexSet(4, {2}));
  // All four candidates {0},{0,1},{0,3},{0,1,3} cut exactly two edges.
  REQUIRE(cuts.size() == 4);
  CHECK(cuts[0] == VertexSet(4, {0}));
  CHECK(cuts[1] == VertexSet(4, {0, 1}));
  CHECK(cuts[2] == VertexSet(4, {0, 1, 3}));
  CHECK(cuts[3] == VertexSet(4, {0, 3}));
  for (const VertexSet& u : cuts) CHECK(cut_value(g, u) == 2);
}

TEST_CASE("terminal cut oracle guards") {
  Hypergraph g = testing::cycle4();
  CHECK_THROWS_AS(brute_force_all_min_terminal_cuts(g, VertexSet(4), VertexSet(4, {1})),
                  std::invalid_argument);
  CHECK_THROWS_AS(brute_force_all_min_terminal_cuts(g, VertexSet(4, {0, 1}), VertexSet(4, {1})),
                  std::invalid_argument);
  Hypergraph big = make_spanning(17);
  CHECK_THROWS_AS(brute_force_all_min_terminal_cuts(big, VertexSet(17, {0}), VertexSet(17, {1})),
                  std::invalid_argument);
}
