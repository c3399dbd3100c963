#include <doctest.h>

#include "hkcut/cut_ops.hpp"
#include "hkcut/enumerate.hpp"
#include "hkcut/oracle.hpp"
#include "hkcut/report_json.hpp"
#include "test_helpers.hpp"

using namespace hkcut;
using testing::InstanceStream;

namespace {

std::int64_t binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  std::int64_t result = 1;
  for (int i = 1; i <= r; ++i) result = result * (n - r + i) / i;
  return result;
}

}  // namespace

TEST_CASE("spanning hyperedge has one minimum k-cut-set for every k") {
  for (int n = 3; n <= 6; ++n) {
    Hypergraph g = make_spanning(n);
    for (int k = 2; k <= n; ++k) {
      EnumerationReport report = enum_min_k_cutsets(g, k);
      CHECK(report.opt_value == 1);
      REQUIRE(report.family.size() == 1);
      CHECK(report.family[0].edge_ids == std::vector<EdgeId>{0});
    }
  }
}

TEST_CASE("cycle has n(n-1)/2 minimum cut-sets") {
  for (int n : {4, 5, 6, 7}) {
    Hypergraph g = make_cycle(n);
    EnumerationReport report = enum_min_k_cutsets(g, 2);
    CHECK(report.opt_value == 2);
    CHECK(static_cast<std::int64_t>(report.family.size()) == binomial(n, 2));
  }
}

TEST_CASE("k bounds are validated") {
  Hypergraph g = testing::cycle4();
  CHECK_THROWS_AS(enum_min_k_cutsets(g, 1), std::invalid_argument);
  CHECK_THROWS_AS(enum_min_k_cutsets(g, 5), std::invalid_argument);
}

TEST_CASE("instances with k or more components short-circuit to the empty cut-set") {
  Hypergraph g(6, {EdgeSpec{{0, 1}}, EdgeSpec{{2, 3}}, EdgeSpec{{4, 5}}});
  for (int k : {2, 3}) {
    EnumerationReport report = enum_min_k_cutsets(g, k);
    CHECK(report.opt_value == 0);
    REQUIRE(report.family.size() == 1);
    CHECK(report.family[0].edge_ids.empty());
    CHECK(report.stats.terminal_cut_calls == 0);
  }
}

TEST_CASE("enumeration matches the brute-force oracle on random instances") {
  InstanceStream stream(1111);
  for (int trial = 0; trial < 30; ++trial) {
    Hypergraph g = stream.next(7, 10);
    for (int k : {2, 3}) {
      if (k > g.num_vertices()) continue;
      EnumerationReport fast = enum_min_k_cutsets(g, k);
      EnumerationReport slow = brute_force_min_k_cutsets(g, k);
      CHECK(fast.opt_value == slow.opt_value);
      CHECK(fast.family == slow.family);
    }
  }
}

TEST_CASE("every emitted cut-set separates at least k components") {
  InstanceStream stream(1212);
  for (int trial = 0; trial < 20; ++trial) {
    Hypergraph g = stream.next(7, 9);
    for (int k : {2, 3}) {
      if (k > g.num_vertices()) continue;
      EnumerationReport report = enum_min_k_cutsets(g, k);
      for (const CutSet& cut : report.family) {
        CHECK(static_cast<int>(components_after_removal(g, cut).size()) >= k);
        CHECK(cut.total_cost == report.opt_value);
      }
    }
  }
}

TEST_CASE("candidate volume stays within the loop-structure bound") {
  InstanceStream stream(1313);
  for (int trial = 0; trial < 10; ++trial) {
    Hypergraph g = stream.next(6, 8);
    const int n = g.num_vertices();
    for (int k : {2, 3}) {
      if (k > n) continue;
      EnumerationReport report = enum_min_k_cutsets(g, k);
      std::int64_t bound = 0;
      for (int a = 1; a <= 2 * k - 1; ++a) {
        for (int b = 1; b <= 2 * k - 1; ++b) bound += binomial(n, a) * binomial(n - a, b);
      }
      CHECK(report.stats.candidate_sets <= bound);
      CHECK(report.stats.terminal_cut_calls <= bound);
    }
  }
}

TEST_CASE("fast k=2 path equals the general algorithm") {
  InstanceStream stream(1414);
  for (int trial = 0; trial < 25; ++trial) {
    Hypergraph g = stream.next(7, 10);
    EnumerationReport fast = enum_min_cutsets_k2(g);
    EnumerationReport general = enum_min_k_cutsets(g, 2);
    CHECK(fast.opt_value == general.opt_value);
    CHECK(fast.family == general.family);
    const int n = g.num_vertices();
    CHECK(fast.stats.terminal_cut_calls <= static_cast<std::int64_t>(n) * (n - 1) / 2);
  }
}

TEST_CASE("fast k=2 path on the cycle uses exactly C(n,2) queries") {
  Hypergraph g = make_cycle(6);
  EnumerationReport report = enum_min_cutsets_k2(g);
  CHECK(report.opt_value == 2);
  CHECK(report.family.size() == 15);
  CHECK(report.stats.terminal_cut_calls == 15);
}

TEST_CASE("fast k=2 path handles disconnected and tiny inputs") {
  Hypergraph g(4, {EdgeSpec{{0, 1}}, EdgeSpec{{2, 3}}});
  EnumerationReport report = enum_min_cutsets_k2(g);
  CHECK(report.opt_value == 0);
  REQUIRE(report.family.size() == 1);
  CHECK(report.family[0].edge_ids.empty());

  Hypergraph single(1, {});
  CHECK_THROWS_AS(enum_min_cutsets_k2(single), std::invalid_argument);
}

TEST_CASE("reports are identical across thread counts") {
  InstanceStream stream(1515);
  for (int trial = 0; trial < 6; ++trial) {
    Hypergraph g = stream.next(7, 10);
    for (int k : {2, 3}) {
      if (k > g.num_vertices()) continue;
      EnumerateOptions one;
      one.threads = 1;
      EnumerateOptions four;
      four.threads = 4;
      std::string a = report_to_json(enum_min_k_cutsets(g, k, one));
      std::string b = report_to_json(enum_min_k_cutsets(g, k, four));
      CHECK(a == b);
    }
  }
}

// Terminal pairs with S and T jointly covering V cannot be skipped: on the
// 3-vertex instance with doubled edge {0,2} and edge {1,2}, the only witness
// pair for the minimum 3-cut-set is S={2}, T={0,1}, which spans V.
TEST_CASE("spanning terminal pairs can carry the only witness") {
  Hypergraph g(3, {EdgeSpec{{0, 2}, 2}, EdgeSpec{{1, 2}, 2}, EdgeSpec{{0, 2}, 2}});
  EnumerationReport report = enum_min_k_cutsets(g, 3);
  CHECK(report.opt_value == 6);
  REQUIRE(report.family.size() == 1);
  CHECK(report.family[0].edge_ids == std::vector<EdgeId>{0, 1, 2});
  CHECK(report.family == brute_force_min_k_cutsets(g, 3).family);
}

TEST_CASE("min_k_cut_value projections") {
  CHECK(min_k_cut_value(make_spanning(5), 3) == 1);
  CHECK(min_k_cut_value(make_cycle(5), 3) == 3);  // agrees with the oracle below
  CHECK(brute_force_min_k_cutsets(make_cycle(5), 3).opt_value == 3);
  Hypergraph split(4, {EdgeSpec{{0, 1}}, EdgeSpec{{2, 3}}});
  CHECK(min_k_cut_value(split, 2) == 0);
}
