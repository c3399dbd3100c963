#include <doctest.h>

#include "hkcut/cut_ops.hpp"
#include "hkcut/detail/subsets.hpp"
#include "hkcut/oracle.hpp"
#include "hkcut/terminal_cut.hpp"
#include "test_helpers.hpp"

using namespace hkcut;
using testing::InstanceStream;

TEST_CASE("terminal cut on the spanning hyperedge") {
  Hypergraph g = make_spanning(5);
  TerminalCutResult cut = min_terminal_cut(g, VertexSet(5, {0}), VertexSet(5, {1}));
  CHECK(cut.value == 1);
  CHECK(cut.source_minimal == VertexSet(5, {0}));
  CHECK(cut.source_maximal == VertexSet(5, {0, 2, 3, 4}));
}

TEST_CASE("terminal cut on the 4-cycle separating opposite vertices") {
  Hypergraph g = testing::cycle4();
  TerminalCutResult cut = min_terminal_cut(g, VertexSet(4, {0}), VertexSet(4, {2}));
  CHECK(cut.value == 2);
  CHECK(cut.source_minimal == VertexSet(4, {0}));
  CHECK(cut.source_maximal == VertexSet(4, {0, 1, 3}));
  // Exhaustive cross-check over the 4 admissible source sides.
  auto oracle = brute_force_all_min_terminal_cuts(g, VertexSet(4, {0}), VertexSet(4, {2}));
  Cost best = cut_value(g, oracle.front());
  CHECK(cut.value == best);
}

TEST_CASE("forced crossing through a shared hyperedge") {
  // One expensive hyperedge containing both terminals, everything else local.
  Hypergraph g(5, {EdgeSpec{{0, 1, 4}, 3}, EdgeSpec{{2, 3}, 7}});
  TerminalCutResult cut = min_terminal_cut(g, VertexSet(5, {0}), VertexSet(5, {4}));
  CHECK(cut.value == 3);
}

TEST_CASE("terminal cut argument validation") {
  Hypergraph g = testing::cycle4();
  CHECK_THROWS_AS(min_terminal_cut(g, VertexSet(4), VertexSet(4, {1})), std::invalid_argument);
  CHECK_THROWS_AS(min_terminal_cut(g, VertexSet(4, {0}), VertexSet(4)), std::invalid_argument);
  CHECK_THROWS_AS(min_terminal_cut(g, VertexSet(4, {0, 1}), VertexSet(4, {1})),
                  std::invalid_argument);
}

TEST_CASE("value-only wrapper agrees with the full query") {
  Hypergraph g = testing::cycle5();
  CHECK(min_terminal_cut_value(g, VertexSet(5, {0}), VertexSet(5, {2})) == 2);
  CHECK(min_terminal_cut_value(g, VertexSet(5, {0, 1}), VertexSet(5, {3})) == 2);
}

TEST_CASE("oracle equivalence: value, minimal and maximal sides") {
  InstanceStream stream(808);
  for (int trial = 0; trial < 40; ++trial) {
    Hypergraph g = stream.next(7, 9);
    const int n = g.num_vertices();
    TerminalCutSolver solver(g);
    std::vector<int> all(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) all[static_cast<size_t>(v)] = v;
    detail::for_each_subset_lex(all, 2, [&](const std::vector<int>& s_list) {
      VertexSet sources = VertexSet::from_vertices(n, s_list);
      std::vector<int> rest;
      for (int v = 0; v < n; ++v) {
        if (!sources.test(v)) rest.push_back(v);
      }
      detail::for_each_subset_lex(rest, 2, [&](const std::vector<int>& t_list) {
        VertexSet sinks = VertexSet::from_vertices(n, t_list);
        TerminalCutResult cut = solver.solve(sources, sinks);
        auto optimal = brute_force_all_min_terminal_cuts(g, sources, sinks);
        CHECK(cut.value == cut_value(g, optimal.front()));
        VertexSet meet = optimal.front();
        VertexSet join = optimal.front();
        for (const VertexSet& side : optimal) {
          meet = meet & side;
          join = join | side;
        }
        CHECK(cut.source_minimal == meet);
        CHECK(cut.source_maximal == join);
        return false;
      });
      return false;
    });
  }
}

TEST_CASE("monotonicity: enlarging a terminal set never decreases the value") {
  InstanceStream stream(909);
  for (int trial = 0; trial < 300; ++trial) {
    Hypergraph g = stream.next();
    const int n = g.num_vertices();
    VertexSet sources = stream.random_subset(n, true);
    VertexSet sinks = stream.random_subset(n, true);
    sinks = sinks.minus(sources);
    if (sinks.empty() || (sources | sinks).is_full()) continue;
    Cost base = min_terminal_cut_value(g, sources, sinks);
    int extra = (sources | sinks).complement().min_vertex();
    VertexSet grown_sources = sources;
    grown_sources.set(extra);
    CHECK(min_terminal_cut_value(g, grown_sources, sinks) >= base);
    VertexSet grown_sinks = sinks;
    grown_sinks.set(extra);
    CHECK(min_terminal_cut_value(g, sources, grown_sinks) >= base);
  }
}

TEST_CASE("self-consistency: both extreme sides realize the optimum value") {
  InstanceStream stream(1010);
  for (int trial = 0; trial < 300; ++trial) {
    Hypergraph g = stream.next();
    const int n = g.num_vertices();
    VertexSet sources = stream.random_subset(n, true);
    VertexSet sinks = stream.random_subset(n, true).minus(sources);
    if (sinks.empty()) continue;
    TerminalCutResult cut = min_terminal_cut(g, sources, sinks);
    CHECK(sources.is_subset_of(cut.source_minimal));
    CHECK(cut.source_minimal.is_subset_of(cut.source_maximal));
    CHECK(!cut.source_maximal.intersects(sinks));
    if (!cut.source_minimal.is_full()) CHECK(cut_value(g, cut.source_minimal) == cut.value);
    if (!cut.source_maximal.is_full()) CHECK(cut_value(g, cut.source_maximal) == cut.value);
  }
}
