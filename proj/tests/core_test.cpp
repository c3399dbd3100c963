#include <doctest.h>

#include <algorithm>

#include "hkcut/cut_ops.hpp"
#include "hkcut/hypergraph.hpp"
#include "hkcut/instance_io.hpp"
#include "test_helpers.hpp"

using namespace hkcut;
using testing::InstanceStream;

TEST_CASE("hypergraph construction validates its invariants") {
  CHECK_THROWS_AS(Hypergraph(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph(3, {EdgeSpec{{0}}}), std::invalid_argument);       // size 1
  CHECK_THROWS_AS(Hypergraph(3, {EdgeSpec{{}}}), std::invalid_argument);        // size 0
  CHECK_THROWS_AS(Hypergraph(3, {EdgeSpec{{0, 3}}}), std::invalid_argument);    // out of range
  CHECK_THROWS_AS(Hypergraph(3, {EdgeSpec{{0, 0}}}), std::invalid_argument);    // duplicate
  CHECK_THROWS_AS(Hypergraph(3, {EdgeSpec{{0, 1}, 0}}), std::invalid_argument); // zero cost

  // Parallel hyperedges stay distinct by identifier.
  Hypergraph g(3, {EdgeSpec{{0, 1}, 2}, EdgeSpec{{0, 1}, 5}});
  CHECK(g.num_edges() == 2);
  CHECK(g.edge(0).cost == 2);
  CHECK(g.edge(1).cost == 5);
  CHECK(g.representation_size() == 4);
}

TEST_CASE("cut_value on the spanning hyperedge") {
  Hypergraph g = make_spanning(4);
  CHECK(cut_value(g, VertexSet(4, {0})) == 1);
  CHECK(cut_value(g, VertexSet(4, {1, 3})) == 1);
}

TEST_CASE("cut_value on the 4-cycle") {
  Hypergraph g = testing::cycle4();
  CHECK(cut_value(g, VertexSet(4, {0, 1})) == 2);
  CHECK(cut_value(g, VertexSet(4, {0, 2})) == 4);
}

TEST_CASE("cut_value rejects empty and full sets") {
  Hypergraph g = testing::cycle4();
  CHECK_THROWS_AS(cut_value(g, VertexSet(4)), std::invalid_argument);
  CHECK_THROWS_AS(cut_value(g, VertexSet::full(4)), std::invalid_argument);
}

TEST_CASE("cut_value matches the per-hyperedge membership oracle") {
  InstanceStream stream(101);
  for (int trial = 0; trial < 200; ++trial) {
    Hypergraph g = stream.next();
    VertexSet u = stream.random_subset(g.num_vertices(), true);
    CHECK(cut_value(g, u) == testing::reference_cut_value(g, u.to_vertices()));
  }
}

TEST_CASE("crossing_set of the spanning hyperedge") {
  Hypergraph g = make_spanning(5);
  VertexPartition p{{VertexSet(5, {0, 2}), VertexSet(5, {1, 3, 4})}};
  CutSet cut = crossing_set(g, p);
  CHECK(cut.edge_ids == std::vector<EdgeId>{0});
  CHECK(cut.total_cost == 1);
}

TEST_CASE("crossing_set with all hyperedges inside one part is empty") {
  Hypergraph g(5, {EdgeSpec{{0, 1}}, EdgeSpec{{1, 2}}});
  VertexPartition p{{VertexSet(5, {0, 1, 2}), VertexSet(5, {3}), VertexSet(5, {4})}};
  CutSet cut = crossing_set(g, p);
  CHECK(cut.edge_ids.empty());
  CHECK(cut.total_cost == 0);
}

TEST_CASE("crossing_set on the 5-cycle matches the per-edge scan") {
  Hypergraph g = testing::cycle5();
  std::vector<std::vector<int>> parts{{0, 1}, {2, 3}, {4}};
  VertexPartition p{{VertexSet::from_vertices(5, parts[0]), VertexSet::from_vertices(5, parts[1]),
                     VertexSet::from_vertices(5, parts[2])}};
  CutSet cut = crossing_set(g, p);
  CHECK(cut.edge_ids == testing::reference_crossing_ids(g, parts));
  // Edges {1,2}, {3,4}, {4,0} cross; {0,1} and {2,3} sit inside parts.
  CHECK(cut.edge_ids == std::vector<EdgeId>{1, 3, 4});
  CHECK(cut.total_cost == 3);
}

TEST_CASE("crossing_set rejects malformed partitions") {
  Hypergraph g = testing::cycle4();
  CHECK_THROWS_AS(crossing_set(g, VertexPartition{{VertexSet::full(4)}}), std::invalid_argument);
  CHECK_THROWS_AS(crossing_set(g, VertexPartition{{VertexSet(4, {0}), VertexSet(4, {1})}}),
                  std::invalid_argument);  // does not cover
  CHECK_THROWS_AS(
      crossing_set(g, VertexPartition{{VertexSet(4, {0, 1}), VertexSet(4, {1, 2, 3})}}),
      std::invalid_argument);  // overlap
  CHECK_THROWS_AS(crossing_set(g, VertexPartition{{VertexSet::full(4), VertexSet(4)}}),
                  std::invalid_argument);  // empty part
}

TEST_CASE("components_after_removal") {
  SUBCASE("spanning hyperedge splits into singletons") {
    Hypergraph g = make_spanning(4);
    auto comps = components_after_removal(g, CutSet{{0}, 1});
    REQUIRE(comps.size() == 4);
    for (int v = 0; v < 4; ++v) CHECK(comps[static_cast<size_t>(v)] == VertexSet(4, {v}));
  }
  SUBCASE("two opposite edges of the 4-cycle") {
    Hypergraph g = testing::cycle4();
    auto comps = components_after_removal(g, CutSet{{0, 2}, 2});
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == VertexSet(4, {0, 3}));
    CHECK(comps[1] == VertexSet(4, {1, 2}));
  }
  SUBCASE("removing nothing keeps the components of G") {
    Hypergraph g(5, {EdgeSpec{{0, 1}}, EdgeSpec{{2, 3}}});
    auto comps = components_after_removal(g, CutSet{});
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == VertexSet(5, {0, 1}));
    CHECK(comps[1] == VertexSet(5, {2, 3}));
    CHECK(comps[2] == VertexSet(5, {4}));
  }
  SUBCASE("unknown edge id is rejected") {
    Hypergraph g = testing::cycle4();
    CHECK_THROWS_AS(components_after_removal(g, CutSet{{7}, 1}), std::invalid_argument);
  }
}

TEST_CASE("induced_subhypergraph") {
  SUBCASE("spanning hyperedge loses its only edge") {
    Hypergraph g = make_spanning(5);
    auto sub = induced_subhypergraph(g, VertexSet(5, {0}));
    CHECK(sub.hypergraph.num_vertices() == 4);
    CHECK(sub.hypergraph.num_edges() == 0);
  }
  SUBCASE("4-cycle minus a vertex is a path") {
    Hypergraph g = testing::cycle4();
    auto sub = induced_subhypergraph(g, VertexSet(4, {0}));
    CHECK(sub.hypergraph.num_vertices() == 3);
    REQUIRE(sub.hypergraph.num_edges() == 2);
    CHECK(sub.original_vertex == std::vector<int>{1, 2, 3});
    CHECK(sub.original_edge == std::vector<EdgeId>{1, 2});
    CHECK(sub.hypergraph.edge(0).vertices == VertexSet(3, {0, 1}));
    CHECK(sub.hypergraph.edge(1).vertices == VertexSet(3, {1, 2}));
  }
  SUBCASE("removing an untouched vertex keeps the edge list") {
    Hypergraph g(5, {EdgeSpec{{0, 1}}, EdgeSpec{{1, 2}}});
    auto sub = induced_subhypergraph(g, VertexSet(5, {4}));
    CHECK(sub.hypergraph.num_edges() == 2);
    CHECK(sub.original_edge == std::vector<EdgeId>{0, 1});
  }
  SUBCASE("discarding everything is rejected") {
    Hypergraph g = testing::cycle4();
    CHECK_THROWS_AS(induced_subhypergraph(g, VertexSet::full(4)), std::invalid_argument);
    CHECK_THROWS_AS(induced_subhypergraph(g, VertexSet(4)), std::invalid_argument);
  }
}

TEST_CASE("cut function is symmetric") {
  InstanceStream stream(202);
  for (int trial = 0; trial < 1000; ++trial) {
    Hypergraph g = stream.next();
    VertexSet u = stream.random_subset(g.num_vertices(), true);
    CHECK(cut_value(g, u) == cut_value(g, u.complement()));
  }
}

TEST_CASE("cut function is submodular") {
  InstanceStream stream(303);
  int checked = 0;
  while (checked < 1000) {
    Hypergraph g = stream.next();
    VertexSet a = stream.random_subset(g.num_vertices(), false);
    VertexSet b = stream.random_subset(g.num_vertices(), false);
    auto proper = [](const VertexSet& s) { return !s.empty() && !s.is_full(); };
    VertexSet meet = a & b;
    VertexSet join = a | b;
    if (!proper(a) || !proper(b) || !proper(meet) || !proper(join)) continue;
    ++checked;
    CHECK(cut_value(g, a) + cut_value(g, b) >= cut_value(g, meet) + cut_value(g, join));
  }
}

TEST_CASE("boundary cut-set cost equals the cut value") {
  InstanceStream stream(404);
  for (int trial = 0; trial < 500; ++trial) {
    Hypergraph g = stream.next();
    VertexSet u = stream.random_subset(g.num_vertices(), true);
    CutSet cut = boundary_cut_set(g, u);
    CHECK(cut.total_cost == cut_value(g, u));
    VertexPartition p{{u, u.complement()}};
    CHECK(crossing_set(g, p) == cut);
  }
}

TEST_CASE("removing a partition's crossing set leaves at least that many parts") {
  InstanceStream stream(505);
  for (int trial = 0; trial < 300; ++trial) {
    Hypergraph g = stream.next();
    const int n = g.num_vertices();
    const int k = static_cast<int>(stream.rng.uniform(2, n));
    // Random k-partition: shuffle, pin one vertex per part, scatter the rest.
    std::vector<int> order(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) order[static_cast<size_t>(v)] = v;
    for (int i = n - 1; i > 0; --i) {
      std::swap(order[static_cast<size_t>(i)],
                order[static_cast<size_t>(stream.rng.uniform(0, i))]);
    }
    std::vector<VertexSet> parts(static_cast<size_t>(k), VertexSet(n));
    for (int i = 0; i < n; ++i) {
      const int part = i < k ? i : static_cast<int>(stream.rng.uniform(0, k - 1));
      parts[static_cast<size_t>(part)].set(order[static_cast<size_t>(i)]);
    }
    VertexPartition p{parts};
    auto comps = components_after_removal(g, crossing_set(g, p));
    CHECK(static_cast<int>(comps.size()) >= k);
  }
}

TEST_CASE("vertex set lexicographic order") {
  VertexSet a(5, {0});
  VertexSet b(5, {0, 1});
  VertexSet c(5, {0, 2});
  VertexSet d(5, {1});
  CHECK(VertexSet::lex_less(a, b));
  CHECK(VertexSet::lex_less(b, c));
  CHECK(VertexSet::lex_less(c, d));
  CHECK(!VertexSet::lex_less(b, a));
  CHECK(!VertexSet::lex_less(d, c));
  CHECK(!VertexSet::lex_less(a, a));

  std::vector<VertexSet> sets{d, c, b, a};
  std::sort(sets.begin(), sets.end(), VertexSet::lex_less);
  CHECK(sets == std::vector<VertexSet>{a, b, c, d});
}
