#include "hkcut/cut_ops.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hkcut {

namespace {

// Union-find over vertices; tracks the number of components.
struct DisjointSets {
  explicit DisjointSets(int n) : parent(n), components(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  int find(int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    parent[b] = a;
    --components;
  }

  std::vector<int> parent;
  int components;
};

void check_proper_subset(const Hypergraph& g, const VertexSet& u) {
  if (u.universe() != g.num_vertices()) throw std::invalid_argument("vertex set over wrong universe");
  if (u.empty()) throw std::invalid_argument("vertex set must be non-empty");
  if (u.is_full()) throw std::invalid_argument("vertex set must be a proper subset of V");
}

void unite_edge(DisjointSets& dsu, const Hyperedge& e) {
  int first = e.vertices.min_vertex();
  e.vertices.for_each([&](int v) { dsu.unite(first, v); });
}

std::vector<VertexSet> components_from_dsu(const Hypergraph& g, DisjointSets& dsu) {
  const int n = g.num_vertices();
  std::vector<int> slot(static_cast<size_t>(n), -1);
  std::vector<VertexSet> out;
  // Scanning vertices in ascending order yields components sorted by minimum vertex.
  for (int v = 0; v < n; ++v) {
    int root = dsu.find(v);
    if (slot[static_cast<size_t>(root)] < 0) {
      slot[static_cast<size_t>(root)] = static_cast<int>(out.size());
      out.emplace_back(n);
    }
    out[static_cast<size_t>(slot[static_cast<size_t>(root)])].set(v);
  }
  return out;
}

}  // namespace

bool edge_crosses(const Hyperedge& e, const VertexSet& u) {
  return e.vertices.intersects(u) && !e.vertices.is_subset_of(u);
}

Cost cut_value(const Hypergraph& g, const VertexSet& u) {
  check_proper_subset(g, u);
  Cost total = 0;
  for (const Hyperedge& e : g.edges()) {
    if (edge_crosses(e, u)) total += e.cost;
  }
  return total;
}

CutSet boundary_cut_set(const Hypergraph& g, const VertexSet& u) {
  check_proper_subset(g, u);
  CutSet cut;
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    const Hyperedge& e = g.edges()[static_cast<size_t>(id)];
    if (edge_crosses(e, u)) {
      cut.edge_ids.push_back(id);
      cut.total_cost += e.cost;
    }
  }
  return cut;
}

CutSet crossing_set(const Hypergraph& g, const VertexPartition& p) {
  p.validate(g.num_vertices());
  CutSet cut;
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    const Hyperedge& e = g.edges()[static_cast<size_t>(id)];
    int touched = 0;
    for (const VertexSet& part : p.parts) {
      if (e.vertices.intersects(part) && ++touched == 2) break;
    }
    if (touched >= 2) {
      cut.edge_ids.push_back(id);
      cut.total_cost += e.cost;
    }
  }
  return cut;
}

Cost crossing_cost(const Hypergraph& g, const std::vector<VertexSet>& parts) {
  Cost total = 0;
  for (const Hyperedge& e : g.edges()) {
    int touched = 0;
    for (const VertexSet& part : parts) {
      if (e.vertices.intersects(part) && ++touched == 2) break;
    }
    if (touched >= 2) total += e.cost;
  }
  return total;
}

std::vector<VertexSet> components_after_removal(const Hypergraph& g, const CutSet& f) {
  std::vector<char> removed(static_cast<size_t>(g.num_edges()), 0);
  for (EdgeId id : f.edge_ids) {
    if (id < 0 || id >= g.num_edges()) throw std::invalid_argument("unknown hyperedge id in cut-set");
    removed[static_cast<size_t>(id)] = 1;
  }
  DisjointSets dsu(g.num_vertices());
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    if (!removed[static_cast<size_t>(id)]) unite_edge(dsu, g.edges()[static_cast<size_t>(id)]);
  }
  return components_from_dsu(g, dsu);
}

int count_components_without_boundary(const Hypergraph& g, const VertexSet& u) {
  DisjointSets dsu(g.num_vertices());
  for (const Hyperedge& e : g.edges()) {
    if (!edge_crosses(e, u)) unite_edge(dsu, e);
  }
  return dsu.components;
}

int count_components(const Hypergraph& g) {
  DisjointSets dsu(g.num_vertices());
  for (const Hyperedge& e : g.edges()) unite_edge(dsu, e);
  return dsu.components;
}

InducedSubhypergraph induced_subhypergraph(const Hypergraph& g, const VertexSet& u) {
  check_proper_subset(g, u);
  const int n = g.num_vertices();
  std::vector<int> new_id(static_cast<size_t>(n), -1);
  std::vector<int> original_vertex;
  for (int v = 0; v < n; ++v) {
    if (!u.test(v)) {
      new_id[static_cast<size_t>(v)] = static_cast<int>(original_vertex.size());
      original_vertex.push_back(v);
    }
  }
  std::vector<EdgeSpec> specs;
  std::vector<EdgeId> original_edge;
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    const Hyperedge& e = g.edges()[static_cast<size_t>(id)];
    if (e.vertices.intersects(u)) continue;
    EdgeSpec spec;
    spec.cost = e.cost;
    e.vertices.for_each([&](int v) { spec.vertices.push_back(new_id[static_cast<size_t>(v)]); });
    specs.push_back(std::move(spec));
    original_edge.push_back(id);
  }
  return InducedSubhypergraph{Hypergraph(static_cast<int>(original_vertex.size()), specs),
                              std::move(original_vertex), std::move(original_edge)};
}

}  // namespace hkcut
