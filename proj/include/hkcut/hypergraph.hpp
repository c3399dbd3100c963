#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hkcut/vertex_set.hpp"

namespace hkcut {

using EdgeId = int;
using Cost = std::int64_t;

/// One hyperedge: a vertex set of size >= 2 with a strictly positive cost.
struct Hyperedge {
  VertexSet vertices;
  Cost cost = 1;

  int size() const { return vertices.count(); }
};

/// Plain description used to construct hypergraphs.
struct EdgeSpec {
  std::vector<int> vertices;
  Cost cost = 1;
};

/// Immutable hypergraph over vertices 0..n-1.
///
/// Hyperedges keep the identifier order they were constructed with; parallel
/// hyperedges stay distinct by identifier. Safe for concurrent reads.
class Hypergraph {
 public:
  Hypergraph(int num_vertices, const std::vector<EdgeSpec>& edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  /// Representation size p = sum of hyperedge sizes.
  std::int64_t representation_size() const { return p_; }

  Cost total_cost() const { return total_cost_; }

  const Hyperedge& edge(EdgeId id) const;
  const std::vector<Hyperedge>& edges() const { return edges_; }

  VertexSet all_vertices() const { return VertexSet::full(n_); }
  VertexSet empty_set() const { return VertexSet(n_); }

 private:
  int n_;
  std::vector<Hyperedge> edges_;
  std::int64_t p_ = 0;
  Cost total_cost_ = 0;
};

/// Canonical set of hyperedge identifiers with its total cost.
/// Equality and ordering consider only the identifier list.
struct CutSet {
  std::vector<EdgeId> edge_ids;  // ascending, duplicate-free
  Cost total_cost = 0;

  bool operator==(const CutSet& other) const { return edge_ids == other.edge_ids; }
  bool operator!=(const CutSet& other) const { return edge_ids != other.edge_ids; }
  bool operator<(const CutSet& other) const { return edge_ids < other.edge_ids; }

  size_t hash() const {
    uint64_t h = 1469598103934665603ULL;
    for (EdgeId id : edge_ids) {
      h ^= static_cast<uint64_t>(id) + 0x9e3779b97f4a7c15ULL;
      h *= 1099511628211ULL;
    }
    return static_cast<size_t>(h);
  }

  std::string to_string() const;
};

/// Ordered tuple of k >= 2 pairwise disjoint non-empty vertex sets covering V.
struct VertexPartition {
  std::vector<VertexSet> parts;

  /// Throws std::invalid_argument unless the invariants hold for universe n.
  void validate(int num_vertices) const;
};

}  // namespace hkcut

template <>
struct std::hash<hkcut::CutSet> {
  size_t operator()(const hkcut::CutSet& c) const { return c.hash(); }
};
