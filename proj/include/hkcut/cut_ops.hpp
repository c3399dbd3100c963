#pragma once

#include <vector>

#include "hkcut/hypergraph.hpp"

namespace hkcut {

/// d(U): total cost of hyperedges with vertices on both sides of (U, V\U).
/// Requires a proper non-empty U.
Cost cut_value(const Hypergraph& g, const VertexSet& u);

/// True iff e has vertices in both U and V\U. No range checks.
bool edge_crosses(const Hyperedge& e, const VertexSet& u);

/// The canonical cut-set of hyperedges meeting at least two parts of P.
CutSet crossing_set(const Hypergraph& g, const VertexPartition& p);

/// Crossing cost of an arbitrary list of disjoint vertex sets covering V;
/// empty parts are permitted and cross nothing.
Cost crossing_cost(const Hypergraph& g, const std::vector<VertexSet>& parts);

/// Crossing edges of the 2-partition (U, V\U) as a canonical cut-set.
CutSet boundary_cut_set(const Hypergraph& g, const VertexSet& u);

/// Connected components of G - F, sorted by minimum vertex.
/// Isolated vertices form singleton components.
std::vector<VertexSet> components_after_removal(const Hypergraph& g, const CutSet& f);

/// Number of connected components of G with the hyperedges crossing (U, V\U)
/// removed. Equivalent to components_after_removal(g, boundary_cut_set(g, u)).size().
int count_components_without_boundary(const Hypergraph& g, const VertexSet& u);

/// Number of connected components of G.
int count_components(const Hypergraph& g);

/// G[V\U]: vertices of U discarded, hyperedges intersecting U discarded,
/// remaining vertices relabeled densely.
struct InducedSubhypergraph {
  Hypergraph hypergraph;
  std::vector<int> original_vertex;  // new vertex id -> old vertex id
  std::vector<EdgeId> original_edge;  // new edge id -> old edge id
};

InducedSubhypergraph induced_subhypergraph(const Hypergraph& g, const VertexSet& u);

}  // namespace hkcut
