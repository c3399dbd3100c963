#include "hkcut/hypergraph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace hkcut {

Hypergraph::Hypergraph(int num_vertices, const std::vector<EdgeSpec>& edges) : n_(num_vertices) {
  if (n_ < 1) throw std::invalid_argument("hypergraph needs at least one vertex");
  edges_.reserve(edges.size());
  for (size_t i = 0; i < edges.size(); ++i) {
    const EdgeSpec& spec = edges[i];
    VertexSet members(n_);
    for (int v : spec.vertices) {
      if (v < 0 || v >= n_) {
        throw std::invalid_argument("hyperedge " + std::to_string(i) + ": vertex " +
                                    std::to_string(v) + " out of range");
      }
      if (members.test(v)) {
        throw std::invalid_argument("hyperedge " + std::to_string(i) + ": duplicate vertex " +
                                    std::to_string(v));
      }
      members.set(v);
    }
    if (members.count() < 2) {
      throw std::invalid_argument("hyperedge " + std::to_string(i) + ": needs at least 2 vertices");
    }
    if (spec.cost < 1) {
      throw std::invalid_argument("hyperedge " + std::to_string(i) + ": cost must be >= 1");
    }
    p_ += members.count();
    total_cost_ += spec.cost;
    edges_.push_back(Hyperedge{std::move(members), spec.cost});
  }
}

const Hyperedge& Hypergraph::edge(EdgeId id) const {
  if (id < 0 || id >= num_edges()) throw std::invalid_argument("unknown hyperedge id");
  return edges_[static_cast<size_t>(id)];
}

std::string CutSet::to_string() const {
  std::ostringstream out;
  out << '{';
  for (size_t i = 0; i < edge_ids.size(); ++i) {
    if (i) out << ',';
    out << edge_ids[i];
  }
  out << "}@" << total_cost;
  return out.str();
}

void VertexPartition::validate(int num_vertices) const {
  if (parts.size() < 2) throw std::invalid_argument("partition needs at least 2 parts");
  VertexSet seen(num_vertices);
  for (const VertexSet& part : parts) {
    if (part.universe() != num_vertices) {
      throw std::invalid_argument("partition part over wrong universe");
    }
    if (part.empty()) throw std::invalid_argument("partition part is empty");
    if (seen.intersects(part)) throw std::invalid_argument("partition parts overlap");
    seen |= part;
  }
  if (!seen.is_full()) throw std::invalid_argument("partition does not cover all vertices");
}

}  // namespace hkcut
