#pragma once

#include <cstdint>
#include <vector>

#include "hkcut/hypergraph.hpp"

namespace hkcut {

/// Optimum of one (S,T)-terminal-cut query together with the unique
/// source-minimal and source-maximal optimal source sides.
struct TerminalCutResult {
  Cost value = 0;
  VertexSet source_minimal;
  VertexSet source_maximal;
};

/// Exact minimum (S,T)-terminal-cut engine bound to one immutable hypergraph.
///
/// Each hyperedge e is split into two flow nodes joined by an arc of capacity
/// cost(e); every member vertex attaches with arcs of effectively infinite
/// capacity (1 + total cost, unreachable by any finite cut). Terminal sets are
/// wired through a super-source/super-sink, so the network topology is fixed
/// and queries only reset capacities. Max-flow is computed with Dinic's
/// algorithm on exact integers.
///
/// A solver instance carries mutable per-query state; use one instance per
/// thread. Queries against the same hypergraph are independent.
class TerminalCutSolver {
 public:
  explicit TerminalCutSolver(const Hypergraph& g);

  /// Value plus both extreme optimal source sides, from one max-flow:
  /// the minimal side is the residual forward reach of S, the maximal side
  /// is the complement of the residual reverse reach of T.
  TerminalCutResult solve(const VertexSet& sources, const VertexSet& sinks);

  /// Value and the source-minimal side only; skips the reverse pass.
  TerminalCutResult solve_minimal(const VertexSet& sources, const VertexSet& sinks);

  /// Value only.
  Cost solve_value(const VertexSet& sources, const VertexSet& sinks);

  std::int64_t queries() const { return queries_; }

 private:
  struct Arc {
    int to;
    Cost cap;
  };

  void check_terminals(const VertexSet& sources, const VertexSet& sinks) const;
  Cost run_max_flow(const VertexSet& sources, const VertexSet& sinks);
  bool build_levels();
  Cost push(int node, Cost limit);
  VertexSet forward_reach();

  const Hypergraph* g_;
  int n_ = 0;
  int node_count_ = 0;
  int source_ = 0;
  int sink_ = 0;
  Cost infinite_ = 0;

  std::vector<Arc> arcs_;
  std::vector<Arc> base_arcs_;        // pristine capacities, copied per query
  std::vector<int> adjacency_;        // arc ids, grouped per node
  std::vector<int> first_arc_;        // CSR offsets into adjacency_
  std::vector<int> source_arc_of_;    // arc id of super-source -> v
  std::vector<int> sink_arc_of_;      // arc id of v -> super-sink

  std::vector<int> level_;
  std::vector<int> next_arc_;
  std::vector<int> queue_;
  std::vector<char> seen_;
  std::int64_t queries_ = 0;
};

/// One-shot convenience wrappers; build a solver per call.
TerminalCutResult min_terminal_cut(const Hypergraph& g, const VertexSet& sources,
                                   const VertexSet& sinks);
Cost min_terminal_cut_value(const Hypergraph& g, const VertexSet& sources, const VertexSet& sinks);

}  // namespace hkcut
