#include "hkcut/terminal_cut.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace hkcut {

namespace {
constexpr int kNoLevel = -1;
}

TerminalCutSolver::TerminalCutSolver(const Hypergraph& g) : g_(&g), n_(g.num_vertices()) {
  const int m = g.num_edges();
  // Node layout: vertices, then (in, out) per hyperedge, then source, sink.
  source_ = n_ + 2 * m;
  sink_ = source_ + 1;
  node_count_ = sink_ + 1;
  infinite_ = g.total_cost() + 1;

  std::vector<std::vector<int>> adj(static_cast<size_t>(node_count_));
  auto add_arc = [&](int from, int to, Cost cap) {
    int id = static_cast<int>(arcs_.size());
    arcs_.push_back(Arc{to, cap});
    arcs_.push_back(Arc{from, 0});
    adj[static_cast<size_t>(from)].push_back(id);
    adj[static_cast<size_t>(to)].push_back(id + 1);
    return id;
  };

  for (EdgeId id = 0; id < m; ++id) {
    const Hyperedge& e = g.edges()[static_cast<size_t>(id)];
    const int in_node = n_ + 2 * id;
    const int out_node = in_node + 1;
    add_arc(in_node, out_node, e.cost);
    e.vertices.for_each([&](int v) {
      add_arc(v, in_node, infinite_);
      add_arc(out_node, v, infinite_);
    });
  }
  source_arc_of_.resize(static_cast<size_t>(n_));
  sink_arc_of_.resize(static_cast<size_t>(n_));
  for (int v = 0; v < n_; ++v) {
    source_arc_of_[static_cast<size_t>(v)] = add_arc(source_, v, 0);
    sink_arc_of_[static_cast<size_t>(v)] = add_arc(v, sink_, 0);
  }

  first_arc_.assign(static_cast<size_t>(node_count_) + 1, 0);
  for (int u = 0; u < node_count_; ++u) {
    first_arc_[static_cast<size_t>(u) + 1] =
        first_arc_[static_cast<size_t>(u)] + static_cast<int>(adj[static_cast<size_t>(u)].size());
  }
  adjacency_.resize(arcs_.size());
  for (int u = 0; u < node_count_; ++u) {
    std::copy(adj[static_cast<size_t>(u)].begin(), adj[static_cast<size_t>(u)].end(),
              adjacency_.begin() + first_arc_[static_cast<size_t>(u)]);
  }

  base_arcs_ = arcs_;
  level_.resize(static_cast<size_t>(node_count_));
  next_arc_.resize(static_cast<size_t>(node_count_));
  queue_.reserve(static_cast<size_t>(node_count_));
  seen_.resize(static_cast<size_t>(node_count_));
}

void TerminalCutSolver::check_terminals(const VertexSet& sources, const VertexSet& sinks) const {
  if (sources.universe() != n_ || sinks.universe() != n_) {
    throw std::invalid_argument("terminal sets over wrong universe");
  }
  if (sources.empty() || sinks.empty()) {
    throw std::invalid_argument("terminal sets must be non-empty");
  }
  if (sources.intersects(sinks)) {
    throw std::invalid_argument("terminal sets must be disjoint");
  }
}

Cost TerminalCutSolver::run_max_flow(const VertexSet& sources, const VertexSet& sinks) {
  arcs_ = base_arcs_;
  sources.for_each([&](int v) { arcs_[static_cast<size_t>(source_arc_of_[static_cast<size_t>(v)])].cap = infinite_; });
  sinks.for_each([&](int v) { arcs_[static_cast<size_t>(sink_arc_of_[static_cast<size_t>(v)])].cap = infinite_; });
  ++queries_;

  Cost flow = 0;
  while (build_levels()) {
    std::fill(next_arc_.begin(), next_arc_.end(), 0);
    while (Cost pushed = push(source_, infinite_)) flow += pushed;
  }
  return flow;
}

bool TerminalCutSolver::build_levels() {
  std::fill(level_.begin(), level_.end(), kNoLevel);
  queue_.clear();
  queue_.push_back(source_);
  level_[static_cast<size_t>(source_)] = 0;
  int sink_level = kNoLevel;
  for (size_t head = 0; head < queue_.size(); ++head) {
    int u = queue_[head];
    // Nodes at or beyond the sink's level cannot lie on a shortest path.
    if (sink_level != kNoLevel && level_[static_cast<size_t>(u)] >= sink_level) break;
    for (int i = first_arc_[static_cast<size_t>(u)]; i < first_arc_[static_cast<size_t>(u) + 1]; ++i) {
      const Arc& a = arcs_[static_cast<size_t>(adjacency_[static_cast<size_t>(i)])];
      if (a.cap > 0 && level_[static_cast<size_t>(a.to)] == kNoLevel) {
        level_[static_cast<size_t>(a.to)] = level_[static_cast<size_t>(u)] + 1;
        if (a.to == sink_) {
          sink_level = level_[static_cast<size_t>(a.to)];
        } else {
          queue_.push_back(a.to);
        }
      }
    }
  }
  return sink_level != kNoLevel;
}

Cost TerminalCutSolver::push(int node, Cost limit) {
  if (node == sink_) return limit;
  for (int& i = next_arc_[static_cast<size_t>(node)];
       i < first_arc_[static_cast<size_t>(node) + 1] - first_arc_[static_cast<size_t>(node)]; ++i) {
    const int arc_id = adjacency_[static_cast<size_t>(first_arc_[static_cast<size_t>(node)] + i)];
    Arc& a = arcs_[static_cast<size_t>(arc_id)];
    if (a.cap <= 0 || level_[static_cast<size_t>(a.to)] != level_[static_cast<size_t>(node)] + 1) {
      continue;
    }
    Cost pushed = push(a.to, std::min(limit, a.cap));
    if (pushed > 0) {
      a.cap -= pushed;
      arcs_[static_cast<size_t>(arc_id ^ 1)].cap += pushed;
      return pushed;
    }
  }
  level_[static_cast<size_t>(node)] = kNoLevel;
  return 0;
}

Cost TerminalCutSolver::solve_value(const VertexSet& sources, const VertexSet& sinks) {
  check_terminals(sources, sinks);
  return run_max_flow(sources, sinks);
}

VertexSet TerminalCutSolver::forward_reach() {
  // Forward residual reach of the super-source: the source-minimal side.
  std::fill(seen_.begin(), seen_.end(), 0);
  queue_.clear();
  queue_.push_back(source_);
  seen_[static_cast<size_t>(source_)] = 1;
  for (size_t head = 0; head < queue_.size(); ++head) {
    int u = queue_[head];
    for (int i = first_arc_[static_cast<size_t>(u)]; i < first_arc_[static_cast<size_t>(u) + 1]; ++i) {
      const Arc& a = arcs_[static_cast<size_t>(adjacency_[static_cast<size_t>(i)])];
      if (a.cap > 0 && !seen_[static_cast<size_t>(a.to)]) {
        seen_[static_cast<size_t>(a.to)] = 1;
        queue_.push_back(a.to);
      }
    }
  }
  VertexSet reach(n_);
  for (int v = 0; v < n_; ++v) {
    if (seen_[static_cast<size_t>(v)]) reach.set(v);
  }
  return reach;
}

TerminalCutResult TerminalCutSolver::solve_minimal(const VertexSet& sources,
                                                   const VertexSet& sinks) {
  check_terminals(sources, sinks);
  TerminalCutResult result;
  result.value = run_max_flow(sources, sinks);
  result.source_minimal = forward_reach();
  return result;
}

TerminalCutResult TerminalCutSolver::solve(const VertexSet& sources, const VertexSet& sinks) {
  check_terminals(sources, sinks);
  TerminalCutResult result;
  result.value = run_max_flow(sources, sinks);
  result.source_minimal = forward_reach();

  // Reverse residual reach of the super-sink: everything that can still reach
  // it. Its complement within V is the source-maximal side.
  std::fill(seen_.begin(), seen_.end(), 0);
  queue_.clear();
  queue_.push_back(sink_);
  seen_[static_cast<size_t>(sink_)] = 1;
  for (size_t head = 0; head < queue_.size(); ++head) {
    int u = queue_[head];
    for (int i = first_arc_[static_cast<size_t>(u)]; i < first_arc_[static_cast<size_t>(u) + 1]; ++i) {
      const int arc_id = adjacency_[static_cast<size_t>(i)];
      // Partner arc runs toward u; positive residual there means the partner's
      // tail still reaches u.
      if (arcs_[static_cast<size_t>(arc_id ^ 1)].cap > 0) {
        int from = arcs_[static_cast<size_t>(arc_id)].to;
        if (!seen_[static_cast<size_t>(from)]) {
          seen_[static_cast<size_t>(from)] = 1;
          queue_.push_back(from);
        }
      }
    }
  }
  result.source_maximal = VertexSet(n_);
  for (int v = 0; v < n_; ++v) {
    if (!seen_[static_cast<size_t>(v)]) result.source_maximal.set(v);
  }

  assert(sources.is_subset_of(result.source_minimal));
  assert(result.source_minimal.is_subset_of(result.source_maximal));
  assert(!result.source_maximal.intersects(sinks));
  return result;
}

TerminalCutResult min_terminal_cut(const Hypergraph& g, const VertexSet& sources,
                                   const VertexSet& sinks) {
  TerminalCutSolver solver(g);
  return solver.solve(sources, sinks);
}

Cost min_terminal_cut_value(const Hypergraph& g, const VertexSet& sources, const VertexSet& sinks) {
  TerminalCutSolver solver(g);
  return solver.solve_value(sources, sinks);
}

}  // namespace hkcut
