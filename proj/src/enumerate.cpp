#include "hkcut/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "hkcut/cut_ops.hpp"
#include "hkcut/detail/subsets.hpp"
#include "hkcut/terminal_cut.hpp"

namespace hkcut {

namespace {

using detail::for_each_subset_lex;

struct LoopOutcome {
  std::unordered_set<CutSet> cut_sets;       // F contributions
  std::unordered_set<VertexSet> candidates;  // C contributions
  std::int64_t calls = 0;
};

EnumerationReport degenerate_report(int k) {
  EnumerationReport report;
  report.k = k;
  report.opt_value = 0;
  report.family.push_back(CutSet{});
  report.stats.candidate_cutsets = 1;
  return report;
}

void finalize(EnumerationReport& report, std::unordered_set<CutSet>& family,
              std::chrono::steady_clock::time_point started) {
  Cost best = -1;
  for (const CutSet& cut : family) {
    if (best < 0 || cut.total_cost < best) best = cut.total_cost;
  }
  report.opt_value = best;
  for (const CutSet& cut : family) {
    if (cut.total_cost == best) report.family.push_back(cut);
  }
  std::sort(report.family.begin(), report.family.end());
  report.stats.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - started)
                            .count();
}

/// Emits every k-subset of `candidates` that partitions V, as index vectors.
/// Each part after the first must contain the smallest still-uncovered vertex,
/// so every partition is generated exactly once.
template <typename Visitor>
void for_each_partition_from(const std::vector<VertexSet>& candidates,
                             const std::vector<std::vector<int>>& holding, int n, int k,
                             Visitor&& visit) {
  std::vector<int> chosen;
  VertexSet covered(n);
  auto descend = [&](auto&& self) -> void {
    if (static_cast<int>(chosen.size()) == k) {
      if (covered.is_full()) visit(chosen);
      return;
    }
    if (covered.is_full()) return;  // parts left over but nothing to cover
    int pivot = covered.complement().min_vertex();
    for (int idx : holding[static_cast<size_t>(pivot)]) {
      const VertexSet& part = candidates[static_cast<size_t>(idx)];
      if (part.intersects(covered)) continue;
      chosen.push_back(idx);
      VertexSet previous = covered;
      covered |= part;
      self(self);
      covered = std::move(previous);
      chosen.pop_back();
    }
  };
  descend(descend);
}

}  // namespace

EnumerationReport enum_min_k_cutsets(const Hypergraph& g, int k, const EnumerateOptions& options) {
  const int n = g.num_vertices();
  if (k < 2 || k > n) throw std::invalid_argument("k must satisfy 2 <= k <= n");
  const auto started = std::chrono::steady_clock::now();

  if (count_components(g) >= k) {
    EnumerationReport report = degenerate_report(k);
    report.stats.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - started)
                              .count();
    return report;
  }

  EnumerationReport report;
  report.k = k;

  const int limit = 2 * k - 1;
  std::vector<int> all_vertices(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) all_vertices[static_cast<size_t>(v)] = v;

  // Source sets in lexicographic order; each worker expands the sink sets.
  std::vector<std::vector<int>> source_lists;
  for_each_subset_lex(all_vertices, limit, [&](const std::vector<int>& s) {
    source_lists.push_back(s);
    return false;
  });

  const int threads = std::max(1, options.threads);
  std::vector<LoopOutcome> outcomes(static_cast<size_t>(threads));
  std::atomic<size_t> next_source{0};

  auto worker = [&](int worker_id) {
    LoopOutcome& local = outcomes[static_cast<size_t>(worker_id)];
    TerminalCutSolver solver(g);
    while (true) {
      size_t index = next_source.fetch_add(1);
      if (index >= source_lists.size()) break;
      const std::vector<int>& source_list = source_lists[index];
      VertexSet sources = VertexSet::from_vertices(n, source_list);
      std::vector<int> rest;
      rest.reserve(static_cast<size_t>(n));
      for (int v = 0; v < n; ++v) {
        if (!sources.test(v)) rest.push_back(v);
      }
      for_each_subset_lex(rest, limit, [&](const std::vector<int>& sink_list) {
        VertexSet sinks = VertexSet::from_vertices(n, sink_list);
        TerminalCutResult cut = solver.solve_minimal(sources, sinks);
        const VertexSet& u = cut.source_minimal;
        if (count_components_without_boundary(g, u) >= k) {
          local.cut_sets.insert(boundary_cut_set(g, u));
        } else {
          local.candidates.insert(u);
        }
        return false;
      });
      local.calls = solver.queries();
    }
  };

  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (std::thread& t : pool) t.join();
  }

  std::unordered_set<CutSet> family;
  std::unordered_set<VertexSet> candidate_set;
  for (LoopOutcome& outcome : outcomes) {
    report.stats.terminal_cut_calls += outcome.calls;
    family.merge(outcome.cut_sets);
    candidate_set.merge(outcome.candidates);
  }

  // Assemble k-partitions from the candidate collection.
  std::vector<VertexSet> candidates(candidate_set.begin(), candidate_set.end());
  std::sort(candidates.begin(), candidates.end(), VertexSet::lex_less);
  std::vector<std::vector<int>> holding(static_cast<size_t>(n));
  for (size_t i = 0; i < candidates.size(); ++i) {
    candidates[i].for_each([&](int v) { holding[static_cast<size_t>(v)].push_back(static_cast<int>(i)); });
  }
  for_each_partition_from(candidates, holding, n, k, [&](const std::vector<int>& chosen) {
    std::vector<VertexSet> parts;
    parts.reserve(chosen.size());
    for (int idx : chosen) parts.push_back(candidates[static_cast<size_t>(idx)]);
    CutSet cut;
    for (EdgeId id = 0; id < g.num_edges(); ++id) {
      const Hyperedge& e = g.edges()[static_cast<size_t>(id)];
      int touched = 0;
      for (const VertexSet& part : parts) {
        if (e.vertices.intersects(part) && ++touched == 2) break;
      }
      if (touched >= 2) {
        cut.edge_ids.push_back(id);
        cut.total_cost += e.cost;
      }
    }
    family.insert(std::move(cut));
  });

  report.stats.candidate_sets = static_cast<std::int64_t>(candidates.size());
  report.stats.candidate_cutsets = static_cast<std::int64_t>(family.size());
  finalize(report, family, started);
  return report;
}

EnumerationReport enum_min_cutsets_k2(const Hypergraph& g, const EnumerateOptions& options) {
  (void)options;  // single flow query stream; nothing to parallelize yet
  const int n = g.num_vertices();
  if (n < 2) throw std::invalid_argument("k=2 enumeration needs at least 2 vertices");
  const auto started = std::chrono::steady_clock::now();

  if (count_components(g) >= 2) {
    EnumerationReport report = degenerate_report(2);
    report.stats.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - started)
                              .count();
    return report;
  }

  EnumerationReport report;
  report.k = 2;

  const VertexSet sink = VertexSet::singleton(n, 0);
  std::vector<int> pool(static_cast<size_t>(n) - 1);
  for (int v = 1; v < n; ++v) pool[static_cast<size_t>(v) - 1] = v;

  TerminalCutSolver solver(g);
  std::unordered_set<CutSet> family;
  for_each_subset_lex(pool, 2, [&](const std::vector<int>& source_list) {
    VertexSet sources = VertexSet::from_vertices(n, source_list);
    TerminalCutResult cut = solver.solve_minimal(sources, sink);
    family.insert(boundary_cut_set(g, cut.source_minimal));
    return false;
  });

  report.stats.terminal_cut_calls = solver.queries();
  report.stats.candidate_cutsets = static_cast<std::int64_t>(family.size());
  finalize(report, family, started);
  return report;
}

Cost min_k_cut_value(const Hypergraph& g, int k, const EnumerateOptions& options) {
  return enum_min_k_cutsets(g, k, options).opt_value;
}

}  // namespace hkcut
