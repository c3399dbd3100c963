#include "hkcut/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <unordered_set>

#include "hkcut/cut_ops.hpp"

namespace hkcut {

namespace {
constexpr int kMaxPartitionVertices = 12;
constexpr int kMaxTerminalVertices = 16;
}  // namespace

EnumerationReport brute_force_min_k_cutsets(const Hypergraph& g, int k) {
  const int n = g.num_vertices();
  if (n > kMaxPartitionVertices) {
    throw std::invalid_argument("brute-force k-cut enumeration refused: n > 12");
  }
  if (k < 2 || k > n) throw std::invalid_argument("k must satisfy 2 <= k <= n");

  const auto started = std::chrono::steady_clock::now();
  EnumerationReport report;
  report.k = k;

  std::unordered_set<CutSet> seen;
  std::int64_t partitions_scanned = 0;
  std::vector<std::vector<int>> edge_vertices;
  edge_vertices.reserve(static_cast<size_t>(g.num_edges()));
  for (const Hyperedge& e : g.edges()) edge_vertices.push_back(e.vertices.to_vertices());

  for_each_k_partition(n, k, [&](const std::vector<int>& label) {
    ++partitions_scanned;
    CutSet cut;
    for (EdgeId id = 0; id < g.num_edges(); ++id) {
      const std::vector<int>& verts = edge_vertices[static_cast<size_t>(id)];
      int first = label[static_cast<size_t>(verts[0])];
      for (size_t i = 1; i < verts.size(); ++i) {
        if (label[static_cast<size_t>(verts[i])] != first) {
          cut.edge_ids.push_back(id);
          cut.total_cost += g.edges()[static_cast<size_t>(id)].cost;
          break;
        }
      }
    }
    seen.insert(std::move(cut));
  });

  if (count_components(g) >= k) seen.insert(CutSet{});  // already reached by some partition

  Cost best = -1;
  for (const CutSet& cut : seen) {
    if (best < 0 || cut.total_cost < best) best = cut.total_cost;
  }
  for (const CutSet& cut : seen) {
    if (cut.total_cost == best) report.family.push_back(cut);
  }
  std::sort(report.family.begin(), report.family.end());
  report.opt_value = best;
  report.stats.candidate_sets = partitions_scanned;
  report.stats.candidate_cutsets = static_cast<std::int64_t>(seen.size());
  report.stats.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - started)
                            .count();
  return report;
}

std::vector<VertexSet> brute_force_all_min_terminal_cuts(const Hypergraph& g,
                                                         const VertexSet& sources,
                                                         const VertexSet& sinks) {
  const int n = g.num_vertices();
  if (n > kMaxTerminalVertices) {
    throw std::invalid_argument("brute-force terminal-cut enumeration refused: n > 16");
  }
  if (sources.universe() != n || sinks.universe() != n) {
    throw std::invalid_argument("terminal sets over wrong universe");
  }
  if (sources.empty() || sinks.empty()) throw std::invalid_argument("terminal sets must be non-empty");
  if (sources.intersects(sinks)) throw std::invalid_argument("terminal sets must be disjoint");

  std::vector<int> free_vertices = sources.complement().minus(sinks).to_vertices();
  const size_t f = free_vertices.size();

  Cost best = -1;
  std::vector<VertexSet> optimal;
  for (uint64_t mask = 0; mask < (1ULL << f); ++mask) {
    VertexSet u = sources;
    for (size_t i = 0; i < f; ++i) {
      if ((mask >> i) & 1ULL) u.set(free_vertices[i]);
    }
    Cost value = cut_value(g, u);  // u is proper: sinks stay outside
    if (best < 0 || value < best) {
      best = value;
      optimal.clear();
    }
    if (value == best) optimal.push_back(std::move(u));
  }
  std::sort(optimal.begin(), optimal.end(), VertexSet::lex_less);
  return optimal;
}

}  // namespace hkcut
