#include "hkcut/structure.hpp"

#include <algorithm>
#include <stdexcept>

#include "hkcut/cut_ops.hpp"
#include "hkcut/detail/subsets.hpp"
#include "hkcut/oracle.hpp"
#include "hkcut/terminal_cut.hpp"

namespace hkcut {

namespace {

void check_proper(const Hypergraph& g, const VertexSet& u, const char* what) {
  if (u.universe() != g.num_vertices() || u.empty() || u.is_full()) {
    throw std::invalid_argument(std::string(what) + " must be a proper non-empty vertex set");
  }
}

std::vector<VertexSet> all_parts(const UncrossedPartition& partition) {
  std::vector<VertexSet> parts = partition.ys;
  parts.push_back(partition.w);
  parts.push_back(partition.z);
  return parts;
}

void check_tiles(const Hypergraph& g, const UncrossedPartition& partition) {
  VertexSet seen(g.num_vertices());
  for (const VertexSet& part : all_parts(partition)) {
    if (part.universe() != g.num_vertices()) {
      throw std::invalid_argument("uncrossed partition part over wrong universe");
    }
    if (seen.intersects(part)) throw std::invalid_argument("uncrossed partition parts overlap");
    seen |= part;
  }
  if (!seen.is_full()) throw std::invalid_argument("uncrossed partition does not cover V");
}

}  // namespace

UncrossedPartition uncross(const Hypergraph& g, const VertexSet& u,
                           const std::vector<VertexSet>& sink_sides) {
  check_proper(g, u, "U");
  if (sink_sides.size() < 2) throw std::invalid_argument("uncrossing needs at least 2 cuts");
  const VertexSet outside = u.complement();
  for (const VertexSet& a : sink_sides) {
    if (a.universe() != g.num_vertices() || !outside.is_subset_of(a)) {
      throw std::invalid_argument("every sink side must contain V\\U");
    }
  }

  UncrossedPartition result;
  VertexSet united(g.num_vertices());
  for (const VertexSet& a : sink_sides) united |= a;
  result.z = united.complement();

  result.w = VertexSet(g.num_vertices());
  for (size_t i = 0; i < sink_sides.size(); ++i) {
    for (size_t j = i + 1; j < sink_sides.size(); ++j) {
      result.w |= sink_sides[i] & sink_sides[j];
    }
  }
  result.ys.reserve(sink_sides.size());
  for (const VertexSet& a : sink_sides) result.ys.push_back(a.minus(result.w));
  return result;
}

SigmaBreakdown sigma_breakdown(const Hypergraph& g, const UncrossedPartition& partition) {
  check_tiles(g, partition);
  SigmaBreakdown out;
  const VertexSet wz = partition.w | partition.z;
  for (const Hyperedge& e : g.edges()) {
    int parts_touched = 0;
    int ys_touched = 0;
    for (const VertexSet& y : partition.ys) {
      if (e.vertices.intersects(y)) {
        ++ys_touched;
        ++parts_touched;
      }
    }
    const bool touches_w = e.vertices.intersects(partition.w);
    const bool touches_z = e.vertices.intersects(partition.z);
    parts_touched += static_cast<int>(touches_w) + static_cast<int>(touches_z);

    if (parts_touched >= 2) out.cost_partition += e.cost;
    if (touches_w && touches_z && e.vertices.is_subset_of(wz)) out.cost_wz += e.cost;
    if (touches_z && ys_touched + static_cast<int>(touches_w) >= 2) out.alpha += e.cost;
    if (!touches_z && ys_touched >= 2) out.beta += e.cost;
  }
  out.sigma = out.cost_partition + out.cost_wz + out.alpha + out.beta;
  return out;
}

UncrossingVerdict check_uncrossing_lemma(const Hypergraph& g, const VertexSet& u,
                                         const VertexSet& r, const std::vector<int>& pivots,
                                         const std::vector<VertexSet>& sink_sides) {
  check_proper(g, u, "U");
  if (r.empty() || !r.is_subset_of(u) || r == u) {
    throw std::invalid_argument("R must be a non-empty proper subset of U");
  }
  const size_t p = pivots.size();
  if (p < 2 || sink_sides.size() != p) {
    throw std::invalid_argument("need matching pivots and cuts, at least 2");
  }
  VertexSet pivot_set(g.num_vertices());
  for (int v : pivots) {
    if (v < 0 || v >= g.num_vertices() || !u.test(v) || r.test(v) || pivot_set.test(v)) {
      throw std::invalid_argument("pivots must be distinct vertices of U\\R");
    }
    pivot_set.set(v);
  }
  const VertexSet outside = u.complement();
  for (size_t i = 0; i < p; ++i) {
    const VertexSet& a = sink_sides[i];
    if (a.universe() != g.num_vertices() || !outside.is_subset_of(a)) {
      throw std::invalid_argument("every sink side must contain V\\U");
    }
    VertexSet terminals = (pivot_set | r);
    terminals.reset(pivots[i]);
    if (a.intersects(terminals)) {
      throw std::invalid_argument("sink side meets its own source terminals");
    }
  }

  UncrossingVerdict verdict;
  verdict.hypothesis_holds = true;
  for (size_t i = 0; i < p && verdict.hypothesis_holds; ++i) {
    if (!sink_sides[i].test(pivots[i])) verdict.hypothesis_holds = false;
    for (size_t j = 0; j < p && verdict.hypothesis_holds; ++j) {
      if (j != i && sink_sides[j].test(pivots[i])) verdict.hypothesis_holds = false;
    }
  }
  if (!verdict.hypothesis_holds) return verdict;

  UncrossedPartition partition = uncross(g, u, sink_sides);
  SigmaBreakdown breakdown = sigma_breakdown(g, partition);
  Cost min_pair = -1;
  for (size_t i = 0; i < p; ++i) {
    Cost di = cut_value(g, sink_sides[i]);
    for (size_t j = i + 1; j < p; ++j) {
      Cost pair = di + cut_value(g, sink_sides[j]);
      if (min_pair < 0 || pair < min_pair) min_pair = pair;
    }
  }
  verdict.sigma_value = breakdown.sigma;
  verdict.min_pair_value = min_pair;
  verdict.inequality_holds = breakdown.sigma <= min_pair;
  verdict.equality_when_p2 = p != 2 || breakdown.sigma == min_pair;
  verdict.y_nonempty.reserve(p);
  for (const VertexSet& y : partition.ys) verdict.y_nonempty.push_back(!y.empty());
  return verdict;
}

AggregateResult aggregate(const Hypergraph& g, const UncrossedPartition& partition, int k) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  const int p = static_cast<int>(partition.ys.size());
  if (p < 2 * k - 2) throw std::invalid_argument("aggregation needs p >= 2k-2 parts");
  check_tiles(g, partition);

  SigmaBreakdown breakdown = sigma_breakdown(g, partition);
  AggregateResult result;
  result.bound = breakdown.cost_partition + breakdown.alpha + breakdown.beta;

  std::vector<int> usable;  // empty parts cannot join a genuine k-partition
  for (int i = 0; i < p; ++i) {
    if (!partition.ys[static_cast<size_t>(i)].empty()) usable.push_back(i);
  }
  detail::for_each_combination(
      static_cast<int>(usable.size()), k - 1, [&](const std::vector<int>& combo) {
        std::vector<VertexSet> parts;
        parts.reserve(static_cast<size_t>(k));
        VertexSet used(g.num_vertices());
        for (int pos : combo) {
          const VertexSet& y = partition.ys[static_cast<size_t>(usable[static_cast<size_t>(pos)])];
          parts.push_back(y);
          used |= y;
        }
        VertexSet rest = used.complement();
        if (rest.empty()) return false;
        parts.push_back(rest);
        Cost cost = crossing_cost(g, parts);
        if (2 * cost <= result.bound) {
          result.found = true;
          for (int pos : combo) result.indices.push_back(usable[static_cast<size_t>(pos)]);
          result.partition = std::move(parts);
          result.partition_cost = cost;
          return true;
        }
        return false;
      });
  return result;
}

namespace {

std::optional<VertexSet> scan_for_boundary_witness(const Hypergraph& g, const VertexSet& v1,
                                                   const VertexSet& t, int max_size) {
  TerminalCutSolver solver(g);
  const CutSet target = boundary_cut_set(g, v1);
  std::optional<VertexSet> witness;
  detail::for_each_subset_lex(v1.to_vertices(), max_size, [&](const std::vector<int>& list) {
    VertexSet sources = VertexSet::from_vertices(g.num_vertices(), list);
    TerminalCutResult cut = solver.solve_minimal(sources, t);
    if (cut.source_minimal.is_subset_of(v1) &&
        boundary_cut_set(g, cut.source_minimal) == target) {
      witness = sources;
      return true;
    }
    return false;
  });
  return witness;
}

}  // namespace

std::optional<VertexSet> find_witness_k2(const Hypergraph& g, const VertexSet& v1,
                                         const VertexSet& t) {
  check_proper(g, v1, "V1");
  if (t.empty() || t.intersects(v1)) {
    throw std::invalid_argument("T must be a non-empty subset of V\\V1");
  }
  return scan_for_boundary_witness(g, v1, t, 2);
}

std::optional<VertexSet> find_witness_general(const Hypergraph& g, const VertexPartition& p,
                                              const VertexSet& t) {
  p.validate(g.num_vertices());
  const int k = static_cast<int>(p.parts.size());
  const VertexSet& v1 = p.parts[0];
  if (crossing_set(g, p) != boundary_cut_set(g, v1)) {
    throw std::invalid_argument("crossing set of P must equal the boundary of its first part");
  }
  if (t.empty() || t.intersects(v1)) {
    throw std::invalid_argument("T must be a non-empty subset of V\\V1");
  }
  for (int j = 1; j < k; ++j) {
    if (!t.intersects(p.parts[static_cast<size_t>(j)])) {
      throw std::invalid_argument("T must intersect every part after the first");
    }
  }
  return scan_for_boundary_witness(g, v1, t, 2 * k - 1);
}

WitnessVerdict check_unique_terminal_witness(const Hypergraph& g, const VertexSet& u, int k,
                                             Cost opt_k) {
  check_proper(g, u, "U");
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  if (cut_value(g, u) >= opt_k) {
    throw std::invalid_argument("requires a cut strictly cheaper than the minimum k-cut-set");
  }
  const int limit = 2 * k - 3;
  const int s = u.min_vertex();
  const int t = u.complement().min_vertex();

  std::vector<int> source_pool = u.to_vertices();
  source_pool.erase(std::find(source_pool.begin(), source_pool.end(), s));
  std::vector<int> sink_pool = u.complement().to_vertices();
  sink_pool.erase(std::find(sink_pool.begin(), sink_pool.end(), t));

  WitnessVerdict verdict;
  auto try_pair = [&](const VertexSet& extra_sources, const VertexSet& extra_sinks) {
    VertexSet sources = extra_sources;
    sources.set(s);
    VertexSet sinks = extra_sinks;
    sinks.set(t);
    std::vector<VertexSet> optimal = brute_force_all_min_terminal_cuts(g, sources, sinks);
    if (optimal.size() == 1 && optimal[0] == u) {
      verdict.found = true;
      verdict.sources = sources;
      verdict.sinks = sinks;
      return true;
    }
    return false;
  };
  auto scan_sinks = [&](const VertexSet& extra_sources) {
    if (try_pair(extra_sources, VertexSet(g.num_vertices()))) return true;
    return detail::for_each_subset_lex(sink_pool, limit, [&](const std::vector<int>& list) {
      return try_pair(extra_sources, VertexSet::from_vertices(g.num_vertices(), list));
    });
  };
  if (scan_sinks(VertexSet(g.num_vertices()))) return verdict;
  detail::for_each_subset_lex(source_pool, limit, [&](const std::vector<int>& list) {
    return scan_sinks(VertexSet::from_vertices(g.num_vertices(), list));
  });
  return verdict;
}

ContainmentVerdict check_containment_lemma(const Hypergraph& g, const VertexPartition& p,
                                           const VertexSet& s, const VertexSet& t) {
  p.validate(g.num_vertices());
  const VertexSet& v1 = p.parts[0];
  if (crossing_set(g, p) != boundary_cut_set(g, v1)) {
    throw std::invalid_argument("crossing set of P must equal the boundary of its first part");
  }
  if (s.empty() || !s.is_subset_of(v1)) {
    throw std::invalid_argument("S must be a non-empty subset of V1");
  }
  if (t.empty() || t.intersects(v1)) {
    throw std::invalid_argument("T must be a non-empty subset of V\\V1");
  }
  for (size_t j = 1; j < p.parts.size(); ++j) {
    if (!t.intersects(p.parts[j])) {
      throw std::invalid_argument("T must intersect every part after the first");
    }
  }

  TerminalCutSolver solver(g);
  TerminalCutResult cut = solver.solve_minimal(s, t);
  ContainmentVerdict verdict;
  verdict.source_side = cut.source_minimal;
  verdict.source_side_contained = cut.source_minimal.is_subset_of(v1);
  verdict.value_matches = cut.value == solver.solve_value(s, v1.complement());
  return verdict;
}

}  // namespace hkcut
