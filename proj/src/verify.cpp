#include "hkcut/verify.hpp"

#include <algorithm>
#include <json.hpp>
#include <stdexcept>

#include "hkcut/cut_ops.hpp"
#include "hkcut/detail/subsets.hpp"
#include "hkcut/enumerate.hpp"
#include "hkcut/instance_io.hpp"
#include "hkcut/oracle.hpp"
#include "hkcut/structure.hpp"
#include "hkcut/terminal_cut.hpp"

namespace hkcut {

namespace {

constexpr int kMaxSuiteVertices = 14;  // suites scan all 2^n vertex subsets

void check_suite_size(const Hypergraph& g) {
  if (g.num_vertices() > kMaxSuiteVertices) {
    throw std::invalid_argument("structural suites refused: n > 14");
  }
}

std::string describe(const Hypergraph& g, const std::string& detail) {
  std::string flat = emit_instance(g);
  std::replace(flat.begin(), flat.end(), '\n', ';');
  return detail + " on [" + flat + "]";
}

void record_failure(SuiteReport& report, const MiningLimits& limits, const Hypergraph& g,
                    const std::string& detail) {
  ++report.failed;
  if (static_cast<int>(report.failures.size()) < limits.max_failure_dumps) {
    report.failures.push_back(describe(g, detail));
  }
}

std::string vertices_string(const VertexSet& set) {
  std::string out = "{";
  bool first = true;
  set.for_each([&](int v) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  });
  return out + "}";
}

/// All proper non-empty U as bitmasks in ascending mask order.
template <typename Visitor>
void for_each_proper_subset(int n, Visitor&& visit) {
  const std::uint64_t full = (n == 64) ? ~0ULL : (1ULL << n) - 1;
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    VertexSet u(n);
    for (int v = 0; v < n; ++v) {
      if ((mask >> v) & 1ULL) u.set(v);
    }
    visit(u);
  }
}

/// Minimum k-partitions of g (as part lists) whose crossing set equals the
/// boundary of at least one part; emits one (parts, distinguished) pair per
/// qualifying part, with the distinguished part moved to the front.
template <typename Visitor>
void mine_boundary_partitions(const Hypergraph& g, int k, Visitor&& visit) {
  const Cost opt = brute_force_min_k_cutsets(g, k).opt_value;
  const int n = g.num_vertices();
  for_each_k_partition(n, k, [&](const std::vector<int>& label) {
    std::vector<VertexSet> parts(static_cast<size_t>(k), VertexSet(n));
    for (int v = 0; v < n; ++v) parts[static_cast<size_t>(label[static_cast<size_t>(v)])].set(v);
    VertexPartition partition{parts};
    CutSet crossing = crossing_set(g, partition);
    if (crossing.total_cost != opt) return;
    for (int i = 0; i < k; ++i) {
      if (boundary_cut_set(g, parts[static_cast<size_t>(i)]) != crossing) continue;
      std::vector<VertexSet> reordered;
      reordered.push_back(parts[static_cast<size_t>(i)]);
      for (int j = 0; j < k; ++j) {
        if (j != i) reordered.push_back(parts[static_cast<size_t>(j)]);
      }
      visit(VertexPartition{std::move(reordered)});
    }
  });
}

/// Enumerates T = t_2 + ... + t_k with each t_j a non-empty subset of part j,
/// in nested lexicographic order. Visitor returns true to stop.
bool for_each_transversal(const VertexPartition& partition, size_t part_index, VertexSet t,
                          const std::function<bool(const VertexSet&)>& visit) {
  if (part_index == partition.parts.size()) return visit(t);
  const std::vector<int> pool = partition.parts[part_index].to_vertices();
  return detail::for_each_subset_lex(
      pool, static_cast<int>(pool.size()), [&](const std::vector<int>& list) {
        VertexSet extended = t;
        for (int v : list) extended.set(v);
        return for_each_transversal(partition, part_index + 1, extended, visit);
      });
}

/// Computes sink sides for the uncrossing hypothesis: pivots[i] is dropped
/// from the terminals and the sink side is the complement of the
/// source-minimal minimum terminal cut. Returns true iff every pivot landed
/// strictly inside its own sink side.
bool mine_uncrossing_cuts(TerminalCutSolver& solver, const Hypergraph& g, const VertexSet& u,
                          int r, const std::vector<int>& pivots,
                          std::vector<VertexSet>& sink_sides) {
  const VertexSet outside = u.complement();
  sink_sides.clear();
  for (size_t i = 0; i < pivots.size(); ++i) {
    VertexSet terminals(g.num_vertices());
    terminals.set(r);
    for (size_t j = 0; j < pivots.size(); ++j) {
      if (j != i) terminals.set(pivots[j]);
    }
    sink_sides.push_back(solver.solve_minimal(terminals, outside).source_minimal.complement());
  }
  for (size_t i = 0; i < pivots.size(); ++i) {
    if (!sink_sides[i].test(pivots[i])) return false;
    for (size_t j = 0; j < pivots.size(); ++j) {
      if (j != i && sink_sides[j].test(pivots[i])) return false;
    }
  }
  return true;
}

template <typename Body>
void mine_uncrossings(const Hypergraph& g, const std::vector<int>& pivot_counts,
                      const MiningLimits& limits, Body&& body) {
  const int n = g.num_vertices();
  TerminalCutSolver solver(g);
  std::int64_t mined = 0;
  for_each_proper_subset(n, [&](const VertexSet& u) {
    if (mined >= limits.uncross_per_instance) return;
    const int r = u.min_vertex();
    std::vector<int> pool = u.to_vertices();
    pool.erase(pool.begin());  // drop r
    for (int p : pivot_counts) {
      if (static_cast<int>(pool.size()) < p) continue;
      std::int64_t tried = 0;
      detail::for_each_combination(static_cast<int>(pool.size()), p,
                                   [&](const std::vector<int>& combo) {
                                     if (mined >= limits.uncross_per_instance ||
                                         tried >= limits.uncross_source_sets_per_u) {
                                       return true;
                                     }
                                     ++tried;
                                     std::vector<int> pivots;
                                     pivots.reserve(static_cast<size_t>(p));
                                     for (int idx : combo) pivots.push_back(pool[static_cast<size_t>(idx)]);
                                     std::vector<VertexSet> sink_sides;
                                     if (mine_uncrossing_cuts(solver, g, u, r, pivots, sink_sides)) {
                                       ++mined;
                                       body(u, r, pivots, sink_sides);
                                     }
                                     return false;
                                   });
    }
  });
}

}  // namespace

std::vector<Hypergraph> make_corpus(int n, int m, int count, std::uint64_t seed) {
  if (count < 1) throw std::invalid_argument("corpus needs at least one instance");
  SplitMix64 master(seed);
  std::vector<Hypergraph> corpus;
  corpus.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) {
    corpus.push_back(make_random(n, m, std::min(5, n), 5, master.next()));
  }
  return corpus;
}

SuiteReport run_witness_k2_suite(const std::vector<Hypergraph>& corpus,
                                 const MiningLimits& limits) {
  SuiteReport report;
  report.suite = "witness-k2";
  for (const Hypergraph& g : corpus) {
    check_suite_size(g);
    ++report.instances;
    const int n = g.num_vertices();
    if (n < 2) continue;

    Cost min_cut = -1;
    std::vector<VertexSet> sides;
    for_each_proper_subset(n, [&](const VertexSet& u) {
      Cost value = cut_value(g, u);
      if (min_cut < 0 || value < min_cut) {
        min_cut = value;
        sides.clear();
      }
      if (value == min_cut) sides.push_back(u);
    });

    std::int64_t mined = 0;
    for (const VertexSet& v1 : sides) {
      if (mined >= limits.witness_k2_per_instance) break;
      const std::vector<int> far_side = v1.complement().to_vertices();
      detail::for_each_subset_lex(
          far_side, static_cast<int>(far_side.size()), [&](const std::vector<int>& t_list) {
            if (mined >= limits.witness_k2_per_instance) return true;
            ++mined;
            ++report.hypotheses;
            VertexSet t = VertexSet::from_vertices(n, t_list);
            if (find_witness_k2(g, v1, t).has_value()) {
              ++report.passed;
            } else {
              record_failure(report, limits, g,
                             "no size<=2 witness for V1=" + vertices_string(v1) +
                                 " T=" + vertices_string(t));
            }
            return false;
          });
    }
  }
  return report;
}

SuiteReport run_witness_general_suite(const std::vector<Hypergraph>& corpus, int k,
                                      const MiningLimits& limits) {
  SuiteReport report;
  report.suite = "witness-general-k" + std::to_string(k);
  for (const Hypergraph& g : corpus) {
    check_suite_size(g);
    ++report.instances;
    if (g.num_vertices() < k) continue;
    std::int64_t mined = 0;
    mine_boundary_partitions(g, k, [&](const VertexPartition& partition) {
      if (mined >= limits.witness_general_per_instance) return;
      for_each_transversal(partition, 1, VertexSet(g.num_vertices()), [&](const VertexSet& t) {
        if (mined >= limits.witness_general_per_instance) return true;
        ++mined;
        ++report.hypotheses;
        if (find_witness_general(g, partition, t).has_value()) {
          ++report.passed;
        } else {
          record_failure(report, limits, g,
                         "no size<=" + std::to_string(2 * k - 1) + " witness for V1=" +
                             vertices_string(partition.parts[0]) + " T=" + vertices_string(t));
        }
        return false;
      });
    });
  }
  return report;
}

SuiteReport run_unique_witness_suite(const std::vector<Hypergraph>& corpus, int k,
                                     const MiningLimits& limits) {
  SuiteReport report;
  report.suite = "unique-witness-k" + std::to_string(k);
  for (const Hypergraph& g : corpus) {
    check_suite_size(g);
    ++report.instances;
    if (g.num_vertices() < k) continue;
    const Cost opt = brute_force_min_k_cutsets(g, k).opt_value;
    std::int64_t mined = 0;
    for_each_proper_subset(g.num_vertices(), [&](const VertexSet& u) {
      if (mined >= limits.unique_witness_per_instance) return;
      if (cut_value(g, u) >= opt) return;
      ++mined;
      ++report.hypotheses;
      if (check_unique_terminal_witness(g, u, k, opt).found) {
        ++report.passed;
      } else {
        record_failure(report, limits, g,
                       "no unique-terminal witness for U=" + vertices_string(u) +
                           " k=" + std::to_string(k));
      }
    });
  }
  return report;
}

SuiteReport run_containment_suite(const std::vector<Hypergraph>& corpus, int k,
                                  const MiningLimits& limits) {
  SuiteReport report;
  report.suite = "containment-k" + std::to_string(k);
  for (const Hypergraph& g : corpus) {
    check_suite_size(g);
    ++report.instances;
    if (g.num_vertices() < k) continue;
    std::int64_t mined = 0;
    mine_boundary_partitions(g, k, [&](const VertexPartition& partition) {
      if (mined >= limits.containment_per_instance) return;
      const std::vector<int> v1_pool = partition.parts[0].to_vertices();
      detail::for_each_subset_lex(
          v1_pool, static_cast<int>(v1_pool.size()), [&](const std::vector<int>& s_list) {
            VertexSet s = VertexSet::from_vertices(g.num_vertices(), s_list);
            return for_each_transversal(
                partition, 1, VertexSet(g.num_vertices()), [&](const VertexSet& t) {
                  if (mined >= limits.containment_per_instance) return true;
                  ++mined;
                  ++report.hypotheses;
                  ContainmentVerdict verdict = check_containment_lemma(g, partition, s, t);
                  if (verdict.source_side_contained && verdict.value_matches) {
                    ++report.passed;
                  } else {
                    record_failure(report, limits, g,
                                   "containment failed for V1=" +
                                       vertices_string(partition.parts[0]) +
                                       " S=" + vertices_string(s) + " T=" + vertices_string(t));
                  }
                  return false;
                });
          });
    });
  }
  return report;
}

SuiteReport run_uncrossing_suite(const std::vector<Hypergraph>& corpus,
                                 const MiningLimits& limits) {
  SuiteReport report;
  report.suite = "uncrossing";
  for (const Hypergraph& g : corpus) {
    check_suite_size(g);
    ++report.instances;
    mine_uncrossings(g, {2, 3}, limits,
                     [&](const VertexSet& u, int r, const std::vector<int>& pivots,
                         const std::vector<VertexSet>& sink_sides) {
                       ++report.hypotheses;
                       UncrossingVerdict verdict = check_uncrossing_lemma(
                           g, u, VertexSet::singleton(g.num_vertices(), r), pivots, sink_sides);
                       for (bool nonempty : verdict.y_nonempty) {
                         if (!nonempty) ++report.empty_y_parts;
                       }
                       if (verdict.hypothesis_holds && verdict.inequality_holds &&
                           verdict.equality_when_p2) {
                         ++report.passed;
                       } else {
                         record_failure(report, limits, g,
                                        "uncrossing bound failed for U=" + vertices_string(u) +
                                            " p=" + std::to_string(pivots.size()));
                       }
                     });
  }
  return report;
}

SuiteReport run_aggregate_suite(const std::vector<Hypergraph>& corpus, int k,
                                const MiningLimits& limits) {
  SuiteReport report;
  report.suite = "aggregate-k" + std::to_string(k);
  for (const Hypergraph& g : corpus) {
    check_suite_size(g);
    ++report.instances;
    mine_uncrossings(g, {2 * k - 2}, limits,
                     [&](const VertexSet& u, int r, const std::vector<int>& pivots,
                         const std::vector<VertexSet>& sink_sides) {
                       (void)r;
                       (void)pivots;
                       ++report.hypotheses;
                       UncrossedPartition partition = uncross(g, u, sink_sides);
                       if (aggregate(g, partition, k).found) {
                         ++report.passed;
                       } else {
                         record_failure(report, limits, g,
                                        "no qualifying part subset for U=" + vertices_string(u) +
                                            " k=" + std::to_string(k));
                       }
                     });
  }
  return report;
}

std::string suites_to_json(const std::vector<SuiteReport>& reports) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  bool ok = true;
  nlohmann::ordered_json suites = nlohmann::ordered_json::array();
  for (const SuiteReport& report : reports) {
    nlohmann::ordered_json entry;
    entry["suite"] = report.suite;
    entry["instances"] = report.instances;
    entry["hypotheses"] = report.hypotheses;
    entry["passed"] = report.passed;
    entry["failed"] = report.failed;
    if (report.suite == "uncrossing") entry["empty_y_parts"] = report.empty_y_parts;
    entry["failures"] = report.failures;
    suites.push_back(std::move(entry));
    ok = ok && report.ok();
  }
  j["suites"] = std::move(suites);
  j["ok"] = ok;
  return j.dump(2) + "\n";
}

}  // namespace hkcut
