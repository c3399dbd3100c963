#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hkcut/hypergraph.hpp"

namespace hkcut {

/// Outcome of one structural check suite over a corpus. `hypotheses` counts
/// the mined inputs satisfying the check's precondition; every one of them is
/// expected to pass, so failed > 0 falsifies the corresponding statement.
struct SuiteReport {
  std::string suite;
  std::int64_t instances = 0;
  std::int64_t hypotheses = 0;
  std::int64_t passed = 0;
  std::int64_t failed = 0;
  std::int64_t empty_y_parts = 0;  // uncrossing only: empty Y_i occurrences
  std::vector<std::string> failures;

  bool ok() const { return failed == 0; }
};

/// Deterministic caps on how much each instance is mined. The checks are
/// exhaustive scans, so caps only bound runtime, never correctness.
struct MiningLimits {
  std::int64_t witness_k2_per_instance = 4000;
  std::int64_t witness_general_per_instance = 300;
  std::int64_t unique_witness_per_instance = 150;
  std::int64_t containment_per_instance = 300;
  std::int64_t uncross_source_sets_per_u = 40;
  std::int64_t uncross_per_instance = 500;
  int max_failure_dumps = 5;
};

/// Seeded random corpus: `count` instances over n vertices and m hyperedges
/// with sizes up to min(5, n) and costs up to 5.
std::vector<Hypergraph> make_corpus(int n, int m, int count, std::uint64_t seed);

/// Every minimum cut, oriented both ways, against every non-empty T on the
/// far side: a source-set witness of size <= 2 must recover its boundary.
SuiteReport run_witness_k2_suite(const std::vector<Hypergraph>& corpus,
                                 const MiningLimits& limits = {});

/// Minimum k-partitions whose crossing set equals one part's boundary,
/// against every T hitting all other parts: witness of size <= 2k-1.
SuiteReport run_witness_general_suite(const std::vector<Hypergraph>& corpus, int k,
                                      const MiningLimits& limits = {});

/// Cuts strictly cheaper than the minimum k-cut-set: some terminal pair with
/// |S|,|T| <= 2k-2 (a fixed vertex each side plus at most 2k-3 extras) pins
/// the cut as the unique minimum terminal cut.
SuiteReport run_unique_witness_suite(const std::vector<Hypergraph>& corpus, int k,
                                     const MiningLimits& limits = {});

/// Containment: source-minimal terminal cuts for S inside the distinguished
/// part stay inside it and match the (S, far side) optimum.
SuiteReport run_containment_suite(const std::vector<Hypergraph>& corpus, int k,
                                  const MiningLimits& limits = {});

/// Uncrossing bound (and its p=2 equality) on cuts mined from terminal-cut
/// queries that satisfy the pivot-membership hypothesis, p in {2, 3}.
SuiteReport run_uncrossing_suite(const std::vector<Hypergraph>& corpus,
                                 const MiningLimits& limits = {});

/// Aggregation: every mined (2k-2)-pivot uncrossing admits k-1 parts whose
/// doubled crossing cost stays within the partition bound.
SuiteReport run_aggregate_suite(const std::vector<Hypergraph>& corpus, int k,
                                const MiningLimits& limits = {});

/// JSON summary with the pinned key order; `ok` aggregates all suites.
std::string suites_to_json(const std::vector<SuiteReport>& reports);

}  // namespace hkcut
