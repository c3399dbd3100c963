#pragma once

#include <vector>

#include "hkcut/enumerate_types.hpp"
#include "hkcut/hypergraph.hpp"

namespace hkcut {

/// Reference implementation by exhaustive k-partition enumeration
/// (restricted-growth strings). Positive costs make this complete: every
/// minimum k-cut-set is the crossing set of some k-partition.
/// Guarded to n <= 12; refuses larger inputs loudly.
///
/// Stats reuse: candidate_sets records the number of partitions scanned and
/// candidate_cutsets the number of distinct crossing sets seen.
EnumerationReport brute_force_min_k_cutsets(const Hypergraph& g, int k);

/// All source sides U with S <= U <= V\T achieving the minimum cut value,
/// by exhaustive subset enumeration, sorted lexicographically.
/// Guarded to n <= 16.
std::vector<VertexSet> brute_force_all_min_terminal_cuts(const Hypergraph& g,
                                                         const VertexSet& sources,
                                                         const VertexSet& sinks);

/// Visits every partition of {0..n-1} into exactly k non-empty parts as a
/// label vector (labels 0..k-1, first occurrences in increasing order).
/// Restricted-growth strings: label[0] = 0, label[i] <= 1 + max of the prefix.
/// Exposed for reuse by tests and the structure-mining harness.
template <typename Visitor>
void for_each_k_partition(int n, int k, Visitor&& visit) {
  if (n < 1 || k < 1 || k > n) return;
  std::vector<int> label(static_cast<size_t>(n), 0);
  auto extend = [&](auto&& self, int i, int prefix_max) -> void {
    if (prefix_max + (n - i) < k - 1) return;  // not enough positions left for k parts
    if (i == n) {
      visit(const_cast<const std::vector<int>&>(label));
      return;
    }
    int hi = std::min(prefix_max + 1, k - 1);
    for (int c = 0; c <= hi; ++c) {
      label[static_cast<size_t>(i)] = c;
      self(self, i + 1, std::max(prefix_max, c));
    }
  };
  if (k == 1) {
    visit(const_cast<const std::vector<int>&>(label));
    return;
  }
  extend(extend, 1, 0);
}

}  // namespace hkcut
