#pragma once

#include <cstdint>
#include <vector>

#include "hkcut/hypergraph.hpp"

namespace hkcut {

struct EnumerationStats {
  std::int64_t terminal_cut_calls = 0;
  std::int64_t candidate_sets = 0;     // |C|
  std::int64_t candidate_cutsets = 0;  // |F| before pruning to the minimum
  std::int64_t millis = 0;             // wall time of the enumeration
};

/// Deduplicated family of all minimum k-cut-sets plus run statistics.
/// The family is sorted lexicographically by edge-id lists and every member
/// has total_cost == opt_value.
struct EnumerationReport {
  int k = 0;
  Cost opt_value = 0;
  std::vector<CutSet> family;
  EnumerationStats stats;
};

}  // namespace hkcut
