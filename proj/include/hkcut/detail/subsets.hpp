#pragma once

#include <vector>

namespace hkcut::detail {

/// Visits non-empty subsets of `pool` (ascending) with at most max_size
/// elements, in lexicographic order of their sorted element lists.
/// The visitor returns true to stop early; the function reports whether a
/// visitor did so.
template <typename Visitor>
bool for_each_subset_lex(const std::vector<int>& pool, int max_size, Visitor&& visit,
                         std::vector<int>& scratch, size_t from = 0) {
  for (size_t i = from; i < pool.size(); ++i) {
    scratch.push_back(pool[i]);
    if (visit(const_cast<const std::vector<int>&>(scratch))) {
      scratch.pop_back();
      return true;
    }
    if (static_cast<int>(scratch.size()) < max_size) {
      if (for_each_subset_lex(pool, max_size, visit, scratch, i + 1)) {
        scratch.pop_back();
        return true;
      }
    }
    scratch.pop_back();
  }
  return false;
}

template <typename Visitor>
bool for_each_subset_lex(const std::vector<int>& pool, int max_size, Visitor&& visit) {
  std::vector<int> scratch;
  return for_each_subset_lex(pool, max_size, visit, scratch);
}

/// Visits ascending index combinations of size `choose` from {0..count-1} in
/// lexicographic order. Visitor returns true to stop early.
template <typename Visitor>
bool for_each_combination(int count, int choose, Visitor&& visit) {
  if (choose < 0 || choose > count) return false;
  std::vector<int> indices(static_cast<size_t>(choose));
  for (int i = 0; i < choose; ++i) indices[static_cast<size_t>(i)] = i;
  while (true) {
    if (visit(const_cast<const std::vector<int>&>(indices))) return true;
    int pos = choose - 1;
    while (pos >= 0 && indices[static_cast<size_t>(pos)] == count - choose + pos) --pos;
    if (pos < 0) return false;
    ++indices[static_cast<size_t>(pos)];
    for (int j = pos + 1; j < choose; ++j) {
      indices[static_cast<size_t>(j)] = indices[static_cast<size_t>(j - 1)] + 1;
    }
  }
}

}  // namespace hkcut::detail
