#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "hkcut/hypergraph.hpp"

namespace hkcut {

/// Parses the hMETIS-style instance format:
///
///   m n [fmt]          header: hyperedge count, vertex count, optional format
///   [cost] v1 v2 ...   one line per hyperedge, vertices 1-indexed
///
/// fmt 1 means each hyperedge line starts with an integer cost; fmt 0 or an
/// absent flag means unit costs. Lines that are blank or start with '%' are
/// skipped. Vertices are converted to the internal 0-indexed ids; hyperedge
/// ids follow line order. Violations raise std::invalid_argument with the
/// offending line number.
Hypergraph parse_instance(const std::string& text);

/// Serializes with explicit costs (fmt 1), vertices 1-indexed ascending.
/// parse_instance(emit_instance(g)) reproduces g with identical edge ids.
std::string emit_instance(const Hypergraph& g);

/// Unit-cost cycle: edges {i, i+1 mod n} for i = 0..n-1. Requires n >= 3.
Hypergraph make_cycle(int n);

/// Single unit-cost hyperedge covering all n vertices. Requires n >= 2.
Hypergraph make_spanning(int n);

/// Seeded random instance: m hyperedges, sizes uniform in [2, max_size],
/// vertex sets uniform among subsets of that size, costs uniform in
/// [1, max_cost]. Identical seeds give identical instances on any platform.
Hypergraph make_random(int n, int m, int max_size, int max_cost, std::uint64_t seed);

/// splitmix64; used wherever the artifact needs reproducible streams.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [lo, hi] by rejection; lo <= hi.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t spill = std::uint64_t(-range) % range;  // 2^64 mod range
    std::uint64_t draw;
    do {
      draw = next();
    } while (draw < spill);
    return lo + static_cast<std::int64_t>(draw % range);
  }
};

}  // namespace hkcut
