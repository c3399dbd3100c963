#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace hkcut {

/// Fixed-universe set of vertices backed by 64-bit blocks.
///
/// Every set knows its universe size n; vertices are dense integers 0..n-1.
/// Ordering (lex_less) compares the ascending vertex lists lexicographically,
/// which is the canonical order used for all deterministic output.
class VertexSet {
 public:
  VertexSet() = default;

  explicit VertexSet(int universe_size) : n_(universe_size) {
    if (universe_size < 0) throw std::invalid_argument("universe size must be non-negative");
    blocks_.resize((static_cast<size_t>(n_) + 63) / 64, 0);
  }

  VertexSet(int universe_size, std::initializer_list<int> vertices) : VertexSet(universe_size) {
    for (int v : vertices) set(v);
  }

  static VertexSet full(int universe_size) {
    VertexSet s(universe_size);
    for (size_t i = 0; i < s.blocks_.size(); ++i) s.blocks_[i] = ~0ULL;
    s.trim();
    return s;
  }

  static VertexSet singleton(int universe_size, int v) {
    VertexSet s(universe_size);
    s.set(v);
    return s;
  }

  static VertexSet from_vertices(int universe_size, const std::vector<int>& vertices) {
    VertexSet s(universe_size);
    for (int v : vertices) s.set(v);
    return s;
  }

  int universe() const { return n_; }

  bool test(int v) const {
    check_vertex(v);
    return (blocks_[static_cast<size_t>(v) >> 6] >> (v & 63)) & 1ULL;
  }

  void set(int v) {
    check_vertex(v);
    blocks_[static_cast<size_t>(v) >> 6] |= 1ULL << (v & 63);
  }

  void reset(int v) {
    check_vertex(v);
    blocks_[static_cast<size_t>(v) >> 6] &= ~(1ULL << (v & 63));
  }

  int count() const {
    int c = 0;
    for (uint64_t b : blocks_) c += std::popcount(b);
    return c;
  }

  bool empty() const {
    for (uint64_t b : blocks_) {
      if (b) return false;
    }
    return true;
  }

  bool is_full() const { return count() == n_; }

  /// Smallest member, or -1 if empty.
  int min_vertex() const {
    for (size_t i = 0; i < blocks_.size(); ++i) {
      if (blocks_[i]) return static_cast<int>(i * 64 + std::countr_zero(blocks_[i]));
    }
    return -1;
  }

  bool intersects(const VertexSet& other) const {
    check_universe(other);
    for (size_t i = 0; i < blocks_.size(); ++i) {
      if (blocks_[i] & other.blocks_[i]) return true;
    }
    return false;
  }

  bool is_subset_of(const VertexSet& other) const {
    check_universe(other);
    for (size_t i = 0; i < blocks_.size(); ++i) {
      if (blocks_[i] & ~other.blocks_[i]) return false;
    }
    return true;
  }

  VertexSet operator&(const VertexSet& other) const {
    check_universe(other);
    VertexSet r(n_);
    for (size_t i = 0; i < blocks_.size(); ++i) r.blocks_[i] = blocks_[i] & other.blocks_[i];
    return r;
  }

  VertexSet operator|(const VertexSet& other) const {
    check_universe(other);
    VertexSet r(n_);
    for (size_t i = 0; i < blocks_.size(); ++i) r.blocks_[i] = blocks_[i] | other.blocks_[i];
    return r;
  }

  /// Set difference: members of *this not in other.
  VertexSet minus(const VertexSet& other) const {
    check_universe(other);
    VertexSet r(n_);
    for (size_t i = 0; i < blocks_.size(); ++i) r.blocks_[i] = blocks_[i] & ~other.blocks_[i];
    return r;
  }

  VertexSet complement() const {
    VertexSet r(n_);
    for (size_t i = 0; i < blocks_.size(); ++i) r.blocks_[i] = ~blocks_[i];
    r.trim();
    return r;
  }

  VertexSet& operator|=(const VertexSet& other) {
    check_universe(other);
    for (size_t i = 0; i < blocks_.size(); ++i) blocks_[i] |= other.blocks_[i];
    return *this;
  }

  bool operator==(const VertexSet& other) const {
    return n_ == other.n_ && blocks_ == other.blocks_;
  }
  bool operator!=(const VertexSet& other) const { return !(*this == other); }

  /// Lexicographic comparison of the ascending vertex lists.
  /// {0} < {0,1} < {0,2} < {1} < {1,2} < {2}.
  static bool lex_less(const VertexSet& a, const VertexSet& b) {
    a.check_universe(b);
    for (size_t i = 0; i < a.blocks_.size(); ++i) {
      uint64_t diff = a.blocks_[i] ^ b.blocks_[i];
      if (!diff) continue;
      int v = static_cast<int>(i * 64 + std::countr_zero(diff));
      // Members below v coincide; whichever set lacks v continues (if at all)
      // with an element above v.
      if (a.test(v)) return b.has_member_above(v);
      return !a.has_member_above(v);
    }
    return false;
  }

  std::vector<int> to_vertices() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(count()));
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (size_t i = 0; i < blocks_.size(); ++i) {
      uint64_t b = blocks_[i];
      while (b) {
        f(static_cast<int>(i * 64 + std::countr_zero(b)));
        b &= b - 1;
      }
    }
  }

  size_t hash() const {
    uint64_t h = 1469598103934665603ULL ^ static_cast<uint64_t>(n_);
    for (uint64_t b : blocks_) {
      h ^= b;
      h *= 1099511628211ULL;
    }
    return static_cast<size_t>(h);
  }

 private:
  bool has_member_above(int v) const {
    size_t block = static_cast<size_t>(v) >> 6;
    uint64_t high = blocks_[block] & ~((v & 63) == 63 ? ~0ULL : ((2ULL << (v & 63)) - 1));
    if (high) return true;
    for (size_t i = block + 1; i < blocks_.size(); ++i) {
      if (blocks_[i]) return true;
    }
    return false;
  }

  void trim() {
    int spare = static_cast<int>(blocks_.size() * 64) - n_;
    if (spare > 0 && !blocks_.empty()) blocks_.back() &= ~0ULL >> spare;
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
  }

  void check_universe(const VertexSet& other) const {
    if (n_ != other.n_) throw std::invalid_argument("vertex sets over different universes");
  }

  int n_ = 0;
  std::vector<uint64_t> blocks_;
};

}  // namespace hkcut

template <>
struct std::hash<hkcut::VertexSet> {
  size_t operator()(const hkcut::VertexSet& s) const { return s.hash(); }
};
