#include "hkcut/instance_io.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace hkcut {

namespace {

struct Line {
  int number;  // 1-based position in the input
  std::vector<std::string> tokens;
};

[[noreturn]] void fail(int line, const std::string& message) {
  throw std::invalid_argument("line " + std::to_string(line) + ": " + message);
}

std::int64_t parse_int(const Line& line, const std::string& token, const char* what) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    fail(line.number, std::string("expected an integer ") + what + ", got '" + token + "'");
  }
  return value;
}

std::vector<Line> significant_lines(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (!raw.empty() && raw.front() == '%') continue;
    std::istringstream split(raw);
    Line line{number, {}};
    std::string token;
    while (split >> token) line.tokens.push_back(token);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

}  // namespace

Hypergraph parse_instance(const std::string& text) {
  std::vector<Line> lines = significant_lines(text);
  if (lines.empty()) throw std::invalid_argument("line 1: missing header");

  const Line& header = lines[0];
  if (header.tokens.size() < 2 || header.tokens.size() > 3) {
    fail(header.number, "header must be 'm n' or 'm n fmt'");
  }
  const std::int64_t m = parse_int(header, header.tokens[0], "hyperedge count");
  const std::int64_t n = parse_int(header, header.tokens[1], "vertex count");
  std::int64_t fmt = 0;
  if (header.tokens.size() == 3) fmt = parse_int(header, header.tokens[2], "format flag");
  if (m < 0) fail(header.number, "hyperedge count must be non-negative");
  if (n < 1) fail(header.number, "vertex count must be positive");
  if (fmt != 0 && fmt != 1) fail(header.number, "format flag must be 0 or 1");

  if (static_cast<std::int64_t>(lines.size()) - 1 != m) {
    fail(lines.back().number, "expected " + std::to_string(m) + " hyperedge lines, found " +
                                  std::to_string(lines.size() - 1));
  }

  std::vector<EdgeSpec> specs;
  specs.reserve(static_cast<size_t>(m));
  for (std::int64_t i = 1; i <= m; ++i) {
    const Line& line = lines[static_cast<size_t>(i)];
    size_t first_vertex = 0;
    EdgeSpec spec;
    if (fmt == 1) {
      if (line.tokens.empty()) fail(line.number, "missing cost");
      spec.cost = parse_int(line, line.tokens[0], "cost");
      if (spec.cost < 1) fail(line.number, "cost must be >= 1");
      first_vertex = 1;
    }
    if (line.tokens.size() - first_vertex < 2) {
      fail(line.number, "hyperedge needs at least 2 vertices");
    }
    VertexSet seen(static_cast<int>(n));
    for (size_t t = first_vertex; t < line.tokens.size(); ++t) {
      std::int64_t v = parse_int(line, line.tokens[t], "vertex index");
      if (v < 1 || v > n) {
        fail(line.number, "vertex index " + std::to_string(v) + " out of range [1," +
                              std::to_string(n) + "]");
      }
      if (seen.test(static_cast<int>(v - 1))) {
        fail(line.number, "duplicate vertex " + std::to_string(v));
      }
      seen.set(static_cast<int>(v - 1));
      spec.vertices.push_back(static_cast<int>(v - 1));
    }
    specs.push_back(std::move(spec));
  }
  return Hypergraph(static_cast<int>(n), specs);
}

std::string emit_instance(const Hypergraph& g) {
  std::ostringstream out;
  out << g.num_edges() << ' ' << g.num_vertices() << " 1\n";
  for (const Hyperedge& e : g.edges()) {
    out << e.cost;
    e.vertices.for_each([&](int v) { out << ' ' << v + 1; });
    out << '\n';
  }
  return out.str();
}

Hypergraph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<EdgeSpec> specs;
  specs.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) specs.push_back(EdgeSpec{{i, (i + 1) % n}, 1});
  return Hypergraph(n, specs);
}

Hypergraph make_spanning(int n) {
  if (n < 2) throw std::invalid_argument("spanning hyperedge needs at least 2 vertices");
  std::vector<int> all(static_cast<size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  return Hypergraph(n, {EdgeSpec{all, 1}});
}

Hypergraph make_random(int n, int m, int max_size, int max_cost, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("random instance needs at least 2 vertices");
  if (m < 1) throw std::invalid_argument("random instance needs at least 1 hyperedge");
  if (max_size < 2 || max_size > n) {
    throw std::invalid_argument("max hyperedge size must lie in [2, n]");
  }
  if (max_cost < 1) throw std::invalid_argument("max cost must be >= 1");

  SplitMix64 rng(seed);
  std::vector<int> deck(static_cast<size_t>(n));
  std::iota(deck.begin(), deck.end(), 0);
  std::vector<EdgeSpec> specs;
  specs.reserve(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    const int size = static_cast<int>(rng.uniform(2, max_size));
    // Partial Fisher-Yates: the first `size` deck slots become a uniform subset.
    for (int j = 0; j < size; ++j) {
      const int swap_with = static_cast<int>(rng.uniform(j, n - 1));
      std::swap(deck[static_cast<size_t>(j)], deck[static_cast<size_t>(swap_with)]);
    }
    EdgeSpec spec;
    spec.vertices.assign(deck.begin(), deck.begin() + size);
    std::sort(spec.vertices.begin(), spec.vertices.end());
    spec.cost = rng.uniform(1, max_cost);
    specs.push_back(std::move(spec));
  }
  return Hypergraph(n, specs);
}

}  // namespace hkcut
