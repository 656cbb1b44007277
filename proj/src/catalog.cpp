#include "pcube/catalog.hpp"

#include <bit>
#include <charconv>

#include "pcube/enumeration.hpp"

namespace pcube {

Graph g8() {
  enum { v1, v2, v3, v4, v5, v6, v7 };
  return Graph(7, {{v1, v2}, {v2, v3}, {v3, v7}, {v7, v1}, {v3, v4}, {v4, v5}, {v5, v6}, {v6, v3}});
}

Graph hypercube(int d) {
  if (d < 0 || (1LL << std::min(d, 7)) > kMaxVertices) {
    throw PreconditionError("hypercube dimension must be in 0..6");
  }
  const int n = 1 << d;
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < n; ++x) {
    for (int i = 0; i < d; ++i) {
      if (((x >> i) & 1) == 0) pairs.emplace_back(x, x | (1 << i));
    }
  }
  return Graph(n, pairs);
}

Graph even_cycle(int k) {
  if (k < 4 || k % 2 != 0 || k > kMaxVertices) {
    throw PreconditionError("even cycle length must be even and in 4.." + std::to_string(kMaxVertices));
  }
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < k; ++i) pairs.emplace_back(i, (i + 1) % k);
  return Graph(k, pairs);
}

Graph subdivided_complete(int r) {
  if (r < 2 || r + r * (r - 1) / 2 > kMaxVertices) {
    throw PreconditionError("subdivided complete graph needs 2 <= r and at most " +
                            std::to_string(kMaxVertices) + " vertices");
  }
  std::vector<std::pair<int, int>> pairs;
  int s = r;
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j, ++s) {
      pairs.emplace_back(i, s);
      pairs.emplace_back(j, s);
    }
  }
  return Graph(s, pairs);
}

std::vector<unsigned> fibonacci_strings(int d) {
  std::vector<unsigned> out;
  for (unsigned x = 0; x < (1U << d); ++x) {
    if ((x & (x >> 1)) == 0) out.push_back(x);
  }
  return out;
}

Graph fibonacci_cube(int d) {
  if (d < 1 || d > 8) throw PreconditionError("Fibonacci cube dimension must be in 1..8");
  const auto strings = fibonacci_strings(d);
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t a = 0; a < strings.size(); ++a) {
    for (std::size_t b = a + 1; b < strings.size(); ++b) {
      if (std::popcount(strings[a] ^ strings[b]) == 1) pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  }
  return Graph(static_cast<int>(strings.size()), pairs);
}

Graph q3_minus() { return hypercube(3).induced(full_set(7)); }

Graph c_q3_minus() {
  const Graph base = q3_minus();
  // 000 is the only vertex keeping all three neighbours once 111 is gone.
  const VertexSet claw = singleton(0b000) | singleton(0b001) | singleton(0b010) | singleton(0b100);
  return expansion(base, IsometricCover{claw, base.vertex_set()});
}

Graph path_graph(int n) {
  if (n < 1 || n > kMaxVertices) throw PreconditionError("path length out of range");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return Graph(n, pairs);
}

std::optional<Graph> named_graph(std::string_view name) {
  if (name == "g8") return g8();
  if (name == "q3minus") return q3_minus();
  if (name == "cq3minus") return c_q3_minus();
  auto numbered = [&](std::string_view prefix) -> std::optional<int> {
    if (!name.starts_with(prefix) || name.size() == prefix.size()) return std::nullopt;
    int value = 0;
    const auto digits = name.substr(prefix.size());
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) return std::nullopt;
    return value;
  };
  try {
    if (auto r = numbered("sk")) return subdivided_complete(*r);
    if (auto d = numbered("fib")) return fibonacci_cube(*d);
    if (auto d = numbered("q")) return hypercube(*d);
    if (auto k = numbered("c")) return even_cycle(*k);
    if (auto n = numbered("p")) return path_graph(*n);
  } catch (const PreconditionError&) {
    return std::nullopt;
  }
  return std::nullopt;
}

std::vector<std::string> catalog_names() {
  return {"g8", "q1", "q2", "q3", "q4", "c4", "c6", "c8", "sk3", "sk4", "fib2", "fib3", "fib4",
          "p3", "q3minus", "cq3minus"};
}

}  // namespace pcube
