#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pcube/error.hpp"

namespace pcube {

// Vertex sets are single machine words; every graph in this library has at
// most kMaxVertices vertices.
inline constexpr int kMaxVertices = 64;
using VertexSet = std::uint64_t;

static_assert(kMaxVertices <= 64, "vertex sets must fit one 64-bit word");

constexpr VertexSet singleton(int v) noexcept { return VertexSet{1} << v; }
constexpr VertexSet full_set(int n) noexcept {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

struct Edge {
  int u = 0;  // u < v
  int v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Finite simple undirected graph on vertices 0..n-1. Immutable once built.
// Edges are stored normalized (u < v) in lexicographic order; the position of
// an edge in edges() is its edge index throughout the library.
class Graph {
 public:
  Graph() = default;

  // Builds from raw pairs. Duplicate pairs (in either orientation) collapse.
  // Throws InvalidGraph naming the offending pair on a self-loop or an
  // out-of-range endpoint, or when n exceeds kMaxVertices.
  Graph(int n, std::span<const std::pair<int, int>> pairs);
  Graph(int n, std::initializer_list<std::pair<int, int>> pairs)
      : Graph(n, std::span<const std::pair<int, int>>(pairs.begin(), pairs.size())) {}

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(int index) const { return edges_[static_cast<std::size_t>(index)]; }
  std::span<const int> neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  VertexSet neighbor_set(int v) const { return neighbor_masks_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  VertexSet vertex_set() const noexcept { return full_set(n_); }

  bool adjacent(int u, int v) const;
  std::optional<int> edge_index(int u, int v) const;

  // Subgraph induced by `vertices`, renumbered in ascending original order.
  Graph induced(VertexSet vertices) const;

  // The isomorphic graph in which vertex v becomes new_id[v].
  Graph relabeled(std::span<const int> new_id) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<VertexSet> neighbor_masks_;
  std::vector<int> edge_ids_;  // n*n, -1 where absent
};

// Hop counts between all vertex pairs.
class DistanceMatrix {
 public:
  static constexpr std::uint8_t kUnreachable = 0xFF;

  DistanceMatrix() = default;
  explicit DistanceMatrix(int n) : n_(n), dist_(static_cast<std::size_t>(n * n), kUnreachable) {}

  int order() const noexcept { return n_; }
  std::uint8_t operator()(int u, int v) const { return dist_[index(u, v)]; }
  std::uint8_t& at(int u, int v) { return dist_[index(u, v)]; }
  bool reachable(int u, int v) const { return (*this)(u, v) != kUnreachable; }
  bool all_reachable() const noexcept;

  // Vertices at distance exactly k from u.
  VertexSet sphere(int u, int k) const;

 private:
  std::size_t index(int u, int v) const { return static_cast<std::size_t>(u * n_ + v); }

  int n_ = 0;
  std::vector<std::uint8_t> dist_;
};

// Normalizing constructor; equivalent to Graph(n, pairs).
Graph build_graph(int n, std::span<const std::pair<int, int>> pairs);

// Breadth-first hop counts from every vertex.
DistanceMatrix all_pairs_distances(const Graph& g);

// Vertices reachable from `source` using only vertices of `allowed`.
VertexSet reachable_within(const Graph& g, int source, VertexSet allowed);

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);

}  // namespace pcube
