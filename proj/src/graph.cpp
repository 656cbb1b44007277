#include "pcube/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace pcube {

namespace {

std::string pair_text(int u, int v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Graph::Graph(int n, std::span<const std::pair<int, int>> pairs) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw InvalidGraph("vertex count " + std::to_string(n) + " outside 0.." +
                       std::to_string(kMaxVertices));
  }
  edges_.reserve(pairs.size());
  for (auto [a, b] : pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n) {
      throw InvalidGraph("edge " + pair_text(a, b) + " has an endpoint outside 0.." +
                         std::to_string(n - 1));
    }
    if (a == b) throw InvalidGraph("edge " + pair_text(a, b) + " is a self-loop");
    edges_.push_back(a < b ? Edge{a, b} : Edge{b, a});
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  const auto un = static_cast<std::size_t>(n);
  adjacency_.assign(un, {});
  neighbor_masks_.assign(un, 0);
  edge_ids_.assign(un * un, -1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto [u, v] = edges_[i];
    adjacency_[static_cast<std::size_t>(u)].push_back(v);
    adjacency_[static_cast<std::size_t>(v)].push_back(u);
    neighbor_masks_[static_cast<std::size_t>(u)] |= singleton(v);
    neighbor_masks_[static_cast<std::size_t>(v)] |= singleton(u);
    edge_ids_[static_cast<std::size_t>(u * n + v)] = static_cast<int>(i);
    edge_ids_[static_cast<std::size_t>(v * n + u)] = static_cast<int>(i);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

bool Graph::adjacent(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  return (neighbor_set(u) >> v) & 1U;
}

std::optional<int> Graph::edge_index(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return std::nullopt;
  const int id = edge_ids_[static_cast<std::size_t>(u * n_ + v)];
  if (id < 0) return std::nullopt;
  return id;
}

Graph Graph::induced(VertexSet vertices) const {
  vertices &= vertex_set();
  std::vector<int> new_id(static_cast<std::size_t>(n_), -1);
  int next = 0;
  for (VertexSet rest = vertices; rest != 0; rest &= rest - 1) {
    new_id[static_cast<std::size_t>(std::countr_zero(rest))] = next++;
  }
  std::vector<std::pair<int, int>> pairs;
  for (const auto& e : edges_) {
    const int a = new_id[static_cast<std::size_t>(e.u)];
    const int b = new_id[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) pairs.emplace_back(a, b);
  }
  return Graph(next, pairs);
}

Graph Graph::relabeled(std::span<const int> new_id) const {
  if (static_cast<int>(new_id.size()) != n_) {
    throw PreconditionError("relabeling has " + std::to_string(new_id.size()) +
                            " entries for " + std::to_string(n_) + " vertices");
  }
  VertexSet seen = 0;
  for (int id : new_id) {
    if (id < 0 || id >= n_ || ((seen >> id) & 1U)) {
      throw PreconditionError("relabeling is not a permutation of 0.." + std::to_string(n_ - 1));
    }
    seen |= singleton(id);
  }
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(edges_.size());
  for (const auto& e : edges_) {
    pairs.emplace_back(new_id[static_cast<std::size_t>(e.u)], new_id[static_cast<std::size_t>(e.v)]);
  }
  return Graph(n_, pairs);
}

bool DistanceMatrix::all_reachable() const noexcept {
  return std::find(dist_.begin(), dist_.end(), kUnreachable) == dist_.end();
}

VertexSet DistanceMatrix::sphere(int u, int k) const {
  VertexSet out = 0;
  for (int v = 0; v < n_; ++v) {
    if ((*this)(u, v) == k) out |= singleton(v);
  }
  return out;
}

Graph build_graph(int n, std::span<const std::pair<int, int>> pairs) { return Graph(n, pairs); }

DistanceMatrix all_pairs_distances(const Graph& g) {
  const int n = g.order();
  DistanceMatrix dist(n);
  for (int s = 0; s < n; ++s) {
    VertexSet seen = singleton(s);
    VertexSet frontier = seen;
    for (int depth = 0; frontier != 0; ++depth) {
      VertexSet next = 0;
      for (VertexSet rest = frontier; rest != 0; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        dist.at(s, v) = static_cast<std::uint8_t>(depth);
        next |= g.neighbor_set(v);
      }
      frontier = next & ~seen;
      seen |= next;
    }
  }
  return dist;
}

VertexSet reachable_within(const Graph& g, int source, VertexSet allowed) {
  if (((allowed >> source) & 1U) == 0) return 0;
  VertexSet seen = singleton(source);
  VertexSet frontier = seen;
  while (frontier != 0) {
    VertexSet next = 0;
    for (VertexSet rest = frontier; rest != 0; rest &= rest - 1) {
      next |= g.neighbor_set(std::countr_zero(rest));
    }
    frontier = next & allowed & ~seen;
    seen |= frontier;
  }
  return seen;
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  return reachable_within(g, 0, g.vertex_set()) == g.vertex_set();
}

bool is_bipartite(const Graph& g) {
  const int n = g.order();
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  std::vector<int> queue;
  for (int s = 0; s < n; ++s) {
    if (side[static_cast<std::size_t>(s)] >= 0) continue;
    side[static_cast<std::size_t>(s)] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      for (int w : g.neighbors(v)) {
        auto& sw = side[static_cast<std::size_t>(w)];
        if (sw < 0) {
          sw = 1 - side[static_cast<std::size_t>(v)];
          queue.push_back(w);
        } else if (sw == side[static_cast<std::size_t>(v)]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace pcube
