#include "pcube/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "parallel.hpp"
#include "pcube/catalog.hpp"
#include "pcube/kernels/subset_filter.hpp"
#include "pcube/theta.hpp"

namespace pcube {

namespace {

// spheres[u][k]: vertices at distance exactly k from u.
struct Spheres {
  std::vector<std::vector<VertexSet>> at;

  explicit Spheres(const Graph& g) : at(static_cast<std::size_t>(g.order())) {
    const auto dist = all_pairs_distances(g);
    for (int u = 0; u < g.order(); ++u) {
      auto& row = at[static_cast<std::size_t>(u)];
      for (int v = 0; v < g.order(); ++v) {
        if (!dist.reachable(u, v)) continue;
        const std::size_t d = dist(u, v);
        if (row.size() <= d) row.resize(d + 1, 0);
        row[d] |= singleton(v);
      }
    }
  }
};

// Connected, and breadth-first layers inside `s` match host distance layers.
bool isometric_subset(const Graph& g, const Spheres& spheres, VertexSet s) {
  if (s == 0) return false;
  for (VertexSet members = s; members != 0; members &= members - 1) {
    const int u = std::countr_zero(members);
    const auto& rows = spheres.at[static_cast<std::size_t>(u)];
    VertexSet reach = singleton(u);
    VertexSet layer = reach;
    for (std::size_t k = 1; layer != 0; ++k) {
      VertexSet next = 0;
      for (VertexSet rest = layer; rest != 0; rest &= rest - 1) next |= g.neighbor_set(std::countr_zero(rest));
      layer = next & s & ~reach;
      const VertexSet expected = k < rows.size() ? rows[k] & s : 0;
      if (layer != expected) return false;
      reach |= layer;
    }
    if (reach != s) return false;
  }
  return true;
}

bool crosses(const Graph& g, VertexSet a, VertexSet b) {
  for (VertexSet rest = a; rest != 0; rest &= rest - 1) {
    if (g.neighbor_set(std::countr_zero(rest)) & b) return true;
  }
  return false;
}

GraphClass make_class(const Graph& g) {
  auto code = canonical_form(g);
  Graph canonical = decode(code);
  return {std::move(code), std::move(canonical)};
}

bool class_less(const GraphClass& a, const GraphClass& b) {
  if (a.graph.order() != b.graph.order()) return a.graph.order() < b.graph.order();
  return a.code < b.code;
}

void sort_unique(std::vector<GraphClass>& classes) {
  std::sort(classes.begin(), classes.end(), class_less);
  classes.erase(std::unique(classes.begin(), classes.end(),
                            [](const GraphClass& a, const GraphClass& b) { return a.code == b.code; }),
                classes.end());
}

// Vertex images x -> perm(x) ^ shift for every automorphism of Q_dim.
std::vector<std::vector<int>> cube_automorphisms(int dim) {
  std::vector<int> perm(static_cast<std::size_t>(dim));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    for (int shift = 0; shift < (1 << dim); ++shift) {
      auto& image = out.emplace_back(std::size_t{1} << dim);
      for (int x = 0; x < (1 << dim); ++x) {
        int y = 0;
        for (int i = 0; i < dim; ++i) {
          if ((x >> i) & 1) y |= 1 << perm[static_cast<std::size_t>(i)];
        }
        image[static_cast<std::size_t>(x)] = y ^ shift;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

bool orbit_minimal(std::uint32_t mask, const std::vector<std::vector<int>>& autos) {
  for (const auto& image : autos) {
    std::uint32_t moved = 0;
    for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
      moved |= 1U << image[static_cast<std::size_t>(std::countr_zero(rest))];
    }
    if (moved < mask) return false;
  }
  return true;
}

}  // namespace

int ClassificationReport::non_graceful() const {
  return static_cast<int>(std::count_if(entries.begin(), entries.end(),
                                        [](const ClassificationEntry& e) { return !e.graceful; }));
}

std::string validate_cover(const Graph& g, const IsometricCover& c) {
  const VertexSet all = g.vertex_set();
  if ((c.side1 | c.side2) & ~all) return "cover sides contain vertices outside the graph";
  if ((c.side1 | c.side2) != all) return "cover sides do not cover every vertex";
  if ((c.side1 & c.side2) == 0) return "cover sides have empty intersection";
  if (crosses(g, c.side1 & ~c.side2, c.side2 & ~c.side1)) return "an edge lies in neither side";
  const Spheres spheres(g);
  if (!isometric_subset(g, spheres, c.side1)) return "side 1 is not a connected isometric subgraph";
  if (!isometric_subset(g, spheres, c.side2)) return "side 2 is not a connected isometric subgraph";
  return {};
}

Graph expansion(const Graph& g, const IsometricCover& c) {
  if (const auto problem = validate_cover(g, c); !problem.empty()) {
    throw PreconditionError("invalid isometric cover: " + problem);
  }
  const int n = g.order();
  std::vector<int> copy1(static_cast<std::size_t>(n), -1);
  std::vector<int> copy2(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    if ((c.side1 >> v) & 1U) copy1[static_cast<std::size_t>(v)] = next++;
  }
  for (int v = 0; v < n; ++v) {
    if ((c.side2 >> v) & 1U) copy2[static_cast<std::size_t>(v)] = next++;
  }
  std::vector<std::pair<int, int>> pairs;
  for (const auto& e : g.edges()) {
    for (const auto* copy : {&copy1, &copy2}) {
      const int a = (*copy)[static_cast<std::size_t>(e.u)];
      const int b = (*copy)[static_cast<std::size_t>(e.v)];
      if (a >= 0 && b >= 0) pairs.emplace_back(a, b);
    }
  }
  for (VertexSet both = c.side1 & c.side2; both != 0; both &= both - 1) {
    const int v = std::countr_zero(both);
    pairs.emplace_back(copy1[static_cast<std::size_t>(v)], copy2[static_cast<std::size_t>(v)]);
  }
  return Graph(next, pairs);
}

std::vector<IsometricCover> enumerate_isometric_covers(const Graph& g, int max_overlap) {
  const int n = g.order();
  if (n > kMaxCoverVertices) {
    throw ScaleError("isometric cover scan is limited to " + std::to_string(kMaxCoverVertices) +
                     " vertices (graph has " + std::to_string(n) + ")");
  }
  std::vector<IsometricCover> covers;
  if (n == 0) return covers;
  const Spheres spheres(g);
  const VertexSet all = g.vertex_set();
  std::vector<char> isometric(std::size_t{1} << n, 0);
  for (VertexSet s = 1; s <= all; ++s) isometric[s] = isometric_subset(g, spheres, s) ? 1 : 0;

  for (VertexSet both = 1; both <= all; ++both) {
    if (std::popcount(both) > max_overlap) continue;
    const VertexSet rest = all & ~both;
    // Every split of the remaining vertices into side1-only / side2-only.
    for (VertexSet only1 = rest;; only1 = (only1 - 1) & rest) {
      const VertexSet only2 = rest & ~only1;
      const VertexSet side1 = only1 | both;
      const VertexSet side2 = only2 | both;
      if (isometric[side1] && isometric[side2] && !crosses(g, only1, only2)) {
        covers.push_back({side1, side2});
      }
      if (only1 == 0) break;
    }
  }
  std::sort(covers.begin(), covers.end(), [](const IsometricCover& a, const IsometricCover& b) {
    return a.side1 != b.side1 ? a.side1 < b.side1 : a.side2 < b.side2;
  });
  return covers;
}

std::vector<GraphClass> enumerate_partial_cube_classes(int dim, int threads, bool reduce_symmetry) {
  if (dim < 0 || dim > kMaxSubsetDimension) {
    throw ScaleError("subset enumeration supports isometric dimension 0.." +
                     std::to_string(kMaxSubsetDimension) + "; dimension " + std::to_string(dim) +
                     " would scan all 2^(2^" + std::to_string(dim) + ") vertex subsets of Q_" +
                     std::to_string(dim));
  }
  const std::uint32_t total = kernels::subset_count(dim);
  std::vector<std::uint8_t> flags(total, 0);
  constexpr std::uint32_t kBlock = 4096;
  const std::size_t blocks = (total + kBlock - 1) / kBlock;
  detail::parallel_for(blocks, threads, [&](std::size_t b) {
    const auto first = static_cast<std::uint32_t>(b * kBlock);
    const auto len = std::min<std::uint32_t>(kBlock, total - first);
    kernels::filter_cube_subsets(dim, first, std::span<std::uint8_t>(flags.data() + first, len));
  });

  std::vector<std::uint32_t> accepted;
  for (std::uint32_t s = 0; s < total; ++s) {
    if (flags[s]) accepted.push_back(s);
  }
  if (reduce_symmetry) {
    // Acceptance is invariant under cube automorphisms, so every orbit keeps
    // its smallest member.
    const auto autos = cube_automorphisms(dim);
    std::vector<std::uint8_t> keep(accepted.size(), 0);
    detail::parallel_for(accepted.size(), threads,
                         [&](std::size_t i) { keep[i] = orbit_minimal(accepted[i], autos) ? 1 : 0; });
    std::size_t kept = 0;
    for (std::size_t i = 0; i < accepted.size(); ++i) {
      if (keep[i]) accepted[kept++] = accepted[i];
    }
    accepted.resize(kept);
  }
  const Graph cube = hypercube(dim);
  std::vector<GraphClass> classes(accepted.size());
  detail::parallel_for(accepted.size(), threads,
                       [&](std::size_t i) { classes[i] = make_class(cube.induced(accepted[i])); });
  sort_unique(classes);
  return classes;
}

std::vector<Graph> enumerate_partial_cubes(int dim, int threads, bool reduce_symmetry) {
  std::vector<Graph> out;
  for (auto& c : enumerate_partial_cube_classes(dim, threads, reduce_symmetry)) out.push_back(std::move(c.graph));
  return out;
}

std::vector<GraphClass> enumerate_via_expansions(int max_n, std::optional<int> max_dim, int threads) {
  if (max_n > kMaxCoverVertices) {
    throw ScaleError("expansion closure is limited to " + std::to_string(kMaxCoverVertices) + " vertices");
  }
  std::vector<GraphClass> all;
  if (max_n < 1) return all;
  std::vector<GraphClass> level{make_class(Graph(1, {}))};
  for (int dim = 0;; ++dim) {
    all.insert(all.end(), level.begin(), level.end());
    if (max_dim && dim >= *max_dim) break;
    std::vector<std::vector<GraphClass>> produced(level.size());
    detail::parallel_for(level.size(), threads, [&](std::size_t i) {
      const Graph& g = level[i].graph;
      if (g.order() >= max_n) return;
      for (const auto& cover : enumerate_isometric_covers(g, max_n - g.order())) {
        produced[i].push_back(make_class(expansion(g, cover)));
      }
      sort_unique(produced[i]);
    });
    std::vector<GraphClass> next;
    for (auto& p : produced) next.insert(next.end(), p.begin(), p.end());
    sort_unique(next);
    if (next.empty()) break;
    level = std::move(next);
  }
  sort_unique(all);
  return all;
}

ClassificationReport classify_gracefulness(int dim, int threads, bool reduce_symmetry) {
  const auto classes = enumerate_partial_cube_classes(dim, threads, reduce_symmetry);
  ClassificationReport report;
  report.dimension = dim;
  report.total_classes = static_cast<int>(classes.size());
  report.entries.resize(classes.size());
  detail::parallel_for(classes.size(), threads, [&](std::size_t i) {
    const auto& cls = classes[i];
    auto& entry = report.entries[i];
    entry.code = cls.code;
    entry.n = cls.graph.order();
    entry.m = cls.graph.size();
    entry.median = is_median_graph(cls.graph);
    auto outcome = backtracking_search(cls.graph);
    entry.nodes_explored = outcome.nodes_explored;
    entry.graceful = outcome.found.has_value();
    entry.certificate = std::move(outcome.found);
    entry.exhausted = !entry.graceful;
  });
  return report;
}

}  // namespace pcube
