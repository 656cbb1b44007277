#include "pcube/theta.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace pcube {

namespace {

std::string edge_text(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

// raw[e * m + f] for all edge pairs.
std::vector<char> raw_relation(const Graph& g, const DistanceMatrix& dist) {
  const auto edges = g.edges();
  const std::size_t m = edges.size();
  std::vector<char> raw(m * m, 0);
  for (std::size_t e = 0; e < m; ++e) {
    raw[e * m + e] = 1;
    for (std::size_t f = e + 1; f < m; ++f) {
      const char r = theta_related(dist, edges[e], edges[f]) ? 1 : 0;
      raw[e * m + f] = r;
      raw[f * m + e] = r;
    }
  }
  return raw;
}

int find_root(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) {
    auto& p = parent[static_cast<std::size_t>(x)];
    p = parent[static_cast<std::size_t>(p)];
    x = p;
  }
  return x;
}

void require_connected(const Graph& g, const char* op) {
  if (!is_connected(g)) throw PreconditionError(std::string(op) + " requires a connected graph");
}

}  // namespace

std::string HypercubeEmbedding::tuple(int v) const {
  std::string out(static_cast<std::size_t>(dim), '0');
  const auto c = coords[static_cast<std::size_t>(v)];
  for (int i = 0; i < dim; ++i) {
    if ((c >> i) & 1U) out[static_cast<std::size_t>(i)] = '1';
  }
  return out;
}

std::string PartialCubeVerdict::describe(const Graph& g) const {
  switch (failure) {
    case PartialCubeFailure::kNone:
      return "partial cube";
    case PartialCubeFailure::kDisconnected:
      return "not connected";
    case PartialCubeFailure::kNotBipartite:
      return "not bipartite";
    case PartialCubeFailure::kNotTransitive: {
      std::string out = "Theta is not transitive";
      if (triple) {
        const auto [e, f, h] = *triple;
        out += ": " + edge_text(g.edge(e)) + " ~ " + edge_text(g.edge(f)) + " ~ " +
               edge_text(g.edge(h)) + " but " + edge_text(g.edge(e)) + " !~ " +
               edge_text(g.edge(h));
      }
      return out;
    }
  }
  return {};
}

bool theta_related(const DistanceMatrix& dist, Edge e, Edge f) {
  const int n = dist.order();
  auto check = [&](const Edge& x) {
    if (x.u < 0 || x.v < 0 || x.u >= n || x.v >= n || dist(x.u, x.v) != 1) {
      throw PreconditionError("pair " + edge_text(x) + " is not an edge of the graph");
    }
  };
  check(e);
  check(f);
  const int lhs = dist(e.u, f.u) + dist(e.v, f.v);
  const int rhs = dist(e.u, f.v) + dist(e.v, f.u);
  return lhs != rhs;
}

ThetaPartition theta_classes(const Graph& g) {
  require_connected(g, "theta_classes");
  return theta_classes(g, all_pairs_distances(g));
}

ThetaPartition theta_classes(const Graph& g, const DistanceMatrix& dist) {
  require_connected(g, "theta_classes");
  const int m = g.size();
  const auto raw = raw_relation(g, dist);
  std::vector<int> parent(static_cast<std::size_t>(m));
  std::iota(parent.begin(), parent.end(), 0);
  for (int e = 0; e < m; ++e) {
    for (int f = e + 1; f < m; ++f) {
      if (!raw[static_cast<std::size_t>(e * m + f)]) continue;
      const int a = find_root(parent, e);
      const int b = find_root(parent, f);
      if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
  }

  ThetaPartition p;
  p.class_of.assign(static_cast<std::size_t>(m), -1);
  std::vector<int> class_of_root(static_cast<std::size_t>(m), -1);
  for (int e = 0; e < m; ++e) {
    const int r = find_root(parent, e);
    auto& c = class_of_root[static_cast<std::size_t>(r)];
    if (c < 0) {
      c = p.count();
      p.classes.emplace_back();
    }
    p.class_of[static_cast<std::size_t>(e)] = c;
    p.classes[static_cast<std::size_t>(c)].push_back(e);
  }
  for (const auto& cls : p.classes) {
    for (std::size_t i = 0; i < cls.size() && !p.closure_added; ++i) {
      for (std::size_t j = i + 1; j < cls.size(); ++j) {
        if (!raw[static_cast<std::size_t>(cls[i] * m + cls[j])]) {
          p.closure_added = true;
          break;
        }
      }
    }
  }
  return p;
}

PartialCubeVerdict is_partial_cube(const Graph& g) {
  PartialCubeVerdict verdict;
  if (g.order() <= 1) {
    verdict.ok = true;
    return verdict;
  }
  if (!is_connected(g)) {
    verdict.failure = PartialCubeFailure::kDisconnected;
    return verdict;
  }
  if (!is_bipartite(g)) {
    verdict.failure = PartialCubeFailure::kNotBipartite;
    return verdict;
  }
  const int m = g.size();
  const auto raw = raw_relation(g, all_pairs_distances(g));
  auto rel = [&](int a, int b) { return raw[static_cast<std::size_t>(a * m + b)] != 0; };
  for (int f = 0; f < m; ++f) {
    for (int e = 0; e < m; ++e) {
      if (e == f || !rel(e, f)) continue;
      for (int h = e + 1; h < m; ++h) {
        if (h == f || !rel(f, h)) continue;
        if (!rel(e, h)) {
          verdict.failure = PartialCubeFailure::kNotTransitive;
          verdict.triple = std::array<int, 3>{e, f, h};
          return verdict;
        }
      }
    }
  }
  verdict.ok = true;
  return verdict;
}

int isometric_dimension(const Graph& g) {
  const auto verdict = is_partial_cube(g);
  if (!verdict) throw PreconditionError("not a partial cube: " + verdict.describe(g));
  if (g.order() <= 1) return 0;
  return theta_classes(g).count();
}

std::pair<VertexSet, VertexSet> halfspaces(const Graph& g, const ThetaPartition& p, int index) {
  if (index < 0 || index >= p.count()) {
    throw PreconditionError("class index " + std::to_string(index) + " out of range");
  }
  const int n = g.order();
  std::vector<VertexSet> adj(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = g.neighbor_set(v);
  for (int e : p.classes[static_cast<std::size_t>(index)]) {
    const auto [u, v] = g.edge(e);
    adj[static_cast<std::size_t>(u)] &= ~singleton(v);
    adj[static_cast<std::size_t>(v)] &= ~singleton(u);
  }
  auto sweep = [&](int source) {
    VertexSet seen = singleton(source);
    VertexSet frontier = seen;
    while (frontier != 0) {
      VertexSet next = 0;
      for (VertexSet rest = frontier; rest != 0; rest &= rest - 1) {
        next |= adj[static_cast<std::size_t>(std::countr_zero(rest))];
      }
      frontier = next & ~seen;
      seen |= frontier;
    }
    return seen;
  };
  const VertexSet all = g.vertex_set();
  const VertexSet first = sweep(0);
  const VertexSet rest = all & ~first;
  if (rest == 0) {
    throw PreconditionError("deleting class " + std::to_string(index) +
                            " leaves one component; not a partial cube");
  }
  const VertexSet second = sweep(std::countr_zero(rest));
  if ((first | second) != all) {
    throw PreconditionError("deleting class " + std::to_string(index) +
                            " leaves more than two components; not a partial cube");
  }
  return {first, second};
}

HypercubeEmbedding hypercube_embedding(const Graph& g) {
  const auto verdict = is_partial_cube(g);
  if (!verdict) throw PreconditionError("not a partial cube: " + verdict.describe(g));
  if (g.order() <= 1) return HypercubeEmbedding{0, std::vector<std::uint64_t>(static_cast<std::size_t>(g.order()), 0)};
  return hypercube_embedding(g, theta_classes(g));
}

HypercubeEmbedding hypercube_embedding(const Graph& g, const ThetaPartition& p) {
  HypercubeEmbedding emb;
  emb.dim = p.count();
  emb.coords.assign(static_cast<std::size_t>(g.order()), 0);
  for (int i = 0; i < p.count(); ++i) {
    const auto [near, far] = halfspaces(g, p, i);
    for (VertexSet rest = far; rest != 0; rest &= rest - 1) {
      emb.coords[static_cast<std::size_t>(std::countr_zero(rest))] |= std::uint64_t{1} << i;
    }
  }
  return emb;
}

bool is_median_graph(const Graph& g) {
  require_connected(g, "is_median_graph");
  const int n = g.order();
  const auto dist = all_pairs_distances(g);
  // interval[u*n+v]: vertices on some shortest u-v path.
  std::vector<VertexSet> interval(static_cast<std::size_t>(n * n), 0);
  for (int u = 0; u < n; ++u) {
    for (int v = u; v < n; ++v) {
      VertexSet between = 0;
      for (int w = 0; w < n; ++w) {
        if (dist(u, w) + dist(w, v) == dist(u, v)) between |= singleton(w);
      }
      interval[static_cast<std::size_t>(u * n + v)] = between;
      interval[static_cast<std::size_t>(v * n + u)] = between;
    }
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const VertexSet uv = interval[static_cast<std::size_t>(u * n + v)];
      for (int w = v + 1; w < n; ++w) {
        const VertexSet medians = uv & interval[static_cast<std::size_t>(v * n + w)] &
                                  interval[static_cast<std::size_t>(u * n + w)];
        if (std::popcount(medians) != 1) return false;
      }
    }
  }
  return true;
}

std::vector<std::array<int, 4>> list_4cycles(const Graph& g) {
  const int n = g.order();
  std::vector<std::array<int, 4>> cycles;
  for (int a = 0; a < n; ++a) {
    const VertexSet above = ~full_set(a + 1);
    for (int c = a + 1; c < n; ++c) {
      if (g.adjacent(a, c)) continue;
      const VertexSet common = g.neighbor_set(a) & g.neighbor_set(c) & above;
      for (VertexSet bs = common; bs != 0; bs &= bs - 1) {
        const int b = std::countr_zero(bs);
        for (VertexSet ds = bs & (bs - 1); ds != 0; ds &= ds - 1) {
          cycles.push_back({a, b, c, std::countr_zero(ds)});
        }
      }
    }
  }
  return cycles;
}

}  // namespace pcube
