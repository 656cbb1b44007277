#include "pcube/labeling.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <thread>

namespace pcube {

namespace {

void require_size(const Graph& g, const Labeling& f) {
  if (f.size() != g.order()) {
    throw PreconditionError("labeling covers " + std::to_string(f.size()) + " vertices, graph has " +
                            std::to_string(g.order()));
  }
}

void require_partial_cube(const Graph& g, const char* op) {
  const auto verdict = is_partial_cube(g);
  if (!verdict) {
    throw PreconditionError(std::string(op) + " requires a partial cube: " + verdict.describe(g));
  }
}

ThetaPartition partition_of(const Graph& g) {
  return g.order() <= 1 ? ThetaPartition{} : theta_classes(g);
}

std::string class_text(const Graph& g, const ThetaPartition& p, int c) {
  std::string out = "{";
  for (int e : p.classes[static_cast<std::size_t>(c)]) {
    if (out.size() > 1) out += ", ";
    out += std::to_string(g.edge(e).u) + "-" + std::to_string(g.edge(e).v);
  }
  return out + "}";
}

// Flattened class -> edge lists for the permutation scan.
struct ClassTable {
  std::vector<std::vector<Edge>> classes;

  explicit ClassTable(const Graph& g, const ThetaPartition& p) {
    for (const auto& cls : p.classes) {
      auto& out = classes.emplace_back();
      for (int e : cls) out.push_back(g.edge(e));
    }
  }

  bool graceful(std::span<const int> f) const {
    std::uint64_t used = 0;
    for (const auto& cls : classes) {
      const int w = std::abs(f[static_cast<std::size_t>(cls[0].u)] - f[static_cast<std::size_t>(cls[0].v)]);
      for (std::size_t i = 1; i < cls.size(); ++i) {
        if (std::abs(f[static_cast<std::size_t>(cls[i].u)] - f[static_cast<std::size_t>(cls[i].v)]) != w) {
          return false;
        }
      }
      const std::uint64_t bit = std::uint64_t{1} << w;
      if (used & bit) return false;
      used |= bit;
    }
    return true;
  }
};

struct BlockResult {
  std::uint64_t examined = 0;  // up to and including the first solution when not counting
  std::uint64_t solutions = 0;
  std::optional<std::vector<int>> first;
};

// All permutations with f(0) == lead, lexicographically.
BlockResult scan_block(const ClassTable& table, int n, int lead, bool count_all) {
  BlockResult out;
  std::vector<int> f(static_cast<std::size_t>(n));
  f[0] = lead;
  for (int i = 1, next = 0; i < n; ++i, ++next) {
    if (next == lead) ++next;
    f[static_cast<std::size_t>(i)] = next;
  }
  do {
    ++out.examined;
    if (table.graceful(f)) {
      ++out.solutions;
      if (!out.first) out.first = f;
      if (!count_all) break;
    }
  } while (std::next_permutation(f.begin() + 1, f.end()));
  return out;
}

class Backtracker {
 public:
  Backtracker(const Graph& g, const ThetaPartition& p) : g_(g), p_(p), n_(g.order()) {
    order_ = assignment_order();
    labels_.assign(static_cast<std::size_t>(n_), -1);
    class_value_.assign(static_cast<std::size_t>(p.count()), 0);
    cycles_at_.assign(static_cast<std::size_t>(n_), {});
    for (const auto& c : list_4cycles(g)) {
      // For vertex c[i]: f(c[i]) = f(c[i+1]) + f(c[i+3]) - f(c[i+2]).
      for (int i = 0; i < 4; ++i) {
        cycles_at_[static_cast<std::size_t>(c[static_cast<std::size_t>(i)])].push_back(
            {c[static_cast<std::size_t>((i + 1) % 4)], c[static_cast<std::size_t>((i + 3) % 4)],
             c[static_cast<std::size_t>((i + 2) % 4)]});
      }
    }
  }

  SearchOutcome run() {
    SearchOutcome outcome;
    if (descend(0)) outcome.found = Labeling(labels_);
    outcome.nodes_explored = nodes_;
    return outcome;
  }

 private:
  struct CycleRef {
    int side_a;
    int side_b;
    int antipode;
  };

  // Breadth-first from the lowest-index maximum-degree vertex.
  std::vector<int> assignment_order() const {
    std::vector<int> order;
    if (n_ == 0) return order;
    int root = 0;
    for (int v = 1; v < n_; ++v) {
      if (g_.degree(v) > g_.degree(root)) root = v;
    }
    VertexSet seen = singleton(root);
    order.push_back(root);
    for (std::size_t head = 0; head < order.size(); ++head) {
      for (int w : g_.neighbors(order[head])) {
        if (!((seen >> w) & 1U)) {
          seen |= singleton(w);
          order.push_back(w);
        }
      }
    }
    return order;
  }

  int label(int v) const { return labels_[static_cast<std::size_t>(v)]; }

  struct Forced {
    bool any = false;
    bool conflict = false;
    int value = 0;
  };

  // Antipodal-sum value forced on v by 4-cycles whose other vertices are
  // already labeled.
  Forced forced_by_cycles(int v) const {
    Forced forced;
    for (const auto& c : cycles_at_[static_cast<std::size_t>(v)]) {
      if (label(c.side_a) < 0 || label(c.side_b) < 0 || label(c.antipode) < 0) continue;
      const int x = label(c.side_a) + label(c.side_b) - label(c.antipode);
      if (!forced.any) {
        forced = {true, false, x};
      } else if (forced.value != x) {
        forced.conflict = true;
        break;
      }
    }
    return forced;
  }

  std::vector<int> candidates(std::size_t depth, int v) const {
    std::vector<int> out;
    const auto forced = forced_by_cycles(v);
    if (forced.conflict) return out;
    auto usable = [&](int x) { return x >= 0 && x < n_ && !((used_labels_ >> x) & 1U); };
    if (forced.any) {
      if (usable(forced.value)) out.push_back(forced.value);
      return out;
    }
    for (int u : g_.neighbors(v)) {
      if (label(u) < 0) continue;
      const int c = p_.class_of[static_cast<std::size_t>(*g_.edge_index(u, v))];
      const int w = class_value_[static_cast<std::size_t>(c)];
      if (w == 0) continue;
      if (usable(label(u) - w)) out.push_back(label(u) - w);
      if (usable(label(u) + w)) out.push_back(label(u) + w);
      return out;
    }
    // Complement symmetry: the anchor takes a label in the lower half.
    const int limit = depth == 0 ? (n_ - 1) / 2 : n_ - 1;
    for (int x = 0; x <= limit; ++x) {
      if (usable(x)) out.push_back(x);
    }
    return out;
  }

  // Assigns x to v if every newly labeled edge keeps classes constant and
  // class values distinct. Records the classes it set in `set_classes`.
  bool assign(int v, int x, std::vector<int>& set_classes) {
    for (int u : g_.neighbors(v)) {
      if (label(u) < 0) continue;
      const int c = p_.class_of[static_cast<std::size_t>(*g_.edge_index(u, v))];
      const int w = std::abs(x - label(u));
      auto& value = class_value_[static_cast<std::size_t>(c)];
      if (value != 0) {
        if (value != w) return false;
        continue;
      }
      const std::uint64_t bit = std::uint64_t{1} << w;
      if (used_values_ & bit) return false;
      value = w;
      used_values_ |= bit;
      set_classes.push_back(c);
    }
    labels_[static_cast<std::size_t>(v)] = x;
    used_labels_ |= std::uint64_t{1} << x;
    return true;
  }

  void undo(int v, std::vector<int>& set_classes) {
    for (int c : set_classes) {
      auto& value = class_value_[static_cast<std::size_t>(c)];
      used_values_ &= ~(std::uint64_t{1} << value);
      value = 0;
    }
    set_classes.clear();
    const int x = labels_[static_cast<std::size_t>(v)];
    if (x >= 0) used_labels_ &= ~(std::uint64_t{1} << x);
    labels_[static_cast<std::size_t>(v)] = -1;
  }

  bool descend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const int v = order_[depth];
    std::vector<int> set_classes;
    for (int x : candidates(depth, v)) {
      if (assign(v, x, set_classes)) {
        ++nodes_;
        if (descend(depth + 1)) return true;
      }
      undo(v, set_classes);
    }
    return false;
  }

  const Graph& g_;
  const ThetaPartition& p_;
  int n_;
  std::vector<int> order_;
  std::vector<int> labels_;
  std::vector<int> class_value_;  // 0 = unset (edge labels are >= 1)
  std::vector<std::vector<CycleRef>> cycles_at_;
  std::uint64_t used_labels_ = 0;
  std::uint64_t used_values_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace

Labeling::Labeling(std::vector<int> labels) : labels_(std::move(labels)) {
  const int n = size();
  std::vector<char> seen(labels_.size(), 0);
  for (int x : labels_) {
    if (x < 0 || x >= n || seen[static_cast<std::size_t>(x)]) {
      throw PreconditionError("labeling is not a bijection onto 0.." + std::to_string(n - 1));
    }
    seen[static_cast<std::size_t>(x)] = 1;
  }
}

Labeling Labeling::complement() const {
  std::vector<int> out(labels_.size());
  const int top = size() - 1;
  std::transform(labels_.begin(), labels_.end(), out.begin(), [top](int x) { return top - x; });
  return Labeling(std::move(out));
}

std::vector<std::vector<int>> class_edge_labels(const Graph& g, const ThetaPartition& p,
                                                const Labeling& f) {
  require_size(g, f);
  std::vector<std::vector<int>> out;
  out.reserve(p.classes.size());
  for (const auto& cls : p.classes) {
    auto& labels = out.emplace_back();
    for (int e : cls) labels.push_back(std::abs(f[g.edge(e).u] - f[g.edge(e).v]));
    std::sort(labels.begin(), labels.end());
  }
  return out;
}

GracefulVerdict verify_theta_graceful(const Graph& g, const ThetaPartition& p, const Labeling& f) {
  const auto labels = class_edge_labels(g, p, f);
  GracefulVerdict verdict;
  for (int c = 0; c < p.count(); ++c) {
    const auto& l = labels[static_cast<std::size_t>(c)];
    if (l.front() != l.back()) {
      verdict.clause = GracefulClause::kIntraClassMismatch;
      verdict.classes = {c};
      verdict.reason = "class " + std::to_string(c) + " " + class_text(g, p, c) +
                       " has edge labels " + std::to_string(l.front()) + " and " +
                       std::to_string(l.back());
      return verdict;
    }
  }
  for (int a = 0; a < p.count(); ++a) {
    for (int b = a + 1; b < p.count(); ++b) {
      if (labels[static_cast<std::size_t>(a)].front() == labels[static_cast<std::size_t>(b)].front()) {
        verdict.clause = GracefulClause::kDuplicateClassValue;
        verdict.classes = {a, b};
        verdict.reason = "classes " + std::to_string(a) + " and " + std::to_string(b) +
                         " share edge label " + std::to_string(labels[static_cast<std::size_t>(a)].front());
        return verdict;
      }
    }
  }
  verdict.ok = true;
  return verdict;
}

GracefulVerdict verify_theta_graceful(const Graph& g, const Labeling& f) {
  require_size(g, f);
  require_partial_cube(g, "verify_theta_graceful");
  return verify_theta_graceful(g, partition_of(g), f);
}

ConsistencyVerdict verify_consistency(const Graph& g, const Labeling& f, ConsistencyScope scope) {
  require_size(g, f);
  ConsistencyVerdict verdict;
  if (scope == ConsistencyScope::kFourCycles) {
    for (const auto& [a, b, c, d] : list_4cycles(g)) {
      if (f[a] + f[c] != f[b] + f[d]) {
        verdict.ok = false;
        verdict.reason = "4-cycle " + std::to_string(a) + "-" + std::to_string(b) + "-" +
                         std::to_string(c) + "-" + std::to_string(d) + ": antipodal sums " +
                         std::to_string(f[a] + f[c]) + " != " + std::to_string(f[b] + f[d]);
        return verdict;
      }
    }
    return verdict;
  }
  require_partial_cube(g, "verify_consistency");
  const auto dist = all_pairs_distances(g);
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (!theta_related(dist, edges[i], edges[j])) continue;
      const int x = edges[i].u;
      const int y = edges[i].v;
      auto [u, v] = edges[j];
      if (dist(x, u) > dist(x, v)) std::swap(u, v);
      if (f[x] + f[v] != f[y] + f[u]) {
        verdict.ok = false;
        verdict.reason = "edges " + std::to_string(x) + "-" + std::to_string(y) + " and " +
                         std::to_string(u) + "-" + std::to_string(v) + " violate f(x)+f(v) = f(y)+f(u)";
        return verdict;
      }
    }
  }
  return verdict;
}

Orientation orientation_of(const Graph& g, const Labeling& f) {
  require_size(g, f);
  Orientation o;
  o.head_count.assign(static_cast<std::size_t>(g.order()), 0);
  o.tail_count.assign(static_cast<std::size_t>(g.order()), 0);
  for (const auto& e : g.edges()) {
    const auto [tail, head] = f[e.u] > f[e.v] ? std::pair{e.u, e.v} : std::pair{e.v, e.u};
    o.arcs.emplace_back(tail, head);
    ++o.tail_count[static_cast<std::size_t>(tail)];
    ++o.head_count[static_cast<std::size_t>(head)];
  }
  return o;
}

SearchOutcome brute_force_search(const Graph& g, bool count_all, int threads) {
  const int n = g.order();
  if (n > kBruteForceMaxVertices) {
    throw ScaleError("brute force is limited to " + std::to_string(kBruteForceMaxVertices) +
                     " vertices (graph has " + std::to_string(n) + "); use the backtracking solver");
  }
  require_partial_cube(g, "brute_force_search");
  const auto p = partition_of(g);
  const ClassTable table(g, p);

  SearchOutcome outcome;
  if (n == 0) {
    outcome.found = Labeling{};
    outcome.nodes_explored = 1;
    if (count_all) outcome.solutions_count = 1;
    return outcome;
  }

  std::vector<BlockResult> blocks(static_cast<std::size_t>(n));
  std::atomic<int> next_block{0};
  std::atomic<int> lowest_hit{n};
  auto worker = [&] {
    for (int lead = next_block++; lead < n; lead = next_block++) {
      // A lower block already holds the lexicographically first witness.
      if (!count_all && lead > lowest_hit.load()) continue;
      auto& block = blocks[static_cast<std::size_t>(lead)];
      block = scan_block(table, n, lead, count_all);
      if (block.first) {
        int seen = lowest_hit.load();
        while (lead < seen && !lowest_hit.compare_exchange_weak(seen, lead)) {
        }
      }
    }
  };
  const int workers = std::clamp(threads, 1, n);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
  }

  // Deterministic reduce: examined counts follow a sequential scan.
  std::uint64_t block_size = 1;
  for (int i = 2; i < n; ++i) block_size *= static_cast<std::uint64_t>(i);
  std::uint64_t solutions = 0;
  for (int lead = 0; lead < n; ++lead) {
    const auto& block = blocks[static_cast<std::size_t>(lead)];
    if (count_all) {
      solutions += block.solutions;
      outcome.nodes_explored += block.examined;
      if (!outcome.found && block.first) outcome.found = Labeling(*block.first);
      continue;
    }
    if (block.first) {
      outcome.nodes_explored += block.examined;
      outcome.found = Labeling(*block.first);
      break;
    }
    outcome.nodes_explored += block_size;
  }
  if (count_all) outcome.solutions_count = solutions;
  return outcome;
}

SearchOutcome backtracking_search(const Graph& g) {
  require_partial_cube(g, "backtracking_search");
  const auto p = partition_of(g);
  return Backtracker(g, p).run();
}

Labeling canonical_hypercube_labeling(int dim) {
  if (dim < 0) throw PreconditionError("dimension must be nonnegative");
  if ((1 << std::min(dim, 7)) > kMaxVertices) {
    throw ScaleError("hypercube of dimension " + std::to_string(dim) + " exceeds " +
                     std::to_string(kMaxVertices) + " vertices");
  }
  std::vector<int> labels(std::size_t{1} << dim);
  std::iota(labels.begin(), labels.end(), 0);
  return Labeling(std::move(labels));
}

}  // namespace pcube
