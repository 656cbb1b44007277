#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pcube/graph.hpp"
#include "pcube/theta.hpp"

namespace pcube {

// A bijection from vertices onto {0, ..., n-1}.
class Labeling {
 public:
  Labeling() = default;
  // Throws PreconditionError unless `labels` is a permutation of 0..n-1.
  explicit Labeling(std::vector<int> labels);

  int size() const noexcept { return static_cast<int>(labels_.size()); }
  int operator[](int v) const { return labels_[static_cast<std::size_t>(v)]; }
  std::span<const int> values() const noexcept { return labels_; }

  // v -> (n-1) - f(v).
  Labeling complement() const;

  friend bool operator==(const Labeling&, const Labeling&) = default;

 private:
  std::vector<int> labels_;
};

// Arcs point from the larger label to the smaller one.
struct Orientation {
  std::vector<std::pair<int, int>> arcs;  // (tail, head), in edge-index order
  std::vector<int> head_count;            // arcs entering v
  std::vector<int> tail_count;            // arcs leaving v
};

struct SearchOutcome {
  std::optional<Labeling> found;
  std::uint64_t nodes_explored = 0;
  std::optional<std::uint64_t> solutions_count;
};

enum class GracefulClause { kNone, kIntraClassMismatch, kDuplicateClassValue };

struct GracefulVerdict {
  bool ok = false;
  GracefulClause clause = GracefulClause::kNone;
  std::vector<int> classes;  // offending class indices
  std::string reason;

  explicit operator bool() const noexcept { return ok; }
};

enum class ConsistencyScope { kFourCycles, kAllThetaPairs };

struct ConsistencyVerdict {
  bool ok = true;
  std::string reason;
  explicit operator bool() const noexcept { return ok; }
};

// Sorted multiset of |f(x) - f(y)| over each class.
std::vector<std::vector<int>> class_edge_labels(const Graph& g, const ThetaPartition& p,
                                                const Labeling& f);

GracefulVerdict verify_theta_graceful(const Graph& g, const ThetaPartition& p, const Labeling& f);
GracefulVerdict verify_theta_graceful(const Graph& g, const Labeling& f);

// kFourCycles: f1 + f3 == f2 + f4 on every 4-cycle (v1, v2, v3, v4).
// kAllThetaPairs: for Theta-related xy, uv with d(x,u) < d(x,v),
// f(x) + f(v) == f(y) + f(u).
ConsistencyVerdict verify_consistency(const Graph& g, const Labeling& f, ConsistencyScope scope);

Orientation orientation_of(const Graph& g, const Labeling& f);

inline constexpr int kBruteForceMaxVertices = 10;

// Scans all n! bijections in lexicographic order of (f(0), ..., f(n-1)).
// With count_all the scan runs to completion and `found` holds the
// lexicographically first solution. `threads` splits the scan by f(0).
SearchOutcome brute_force_search(const Graph& g, bool count_all, int threads = 1);

// Depth-first label assignment with sound pruning. Returns a labeling iff
// one exists.
SearchOutcome backtracking_search(const Graph& g);

// Vertex with coordinate tuple b (bit i = b_i) gets sum b_i 2^i.
Labeling canonical_hypercube_labeling(int dim);

}  // namespace pcube
