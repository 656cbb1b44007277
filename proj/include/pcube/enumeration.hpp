#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pcube/canonical.hpp"
#include "pcube/graph.hpp"
#include "pcube/labeling.hpp"

namespace pcube {

// Two vertex sets of a host graph; see validate_cover for the invariants.
struct IsometricCover {
  VertexSet side1 = 0;
  VertexSet side2 = 0;
  friend bool operator==(const IsometricCover&, const IsometricCover&) = default;
};

// One isomorphism class, stored in canonical vertex order so that `code`
// alone reproduces `graph`.
struct GraphClass {
  CanonicalCode code;
  Graph graph;
};

struct ClassificationEntry {
  CanonicalCode code;
  int n = 0;
  int m = 0;
  bool graceful = false;
  bool median = false;
  std::optional<Labeling> certificate;  // graceful entries
  bool exhausted = false;               // search completed with no solution
  std::uint64_t nodes_explored = 0;
};

struct ClassificationReport {
  int dimension = 0;
  int total_classes = 0;
  std::vector<ClassificationEntry> entries;  // sorted by (n, code)

  int non_graceful() const;
};

inline constexpr int kMaxSubsetDimension = 4;
inline constexpr int kMaxCoverVertices = 12;

// Returns an empty string when the cover is valid for g, otherwise the
// violated invariant: sides within the vertex set, union is everything,
// nonempty intersection, every edge inside a side, both sides connected and
// isometric in g.
std::string validate_cover(const Graph& g, const IsometricCover& c);

// Copies of side1 (ascending original order) are vertices 0..|side1|-1,
// copies of side2 follow; copies of each intersection vertex are matched.
// Throws PreconditionError naming the violated invariant on a bad cover.
Graph expansion(const Graph& g, const IsometricCover& c);

// Every ordered valid cover. `max_overlap` bounds |side1 & side2| (used by
// the expansion closure to skip results that exceed its vertex bound).
std::vector<IsometricCover> enumerate_isometric_covers(const Graph& g, int max_overlap = kMaxVertices);

// Induced subgraphs of Q_dim on subsets that are connected, isometric and use
// every coordinate, one per isomorphism class, sorted by (n, code).
// With reduce_symmetry only the smallest mask of each orbit under the
// 2^dim * dim! automorphisms of Q_dim is canonicalized; the result is the same.
// Throws ScaleError for dim > kMaxSubsetDimension.
std::vector<GraphClass> enumerate_partial_cube_classes(int dim, int threads = 1, bool reduce_symmetry = false);
std::vector<Graph> enumerate_partial_cubes(int dim, int threads = 1, bool reduce_symmetry = false);

// Closure of {K1} under expansion, restricted to graphs with at most max_n
// vertices and (when given) isometric dimension at most max_dim. Sorted by
// (n, code).
std::vector<GraphClass> enumerate_via_expansions(int max_n, std::optional<int> max_dim = std::nullopt,
                                                 int threads = 1);

// Backtracking search on every class of the given dimension.
ClassificationReport classify_gracefulness(int dim, int threads = 1, bool reduce_symmetry = false);

}  // namespace pcube
