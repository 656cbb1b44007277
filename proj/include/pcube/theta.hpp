#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pcube/graph.hpp"

namespace pcube {

// Partition of the edge set into classes of the transitive closure of the
// Djokovic-Winkler relation. Classes are numbered by their smallest edge
// index, so class 0 contains edge 0.
struct ThetaPartition {
  std::vector<int> class_of;             // per edge index
  std::vector<std::vector<int>> classes; // edge indices, ascending
  bool closure_added = false;            // raw relation was not transitive

  int count() const noexcept { return static_cast<int>(classes.size()); }
};

// Coordinates of an isometric embedding into Q_dim. Bit i of coords[v] is
// coordinate i, which corresponds to Theta-class i.
struct HypercubeEmbedding {
  int dim = 0;
  std::vector<std::uint64_t> coords;

  // Coordinate tuple of v written with coordinate 0 first.
  std::string tuple(int v) const;
};

enum class PartialCubeFailure { kNone, kDisconnected, kNotBipartite, kNotTransitive };

struct PartialCubeVerdict {
  bool ok = false;
  PartialCubeFailure failure = PartialCubeFailure::kNone;
  // For kNotTransitive: edge indices (e, f, h) with e~f, f~h but not e~h.
  std::optional<std::array<int, 3>> triple;

  explicit operator bool() const noexcept { return ok; }
  std::string describe(const Graph& g) const;
};

// Raw Theta: d(x,u) + d(y,v) != d(x,v) + d(y,u). Both pairs must be edges of
// the graph whose distances are given (distance exactly 1), otherwise
// PreconditionError.
bool theta_related(const DistanceMatrix& dist, Edge e, Edge f);

// Transitive closure classes. Throws PreconditionError on a disconnected graph.
ThetaPartition theta_classes(const Graph& g);
ThetaPartition theta_classes(const Graph& g, const DistanceMatrix& dist);

// Winkler: connected, bipartite, and raw Theta transitive. n <= 1 passes.
PartialCubeVerdict is_partial_cube(const Graph& g);

// Number of Theta-classes. Throws PreconditionError with the recognition
// witness when g is not a partial cube.
int isometric_dimension(const Graph& g);

// Sides left by deleting class `index`: (side containing vertex 0, other side).
// Throws PreconditionError unless exactly two components remain.
std::pair<VertexSet, VertexSet> halfspaces(const Graph& g, const ThetaPartition& p, int index);

// Coordinate i is 0 on the halfspace of class i containing vertex 0.
HypercubeEmbedding hypercube_embedding(const Graph& g);
HypercubeEmbedding hypercube_embedding(const Graph& g, const ThetaPartition& p);

// Every vertex triple has exactly one median. Throws on disconnected input.
bool is_median_graph(const Graph& g);

// Every 4-cycle (a, b, c, d) once: a is the smallest vertex, c its antipode,
// b < d. Requires a bipartite graph.
std::vector<std::array<int, 4>> list_4cycles(const Graph& g);

}  // namespace pcube
