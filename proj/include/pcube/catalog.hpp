#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pcube/graph.hpp"

// Named graphs with fixed vertex orders.
namespace pcube {

// Two 4-cycles v1 v2 v3 v7 and v3 v4 v5 v6 sharing v3; v_i is vertex i-1.
Graph g8();

// Vertices are the integers 0..2^d-1 read as bit tuples (bit i = coordinate i).
Graph hypercube(int d);

// Cycle 0-1-...-(k-1)-0; k even and at least 4.
Graph even_cycle(int k);

// Branch vertices 0..r-1, then one subdivision vertex per pair i<j in
// lexicographic pair order.
Graph subdivided_complete(int r);

// Bit tuples of length d without two consecutive ones, in increasing
// numeric order, joined at Hamming distance 1.
Graph fibonacci_cube(int d);
std::vector<unsigned> fibonacci_strings(int d);

// hypercube(3) without vertex 111; the remaining vertices keep indices 0..6.
Graph q3_minus();

// Expansion of q3_minus() with respect to (claw {000, 001, 010, 100}, all of
// q3_minus()): 11 vertices, 16 edges.
Graph c_q3_minus();

Graph path_graph(int n);

// Lookup by CLI name: g8, q<d>, c<k>, sk<r>, fib<d>, p<n>, q3minus, cq3minus.
std::optional<Graph> named_graph(std::string_view name);

// Representative names accepted by named_graph, for help text and
// round-trip checks.
std::vector<std::string> catalog_names();

}  // namespace pcube
