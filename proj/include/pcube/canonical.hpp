#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "pcube/graph.hpp"

namespace pcube {

inline constexpr int kCanonicalMaxVertices = 16;

// Isomorphism-invariant fingerprint: byte 0 is n, followed by the upper
// triangle of the adjacency matrix under the canonical vertex order, row-major
// (pairs (0,1), (0,2), ..., (n-2,n-1)), packed most significant bit first.
struct CanonicalCode {
  std::vector<std::uint8_t> bytes;

  int order() const noexcept { return bytes.empty() ? 0 : bytes.front(); }
  std::string hex() const;
  static CanonicalCode from_hex(const std::string& text);

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend auto operator<=>(const CanonicalCode& a, const CanonicalCode& b) {
    return a.bytes <=> b.bytes;
  }
};

struct CanonicalLabeling {
  CanonicalCode code;
  std::vector<int> new_id;  // vertex v sits at canonical position new_id[v]
};

// Minimum code over all leaves of an individualization-refinement search.
// Throws ScaleError for n > kCanonicalMaxVertices.
CanonicalLabeling canonical_labeling(const Graph& g);
CanonicalCode canonical_form(const Graph& g);

// g renumbered into canonical order; equal for isomorphic inputs.
Graph canonical_graph(const Graph& g);

// Graph whose adjacency under the identity order is exactly `code`.
Graph decode(const CanonicalCode& code);

}  // namespace pcube
