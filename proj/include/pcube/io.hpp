#pragma once

#include <iosfwd>
#include <string>

#include "pcube/enumeration.hpp"
#include "pcube/graph.hpp"
#include "pcube/labeling.hpp"

namespace pcube {

// Edge-list text: the first non-comment line is "n m", followed by m lines
// "u v" (0-indexed, whitespace separated). Lines whose first non-blank
// character is '#' and blank lines are ignored. Throws ParseError.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

// Certificate text: one "vertex label" line per vertex, any order, '#'
// comments allowed. Throws ParseError on malformed lines or when the
// vertices are not exactly 0..n-1, PreconditionError when the labels are
// not a bijection.
Labeling read_certificate(std::istream& in, int n);
void write_certificate(std::ostream& out, const Labeling& f);

// {dimension, total_classes, entries: [{code_hex, n, m, graceful, median,
//  certificate | exhausted: true}]}, pretty-printed with two-space indent.
std::string report_json(const ClassificationReport& report);

}  // namespace pcube
