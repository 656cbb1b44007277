#include "pcube/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace pcube {

namespace {

bool is_ignorable(const std::string& line) {
  const auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

// Reads two integers and nothing else from `line`.
bool parse_pair(const std::string& line, long long& a, long long& b) {
  std::istringstream in(line);
  if (!(in >> a >> b)) return false;
  std::string extra;
  return !(in >> extra);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  long long n = -1;
  long long m = -1;
  std::vector<std::pair<int, int>> pairs;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_ignorable(line)) continue;
    long long a = 0;
    long long b = 0;
    if (!parse_pair(line, a, b)) {
      throw ParseError(line_no, n < 0 ? "expected header \"n m\"" : "expected edge \"u v\"");
    }
    if (n < 0) {
      if (a < 0 || a > kMaxVertices) {
        throw ParseError(line_no, "vertex count must be in 0.." + std::to_string(kMaxVertices));
      }
      if (b < 0) throw ParseError(line_no, "edge count must be nonnegative");
      n = a;
      m = b;
      continue;
    }
    if (static_cast<long long>(pairs.size()) == m) {
      throw ParseError(line_no, "more than the declared " + std::to_string(m) + " edges");
    }
    if (a < 0 || a >= n || b < 0 || b >= n) {
      throw ParseError(line_no, "edge (" + std::to_string(a) + "," + std::to_string(b) +
                                    ") has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (a == b) throw ParseError(line_no, "edge (" + std::to_string(a) + "," + std::to_string(b) + ") is a self-loop");
    pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
  }
  if (n < 0) throw ParseError(line_no + 1, "missing header \"n m\"");
  if (static_cast<long long>(pairs.size()) != m) {
    throw ParseError(line_no + 1, "expected " + std::to_string(m) + " edges, found " + std::to_string(pairs.size()));
  }
  return Graph(static_cast<int>(n), pairs);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

Labeling read_certificate(std::istream& in, int n) {
  std::vector<int> labels(static_cast<std::size_t>(n), -1);
  std::string line;
  int line_no = 0;
  int seen = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_ignorable(line)) continue;
    long long v = 0;
    long long label = 0;
    if (!parse_pair(line, v, label)) throw ParseError(line_no, "expected \"vertex label\"");
    if (v < 0 || v >= n) throw ParseError(line_no, "vertex " + std::to_string(v) + " outside 0.." + std::to_string(n - 1));
    auto& slot = labels[static_cast<std::size_t>(v)];
    if (slot >= 0) throw ParseError(line_no, "vertex " + std::to_string(v) + " labeled twice");
    if (label < 0 || label >= n) {
      throw PreconditionError("label " + std::to_string(label) + " of vertex " + std::to_string(v) +
                              " is outside 0.." + std::to_string(n - 1));
    }
    slot = static_cast<int>(label);
    ++seen;
  }
  if (seen != n) {
    throw ParseError(line_no + 1, "certificate labels " + std::to_string(seen) + " of " + std::to_string(n) + " vertices");
  }
  return Labeling(std::move(labels));
}

void write_certificate(std::ostream& out, const Labeling& f) {
  for (int v = 0; v < f.size(); ++v) out << v << ' ' << f[v] << '\n';
}

std::string report_json(const ClassificationReport& report) {
  nlohmann::ordered_json doc;
  doc["dimension"] = report.dimension;
  doc["total_classes"] = report.total_classes;
  auto& entries = doc["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : report.entries) {
    nlohmann::ordered_json entry;
    entry["code_hex"] = e.code.hex();
    entry["n"] = e.n;
    entry["m"] = e.m;
    entry["graceful"] = e.graceful;
    entry["median"] = e.median;
    if (e.certificate) {
      entry["certificate"] = std::vector<int>(e.certificate->values().begin(), e.certificate->values().end());
    } else {
      entry["exhausted"] = true;
    }
    entries.push_back(std::move(entry));
  }
  return doc.dump(2);
}

}  // namespace pcube
