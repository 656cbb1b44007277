#include "pcube/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <optional>

namespace pcube {

namespace {

using Cell = VertexSet;
using Partition = std::vector<Cell>;  // ordered cells
using Invariant = std::vector<int>;

CanonicalCode encode(const Graph& g, std::span<const int> order) {
  const int n = g.order();
  CanonicalCode code;
  const int bits = n * (n - 1) / 2;
  code.bytes.assign(1 + static_cast<std::size_t>((bits + 7) / 8), 0);
  code.bytes[0] = static_cast<std::uint8_t>(n);
  int bit = 0;
  for (int i = 0; i < n; ++i) {
    const VertexSet row = g.neighbor_set(order[static_cast<std::size_t>(i)]);
    for (int j = i + 1; j < n; ++j, ++bit) {
      if ((row >> order[static_cast<std::size_t>(j)]) & 1U) {
        code.bytes[1 + static_cast<std::size_t>(bit / 8)] |=
            static_cast<std::uint8_t>(0x80U >> (bit % 8));
      }
    }
  }
  return code;
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g) {}

  CanonicalLabeling run() {
    const int n = g_.order();
    if (n == 0) return {CanonicalCode{{0}}, {}};
    path_.clear();
    search(Partition{g_.vertex_set()});
    CanonicalLabeling out;
    out.code = std::move(*best_code_);
    out.new_id.assign(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) out.new_id[static_cast<std::size_t>(best_order_[static_cast<std::size_t>(i)])] = i;
    return out;
  }

 private:
  int count_into(int v, Cell cell) const { return std::popcount(g_.neighbor_set(v) & cell); }

  bool has_twin_in(int v, Cell cell) const {
    for (; cell != 0; cell &= cell - 1) {
      const int u = std::countr_zero(cell);
      if ((g_.neighbor_set(u) & ~singleton(v)) == (g_.neighbor_set(v) & ~singleton(u))) return true;
    }
    return false;
  }

  // Splits cells by neighbor counts into splitter cells until equitable.
  // Split groups are ordered by ascending count, which keeps the procedure
  // independent of vertex numbering.
  void refine(Partition& p) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t s = 0; s < p.size() && !changed; ++s) {
        const Cell splitter = p[s];
        for (std::size_t x = 0; x < p.size(); ++x) {
          if (std::popcount(p[x]) < 2) continue;
          std::array<Cell, kCanonicalMaxVertices + 1> by_count{};
          int lo = kCanonicalMaxVertices;
          int hi = 0;
          for (Cell rest = p[x]; rest != 0; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            const int c = count_into(v, splitter);
            by_count[static_cast<std::size_t>(c)] |= singleton(v);
            lo = std::min(lo, c);
            hi = std::max(hi, c);
          }
          if (lo == hi) continue;
          Partition split;
          for (int c = lo; c <= hi; ++c) {
            if (by_count[static_cast<std::size_t>(c)] != 0) split.push_back(by_count[static_cast<std::size_t>(c)]);
          }
          p.erase(p.begin() + static_cast<std::ptrdiff_t>(x));
          p.insert(p.begin() + static_cast<std::ptrdiff_t>(x), split.begin(), split.end());
          changed = true;
          break;
        }
      }
    }
  }

  // Cell sizes followed by the quotient matrix of the equitable partition.
  Invariant invariant(const Partition& p) const {
    Invariant inv;
    inv.reserve(1 + p.size() + p.size() * p.size());
    inv.push_back(static_cast<int>(p.size()));
    for (Cell c : p) inv.push_back(std::popcount(c));
    for (Cell a : p) {
      const int rep = std::countr_zero(a);
      for (Cell b : p) inv.push_back(count_into(rep, b));
    }
    return inv;
  }

  // -1, 0, +1 comparing the current path with the best path on the current
  // path's length.
  int compare_prefix() const {
    const std::size_t k = std::min(path_.size(), best_path_.size());
    for (std::size_t i = 0; i < k; ++i) {
      if (path_[i] < best_path_[i]) return -1;
      if (best_path_[i] < path_[i]) return 1;
    }
    return 0;
  }

  void search(Partition p) {
    refine(p);
    path_.push_back(invariant(p));
    const int cmp = best_code_ ? compare_prefix() : -1;
    if (cmp > 0) {
      path_.pop_back();
      return;
    }
    if (static_cast<int>(p.size()) == g_.order()) {
      std::vector<int> order;
      order.reserve(p.size());
      for (Cell c : p) order.push_back(std::countr_zero(c));
      auto code = encode(g_, order);
      // Equal prefixes imply equal depth: a leaf's invariant starts with n cells.
      if (!best_code_ || cmp < 0 || code < *best_code_) {
        best_code_ = std::move(code);
        best_order_ = std::move(order);
        best_path_ = path_;
      }
      path_.pop_back();
      return;
    }
    std::size_t target = 0;
    while (std::popcount(p[target]) < 2) ++target;
    Cell tried = 0;
    for (Cell rest = p[target]; rest != 0; rest &= rest - 1) {
      const Cell chosen = rest & (~rest + 1);
      // Swapping twins is an automorphism fixing every cell, so one twin of
      // each family is enough.
      if (has_twin_in(std::countr_zero(chosen), tried)) continue;
      tried |= chosen;
      Partition child;
      child.reserve(p.size() + 1);
      child.insert(child.end(), p.begin(), p.begin() + static_cast<std::ptrdiff_t>(target));
      child.push_back(chosen);
      child.push_back(p[target] & ~chosen);
      child.insert(child.end(), p.begin() + static_cast<std::ptrdiff_t>(target) + 1, p.end());
      search(std::move(child));
    }
    path_.pop_back();
  }

  const Graph& g_;
  std::vector<Invariant> path_;
  std::vector<Invariant> best_path_;
  std::optional<CanonicalCode> best_code_;
  std::vector<int> best_order_;
};

}  // namespace

std::string CanonicalCode::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (auto b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xF]);
  }
  return out;
}

CanonicalCode CanonicalCode::from_hex(const std::string& text) {
  auto nibble = [&](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw PreconditionError("invalid hex digit in canonical code: " + text);
  };
  if (text.empty() || text.size() % 2 != 0) throw PreconditionError("malformed canonical code: " + text);
  CanonicalCode code;
  for (std::size_t i = 0; i < text.size(); i += 2) {
    code.bytes.push_back(static_cast<std::uint8_t>(nibble(text[i]) * 16 + nibble(text[i + 1])));
  }
  return code;
}

CanonicalLabeling canonical_labeling(const Graph& g) {
  if (g.order() > kCanonicalMaxVertices) {
    throw ScaleError("canonical form is limited to " + std::to_string(kCanonicalMaxVertices) +
                     " vertices (graph has " + std::to_string(g.order()) + ")");
  }
  return CanonicalSearch(g).run();
}

CanonicalCode canonical_form(const Graph& g) { return canonical_labeling(g).code; }

Graph canonical_graph(const Graph& g) { return g.relabeled(canonical_labeling(g).new_id); }

Graph decode(const CanonicalCode& code) {
  const int n = code.order();
  const int bits = n * (n - 1) / 2;
  if (code.bytes.size() != 1 + static_cast<std::size_t>((bits + 7) / 8)) {
    throw PreconditionError("canonical code length does not match its vertex count");
  }
  std::vector<std::pair<int, int>> pairs;
  int bit = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++bit) {
      if (code.bytes[1 + static_cast<std::size_t>(bit / 8)] & (0x80U >> (bit % 8))) pairs.emplace_back(i, j);
    }
  }
  return Graph(n, pairs);
}

}  // namespace pcube
