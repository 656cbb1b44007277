#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "corpus.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "pcube/catalog.hpp"
#include "pcube/labeling.hpp"

using namespace pcube;

namespace {

enum { v1, v2, v3, v4, v5, v6, v7 };

Labeling identity(int n) {
  std::vector<int> f(static_cast<std::size_t>(n));
  std::iota(f.begin(), f.end(), 0);
  return Labeling(f);
}

std::vector<int> to_vector(const Labeling& f) { return {f.values().begin(), f.values().end()}; }

bool four_cycle_clean(const Graph& g, const Labeling& f) {
  return static_cast<bool>(verify_consistency(g, f, ConsistencyScope::kFourCycles));
}

// A 4-cycle around the vertices in order 0-1-2-3.
const Graph kC4 = even_cycle(4);

}  // namespace

TEST_CASE("Labeling rejects non-bijections") {
  CHECK_THROWS_AS(Labeling({0, 0}), PreconditionError);
  CHECK_THROWS_AS(Labeling({0, 2}), PreconditionError);
  CHECK_THROWS_AS(Labeling({-1, 0}), PreconditionError);
  CHECK_NOTHROW(Labeling({1, 0}));
  CHECK(Labeling({0, 2, 1}).complement() == Labeling({2, 0, 1}));
  CHECK_THROWS_AS(verify_theta_graceful(kC4, Labeling({0, 1, 2})), PreconditionError);
}

TEST_CASE("class_edge_labels examples") {
  const Graph k2(2, {{0, 1}});
  CHECK(class_edge_labels(k2, theta_classes(k2), Labeling({0, 1})) == std::vector<std::vector<int>>{{1}});

  auto c4 = class_edge_labels(kC4, theta_classes(kC4), Labeling({0, 1, 3, 2}));
  std::sort(c4.begin(), c4.end());
  CHECK(c4 == std::vector<std::vector<int>>{{1, 1}, {2, 2}});

  const Graph g = g8();
  const auto p = theta_classes(g);
  const auto labels = class_edge_labels(g, p, identity(7));
  const int cls = p.class_of[static_cast<std::size_t>(*g.edge_index(v1, v2))];
  CHECK(labels[static_cast<std::size_t>(cls)] == std::vector<int>{1, 4});
}

TEST_CASE("verify_theta_graceful examples") {
  CHECK(verify_theta_graceful(kC4, Labeling({0, 1, 3, 2})).ok);

  const Graph g = g8();
  const auto p = theta_classes(g);
  const auto verdict = verify_theta_graceful(g, p, identity(7));
  CHECK_FALSE(verdict.ok);
  CHECK(verdict.clause == GracefulClause::kIntraClassMismatch);
  REQUIRE(verdict.classes.size() == 1);
  CHECK(verdict.classes[0] == p.class_of[static_cast<std::size_t>(*g.edge_index(v1, v2))]);
  CHECK(verdict.reason.find("1 and 4") != std::string::npos);

  // P3 with both edges labeled 1 share a value across two classes.
  const auto dup = verify_theta_graceful(path_graph(3), Labeling({0, 1, 2}));
  CHECK(dup.clause == GracefulClause::kDuplicateClassValue);
  CHECK(dup.classes == std::vector<int>{0, 1});

  for (int d = 1; d <= 4; ++d) {
    const Graph q = hypercube(d);
    const auto f = canonical_hypercube_labeling(d);
    CHECK(verify_theta_graceful(q, f).ok);
    const auto pq = theta_classes(q);
    std::vector<int> values;
    for (const auto& l : class_edge_labels(q, pq, f)) values.push_back(l.front());
    std::sort(values.begin(), values.end());
    std::vector<int> expected;
    for (int i = 0; i < d; ++i) expected.push_back(1 << i);
    CHECK(values == expected);
  }
  CHECK(canonical_hypercube_labeling(1) == Labeling({0, 1}));
}

TEST_CASE("verify_consistency examples") {
  CHECK(verify_consistency(kC4, Labeling({0, 1, 3, 2}), ConsistencyScope::kFourCycles).ok);
  const auto bad = verify_consistency(kC4, Labeling({0, 1, 2, 3}), ConsistencyScope::kFourCycles);
  CHECK_FALSE(bad.ok);
  CHECK_FALSE(bad.reason.empty());
  CHECK(verify_consistency(hypercube(3), canonical_hypercube_labeling(3), ConsistencyScope::kAllThetaPairs).ok);
}

TEST_CASE("orientation_of examples") {
  const auto k2 = orientation_of(Graph(2, {{0, 1}}), Labeling({0, 1}));
  CHECK(k2.arcs == std::vector<std::pair<int, int>>{{1, 0}});
  CHECK(k2.head_count == std::vector<int>{1, 0});

  const auto c4 = orientation_of(kC4, Labeling({0, 1, 3, 2}));
  CHECK(c4.head_count[2] == 0);
  CHECK(c4.tail_count[2] == 2);
  CHECK(c4.tail_count[0] == 0);
}

TEST_CASE("orientation extremals on random bijections") {
  std::mt19937 rng(11);
  for (const auto& [g, d] : testing_corpus::corpus()) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto perm = oracle::random_permutation(g.order(), rng);
      const Labeling f(perm);
      const auto o = orientation_of(g, f);
      int top = 0;
      int bottom = 0;
      for (int v = 0; v < g.order(); ++v) {
        if (f[v] == g.order() - 1) top = v;
        if (f[v] == 0) bottom = v;
      }
      CHECK(o.head_count[static_cast<std::size_t>(top)] == 0);
      CHECK(o.tail_count[static_cast<std::size_t>(bottom)] == 0);
      CHECK(static_cast<int>(o.arcs.size()) == g.size());
      for (auto [t, h] : o.arcs) CHECK(f[t] > f[h]);
      for (int v = 0; v < g.order(); ++v) {
        CHECK(o.head_count[static_cast<std::size_t>(v)] + o.tail_count[static_cast<std::size_t>(v)] == g.degree(v));
      }
    }
  }
}

TEST_CASE("brute_force_search examples") {
  const auto g8_out = brute_force_search(g8(), true);
  CHECK_FALSE(g8_out.found.has_value());
  REQUIRE(g8_out.solutions_count.has_value());
  CHECK(*g8_out.solutions_count == 0);
  CHECK(g8_out.nodes_explored == 5040);

  const auto k2 = brute_force_search(Graph(2, {{0, 1}}), false);
  REQUIRE(k2.found.has_value());
  CHECK(*k2.found == Labeling({0, 1}));

  // Counts frozen from oracle::count_graceful.
  CHECK(*brute_force_search(kC4, true).solutions_count == 8);
  CHECK(*brute_force_search(path_graph(3), true).solutions_count == 4);
  CHECK(*brute_force_search(hypercube(3), true).solutions_count == 48);
  CHECK(*brute_force_search(q3_minus(), true).solutions_count == 24);
  CHECK(*brute_force_search(even_cycle(6), true).solutions_count == 24);

  CHECK_THROWS_AS(brute_force_search(c_q3_minus(), false), ScaleError);
}

TEST_CASE("brute force counts agree with the permutation oracle") {
  for (const Graph& g : {kC4, path_graph(3), hypercube(3), g8(), q3_minus(), even_cycle(6)}) {
    CHECK(static_cast<long long>(*brute_force_search(g, true).solutions_count) == oracle::count_graceful(g));
  }
}

TEST_CASE("G8 has no Theta-graceful labeling by direct listing") {
  // Independent of the library: classes typed in from the definition.
  const std::vector<std::vector<std::pair<int, int>>> classes{
      {{v1, v2}, {v3, v7}}, {{v1, v7}, {v2, v3}}, {{v3, v4}, {v5, v6}}, {{v3, v6}, {v4, v5}}};
  std::vector<int> f{0, 1, 2, 3, 4, 5, 6};
  int hits = 0;
  do {
    if (oracle::graceful(classes, f)) ++hits;
  } while (std::next_permutation(f.begin(), f.end()));
  CHECK(hits == 0);
}

TEST_CASE("G8 permutation listing prints nothing") {
  // Conditions written per vertex label, with the bracket typo corrected.
  std::vector<int> f{0, 1, 2, 3, 4, 5, 6};
  int printed = 0;
  do {
    const int f1 = f[0], f2 = f[1], f3 = f[2], f4 = f[3], f5 = f[4], f6 = f[5], f7 = f[6];
    if (std::abs(f1 - f7) == std::abs(f2 - f3) && std::abs(f1 - f2) == std::abs(f7 - f3) &&
        std::abs(f3 - f6) == std::abs(f5 - f4) && std::abs(f6 - f5) == std::abs(f3 - f4) &&
        std::set<int>{std::abs(f1 - f7), std::abs(f1 - f2), std::abs(f3 - f4), std::abs(f4 - f5)}.size() == 4) {
      ++printed;
    }
  } while (std::next_permutation(f.begin(), f.end()));
  CHECK(printed == 0);
}

TEST_CASE("brute force is deterministic across thread counts") {
  for (const Graph& g : {hypercube(3), q3_minus(), g8()}) {
    const auto a = brute_force_search(g, true, 1);
    const auto b = brute_force_search(g, true, 4);
    CHECK(a.found == b.found);
    CHECK(a.solutions_count == b.solutions_count);
    CHECK(a.nodes_explored == b.nodes_explored);
    const auto c = brute_force_search(g, false, 1);
    const auto e = brute_force_search(g, false, 3);
    CHECK(c.found == e.found);
    CHECK(c.nodes_explored == e.nodes_explored);
    if (a.found) CHECK(c.found == a.found);
  }
}

TEST_CASE("backtracking_search examples") {
  CHECK_FALSE(backtracking_search(g8()).found.has_value());
  const auto q4 = backtracking_search(hypercube(4));
  REQUIRE(q4.found.has_value());
  CHECK(verify_theta_graceful(hypercube(4), *q4.found).ok);
  CHECK_FALSE(backtracking_search(subdivided_complete(4)).found.has_value());
  CHECK_FALSE(backtracking_search(c_q3_minus()).found.has_value());
  CHECK_THROWS_AS(backtracking_search(Graph(3, {{0, 1}, {1, 2}, {0, 2}})), PreconditionError);
  for (int k = 4; k <= 12; k += 2) {
    const auto out = backtracking_search(even_cycle(k));
    REQUIRE(out.found.has_value());
    CHECK(verify_theta_graceful(even_cycle(k), *out.found).ok);
  }
}

TEST_CASE("backtracking agrees with brute force for n <= 8") {
  for (const auto& [g, d] : testing_corpus::corpus()) {
    if (g.order() > 8) continue;
    const auto bt = backtracking_search(g);
    const auto bf = brute_force_search(g, false);
    CHECK(bt.found.has_value() == bf.found.has_value());
    if (bt.found) {
      CHECK(verify_theta_graceful(g, *bt.found).ok);
      CHECK(four_cycle_clean(g, *bt.found));
    }
    if (bf.found) CHECK(verify_theta_graceful(g, *bf.found).ok);
  }
}

TEST_CASE("every graceful labeling is four-cycle consistent") {
  for (const auto& [g, d] : testing_corpus::corpus()) {
    if (g.order() <= 1 || g.order() > 8) continue;
    const auto p = theta_classes(g);
    std::vector<int> f(static_cast<std::size_t>(g.order()));
    std::iota(f.begin(), f.end(), 0);
    do {
      const Labeling lab(f);
      if (verify_theta_graceful(g, p, lab).ok) CHECK(four_cycle_clean(g, lab));
    } while (std::next_permutation(f.begin(), f.end()));
  }
}

TEST_CASE("complement closure on random bijections and certificates") {
  std::mt19937 rng(3);
  const auto& all = testing_corpus::corpus();
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  int positives = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto& [g, d] = all[pick(rng)];
    if (g.order() <= 1) continue;
    const auto bt = backtracking_search(g);
    Labeling f = bt.found && trial % 2 == 0 ? *bt.found : Labeling(oracle::random_permutation(g.order(), rng));
    const bool ok = verify_theta_graceful(g, f).ok;
    positives += ok ? 1 : 0;
    CHECK(ok == verify_theta_graceful(g, f.complement()).ok);
    CHECK(ok == oracle::graceful(oracle::class_lists(g), to_vector(f)));
  }
  CHECK(positives > 0);
}

TEST_CASE("label swaps are judged with the right clause") {
  std::vector<Graph> relatives{q3_minus(), even_cycle(6), hypercube(3), fibonacci_cube(4), even_cycle(8)};
  for (const auto& [g, d] : testing_corpus::corpus()) {
    if (g.order() >= 7 && g.order() <= 8) relatives.push_back(g);
  }
  int rejected = 0;
  for (const Graph& g : relatives) {
    const auto found = backtracking_search(g).found;
    if (!found) continue;
    const auto p = theta_classes(g);
    const auto classes = oracle::class_lists(g);
    for (int a = 0; a < g.order(); ++a) {
      for (int b = a + 1; b < g.order(); ++b) {
        auto f = to_vector(*found);
        std::swap(f[static_cast<std::size_t>(a)], f[static_cast<std::size_t>(b)]);
        const auto verdict = verify_theta_graceful(g, p, Labeling(f));
        CHECK(verdict.ok == oracle::graceful(classes, f));
        if (verdict.ok) continue;
        ++rejected;
        const auto labels = class_edge_labels(g, p, Labeling(f));
        bool any_mismatch = false;
        for (const auto& l : labels) any_mismatch = any_mismatch || l.front() != l.back();
        if (any_mismatch) {
          REQUIRE(verdict.clause == GracefulClause::kIntraClassMismatch);
          const auto& l = labels[static_cast<std::size_t>(verdict.classes.at(0))];
          CHECK(l.front() != l.back());
        } else {
          REQUIRE(verdict.clause == GracefulClause::kDuplicateClassValue);
          REQUIRE(verdict.classes.size() == 2);
          CHECK(labels[static_cast<std::size_t>(verdict.classes[0])].front() ==
                labels[static_cast<std::size_t>(verdict.classes[1])].front());
        }
      }
    }
  }
  CHECK(rejected > 0);
}
