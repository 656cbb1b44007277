#include <algorithm>
#include <set>

#include "corpus.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "pcube/catalog.hpp"
#include "pcube/enumeration.hpp"
#include "pcube/theta.hpp"

using namespace pcube;

namespace {

std::vector<std::pair<std::uint64_t, std::uint64_t>> as_pairs(const std::vector<IsometricCover>& covers) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (const auto& c : covers) out.emplace_back(c.side1, c.side2);
  return out;
}

std::set<CanonicalCode> codes(const std::vector<GraphClass>& classes) {
  std::set<CanonicalCode> out;
  for (const auto& c : classes) out.insert(c.code);
  return out;
}

const Graph kK1(1, {});
const Graph kK2(2, {{0, 1}});

}  // namespace

TEST_CASE("enumerate_partial_cubes examples") {
  const auto d0 = enumerate_partial_cubes(0);
  REQUIRE(d0.size() == 1);
  CHECK(d0[0].order() == 1);

  const auto d1 = enumerate_partial_cubes(1);
  REQUIRE(d1.size() == 1);
  CHECK(d1[0] == kK2);

  const auto d2 = enumerate_partial_cubes(2);
  REQUIRE(d2.size() == 2);
  CHECK(oracle::isomorphic(d2[0], path_graph(3)));
  CHECK(oracle::isomorphic(d2[1], even_cycle(4)));

  CHECK(enumerate_partial_cubes(3).size() == 7);
  CHECK_THROWS_AS(enumerate_partial_cubes(5), ScaleError);
}

TEST_CASE("dimension 4 classes include the three exceptional graphs") {
  const auto classes = enumerate_partial_cube_classes(4);
  CHECK(classes.size() == 48);
  const auto found = codes(classes);
  CHECK(found.count(canonical_form(g8())) == 1);
  CHECK(found.count(canonical_form(subdivided_complete(4))) == 1);
  CHECK(found.count(canonical_form(c_q3_minus())) == 1);
  CHECK(c_q3_minus().order() == 11);
}

TEST_CASE("enumerated classes are sorted, distinct and stored canonically") {
  for (int d = 0; d <= 4; ++d) {
    const auto classes = enumerate_partial_cube_classes(d);
    for (std::size_t i = 0; i < classes.size(); ++i) {
      const auto& c = classes[i];
      CHECK(decode(c.code) == c.graph);
      CHECK(canonical_form(c.graph) == c.code);
      CHECK(is_partial_cube(c.graph).ok);
      CHECK(isometric_dimension(c.graph) == d);
      if (i > 0) {
        const auto& p = classes[i - 1];
        CHECK((p.graph.order() < c.graph.order() || (p.graph.order() == c.graph.order() && p.code < c.code)));
      }
    }
  }
}

TEST_CASE("subset enumeration is independent of thread count") {
  for (int d = 3; d <= 4; ++d) {
    const auto a = enumerate_partial_cube_classes(d, 1);
    const auto b = enumerate_partial_cube_classes(d, 4);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].code == b[i].code);
  }
}

TEST_CASE("expansion examples") {
  CHECK(expansion(kK1, {1, 1}) == kK2);
  CHECK(oracle::isomorphic(expansion(kK2, {3, 3}), even_cycle(4)));
  const Graph p3 = expansion(kK2, {3, 2});
  CHECK(oracle::isomorphic(p3, path_graph(3)));
  CHECK(isometric_dimension(p3) == 2);

  // Dimension 3 to 4: the claw cover of Q3 minus a vertex.
  CHECK(oracle::isomorphic(expansion(q3_minus(), {0b0010111, 0b1111111}), c_q3_minus()));

  CHECK_THROWS_WITH_AS(expansion(kK2, {1, 2}), doctest::Contains("empty intersection"), PreconditionError);
  CHECK_THROWS_WITH_AS(expansion(kK2, {1, 1}), doctest::Contains("every vertex"), PreconditionError);
  CHECK_THROWS_WITH_AS(expansion(kK2, {7, 3}), doctest::Contains("outside"), PreconditionError);
  const Graph c4 = even_cycle(4);
  CHECK_THROWS_WITH_AS(expansion(c4, {0b0101, 0b1111}), doctest::Contains("side 1"), PreconditionError);
  CHECK_THROWS_WITH_AS(expansion(path_graph(3), {0b111, 0b101}), doctest::Contains("side 2"),
                       PreconditionError);
}

TEST_CASE("enumerate_isometric_covers matches the subset-pair oracle") {
  CHECK(as_pairs(enumerate_isometric_covers(kK1)) ==
        std::vector<std::pair<std::uint64_t, std::uint64_t>>{{1, 1}});
  CHECK(as_pairs(enumerate_isometric_covers(kK2)) ==
        std::vector<std::pair<std::uint64_t, std::uint64_t>>{{1, 3}, {2, 3}, {3, 1}, {3, 2}, {3, 3}});
  const auto c4 = enumerate_isometric_covers(even_cycle(4));
  CHECK(c4.size() == 29);
  CHECK(std::find(c4.begin(), c4.end(), IsometricCover{0b0111, 0b1101}) != c4.end());

  for (const auto& [g, d] : testing_corpus::corpus()) {
    if (g.order() > 7) continue;
    CHECK(as_pairs(enumerate_isometric_covers(g)) == oracle::covers(g));
  }
  CHECK_THROWS_AS(enumerate_isometric_covers(hypercube(4)), ScaleError);
}

TEST_CASE("every expansion raises the dimension by one") {
  for (const auto& [g, d] : testing_corpus::corpus()) {
    if (g.order() > 6) continue;
    const auto dist = all_pairs_distances(g);
    for (const auto& cover : enumerate_isometric_covers(g)) {
      CHECK(validate_cover(g, cover).empty());
      const Graph h = expansion(g, cover);
      const int both = std::popcount(cover.side1 & cover.side2);
      CHECK(h.order() == g.order() + both);
      CHECK(h.size() == g.induced(cover.side1).size() + g.induced(cover.side2).size() + both);
      REQUIRE(is_partial_cube(h).ok);
      CHECK(isometric_dimension(h) == d + 1);
    }
  }
}

TEST_CASE("enumerate_via_expansions examples") {
  const auto two = enumerate_via_expansions(2);
  REQUIRE(two.size() == 2);
  CHECK(two[0].graph.order() == 1);
  CHECK(two[1].graph == kK2);

  const auto four = codes(enumerate_via_expansions(4));
  for (const Graph& g : {path_graph(3), path_graph(4), even_cycle(4), Graph(4, {{0, 1}, {0, 2}, {0, 3}})}) {
    CHECK(four.count(canonical_form(g)) == 1);
  }
  // All trees on <= 4 vertices (5 of them, counting K1 and K2) plus C4.
  CHECK(four.size() == 6);
  CHECK_THROWS_AS(enumerate_via_expansions(13), ScaleError);
}

TEST_CASE("expansion closure agrees with subset enumeration up to 8 vertices") {
  std::set<CanonicalCode> subsets;
  for (const auto& [g, d] : testing_corpus::corpus()) {
    if (g.order() <= 8) subsets.insert(canonical_form(g));
  }
  const auto closure = enumerate_via_expansions(8, 4);
  CHECK(codes(closure) == subsets);
  const auto parallel = enumerate_via_expansions(8, 4, 3);
  REQUIRE(parallel.size() == closure.size());
  for (std::size_t i = 0; i < closure.size(); ++i) CHECK(parallel[i].code == closure[i].code);
}

TEST_CASE("classify_gracefulness examples") {
  for (int d = 0; d <= 3; ++d) {
    const auto r = classify_gracefulness(d);
    CHECK(r.dimension == d);
    CHECK(r.non_graceful() == 0);
    for (const auto& e : r.entries) {
      REQUIRE(e.certificate.has_value());
      const Graph g = decode(e.code);
      CHECK(verify_theta_graceful(g, *e.certificate).ok);
      CHECK(verify_consistency(g, *e.certificate, ConsistencyScope::kFourCycles).ok);
    }
  }
  const auto r4 = classify_gracefulness(4);
  CHECK(r4.total_classes == 48);
  CHECK(r4.non_graceful() == 3);
  std::set<CanonicalCode> bad;
  for (const auto& e : r4.entries) {
    if (!e.graceful) {
      CHECK(e.exhausted);
      bad.insert(e.code);
    }
  }
  CHECK(bad == std::set<CanonicalCode>{canonical_form(g8()), canonical_form(subdivided_complete(4)),
                                       canonical_form(c_q3_minus())});
}

TEST_CASE("symmetry reduction leaves the classes unchanged") {
  for (int d = 0; d <= 4; ++d) {
    const auto plain = enumerate_partial_cube_classes(d);
    const auto reduced = enumerate_partial_cube_classes(d, 2, true);
    REQUIRE(plain.size() == reduced.size());
    for (std::size_t i = 0; i < plain.size(); ++i) CHECK(plain[i].code == reduced[i].code);
  }
}
