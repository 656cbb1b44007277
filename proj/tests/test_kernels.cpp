#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "pcube/error.hpp"
#include "pcube/kernels/subset_filter.hpp"

using namespace pcube;
using namespace pcube::kernels;

namespace {

std::vector<std::uint8_t> run(Isa isa, int dim, std::uint32_t first, std::size_t count) {
  std::vector<std::uint8_t> flags(count, 0xAA);
  filter_cube_subsets(isa, dim, first, flags);
  return flags;
}

}  // namespace

TEST_CASE("scalar kernel matches the Floyd-Warshall oracle on every subset") {
  for (int dim = 0; dim <= kMaxCubeDim; ++dim) {
    const auto flags = run(Isa::kScalar, dim, 0, subset_count(dim));
    int accepted = 0;
    for (std::uint32_t mask = 0; mask < subset_count(dim); ++mask) {
      const bool ok = oracle::cube_subset_ok(dim, mask);
      if (flags[mask] != (ok ? 1 : 0)) FAIL_CHECK("dim " << dim << " mask " << mask);
      accepted += ok ? 1 : 0;
    }
    CHECK(accepted > 0);
  }
}

TEST_CASE("small dimensions accept the expected subsets") {
  CHECK(run(Isa::kScalar, 0, 0, 2) == std::vector<std::uint8_t>{0, 1});
  CHECK(run(Isa::kScalar, 1, 0, 4) == std::vector<std::uint8_t>{0, 0, 0, 1});
  // Q2: the four paths on three vertices and the whole square.
  const auto q2 = run(Isa::kScalar, 2, 0, 16);
  std::vector<std::uint32_t> accepted;
  for (std::uint32_t m = 0; m < 16; ++m) {
    if (q2[m]) accepted.push_back(m);
  }
  CHECK(accepted == std::vector<std::uint32_t>{7, 11, 13, 14, 15});
}

TEST_CASE("every available variant agrees with scalar") {
  const auto isas = available_isas();
  REQUIRE(!isas.empty());
  CHECK(isas.front() == Isa::kScalar);
  for (Isa isa : isas) {
    CAPTURE(isa_name(isa));
    for (int dim = 0; dim <= kMaxCubeDim; ++dim) {
      const auto total = subset_count(dim);
      CHECK(run(isa, dim, 0, total) == run(Isa::kScalar, dim, 0, total));
    }
    // Unaligned windows and short tails.
    std::mt19937 rng(5);
    const auto total = subset_count(4);
    for (int trial = 0; trial < 200; ++trial) {
      std::uniform_int_distribution<std::uint32_t> start(0, total - 1);
      const std::uint32_t first = start(rng);
      std::uniform_int_distribution<std::uint32_t> len(0, std::min<std::uint32_t>(70, total - first));
      const std::uint32_t count = len(rng);
      CHECK(run(isa, 4, first, count) == run(Isa::kScalar, 4, first, count));
    }
    CHECK(run(isa, 4, total - 3, 3) == run(Isa::kScalar, 4, total - 3, 3));
    CHECK(run(isa, 3, 1, 17) == run(Isa::kScalar, 3, 1, 17));
  }
}

TEST_CASE("preferred variant is available and named") {
  const Isa p = preferred_isa();
  bool found = false;
  for (Isa isa : available_isas()) found = found || isa == p;
  CHECK(found);
  CHECK(std::string(isa_name(p)).size() > 0);
  if (const char* forced = std::getenv("PCUBE_FORCE_ISA"); forced && std::string(forced) == "scalar") {
    CHECK(p == Isa::kScalar);
  } else if (!forced) {
    CHECK(p == available_isas().back());
  }
}

TEST_CASE("kernel range and scale errors") {
  CHECK_THROWS_AS(subset_count(5), ScaleError);
  CHECK_THROWS_AS(subset_count(-1), ScaleError);
  std::vector<std::uint8_t> flags(4);
  CHECK_THROWS_AS(filter_cube_subsets(Isa::kScalar, 1, 1, flags), PreconditionError);
  CHECK_NOTHROW(filter_cube_subsets(Isa::kScalar, 1, 0, flags));
  const auto isas = available_isas();
  for (Isa isa : {Isa::kAvx2, Isa::kNeon}) {
    if (std::find(isas.begin(), isas.end(), isa) == isas.end()) {
      CHECK_THROWS_AS(filter_cube_subsets(isa, 1, 0, flags), PreconditionError);
    }
  }
}
