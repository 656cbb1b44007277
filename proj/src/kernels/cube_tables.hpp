#pragma once

#include <array>
#include <bit>
#include <cstdint>

#include "pcube/kernels/subset_filter.hpp"

namespace pcube::kernels::detail {

// Bit masks over the 2^dim vertices of Q_dim.
struct CubeTables {
  int dim = 0;
  int vertices = 1;
  std::uint32_t all = 1;
  // low[i]: vertices whose coordinate i is 0.
  std::array<std::uint16_t, kMaxCubeDim> low{};
  // ball[v][k]: vertices within Hamming distance k of v.
  std::array<std::array<std::uint16_t, kMaxCubeDim + 1>, 1 << kMaxCubeDim> ball{};

  explicit CubeTables(int d) : dim(d), vertices(1 << d), all((1U << (1 << d)) - 1) {
    for (int i = 0; i < d; ++i) {
      std::uint32_t m = 0;
      for (int x = 0; x < vertices; ++x) {
        if (((x >> i) & 1) == 0) m |= 1U << x;
      }
      low[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(m);
    }
    for (int v = 0; v < vertices; ++v) {
      for (int k = 0; k <= d; ++k) {
        std::uint32_t m = 0;
        for (int x = 0; x < vertices; ++x) {
          if (std::popcount(static_cast<unsigned>(x ^ v)) <= k) m |= 1U << x;
        }
        ball[static_cast<std::size_t>(v)][static_cast<std::size_t>(k)] = static_cast<std::uint16_t>(m);
      }
    }
  }

  // Image of a vertex set under flipping coordinate i.
  std::uint32_t flip(std::uint32_t set, int i) const {
    const int shift = 1 << i;
    const std::uint32_t lo = low[static_cast<std::size_t>(i)];
    return ((set & lo) << shift) | ((set >> shift) & lo);
  }

  std::uint32_t neighborhood(std::uint32_t set) const {
    std::uint32_t out = 0;
    for (int i = 0; i < dim; ++i) out |= flip(set, i);
    return out;
  }
};

bool accepts_scalar(const CubeTables& t, std::uint32_t subset);

void filter_scalar(const CubeTables& t, std::uint32_t first, std::uint8_t* flags, std::size_t count);
void filter_avx2(const CubeTables& t, std::uint32_t first, std::uint8_t* flags, std::size_t count);
void filter_neon(const CubeTables& t, std::uint32_t first, std::uint8_t* flags, std::size_t count);

}  // namespace pcube::kernels::detail
