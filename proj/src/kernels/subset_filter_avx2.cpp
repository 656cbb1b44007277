#include <immintrin.h>

#include "cube_tables.hpp"

namespace pcube::kernels::detail {

namespace {

constexpr std::size_t kLanes = 16;

inline __m256i flip(__m256i set, __m256i low, __m128i shift) {
  const __m256i up = _mm256_sll_epi16(_mm256_and_si256(set, low), shift);
  const __m256i down = _mm256_and_si256(_mm256_srl_epi16(set, shift), low);
  return _mm256_or_si256(up, down);
}

}  // namespace

// 16 consecutive subsets per register, one per 16-bit lane.
void filter_avx2(const CubeTables& t, std::uint32_t first, std::uint8_t* flags, std::size_t count) {
  __m256i low[kMaxCubeDim];
  __m128i shift[kMaxCubeDim];
  for (int i = 0; i < t.dim; ++i) {
    low[i] = _mm256_set1_epi16(static_cast<short>(t.low[static_cast<std::size_t>(i)]));
    shift[i] = _mm_cvtsi32_si128(1 << i);
  }
  const __m256i zero = _mm256_setzero_si256();
  const __m256i ones = _mm256_cmpeq_epi16(zero, zero);
  const __m256i iota = _mm256_setr_epi16(0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15);

  auto neighborhood = [&](__m256i set) {
    __m256i out = zero;
    for (int i = 0; i < t.dim; ++i) out = _mm256_or_si256(out, flip(set, low[i], shift[i]));
    return out;
  };

  std::size_t done = 0;
  for (; done + kLanes <= count; done += kLanes) {
    const auto base = static_cast<short>(first + done);
    const __m256i subset = _mm256_add_epi16(_mm256_set1_epi16(base), iota);
    __m256i valid = _mm256_andnot_si256(_mm256_cmpeq_epi16(subset, zero), ones);
    for (int i = 0; i < t.dim; ++i) {
      const __m256i crossing = _mm256_and_si256(subset, flip(subset, low[i], shift[i]));
      valid = _mm256_andnot_si256(_mm256_cmpeq_epi16(crossing, zero), valid);
    }
    for (int v = 0; v < t.vertices && !_mm256_testz_si256(valid, valid); ++v) {
      const __m256i vbit = _mm256_set1_epi16(static_cast<short>(1U << v));
      const __m256i member = _mm256_cmpeq_epi16(_mm256_and_si256(subset, vbit), vbit);
      __m256i reach = _mm256_and_si256(vbit, member);
      for (int k = 1; k <= t.dim; ++k) {
        reach = _mm256_and_si256(_mm256_or_si256(reach, neighborhood(reach)), subset);
        const __m256i ball = _mm256_set1_epi16(
            static_cast<short>(t.ball[static_cast<std::size_t>(v)][static_cast<std::size_t>(k)]));
        const __m256i expected = _mm256_and_si256(subset, ball);
        const __m256i bad = _mm256_andnot_si256(_mm256_cmpeq_epi16(reach, expected), member);
        valid = _mm256_andnot_si256(bad, valid);
      }
    }
    const auto bits = static_cast<std::uint32_t>(_mm256_movemask_epi8(valid));
    for (std::size_t lane = 0; lane < kLanes; ++lane) {
      flags[done + lane] = static_cast<std::uint8_t>((bits >> (2 * lane)) & 1U);
    }
  }
  filter_scalar(t, first + static_cast<std::uint32_t>(done), flags + done, count - done);
}

}  // namespace pcube::kernels::detail
