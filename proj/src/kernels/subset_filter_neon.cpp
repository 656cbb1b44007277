#include <arm_neon.h>

#include "cube_tables.hpp"

namespace pcube::kernels::detail {

namespace {

constexpr std::size_t kLanes = 8;

inline uint16x8_t flip(uint16x8_t set, uint16x8_t low, int16x8_t up_shift, int16x8_t down_shift) {
  const uint16x8_t up = vshlq_u16(vandq_u16(set, low), up_shift);
  const uint16x8_t down = vandq_u16(vshlq_u16(set, down_shift), low);
  return vorrq_u16(up, down);
}

}  // namespace

// 8 consecutive subsets per register, one per 16-bit lane.
void filter_neon(const CubeTables& t, std::uint32_t first, std::uint8_t* flags, std::size_t count) {
  uint16x8_t low[kMaxCubeDim];
  int16x8_t up[kMaxCubeDim];
  int16x8_t down[kMaxCubeDim];
  for (int i = 0; i < t.dim; ++i) {
    low[i] = vdupq_n_u16(t.low[static_cast<std::size_t>(i)]);
    up[i] = vdupq_n_s16(static_cast<std::int16_t>(1 << i));
    down[i] = vdupq_n_s16(static_cast<std::int16_t>(-(1 << i)));
  }
  const uint16x8_t zero = vdupq_n_u16(0);
  static const std::uint16_t kIota[kLanes] = {0, 1, 2, 3, 4, 5, 6, 7};
  const uint16x8_t iota = vld1q_u16(kIota);

  auto neighborhood = [&](uint16x8_t set) {
    uint16x8_t out = zero;
    for (int i = 0; i < t.dim; ++i) out = vorrq_u16(out, flip(set, low[i], up[i], down[i]));
    return out;
  };

  std::size_t done = 0;
  for (; done + kLanes <= count; done += kLanes) {
    const uint16x8_t subset =
        vaddq_u16(vdupq_n_u16(static_cast<std::uint16_t>(first + done)), iota);
    uint16x8_t valid = vmvnq_u16(vceqq_u16(subset, zero));
    for (int i = 0; i < t.dim; ++i) {
      const uint16x8_t crossing = vandq_u16(subset, flip(subset, low[i], up[i], down[i]));
      valid = vbicq_u16(valid, vceqq_u16(crossing, zero));
    }
    for (int v = 0; v < t.vertices && vmaxvq_u16(valid) != 0; ++v) {
      const uint16x8_t vbit = vdupq_n_u16(static_cast<std::uint16_t>(1U << v));
      const uint16x8_t member = vceqq_u16(vandq_u16(subset, vbit), vbit);
      uint16x8_t reach = vandq_u16(vbit, member);
      for (int k = 1; k <= t.dim; ++k) {
        reach = vandq_u16(vorrq_u16(reach, neighborhood(reach)), subset);
        const uint16x8_t expected = vandq_u16(
            subset, vdupq_n_u16(t.ball[static_cast<std::size_t>(v)][static_cast<std::size_t>(k)]));
        const uint16x8_t bad = vbicq_u16(member, vceqq_u16(reach, expected));
        valid = vbicq_u16(valid, bad);
      }
    }
    std::uint16_t lanes[kLanes];
    vst1q_u16(lanes, valid);
    for (std::size_t lane = 0; lane < kLanes; ++lane) flags[done + lane] = lanes[lane] ? 1 : 0;
  }
  filter_scalar(t, first + static_cast<std::uint32_t>(done), flags + done, count - done);
}

}  // namespace pcube::kernels::detail
