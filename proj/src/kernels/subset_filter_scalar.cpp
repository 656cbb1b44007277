#include "cube_tables.hpp"

namespace pcube::kernels::detail {

bool accepts_scalar(const CubeTables& t, std::uint32_t subset) {
  if (subset == 0) return false;
  for (int i = 0; i < t.dim; ++i) {
    if ((subset & t.flip(subset, i)) == 0) return false;
  }
  // From every member v, k breadth-first steps inside the subset must reach
  // exactly the members within Hamming distance k.
  for (int v = 0; v < t.vertices; ++v) {
    if (((subset >> v) & 1U) == 0) continue;
    std::uint32_t reach = 1U << v;
    for (int k = 1; k <= t.dim && reach != subset; ++k) {
      reach = (reach | t.neighborhood(reach)) & subset;
      if (reach != (subset & t.ball[static_cast<std::size_t>(v)][static_cast<std::size_t>(k)])) return false;
    }
  }
  return true;
}

void filter_scalar(const CubeTables& t, std::uint32_t first, std::uint8_t* flags, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    flags[i] = accepts_scalar(t, first + static_cast<std::uint32_t>(i)) ? 1 : 0;
  }
}

}  // namespace pcube::kernels::detail
