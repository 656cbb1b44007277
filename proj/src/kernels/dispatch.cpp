#include <cstdlib>
#include <string>
#include <string_view>

#include "cube_tables.hpp"
#include "pcube/error.hpp"

namespace pcube::kernels {

namespace {

bool cpu_supports(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#if defined(PCUBE_HAVE_AVX2_KERNEL)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::kNeon:
#if defined(PCUBE_HAVE_NEON_KERNEL)
      return true;  // baseline on AArch64
#else
      return false;
#endif
  }
  return false;
}

}  // namespace

const char* isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
    case Isa::kNeon:
      return "neon";
  }
  return "unknown";
}

std::vector<Isa> available_isas() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::kScalar, Isa::kAvx2, Isa::kNeon}) {
    if (cpu_supports(isa)) out.push_back(isa);
  }
  return out;
}

Isa preferred_isa() {
  static const Isa chosen = [] {
    const auto isas = available_isas();
    if (const char* forced = std::getenv("PCUBE_FORCE_ISA")) {
      for (Isa isa : isas) {
        if (std::string_view(forced) == isa_name(isa)) return isa;
      }
    }
    return isas.back();
  }();
  return chosen;
}

std::uint32_t subset_count(int dim) {
  if (dim < 0 || dim > kMaxCubeDim) {
    throw ScaleError("subset scan supports dimensions 0.." + std::to_string(kMaxCubeDim));
  }
  return std::uint32_t{1} << (1 << dim);
}

void filter_cube_subsets(Isa isa, int dim, std::uint32_t first, std::span<std::uint8_t> flags) {
  const std::uint64_t total = subset_count(dim);
  if (first + static_cast<std::uint64_t>(flags.size()) > total) {
    throw PreconditionError("subset range exceeds the " + std::to_string(total) + " subsets of Q_" +
                            std::to_string(dim));
  }
  if (!cpu_supports(isa)) {
    throw PreconditionError(std::string("kernel variant ") + isa_name(isa) + " is not available");
  }
  const detail::CubeTables tables(dim);
  switch (isa) {
    case Isa::kScalar:
      detail::filter_scalar(tables, first, flags.data(), flags.size());
      return;
    case Isa::kAvx2:
#if defined(PCUBE_HAVE_AVX2_KERNEL)
      detail::filter_avx2(tables, first, flags.data(), flags.size());
#endif
      return;
    case Isa::kNeon:
#if defined(PCUBE_HAVE_NEON_KERNEL)
      detail::filter_neon(tables, first, flags.data(), flags.size());
#endif
      return;
  }
}

}  // namespace pcube::kernels
