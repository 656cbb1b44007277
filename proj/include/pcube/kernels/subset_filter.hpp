#pragma once

#include <cstdint>
#include <span>
#include <vector>

// Data-parallel filter over vertex subsets of the hypercube Q_dim, encoded as
// 2^dim-bit masks (bit x set <=> tuple x in the subset). A subset is accepted
// when its induced subgraph is connected, isometric in Q_dim, and has an edge
// in every one of the dim coordinate directions.
//
// The scalar variant is the reference; vector variants must agree with it
// bit for bit.
namespace pcube::kernels {

inline constexpr int kMaxCubeDim = 4;

enum class Isa { kScalar, kAvx2, kNeon };

const char* isa_name(Isa isa) noexcept;

// Variants compiled in and supported by the running CPU, scalar first.
std::vector<Isa> available_isas();

// Widest available variant, unless PCUBE_FORCE_ISA names another available one.
Isa preferred_isa();

// Number of subsets of Q_dim: 2^(2^dim).
std::uint32_t subset_count(int dim);

// flags[i] = 1 iff subset (first + i) is accepted, else 0.
void filter_cube_subsets(Isa isa, int dim, std::uint32_t first, std::span<std::uint8_t> flags);

inline void filter_cube_subsets(int dim, std::uint32_t first, std::span<std::uint8_t> flags) {
  filter_cube_subsets(preferred_isa(), dim, first, flags);
}

}  // namespace pcube::kernels
