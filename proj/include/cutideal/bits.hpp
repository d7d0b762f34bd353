#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace cutideal {

/// Subset of vertices 0..63 as a bitmask.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 63;

constexpr VertexSet full_set(int n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

constexpr VertexSet singleton(int v) { return VertexSet{1} << v; }

constexpr bool contains(VertexSet s, int v) { return (s >> v) & 1U; }

constexpr int set_size(VertexSet s) { return std::popcount(s); }

constexpr int lowest_vertex(VertexSet s) { return std::countr_zero(s); }

inline std::vector<int> members(VertexSet s) {
  std::vector<int> out;
  out.reserve(set_size(s));
  for (; s != 0; s &= s - 1) out.push_back(std::countr_zero(s));
  return out;
}

/// Packs the bits of `x` selected by `mask` into the low bits, order preserved.
constexpr VertexSet compress_bits(VertexSet x, VertexSet mask) {
  VertexSet out = 0;
  int k = 0;
  for (; mask != 0; mask &= mask - 1, ++k) {
    if (x & (mask & (~mask + 1))) out |= VertexSet{1} << k;
  }
  return out;
}

/// Inverse of compress_bits: spreads the low bits of `x` onto `mask`.
constexpr VertexSet expand_bits(VertexSet x, VertexSet mask) {
  VertexSet out = 0;
  int k = 0;
  for (; mask != 0; mask &= mask - 1, ++k) {
    if ((x >> k) & 1U) out |= mask & (~mask + 1);
  }
  return out;
}

}  // namespace cutideal
