#pragma once

#include <cstddef>
#include <span>

namespace collapsim {

/// Pairwise (cascade) summation. The reduction tree depends only on the
/// element order, so results are reproducible across runs and worker counts,
/// and rounding error grows like log2(n) instead of n.
template <typename T>
T pairwise_sum(std::span<const T> values) {
  constexpr std::size_t kLeaf = 8;
  if (values.size() <= kLeaf) {
    T acc{};
    for (const T& v : values) acc += v;
    return acc;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

}  // namespace collapsim
