#pragma once

#include <cstddef>
#include <vector>

#include "pyrolace/vertex_set.hpp"

namespace pyrolace::detail {

/// Visits every k-subset of `pool` (sorted ascending) in lexicographic order,
/// each passed as `base` plus the chosen elements. Stops early and returns
/// true once `visit` returns true.
template <class Visit>
bool for_each_combination(const std::vector<std::size_t>& pool, std::size_t k,
                          const VertexSet& base, Visit&& visit) {
  const std::size_t n = pool.size();
  if (k > n) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    VertexSet s = base;
    for (std::size_t i : idx) s.set(pool[i]);
    if (visit(s)) return true;
    // Advance to the next combination.
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace pyrolace::detail
