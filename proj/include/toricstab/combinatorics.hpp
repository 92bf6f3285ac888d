#pragma once

#include <cstddef>
#include <vector>

namespace toricstab {

/// Calls f(indices) for every k-subset of {0..m-1} in lexicographic order;
/// stops early when f returns false.
template <typename F>
void for_each_subset(std::size_t m, std::size_t k, F&& f) {
  if (k > m) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t j = 0; j < k; ++j) idx[j] = j;
  while (true) {
    if (!f(static_cast<const std::vector<std::size_t>&>(idx))) return;
    std::size_t j = k;
    while (j > 0 && idx[j - 1] == m - k + (j - 1)) --j;
    if (j == 0) return;
    ++idx[j - 1];
    for (std::size_t t = j; t < k; ++t) idx[t] = idx[t - 1] + 1;
  }
}

}  // namespace toricstab
