#pragma once
// Small counting helpers shared by the matroid model and the recognizer.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace cocirc {

// Exact binomial coefficient; throws std::overflow_error if it would not fit in 64 bits.
inline std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    // result * (n - k + i) stays exact: divide as soon as possible.
    std::int64_t numer = n - k + i;
    if (result > INT64_MAX / numer) throw std::overflow_error("binomial overflow");
    result = result * numer / i;
  }
  return result;
}

// Calls fn once for every k-subset of {0..n-1}, ascending lexicographic order.
inline void for_each_combination(int n, int k,
                                 const std::function<void(const std::vector<int>&)>& fn) {
  if (k < 0 || k > n) return;
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
  while (true) {
    fn(pick);
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace cocirc
