#include "cocirc/determinant.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace cocirc {

namespace {

using Wide = __int128;

int sign_of(Wide v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

}  // namespace

int determinant_sign(const std::vector<std::vector<long long>>& matrix) {
  const std::size_t n = matrix.size();
  if (n == 0) throw std::invalid_argument("determinant of empty matrix");
  for (const auto& row : matrix) {
    if (row.size() != n) throw std::invalid_argument("determinant of non-square matrix");
  }

  // Bareiss intermediates are minors, so the Hadamard bound on the whole matrix
  // bounds every value produced below. Keep a factor-of-two margin under 2^126.
  long double hadamard = 1.0L;
  for (const auto& row : matrix) {
    long double norm_sq = 0.0L;
    for (long long v : row) norm_sq += static_cast<long double>(v) * static_cast<long double>(v);
    hadamard *= std::sqrt(norm_sq);
    if (hadamard > 4.0e37L) throw std::overflow_error("determinant entries too large for exact sign");
  }

  std::vector<std::vector<Wide>> a(n, std::vector<Wide>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = matrix[i][j];

  int swap_sign = 1;
  Wide prev_pivot = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t pivot_row = k + 1;
      while (pivot_row < n && a[pivot_row][k] == 0) ++pivot_row;
      if (pivot_row == n) return 0;
      std::swap(a[k], a[pivot_row]);
      swap_sign = -swap_sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev_pivot;
      }
      a[i][k] = 0;
    }
    prev_pivot = a[k][k];
  }
  return swap_sign * sign_of(a[n - 1][n - 1]);
}

}  // namespace cocirc
