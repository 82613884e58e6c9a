#pragma once
// Exact sign of an integer determinant. Used for orientation predicates, so a
// wrong sign is never acceptable; everything runs in 128-bit fraction-free
// elimination with an up-front magnitude guard.

#include <vector>

namespace cocirc {

// Returns -1, 0 or +1. Throws std::invalid_argument on a non-square input and
// std::overflow_error if intermediate values could leave the 128-bit range.
int determinant_sign(const std::vector<std::vector<long long>>& matrix);

}  // namespace cocirc
