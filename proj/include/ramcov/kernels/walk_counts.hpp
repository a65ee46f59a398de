#pragma once

#include <vector>

#include "ramcov/execution.hpp"
#include "ramcov/matrix.hpp"
#include "ramcov/numeric.hpp"

namespace ramcov::kernels {

/// sums[k] = sum of all entries of A^k for k = 0..max_power, via the row
/// vector recursion v <- v A starting from the all-ones vector.
std::vector<Integer> walk_sums_serial(const Matrix<Integer>& a, std::size_t max_power);
/// Same recursion; each vector-matrix product is split across columns.
std::vector<Integer> walk_sums_parallel(const Matrix<Integer>& a, std::size_t max_power);

inline std::vector<Integer> walk_sums(const Matrix<Integer>& a, std::size_t max_power, Execution exec) {
  return exec == Execution::serial ? walk_sums_serial(a, max_power) : walk_sums_parallel(a, max_power);
}

}  // namespace ramcov::kernels
