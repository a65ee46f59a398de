#include "ramcov/kernels/walk_counts.hpp"

#include <cassert>

namespace ramcov::kernels {

namespace {

Integer vector_sum(const std::vector<Integer>& v) {
  Integer total = 0;
  for (const auto& x : v) total += x;
  return total;
}

}  // namespace

std::vector<Integer> walk_sums_serial(const Matrix<Integer>& a, std::size_t max_power) {
  assert(a.rows() == a.cols());
  const std::size_t n = a.rows();
  std::vector<Integer> v(n, Integer(1));
  std::vector<Integer> sums{vector_sum(v)};
  for (std::size_t k = 1; k <= max_power; ++k) {
    std::vector<Integer> next(n, Integer(0));
    for (std::size_t i = 0; i < n; ++i) {
      if (v[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (a(i, j) != 0) next[j] += v[i] * a(i, j);
    }
    v = std::move(next);
    sums.push_back(vector_sum(v));
  }
  return sums;
}

std::vector<Integer> walk_sums_parallel(const Matrix<Integer>& a, std::size_t max_power) {
  assert(a.rows() == a.cols());
  const auto n = static_cast<std::ptrdiff_t>(a.rows());
  std::vector<Integer> v(a.rows(), Integer(1));
  std::vector<Integer> sums{vector_sum(v)};
  for (std::size_t k = 1; k <= max_power; ++k) {
    std::vector<Integer> next(a.rows(), Integer(0));
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t j = 0; j < n; ++j) {
      Integer acc = 0;
      for (std::ptrdiff_t i = 0; i < n; ++i)
        if (a(i, j) != 0 && v[i] != 0) acc += v[i] * a(i, j);
      next[j] = std::move(acc);
    }
    v = std::move(next);
    sums.push_back(vector_sum(v));
  }
  return sums;
}

}  // namespace ramcov::kernels
