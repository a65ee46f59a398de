#include "ramcov/poly_matrix.hpp"

#include <bit>
#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace ramcov {

Polynomial determinant(PolyMatrix m) {
  assert(m.rows() == m.cols());
  const std::size_t n = m.rows();
  if (n == 0) return Polynomial(1);
  bool negate = false;
  Polynomial previous(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && m(swap_with, k).is_zero()) ++swap_with;
      if (swap_with == n) return Polynomial();
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap_with, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial numerator = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        auto [quotient, remainder] = Polynomial::divmod(numerator, previous);
        assert(remainder.is_zero());
        m(i, j) = std::move(quotient);
      }
      m(i, k) = Polynomial();
    }
    previous = m(k, k);
  }
  return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

namespace {

// Determinant of the submatrix on rows[depth..] and the columns in `mask`
// (|mask| == rows.size() - depth), expanded along its first row.
class MinorExpansion {
 public:
  MinorExpansion(const PolyMatrix& m, std::vector<std::size_t> rows) : m_(m), rows_(std::move(rows)) {}

  const Polynomial& minor(std::uint32_t mask) {
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    Polynomial value;
    if (size == 0) {
      value = Polynomial(1);
    } else {
      const std::size_t row = rows_[rows_.size() - size];
      std::size_t position = 0;
      for (std::size_t col = 0; col < m_.cols(); ++col) {
        if (!(mask & (1u << col))) continue;
        if (!m_(row, col).is_zero()) {
          Polynomial term = m_(row, col) * minor(mask & ~(1u << col));
          if (position % 2) value -= term;
          else value += term;
        }
        ++position;
      }
    }
    return memo_.emplace(mask, std::move(value)).first->second;
  }

 private:
  const PolyMatrix& m_;
  std::vector<std::size_t> rows_;
  std::unordered_map<std::uint32_t, Polynomial> memo_;
};

void check_dimension(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix is not square");
  if (m.rows() > 31) throw std::invalid_argument("cofactor expansion supports at most 31 rows");
}

}  // namespace

Polynomial determinant_by_cofactors(const PolyMatrix& m) {
  check_dimension(m);
  std::vector<std::size_t> rows(m.rows());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  MinorExpansion expansion(m, rows);
  const std::uint32_t full = m.rows() == 0 ? 0u : static_cast<std::uint32_t>((1ull << m.rows()) - 1);
  return expansion.minor(full);
}

PolyMatrix adjugate_by_cofactors(const PolyMatrix& m) {
  check_dimension(m);
  const std::size_t n = m.rows();
  PolyMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = Polynomial(1);
    return adj;
  }
  const std::uint32_t full = static_cast<std::uint32_t>((1ull << n) - 1);
  for (std::size_t removed_row = 0; removed_row < n; ++removed_row) {
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < n; ++i)
      if (i != removed_row) rows.push_back(i);
    MinorExpansion expansion(m, rows);
    for (std::size_t removed_col = 0; removed_col < n; ++removed_col) {
      Polynomial cofactor = expansion.minor(full & ~(1u << removed_col));
      if ((removed_row + removed_col) % 2) cofactor = -cofactor;
      adj(removed_col, removed_row) = std::move(cofactor);
    }
  }
  return adj;
}

}  // namespace ramcov
