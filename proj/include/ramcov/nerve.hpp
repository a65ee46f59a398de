#pragma once

#include <optional>
#include <vector>

#include "ramcov/category.hpp"
#include "ramcov/chain.hpp"

namespace ramcov {

/// #N_n(C) (sum of entries of A^n) or, when `nondegenerate`, #N̄_n(C)
/// (sum of entries of (A - I)^n). Both are Ob(C) at n = 0.
Integer count_chains(const FiniteCategory& c, std::size_t n, bool nondegenerate,
                     Execution exec = Execution::parallel);

/// Counts for every length 0..max_n in one pass.
std::vector<Integer> chain_counts(const FiniteCategory& c, std::size_t max_n, bool nondegenerate,
                                  Execution exec = Execution::parallel);

/// A_C - I: the non-identity adjacency.
Matrix<Integer> reduced_adjacency_matrix(const FiniteCategory& c);

/// All chains of length n, lexicographic in morphism names, optionally only
/// those starting at `based_at`. Throws std::out_of_range for an unknown base.
std::vector<Chain> enumerate_chains(const FiniteCategory& c, std::size_t n, bool nondegenerate,
                                    std::optional<ObjectIndex> based_at = std::nullopt,
                                    Execution exec = Execution::parallel);

/// ∂_i for 0 <= i <= n (n >= 1): drops the first arrow (i = 0), the last
/// (i = n), or composes arrows i and i+1. Throws std::out_of_range.
Chain face(const FiniteCategory& c, const Chain& chain, std::size_t i);

/// s_i for 0 <= i <= n: inserts the identity of x_i after arrow i.
/// Throws std::out_of_range.
Chain degeneracy(const FiniteCategory& c, const Chain& chain, std::size_t i);

}  // namespace ramcov
