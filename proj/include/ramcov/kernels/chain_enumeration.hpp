#pragma once

#include <optional>
#include <vector>

#include "ramcov/chain.hpp"
#include "ramcov/execution.hpp"

namespace ramcov::kernels {

/// Depth-first enumeration of chains of length n in name order. The parallel
/// variant splits on the first arrow and concatenates per-arrow results, so
/// both return the same sequence.
std::vector<Chain> enumerate_chains_serial(const FiniteCategory& c, std::size_t n, bool nondegenerate,
                                           std::optional<ObjectIndex> based_at);
std::vector<Chain> enumerate_chains_parallel(const FiniteCategory& c, std::size_t n, bool nondegenerate,
                                             std::optional<ObjectIndex> based_at);

/// Brute-force count (no materialization), used to cross-check matrix counts.
Integer count_chains_by_search(const FiniteCategory& c, std::size_t n, bool nondegenerate, Execution exec);

}  // namespace ramcov::kernels
