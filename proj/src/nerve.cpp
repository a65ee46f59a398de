#include "ramcov/nerve.hpp"

#include <stdexcept>

#include "ramcov/kernels/chain_enumeration.hpp"
#include "ramcov/kernels/walk_counts.hpp"

namespace ramcov {

Matrix<Integer> reduced_adjacency_matrix(const FiniteCategory& c) {
  auto a = adjacency_matrix(c);
  for (std::size_t i = 0; i < a.rows(); ++i) a(i, i) -= 1;
  return a;
}

std::vector<Integer> chain_counts(const FiniteCategory& c, std::size_t max_n, bool nondegenerate, Execution exec) {
  const auto a = nondegenerate ? reduced_adjacency_matrix(c) : adjacency_matrix(c);
  return kernels::walk_sums(a, max_n, exec);
}

Integer count_chains(const FiniteCategory& c, std::size_t n, bool nondegenerate, Execution exec) {
  return chain_counts(c, n, nondegenerate, exec).back();
}

std::vector<Chain> enumerate_chains(const FiniteCategory& c, std::size_t n, bool nondegenerate,
                                    std::optional<ObjectIndex> based_at, Execution exec) {
  if (based_at && based_at->value >= c.object_count())
    throw std::out_of_range("unknown object index " + std::to_string(based_at->value));
  return exec == Execution::serial ? kernels::enumerate_chains_serial(c, n, nondegenerate, based_at)
                                   : kernels::enumerate_chains_parallel(c, n, nondegenerate, based_at);
}

Chain face(const FiniteCategory& c, const Chain& chain, std::size_t i) {
  const std::size_t n = chain.length();
  if (n == 0 || i > n)
    throw std::out_of_range("face index " + std::to_string(i) + " out of range for chain of length " +
                            std::to_string(n));
  Chain out;
  if (i == 0) {
    out.start = c.target(chain.arrows.front());
    out.arrows.assign(chain.arrows.begin() + 1, chain.arrows.end());
  } else if (i == n) {
    out.start = chain.start;
    out.arrows.assign(chain.arrows.begin(), chain.arrows.end() - 1);
  } else {
    out.start = chain.start;
    out.arrows.assign(chain.arrows.begin(), chain.arrows.begin() + (i - 1));
    const auto composite = c.compose(chain.arrows[i - 1], chain.arrows[i]);
    if (!composite) throw std::invalid_argument("chain " + format_chain(c, chain) + " is not composable");
    out.arrows.push_back(*composite);
    out.arrows.insert(out.arrows.end(), chain.arrows.begin() + (i + 1), chain.arrows.end());
  }
  return out;
}

Chain degeneracy(const FiniteCategory& c, const Chain& chain, std::size_t i) {
  const std::size_t n = chain.length();
  if (i > n)
    throw std::out_of_range("degeneracy index " + std::to_string(i) + " out of range for chain of length " +
                            std::to_string(n));
  const ObjectIndex at = i == 0 ? chain.start : c.target(chain.arrows[i - 1]);
  Chain out = chain;
  out.arrows.insert(out.arrows.begin() + i, c.identity(at));
  return out;
}

}  // namespace ramcov
