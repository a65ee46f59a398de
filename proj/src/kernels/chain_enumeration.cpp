#include "ramcov/kernels/chain_enumeration.hpp"

namespace ramcov::kernels {

namespace {

std::vector<ObjectIndex> zero_chains(const FiniteCategory& c, std::optional<ObjectIndex> based_at) {
  if (based_at) return {*based_at};
  std::vector<ObjectIndex> out;
  for (std::uint32_t x = 0; x < c.object_count(); ++x) out.push_back(ObjectIndex{x});
  return out;
}

std::vector<MorphismIndex> first_arrows(const FiniteCategory& c, bool nondegenerate,
                                        std::optional<ObjectIndex> based_at) {
  std::vector<MorphismIndex> out;
  const auto pool = based_at ? c.outgoing_by_name(*based_at) : c.morphisms_by_name();
  for (const auto f : pool)
    if (!(nondegenerate && c.is_identity(f))) out.push_back(f);
  return out;
}

template <class Visit>
void extend(const FiniteCategory& c, std::size_t n, bool nondegenerate, std::vector<MorphismIndex>& path,
            Visit&& visit) {
  if (path.size() == n) {
    visit(path);
    return;
  }
  for (const auto g : c.outgoing_by_name(c.target(path.back()))) {
    if (nondegenerate && c.is_identity(g)) continue;
    path.push_back(g);
    extend(c, n, nondegenerate, path, visit);
    path.pop_back();
  }
}

void chains_from(const FiniteCategory& c, std::size_t n, bool nondegenerate, MorphismIndex first,
                 std::vector<Chain>& out) {
  std::vector<MorphismIndex> path{first};
  extend(c, n, nondegenerate, path,
         [&](const std::vector<MorphismIndex>& p) { out.push_back(Chain{c.source(first), p}); });
}

Integer count_from(const FiniteCategory& c, std::size_t n, bool nondegenerate, MorphismIndex first) {
  std::vector<MorphismIndex> path{first};
  unsigned long long count = 0;
  extend(c, n, nondegenerate, path, [&](const std::vector<MorphismIndex>&) { ++count; });
  return Integer(static_cast<unsigned long>(count));
}

}  // namespace

std::vector<Chain> enumerate_chains_serial(const FiniteCategory& c, std::size_t n, bool nondegenerate,
                                           std::optional<ObjectIndex> based_at) {
  std::vector<Chain> out;
  if (n == 0) {
    for (const auto x : zero_chains(c, based_at)) out.push_back(Chain{x, {}});
    return out;
  }
  for (const auto f : first_arrows(c, nondegenerate, based_at)) chains_from(c, n, nondegenerate, f, out);
  return out;
}

std::vector<Chain> enumerate_chains_parallel(const FiniteCategory& c, std::size_t n, bool nondegenerate,
                                             std::optional<ObjectIndex> based_at) {
  if (n == 0) return enumerate_chains_serial(c, n, nondegenerate, based_at);
  const auto firsts = first_arrows(c, nondegenerate, based_at);
  std::vector<std::vector<Chain>> buckets(firsts.size());
  const auto count = static_cast<std::ptrdiff_t>(firsts.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) chains_from(c, n, nondegenerate, firsts[i], buckets[i]);

  std::vector<Chain> out;
  for (auto& b : buckets) std::move(b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Integer count_chains_by_search(const FiniteCategory& c, std::size_t n, bool nondegenerate, Execution exec) {
  if (n == 0) return Integer(static_cast<unsigned long>(c.object_count()));
  const auto firsts = first_arrows(c, nondegenerate, std::nullopt);
  std::vector<Integer> partial(firsts.size());
  const auto count = static_cast<std::ptrdiff_t>(firsts.size());
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < count; ++i) partial[i] = count_from(c, n, nondegenerate, firsts[i]);
  } else {
    for (std::ptrdiff_t i = 0; i < count; ++i) partial[i] = count_from(c, n, nondegenerate, firsts[i]);
  }
  Integer total = 0;
  for (const auto& p : partial) total += p;
  return total;
}

}  // namespace ramcov::kernels
