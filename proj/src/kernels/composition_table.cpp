#include "ramcov/kernels/composition_table.hpp"

namespace ramcov::kernels {

namespace {

void sweep_first(const CompositionTable& table, const std::vector<std::int32_t>& candidates,
                 std::int32_t f, std::vector<Triple>& out) {
  for (const std::int32_t g : candidates) {
    const std::int32_t fg = table.get(f, g);
    if (fg == CompositionTable::undefined) continue;
    for (const std::int32_t h : candidates) {
      const std::int32_t gh = table.get(g, h);
      if (gh == CompositionTable::undefined) continue;
      const std::int32_t left = table.get(fg, h);
      const std::int32_t right = table.get(f, gh);
      if (left == CompositionTable::undefined || right == CompositionTable::undefined) continue;
      if (left != right) out.push_back({f, g, h});
    }
  }
}

}  // namespace

std::vector<Triple> associativity_failures_serial(const CompositionTable& table,
                                                  const std::vector<std::int32_t>& candidates) {
  std::vector<Triple> out;
  for (const std::int32_t f : candidates) sweep_first(table, candidates, f, out);
  return out;
}

std::vector<Triple> associativity_failures_parallel(const CompositionTable& table,
                                                    const std::vector<std::int32_t>& candidates) {
  const auto n = static_cast<std::ptrdiff_t>(candidates.size());
  std::vector<std::vector<Triple>> per_first(candidates.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) sweep_first(table, candidates, candidates[i], per_first[i]);

  std::vector<Triple> out;
  for (auto& chunk : per_first) out.insert(out.end(), chunk.begin(), chunk.end());
  return out;
}

}  // namespace ramcov::kernels
