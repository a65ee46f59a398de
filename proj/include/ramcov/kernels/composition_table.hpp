#pragma once

#include <cstdint>
#include <vector>

#include "ramcov/execution.hpp"

namespace ramcov::kernels {

/// Dense table over morphism indices. cell(f, g) is the index of the composite
/// "f then g", or `undefined` when the pair is not composable (or not yet known).
class CompositionTable {
 public:
  static constexpr std::int32_t undefined = -1;

  CompositionTable() = default;
  explicit CompositionTable(std::size_t morphisms)
      : size_(morphisms), cells_(morphisms * morphisms, undefined) {}

  std::size_t size() const { return size_; }
  std::int32_t get(std::size_t first, std::size_t second) const { return cells_[first * size_ + second]; }
  void set(std::size_t first, std::size_t second, std::int32_t result) { cells_[first * size_ + second] = result; }

 private:
  std::size_t size_ = 0;
  std::vector<std::int32_t> cells_;
};

struct Triple {
  std::int32_t f, g, h;
  bool operator==(const Triple&) const = default;
};

/// Every triple (f, g, h) over the candidate morphisms where both bracketings
/// are defined and differ. Triples whose inner composites are undefined are
/// skipped (those are reported as totality failures elsewhere). Output follows
/// candidate order in f, then g, then h.
std::vector<Triple> associativity_failures_serial(const CompositionTable& table,
                                                  const std::vector<std::int32_t>& candidates);
std::vector<Triple> associativity_failures_parallel(const CompositionTable& table,
                                                    const std::vector<std::int32_t>& candidates);

inline std::vector<Triple> associativity_failures(const CompositionTable& table,
                                                  const std::vector<std::int32_t>& candidates,
                                                  Execution exec) {
  return exec == Execution::serial ? associativity_failures_serial(table, candidates)
                                   : associativity_failures_parallel(table, candidates);
}

}  // namespace ramcov::kernels
