#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ramcov/constructions.hpp"

namespace ramcov {

struct SelftestOptions {
  std::uint64_t first_seed = 0;
  std::size_t cases = 100;
  std::size_t zeta_order = 12;
  std::size_t compatibility_length = 3;
  RandomBounds bounds;
};

struct SelftestCase {
  std::uint64_t seed = 0;
  std::size_t source_objects = 0;
  std::size_t target_objects = 0;
  std::uint64_t degree = 0;
  std::uint64_t total_ramification = 0;
  std::vector<std::string> failures;  // empty when every theorem check passed
  bool passed() const { return failures.empty(); }
};

/// Runs every theorem checker on random_covering(seed) for consecutive seeds.
/// Cases run concurrently under Execution::parallel; output order is by seed.
std::vector<SelftestCase> run_selftest(const SelftestOptions& options, Execution exec = Execution::parallel);

}  // namespace ramcov
