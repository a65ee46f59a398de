#include "ramcov/selftest.hpp"

#include "ramcov/invariants.hpp"

namespace ramcov {

namespace {

SelftestCase run_case(std::uint64_t seed, const SelftestOptions& options) {
  SelftestCase result;
  result.seed = seed;
  try {
    const CategoryFunctor p = random_covering(seed, options.bounds);
    result.source_objects = p.source().object_count();
    result.target_objects = p.target().object_count();

    const auto profile = check_ramified_covering(p);
    if (!profile.ok()) {
      result.failures.push_back("check_ramified_covering rejected the generated covering");
      return result;
    }
    result.degree = profile->degree;
    result.total_ramification = profile->total_ramification;

    const auto lemmas = check_covering_lemmas(p, *profile);
    if (!lemmas.passed()) result.failures.push_back("check_covering_lemmas failed");

    const auto rh = check_riemann_hurwitz(p);
    if (!rh.passed()) result.failures.push_back("check_riemann_hurwitz failed");

    const auto zeta = check_zeta_divisibility(p, options.zeta_order, Execution::serial);
    if (!zeta.passed()) result.failures.push_back("check_zeta_divisibility failed");

    const auto compat = check_simplicial_compatibility(p, *profile, options.compatibility_length, Execution::serial);
    if (!compat.passed())
      result.failures.push_back("check_simplicial_compatibility: " + compat.violations.front().message);
  } catch (const std::exception& e) {
    result.failures.push_back(std::string("exception: ") + e.what());
  }
  return result;
}

}  // namespace

std::vector<SelftestCase> run_selftest(const SelftestOptions& options, Execution exec) {
  std::vector<SelftestCase> results(options.cases);
  const auto count = static_cast<std::ptrdiff_t>(options.cases);
  const bool parallel = exec == Execution::parallel;
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::ptrdiff_t i = 0; i < count; ++i)
    results[i] = run_case(options.first_seed + static_cast<std::uint64_t>(i), options);
  return results;
}

}  // namespace ramcov
