// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ramcov/cli.hpp"
#include "ramcov/constructions.hpp"
#include "ramcov/covering.hpp"
#include "ramcov/invariants.hpp"
#include "ramcov/io.hpp"
#include "ramcov/nerve.hpp"
#include "ramcov/selftest.hpp"
#include "support.hpp"

using namespace ramcov;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

using Clock = std::chrono::steady_clock;

bool criterion(const std::string& id, const std::string& title, double limit_seconds,
               const std::function<void(Outcome&)>& body) {
  Outcome outcome;
  const auto start = Clock::now();
  try {
    body(outcome);
  } catch (const std::exception& e) {
    outcome.require(false, std::string("exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (limit_seconds > 0) {
    std::ostringstream limit;
    limit << "runtime " << seconds << " s exceeds " << limit_seconds << " s";
    outcome.require(seconds < limit_seconds, limit.str());
  }
  std::cout << (outcome.ok ? "PASS " : "FAIL ") << id << " " << title << " (" << seconds << " s)";
  if (!outcome.ok) std::cout << ": " << outcome.detail;
  std::cout << std::endl;
  return outcome.ok;
}

void ac1(Outcome& o) {
  const auto p = builtin_functor("P-diamond4");
  const auto profile = check_ramified_covering(p);
  o.require(profile.ok(), "P-diamond4 is not a ramified covering");
  if (!profile.ok()) return;
  o.require(profile->degree == 4, "d != 4");
  o.require(profile->total_ramification == 4, "V != 4");
  const std::set<std::string> ramified{"x1", "x2", "y1", "y3"};
  for (std::uint32_t x = 0; x < p.source().object_count(); ++x) {
    const auto& name = p.source().object_name(ObjectIndex{x});
    o.require(profile->ramification[x] == (ramified.count(name) ? 2u : 1u), "wrong e at " + name);
  }
  o.require(series_euler_characteristic(*builtin_category("diamond")) == Rational(0), "chi(diamond) != 0");
  o.require(series_euler_characteristic(*builtin_category("diamond-cover4")) == Rational(-4),
            "chi(diamond-cover4) != -4");
  const auto rh = check_riemann_hurwitz(p);
  o.require(rh.passed() && rh.chi_total == Rational(-4) && rh.chi_base == Rational(0) && rh.degree == 4 &&
                rh.total_ramification == 4,
            "Riemann-Hurwitz -4 = 4*0 - 4 not confirmed");
}

void ac2(Outcome& o) {
  const std::size_t order = 20;
  o.require(zeta_truncated(*builtin_category("diamond"), order).coefficients() == oracle::closed_form_zeta(4, 4, order),
            "zeta(diamond) differs from (1-z)^-4 exp(4z/(1-z))");
  o.require(zeta_truncated(*builtin_category("diamond-cover4"), order).coefficients() ==
                oracle::closed_form_zeta(12, 16, order),
            "zeta(diamond-cover4) differs from (1-z)^-12 exp(16z/(1-z))");
  o.require(check_zeta_divisibility(builtin_functor("P-diamond4"), order).passed(), "zeta divisibility fails");
}

void ac3(Outcome& o) {
  const auto p = builtin_functor("P-wedge2");
  const auto profile = check_ramified_covering(p);
  o.require(profile.ok(), "P-wedge2 is not a ramified covering");
  o.require(!check_unramified_covering(p).holds, "P-wedge2 reported unramified");
  if (!profile.ok()) return;
  o.require(profile->degree == 2, "d != 2");
  o.require(profile->total_ramification == 1, "V != 1");
  const auto rh = check_riemann_hurwitz(p);
  o.require(rh.passed() && rh.chi_total == Rational(1) && rh.chi_base == Rational(1), "1 = 2*1 - 1 not confirmed");
  o.require(check_zeta_divisibility(p, 20).passed(), "zeta divisibility fails");
}

void ac4(Outcome& o) {
  std::vector<std::pair<std::string, CategoryPtr>> categories;
  for (const auto& name : builtin_names())
    if (const auto e = builtin_example(name); std::holds_alternative<CategoryPtr>(e))
      categories.emplace_back(name, std::get<CategoryPtr>(e));
  for (std::uint64_t seed = 0; seed < 50; ++seed)
    categories.emplace_back("random " + std::to_string(seed), random_category(seed, 10));
  for (const auto& [label, c] : categories) {
    const auto expansion = euler_rational_function(*c).maclaurin(6);
    std::vector<Integer> reduced(7), all(7);
    for (std::size_t n = 0; n <= 6; ++n) {
      reduced[n] = count_chains(*c, n, true);
      all[n] = count_chains(*c, n, false);
      const Integer listed = static_cast<unsigned long>(enumerate_chains(*c, n, true).size());
      o.require(expansion[n] == Rational(reduced[n]), label + ": rational function coefficient " + std::to_string(n));
      o.require(listed == reduced[n], label + ": enumeration count " + std::to_string(n));
    }
    for (unsigned long m = 0; m <= 6; ++m) {
      Integer sum = 0;
      for (unsigned long k = 0; k <= m; ++k) {
        Integer binom;
        mpz_bin_uiui(binom.get_mpz_t(), m, k);
        sum += binom * reduced[k];
      }
      o.require(sum == all[m], label + ": binomial identity at m = " + std::to_string(m));
    }
  }
}

void ac5(Outcome& o) {
  SelftestOptions options;
  options.cases = 100;
  options.zeta_order = 12;
  options.compatibility_length = 3;
  for (const auto& c : run_selftest(options))
    o.require(c.passed(), "seed " + std::to_string(c.seed) + ": " + (c.failures.empty() ? "" : c.failures.front()));
}

void ac6(Outcome& o) {
  for (const auto& name : {"P-diamond4", "P-wedge2"}) {
    const auto p = builtin_functor(name);
    const auto profile = check_ramified_covering(p);
    o.require(profile.ok(), std::string(name) + " is not a ramified covering");
    if (!profile.ok()) return;
    for (std::size_t n = 0; n <= 4; ++n)
      for (const auto& chain : enumerate_chains(p.target(), n, false)) {
        const auto lifts = lift_chains(p, chain).lifts.size();
        const auto expected =
            is_identity_chain(p.target(), chain) ? fiber(p, chain.start).size() : std::size_t(profile->degree);
        o.require(lifts == expected, std::string(name) + ": lift count of " + format_chain(p.target(), chain));
      }
    const auto report = check_simplicial_compatibility(p, *profile, 4);
    o.require(report.passed(), std::string(name) + ": " +
                                   (report.violations.empty() ? "" : report.violations.front().message));
  }
}

std::string cli_output(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  cli::run(args, out, err);
  return out.str() + err.str();
}

void ac7(Outcome& o) {
  const std::vector<std::vector<std::string>> commands{
      {"validate", "builtin:diamond-cover4"}, {"chains", "builtin:diamond-cover4", "--n", "3", "--list"},
      {"euler", "builtin:diamond-cover4"},    {"zeta", "builtin:diamond"},
      {"covering", "builtin:P-diamond4"},     {"lemmas", "builtin:P-diamond4"},
      {"rh", "builtin:P-wedge2"},             {"zetadiv", "builtin:P-diamond4"},
      {"dinverse", "builtin:P-diamond4"},     {"--pretty", "random", "--seed", "11"},
      {"selftest", "--cases", "10"}};
  for (const auto& args : commands) {
    const auto first = cli_output(args);
    for (int repeat = 0; repeat < 3; ++repeat)
      o.require(cli_output(args) == first, "report of '" + args.front() + "' changed between runs");
  }
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto a = io::to_file_text(io::functor_to_json(random_covering(seed)));
    const auto b = io::to_file_text(io::functor_to_json(random_covering(seed)));
    o.require(a == b, "random_covering(" + std::to_string(seed) + ") not reproducible");
  }
}

}  // namespace

int main() {
  bool all = true;
  all &= criterion("AC1", "four-fold diamond covering: d, V, e, chi and Riemann-Hurwitz", 1.0, ac1);
  all &= criterion("AC2", "zeta closed forms to order 20 and divisibility", 0, ac2);
  all &= criterion("AC3", "two-fold wedge covering: d = 2, V = 1, Riemann-Hurwitz, zeta", 0, ac3);
  all &= criterion("AC4", "rational function = matrix counts = enumeration; binomial identity", 10.0, ac4);
  all &= criterion("AC5", "100 random coverings pass every theorem check", 60.0, ac5);
  all &= criterion("AC6", "lift counts and face/degeneracy compatibility up to length 4", 0, ac6);
  all &= criterion("AC7", "byte-identical reports and random functor files", 0, ac7);
  std::cout << (all ? "ALL PASS" : "SOME CRITERIA FAILED") << std::endl;
  return all ? 0 : 1;
}
