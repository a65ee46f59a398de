#include "doctest.h"
#include "ramcov/constructions.hpp"
#include "ramcov/nerve.hpp"
#include "support.hpp"

using namespace ramcov;

namespace {

std::vector<CategoryPtr> sample_categories() {
  std::vector<CategoryPtr> out;
  for (const auto& name : builtin_names())
    if (const auto example = builtin_example(name); std::holds_alternative<CategoryPtr>(example))
      out.push_back(std::get<CategoryPtr>(example));
  for (std::uint64_t seed = 0; seed < 15; ++seed) out.push_back(random_category(seed, 5));
  return out;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace

TEST_CASE("chain counts agree with brute force and enumeration") {
  for (const auto& c : sample_categories()) {
    for (std::size_t n = 0; n <= 4; ++n) {
      for (bool nondegenerate : {false, true}) {
        const auto expected = oracle::brute_force_chains(*c, n, nondegenerate);
        CHECK(count_chains(*c, n, nondegenerate) == expected);
        CHECK(Integer(static_cast<unsigned long>(enumerate_chains(*c, n, nondegenerate).size())) == expected);
      }
    }
  }
}

TEST_CASE("all chains decompose by their degenerate positions") {
  for (const auto& c : sample_categories()) {
    const auto reduced = chain_counts(*c, 6, true);
    for (unsigned long m = 0; m <= 6; ++m) {
      Integer sum = 0;
      for (unsigned long k = 0; k <= m; ++k) sum += binomial(m, k) * reduced[k];
      CHECK(count_chains(*c, m, false) == sum);
    }
  }
}

TEST_CASE("diamond chain counts") {
  const auto c = builtin_category("diamond");
  CHECK(chain_counts(*c, 3, true) == std::vector<Integer>{4, 4, 0, 0});
  for (std::size_t m = 0; m <= 6; ++m) CHECK(count_chains(*c, m, false) == Integer(4 + 4 * static_cast<long>(m)));
}

TEST_CASE("enumeration is sorted, deterministic and respects the base") {
  const auto c = builtin_category("diamond-cover4");
  const auto chains = enumerate_chains(*c, 2, false);
  for (std::size_t i = 1; i < chains.size(); ++i) {
    if (chains[i - 1].start == chains[i].start) CHECK(name_order_less(*c, chains[i - 1], chains[i]));
  }
  CHECK(chains == enumerate_chains(*c, 2, false));
  const auto x1 = c->object("x1");
  for (const auto& chain : enumerate_chains(*c, 3, false, x1)) {
    CHECK(chain.start == x1);
    CHECK(is_valid_chain(*c, chain));
  }
  CHECK_THROWS_AS(enumerate_chains(*c, 1, false, ObjectIndex{999}), std::out_of_range);
}

TEST_CASE("faces and degeneracies satisfy the simplicial identities") {
  for (const auto& c : sample_categories()) {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (const auto& chain : enumerate_chains(*c, n, false)) {
        for (std::size_t i = 0; i <= n; ++i) {
          CHECK(is_valid_chain(*c, face(*c, chain, i)));
          CHECK(face(*c, chain, i).length() == n - 1);
          for (std::size_t j = i + 1; j <= n && n >= 2; ++j)
            CHECK(face(*c, face(*c, chain, j), i) == face(*c, face(*c, chain, i), j - 1));
          const auto s = degeneracy(*c, chain, i);
          CHECK(face(*c, s, i) == chain);
          CHECK(face(*c, s, i + 1) == chain);
          for (std::size_t j = i; j <= n; ++j)
            CHECK(degeneracy(*c, degeneracy(*c, chain, j), i) == degeneracy(*c, degeneracy(*c, chain, i), j + 1));
        }
      }
    }
  }
}

TEST_CASE("degenerate chains are exactly those containing an identity") {
  const auto c = builtin_category("wedge2");
  for (const auto& chain : enumerate_chains(*c, 2, false)) {
    bool has_identity = false;
    for (const auto f : chain.arrows) has_identity |= c->is_identity(f);
    CHECK(is_nondegenerate(*c, chain) == !has_identity);
  }
  const Chain point{c->object("x"), {}};
  CHECK(format_chain(*c, point) == "(x)");
  CHECK(format_chain(*c, Chain{c->object("x"), {c->morphism_named("f1")}}) == "(f1)");
}
