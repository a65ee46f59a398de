#include "doctest.h"
#include "ramcov/constructions.hpp"
#include "ramcov/covering.hpp"
#include "ramcov/nerve.hpp"
#include "support.hpp"

#include <algorithm>

using namespace ramcov;

namespace {

const CategoryData arrow_data{{"x", "y"}, {{"f", "x", "y"}}, {}};

CategoryFunctor functor(const CategoryData& source, const CategoryData& target, FunctorData map) {
  return make_functor(map, make_category(source), make_category(target));
}

std::vector<std::string> codes(const std::vector<Diagnostic>& diagnostics) {
  std::vector<std::string> out;
  for (const auto& d : diagnostics) out.push_back(d.code);
  return out;
}

}  // namespace

TEST_CASE("the four-fold diamond covering") {
  const auto p = builtin_functor("P-diamond4");
  const auto profile = check_ramified_covering(p);
  REQUIRE(profile.ok());
  CHECK(profile->degree == 4);
  CHECK(profile->total_ramification == 4);
  for (std::uint32_t x = 0; x < p.source().object_count(); ++x) {
    const auto& name = p.source().object_name(ObjectIndex{x});
    const bool ramified = name == "x1" || name == "x2" || name == "y1" || name == "y3";
    CHECK_MESSAGE(profile->ramification[x] == (ramified ? 2u : 1u), name);
  }
  CHECK_FALSE(check_unramified_covering(p).holds);
  CHECK(check_covering_lemmas(p, *profile).passed());
  for (std::uint32_t x = 0; x < p.target().object_count(); ++x)
    CHECK(weighted_fiber(p, *profile, ObjectIndex{x}).size() == 4);
}

TEST_CASE("the two-fold wedge covering") {
  const auto p = builtin_functor("P-wedge2");
  const auto profile = check_ramified_covering(p);
  REQUIRE(profile.ok());
  CHECK(profile->degree == 2);
  CHECK(profile->total_ramification == 1);
  CHECK(profile->ramification[p.source().object("x").value] == 2);
  const auto verdict = check_unramified_covering(p);
  CHECK_FALSE(verdict.holds);
  REQUIRE(verdict.witness.has_value());
  CHECK(p.source().object_name(*verdict.witness) == "x");
}

TEST_CASE("identity functors and disjoint copies are unramified") {
  for (const auto& name : {"diamond", "wedge2", "arrow", "terminal"}) {
    const auto p = identity_functor(builtin_category(name));
    CHECK(check_unramified_covering(p).holds);
    const auto profile = check_ramified_covering(p);
    REQUIRE(profile.ok());
    CHECK(profile->degree == 1);
    CHECK(profile->total_ramification == 0);
  }
  const CategoryData two_arrows{{"x1", "y1", "x2", "y2"}, {{"f1", "x1", "y1"}, {"f2", "x2", "y2"}}, {}};
  const auto p = functor(two_arrows, arrow_data,
                         {{{"x1", "x"}, {"x2", "x"}, {"y1", "y"}, {"y2", "y"}}, {{"f1", "f"}, {"f2", "f"}}});
  CHECK(check_unramified_covering(p).holds);
  const auto profile = check_ramified_covering(p);
  REQUIRE(profile.ok());
  CHECK(profile->degree == 2);
}

TEST_CASE("functor validation") {
  const auto src = make_category(arrow_data);
  const auto tgt = make_category(arrow_data);
  CHECK(validate_functor({{{"x", "x"}}, {{"f", "f"}}}, src, tgt).has("unmapped-object"));
  CHECK(validate_functor({{{"x", "x"}, {"y", "y"}}, {}}, src, tgt).has("unmapped-morphism"));
  CHECK(validate_functor({{{"x", "x"}, {"y", "q"}}, {{"f", "f"}}}, src, tgt).has("unknown-object"));
  CHECK(validate_functor({{{"x", "x"}, {"y", "y"}}, {{"f", "g"}}}, src, tgt).has("unknown-morphism"));
  CHECK(validate_functor({{{"x", "y"}, {"y", "y"}}, {{"f", "f"}}}, src, tgt).has("source-not-preserved"));
  CHECK(validate_functor({{{"x", "x"}, {"y", "x"}}, {{"f", "f"}}}, src, tgt).has("target-not-preserved"));
  CHECK(validate_functor({{{"x", "x"}, {"y", "y"}}, {{"f", "f"}, {"id:x", "id:y"}}}, src, tgt)
            .has("identity-listed"));
  CHECK(validate_functor({{{"x", "x"}, {"y", "y"}}, {{"f", "f"}}}, src, tgt).ok());
  // Composition: g;h = k upstairs but images compose to a different morphism.
  const auto path = make_category({{"a", "b", "c"},
                                   {{"g", "a", "b"}, {"h", "b", "c"}, {"k", "a", "c"}},
                                   {{"g", "h", "k"}}});
  const auto parallel = make_category({{"a", "b", "c"},
                                       {{"g", "a", "b"}, {"h", "b", "c"}, {"k", "a", "c"}, {"k2", "a", "c"}},
                                       {{"g", "h", "k"}}});
  CHECK(validate_functor({{{"a", "a"}, {"b", "b"}, {"c", "c"}}, {{"g", "g"}, {"h", "h"}, {"k", "k2"}}}, path, parallel)
            .has("composition-not-preserved"));
}

TEST_CASE("rejections name their reason") {
  SUBCASE("fiber missing over part of the base") {
    const auto p = functor({{"pt"}, {}, {}}, arrow_data, {{{"pt", "x"}}, {}});
    const auto v = check_ramified_covering(p);
    CHECK_FALSE(v.ok());
    CHECK(v.has("empty-reduced-star"));
  }
  SUBCASE("collapsing an arrow") {
    const auto p = functor(arrow_data, {{"pt"}, {}, {}}, {{{"x", "pt"}, {"y", "pt"}}, {{"f", "id:pt"}}});
    const auto v = check_ramified_covering(p);
    CHECK_FALSE(v.ok());
    CHECK(v.has("target-star-not-injective"));
    CHECK_FALSE(check_unramified_covering(p).holds);
  }
  SUBCASE("disconnected base") {
    const auto p = identity_functor(make_category({{"a", "b"}, {}, {}}));
    CHECK(check_ramified_covering(p).has("target-not-connected"));
  }
  SUBCASE("empty categories") {
    const auto p = identity_functor(make_category({}));
    CHECK(check_ramified_covering(p).has("empty-category"));
  }
  SUBCASE("uneven branching") {
    const CategoryData base{{"x", "y", "w"}, {{"f", "x", "y"}, {"h", "x", "w"}}, {}};
    const CategoryData total{{"x", "y1", "y2", "w"}, {{"f1", "x", "y1"}, {"f2", "x", "y2"}, {"h", "x", "w"}}, {}};
    const auto p = functor(total, base,
                           {{{"x", "x"}, {"y1", "y"}, {"y2", "y"}, {"w", "w"}}, {{"f1", "f"}, {"f2", "f"}, {"h", "h"}}});
    const auto v = check_ramified_covering(p);
    CHECK_FALSE(v.ok());
    CHECK(v.has("unequal-fiber-counts"));
  }
  SUBCASE("target star not surjective") {
    const CategoryData base{{"x", "y", "w"}, {{"f", "x", "w"}, {"g", "y", "w"}}, {}};
    const CategoryData total{{"x", "w"}, {{"f", "x", "w"}}, {}};
    const auto p = functor(total, base, {{{"x", "x"}, {"w", "w"}}, {{"f", "f"}}});
    const auto v = check_ramified_covering(p);
    CHECK_FALSE(v.ok());
    CHECK(v.has("target-star-not-surjective"));
  }
}

TEST_CASE("lift counts and weighted lifts") {
  for (const auto& name : {"P-diamond4", "P-wedge2"}) {
    const auto p = builtin_functor(name);
    const auto profile = check_ramified_covering(p);
    REQUIRE(profile.ok());
    for (std::size_t n = 0; n <= 3; ++n) {
      for (const auto& chain : enumerate_chains(p.target(), n, false)) {
        const auto lifts = lift_chains(p, chain).lifts;
        for (const auto& lift : lifts) {
          CHECK(is_valid_chain(p.source(), lift));
          CHECK(p.map_object(lift.start) == chain.start);
          for (std::size_t i = 0; i < n; ++i) CHECK(p.map_morphism(lift.arrows[i]) == chain.arrows[i]);
        }
        if (is_identity_chain(p.target(), chain))
          CHECK(lifts.size() == fiber(p, chain.start).size());
        else
          CHECK(lifts.size() == profile->degree);
        const auto weighted = weighted_lifts(p, *profile, chain);
        CHECK(weighted.size() == profile->degree);
        CHECK(std::is_sorted(weighted.begin(), weighted.end()));
      }
    }
    const auto report = check_simplicial_compatibility(p, *profile, 4);
    CHECK(report.passed());
    CHECK(report.chains_checked > 0);
  }
  const auto p = builtin_functor("P-wedge2");
  CHECK_THROWS_AS(lift_chains(p, Chain{ObjectIndex{0}, {MorphismIndex{99}}}), std::invalid_argument);
}

TEST_CASE("compatibility detects a wrong profile") {
  const auto p = builtin_functor("P-wedge2");
  auto profile = *check_ramified_covering(p);
  profile.ramification[p.source().object("x").value] = 1;
  profile.degree = 1;
  const auto report = check_simplicial_compatibility(p, profile, 2);
  CHECK_FALSE(report.passed());
}

TEST_CASE("diagnostic codes are stable across runs") {
  const auto p = functor(arrow_data, {{"pt"}, {}, {}}, {{{"x", "pt"}, {"y", "pt"}}, {{"f", "id:pt"}}});
  CHECK(codes(check_ramified_covering(p).diagnostics) == codes(check_ramified_covering(p).diagnostics));
}
