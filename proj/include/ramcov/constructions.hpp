#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ramcov/category.hpp"
#include "ramcov/covering.hpp"

namespace ramcov {

struct ConstructionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

using CategoryPtr = std::shared_ptr<const FiniteCategory>;

/// Validates raw data that is known to be well formed; throws
/// ConstructionError with the diagnostics otherwise.
CategoryPtr make_category(const CategoryData& data);
CategoryFunctor make_functor(const FunctorData& data, CategoryPtr source, CategoryPtr target);

struct WedgePart {
  CategoryPtr category;
  ObjectIndex basepoint;  // must be preinitial
};

struct WedgeSpec {
  std::vector<WedgePart> parts;
};

inline constexpr std::string_view wedge_basepoint_name = "wedge:base";

struct Wedge {
  CategoryPtr category;
  std::vector<CategoryFunctor> inclusions;  // part i -> wedge
};

/// Glues the parts at their basepoints (object "wedge:base"); every other id
/// of part i is prefixed "p<i>:". Throws ConstructionError when the spec is
/// empty or a basepoint is not preinitial.
Wedge wedge(const WedgeSpec& spec);

/// ⋁ P_i from the wedge of the sources (at `basepoints`) to the common target.
/// Each P_i must be an unramified covering and all basepoints must be
/// preinitial with the same image. The result is re-verified as a ramified
/// covering of degree sum(deg P_i); ConstructionError otherwise.
CategoryFunctor wedge_covering(const std::vector<CategoryFunctor>& coverings,
                               const std::vector<ObjectIndex>& basepoints);

using Example = std::variant<CategoryPtr, CategoryFunctor>;

/// terminal, arrow, wedge2, diamond, diamond-cover4, P-wedge2, P-diamond4.
const std::vector<std::string>& builtin_names();
/// Throws std::out_of_range for an unknown name.
Example builtin_example(const std::string& name);
CategoryPtr builtin_category(const std::string& name);
CategoryFunctor builtin_functor(const std::string& name);

struct RandomBounds {
  std::size_t max_objects = 5;     // base category, at most 12
  std::size_t max_morphisms = 12;  // base non-identity morphisms, at most 24
  std::size_t max_sheets = 2;      // sheets per unramified part
  std::size_t max_parts = 3;       // parts wedged together
  std::size_t max_attempts = 64;
};

/// A finite category: a free category on a random DAG, a random poset, or one
/// of those times a finite cyclic monoid (which adds non-identity cycles).
/// Deterministic in `seed`.
CategoryPtr random_category(std::uint64_t seed, std::size_t max_objects);

/// A verified ramified covering: acyclic base, unramified parts (voltage covers
/// of a free category or disjoint copies of a poset) wedged at a preinitial
/// object. Deterministic in `seed`. Throws ConstructionError when the bounds
/// are out of range or the attempt budget runs out.
CategoryFunctor random_covering(std::uint64_t seed, const RandomBounds& bounds = {});

}  // namespace ramcov
