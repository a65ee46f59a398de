#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ramcov/diagnostic.hpp"
#include "ramcov/execution.hpp"
#include "ramcov/kernels/composition_table.hpp"
#include "ramcov/matrix.hpp"
#include "ramcov/numeric.hpp"

namespace ramcov {

struct ObjectIndex {
  std::uint32_t value = 0;
  auto operator<=>(const ObjectIndex&) const = default;
};

struct MorphismIndex {
  std::uint32_t value = 0;
  auto operator<=>(const MorphismIndex&) const = default;
};

/// Reserved prefix of synthesized identity ids: the identity of x is "id:x".
inline constexpr std::string_view identity_prefix = "id:";
std::string identity_name(std::string_view object);

/// Category data as it appears in a file, before any checking. Identities are
/// implicit; `morphisms` and `composition` list non-identity data only.
struct CategoryData {
  struct Morphism {
    std::string id, src, tgt;
    bool operator==(const Morphism&) const = default;
  };
  struct Composite {
    std::string first, second, result;
    bool operator==(const Composite&) const = default;
  };

  std::vector<std::string> objects;
  std::vector<Morphism> morphisms;
  std::vector<Composite> composition;

  bool operator==(const CategoryData&) const = default;
};

struct MorphismInfo {
  std::string name;
  ObjectIndex source;
  ObjectIndex target;
  bool identity = false;
};

enum class StarKind { source, target };

struct MorphismStar {
  ObjectIndex base;
  StarKind kind = StarKind::source;
  std::vector<MorphismIndex> members;
};

/// A validated finite category. Immutable; obtain one through validate_category.
///
/// Morphism indices 0..objects-1 are the identities (identity of object i has
/// index i); non-identity morphisms follow in declaration order.
class FiniteCategory {
 public:
  std::size_t object_count() const { return objects_.size(); }
  std::size_t morphism_count() const { return morphisms_.size(); }
  bool empty() const { return objects_.empty(); }

  const std::string& object_name(ObjectIndex x) const { return objects_[x.value]; }
  const MorphismInfo& morphism(MorphismIndex f) const { return morphisms_[f.value]; }
  const std::string& morphism_name(MorphismIndex f) const { return morphisms_[f.value].name; }
  ObjectIndex source(MorphismIndex f) const { return morphisms_[f.value].source; }
  ObjectIndex target(MorphismIndex f) const { return morphisms_[f.value].target; }
  bool is_identity(MorphismIndex f) const { return morphisms_[f.value].identity; }
  MorphismIndex identity(ObjectIndex x) const { return MorphismIndex{x.value}; }

  std::optional<ObjectIndex> find_object(std::string_view name) const;
  std::optional<MorphismIndex> find_morphism(std::string_view name) const;
  /// Throws std::out_of_range("unknown object ...").
  ObjectIndex object(std::string_view name) const;
  /// Throws std::out_of_range("unknown morphism ...").
  MorphismIndex morphism_named(std::string_view name) const;

  /// Composite of `first` followed by `second`; nullopt when not composable.
  std::optional<MorphismIndex> compose(MorphismIndex first, MorphismIndex second) const;

  MorphismStar source_star(ObjectIndex x) const;
  MorphismStar target_star(ObjectIndex x) const;
  std::vector<MorphismIndex> reduced_source_star(ObjectIndex x) const;

  /// S(x) ordered by morphism name.
  std::span<const MorphismIndex> outgoing_by_name(ObjectIndex x) const { return outgoing_by_name_[x.value]; }
  /// All morphisms ordered by name.
  std::span<const MorphismIndex> morphisms_by_name() const { return by_name_; }
  /// Position of f in morphisms_by_name().
  std::uint32_t name_rank(MorphismIndex f) const { return name_rank_[f.value]; }

  std::vector<MorphismIndex> hom(ObjectIndex x, ObjectIndex y) const;

  const kernels::CompositionTable& composition_table() const { return table_; }

  /// File-level data; validate_category(to_data()) reproduces this category.
  CategoryData to_data() const;

 private:
  friend Validated<FiniteCategory> validate_category(const CategoryData&, Execution);

  std::vector<std::string> objects_;
  std::vector<MorphismInfo> morphisms_;
  kernels::CompositionTable table_;
  std::unordered_map<std::string, std::uint32_t> object_lookup_;
  std::unordered_map<std::string, std::uint32_t> morphism_lookup_;
  std::vector<std::vector<MorphismIndex>> outgoing_by_name_;
  std::vector<std::vector<MorphismIndex>> incoming_;
  std::vector<MorphismIndex> by_name_;
  std::vector<std::uint32_t> name_rank_;
};

/// Checks ids, references, totality, unit laws, endpoints and associativity,
/// collecting every failure. Diagnostic codes:
///   empty-id, duplicate-object, duplicate-morphism, reserved-id,
///   dangling-object, unknown-morphism, not-composable, composite-endpoints,
///   unit-law, conflicting-composite, missing-composite, associativity.
Validated<FiniteCategory> validate_category(const CategoryData& raw, Execution exec = Execution::parallel);

/// Nonempty and one zig-zag component.
bool is_connected(const FiniteCategory& c);

/// Objects whose target star is just the identity.
std::vector<ObjectIndex> preinitial_objects(const FiniteCategory& c);

/// (x, y) entry is #Hom(x, y), identities included, in object order.
Matrix<Integer> adjacency_matrix(const FiniteCategory& c);

}  // namespace ramcov
