#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ramcov/category.hpp"
#include "ramcov/chain.hpp"

namespace ramcov {

/// Functor data as it appears in a file; identities are mapped implicitly.
struct FunctorData {
  std::map<std::string, std::string> object_map;
  std::map<std::string, std::string> morphism_map;
  bool operator==(const FunctorData&) const = default;
};

class CategoryFunctor {
 public:
  const FiniteCategory& source() const { return *source_; }
  const FiniteCategory& target() const { return *target_; }
  const std::shared_ptr<const FiniteCategory>& source_ptr() const { return source_; }
  const std::shared_ptr<const FiniteCategory>& target_ptr() const { return target_; }

  ObjectIndex map_object(ObjectIndex x) const { return object_map_[x.value]; }
  MorphismIndex map_morphism(MorphismIndex f) const { return morphism_map_[f.value]; }

  /// Morphisms out of `from` (in the source) sent to `image`, in name order.
  const std::vector<MorphismIndex>& lifts_at(ObjectIndex from, MorphismIndex image) const {
    return lifts_at_[from.value * target_->morphism_count() + image.value];
  }

  FunctorData to_data() const;

 private:
  friend Validated<CategoryFunctor> validate_functor(const FunctorData&, std::shared_ptr<const FiniteCategory>,
                                                     std::shared_ptr<const FiniteCategory>);

  std::shared_ptr<const FiniteCategory> source_;
  std::shared_ptr<const FiniteCategory> target_;
  std::vector<ObjectIndex> object_map_;
  std::vector<MorphismIndex> morphism_map_;
  std::vector<std::vector<MorphismIndex>> lifts_at_;
};

/// Exhaustive functoriality check. Diagnostic codes: unmapped-object,
/// unmapped-morphism, unknown-object, unknown-morphism, identity-listed,
/// source-not-preserved, target-not-preserved, composition-not-preserved.
Validated<CategoryFunctor> validate_functor(const FunctorData& raw, std::shared_ptr<const FiniteCategory> source,
                                            std::shared_ptr<const FiniteCategory> target);

CategoryFunctor identity_functor(std::shared_ptr<const FiniteCategory> c);

struct UnramifiedVerdict {
  bool holds = false;
  std::optional<ObjectIndex> witness;
  std::optional<StarKind> failing_star;
  std::vector<Diagnostic> diagnostics;
};

/// Both star restrictions bijective at every source object. Stops at the
/// first failing object (in object order, source star checked first).
UnramifiedVerdict check_unramified_covering(const CategoryFunctor& p);

struct RamificationProfile {
  std::vector<std::uint64_t> ramification;  // e, indexed by source object
  std::uint64_t degree = 0;
  std::uint64_t total_ramification = 0;  // V
  bool operator==(const RamificationProfile&) const = default;
};

/// Verifies T-bijectivity and the e-to-one condition on reduced source stars,
/// derives e and the degree. Diagnostic codes: empty-category,
/// target-not-connected, target-star-not-injective, target-star-not-surjective,
/// reduced-star-hits-identity, empty-reduced-star, unequal-fiber-counts,
/// degree-inconsistent.
Validated<RamificationProfile> check_ramified_covering(const CategoryFunctor& p);

/// P⁻¹(x) in object order. Throws std::out_of_range for an unknown object.
std::vector<ObjectIndex> fiber(const CategoryFunctor& p, ObjectIndex x);
/// R(x): each fiber object repeated e times.
std::vector<ObjectIndex> weighted_fiber(const CategoryFunctor& p, const RamificationProfile& profile, ObjectIndex x);

struct LiftSet {
  Chain base_chain;
  std::vector<Chain> lifts;
};

/// Every chain of the source category mapping arrow-wise onto `chain`, in name
/// order. Throws std::invalid_argument if `chain` is not a chain of the target.
LiftSet lift_chains(const CategoryFunctor& p, const Chain& chain);

struct CompatibilityViolation {
  std::string kind;  // "lift-count", "lift-image", "face" or "degeneracy"
  Chain chain;
  std::size_t index = 0;
  std::vector<Chain> from_lifts;  // operator applied to each lift
  std::vector<Chain> expected;    // lifts of the operator applied downstairs
  std::string message;
};

struct CompatibilityReport {
  std::size_t chains_checked = 0;
  std::vector<CompatibilityViolation> violations;
  bool passed() const { return violations.empty(); }
};

/// The d lifts attached to a base chain: the lifts themselves for a chain
/// with a non-identity arrow, and for an identity chain at x the identity
/// lift at each x̃ over x repeated e(x̃) times. Sorted.
std::vector<Chain> weighted_lifts(const CategoryFunctor& p, const RamificationProfile& profile, const Chain& chain);

/// For every base chain of length <= n_max: lift counts (d in total, e(x̃)
/// based at each x̃; one per fiber object for identity chains), and multiset
/// equality of face/degeneracy images of weighted_lifts with the weighted
/// lifts of the face/degeneracy.
CompatibilityReport check_simplicial_compatibility(const CategoryFunctor& p, const RamificationProfile& profile,
                                                   std::size_t n_max, Execution exec = Execution::parallel);

struct LemmaReport {
  bool identity_reflection = true;  // P(f̃) identity <=> f̃ identity
  bool cycle_lemma = true;          // e = 1 on non-identity cycles
  bool target_lemma = true;         // e = 1 at targets of non-identity morphisms
  std::vector<Diagnostic> witnesses;
  bool passed() const { return identity_reflection && cycle_lemma && target_lemma; }
};

LemmaReport check_covering_lemmas(const CategoryFunctor& p, const RamificationProfile& profile);

}  // namespace ramcov
