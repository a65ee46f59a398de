#include "ramcov/covering.hpp"

#include <algorithm>
#include <stdexcept>

#include "ramcov/nerve.hpp"

namespace ramcov {

FunctorData CategoryFunctor::to_data() const {
  FunctorData data;
  for (std::uint32_t x = 0; x < source_->object_count(); ++x)
    data.object_map[source_->object_name(ObjectIndex{x})] = target_->object_name(object_map_[x]);
  for (std::uint32_t f = source_->object_count(); f < source_->morphism_count(); ++f)
    data.morphism_map[source_->morphism_name(MorphismIndex{f})] = target_->morphism_name(morphism_map_[f]);
  return data;
}

Validated<CategoryFunctor> validate_functor(const FunctorData& raw, std::shared_ptr<const FiniteCategory> source,
                                            std::shared_ptr<const FiniteCategory> target) {
  if (!source || !target) throw std::invalid_argument("validate_functor: null category");
  const auto& src = *source;
  const auto& tgt = *target;
  std::vector<Diagnostic> issues;
  auto report = [&](std::string code, std::string message) {
    issues.push_back({std::move(code), std::move(message)});
  };

  std::vector<std::optional<ObjectIndex>> objects(src.object_count());
  for (const auto& [from, to] : raw.object_map) {
    const auto x = src.find_object(from);
    if (!x) {
      report("unknown-object", "object map key '" + from + "' is not an object of the source");
      continue;
    }
    const auto y = tgt.find_object(to);
    if (!y) {
      report("unknown-object", "object '" + from + "' maps to '" + to + "', not an object of the target");
      continue;
    }
    objects[x->value] = *y;
  }
  for (std::uint32_t x = 0; x < src.object_count(); ++x)
    if (!objects[x] && !raw.object_map.count(src.object_name(ObjectIndex{x})))
      report("unmapped-object", "object '" + src.object_name(ObjectIndex{x}) + "' is not mapped");

  std::vector<std::optional<MorphismIndex>> morphisms(src.morphism_count());
  for (std::uint32_t x = 0; x < src.object_count(); ++x)
    if (objects[x]) morphisms[x] = tgt.identity(*objects[x]);

  for (const auto& [from, to] : raw.morphism_map) {
    const auto f = src.find_morphism(from);
    if (!f) {
      report("unknown-morphism", "morphism map key '" + from + "' is not a morphism of the source");
      continue;
    }
    const auto g = tgt.find_morphism(to);
    if (!g) {
      report("unknown-morphism", "morphism '" + from + "' maps to '" + to + "', not a morphism of the target");
      continue;
    }
    if (src.is_identity(*f)) {
      if (morphisms[f->value] != g)
        report("identity-listed", "identity '" + from + "' is mapped implicitly; '" + to + "' conflicts");
      continue;
    }
    morphisms[f->value] = *g;
  }
  for (std::uint32_t f = src.object_count(); f < src.morphism_count(); ++f)
    if (!morphisms[f] && !raw.morphism_map.count(src.morphism_name(MorphismIndex{f})))
      report("unmapped-morphism", "morphism '" + src.morphism_name(MorphismIndex{f}) + "' is not mapped");

  std::vector<bool> endpoints_ok(src.morphism_count(), false);
  for (std::uint32_t i = src.object_count(); i < src.morphism_count(); ++i) {
    const MorphismIndex f{i};
    const auto& image = morphisms[i];
    const auto& s = objects[src.source(f).value];
    const auto& t = objects[src.target(f).value];
    if (!image || !s || !t) continue;
    bool ok = true;
    if (tgt.source(*image) != *s) {
      report("source-not-preserved", "source not preserved by '" + src.morphism_name(f) + "' -> '" +
                                         tgt.morphism_name(*image) + "'");
      ok = false;
    }
    if (tgt.target(*image) != *t) {
      report("target-not-preserved", "target not preserved by '" + src.morphism_name(f) + "' -> '" +
                                         tgt.morphism_name(*image) + "'");
      ok = false;
    }
    endpoints_ok[i] = ok;
  }
  for (std::uint32_t x = 0; x < src.object_count(); ++x) endpoints_ok[x] = objects[x].has_value();

  for (std::uint32_t i = src.object_count(); i < src.morphism_count(); ++i)
    for (std::uint32_t j = src.object_count(); j < src.morphism_count(); ++j) {
      const MorphismIndex f{i}, g{j};
      const auto fg = src.compose(f, g);
      if (!fg || !endpoints_ok[i] || !endpoints_ok[j] || !endpoints_ok[fg->value]) continue;
      const auto downstairs = tgt.compose(*morphisms[i], *morphisms[j]);
      if (downstairs != morphisms[fg->value])
        report("composition-not-preserved", "composition not preserved at (" + src.morphism_name(f) + "," +
                                                src.morphism_name(g) + ")");
    }

  if (!issues.empty()) return {std::nullopt, std::move(issues)};

  CategoryFunctor p;
  p.source_ = std::move(source);
  p.target_ = std::move(target);
  for (const auto& x : objects) p.object_map_.push_back(*x);
  for (const auto& f : morphisms) p.morphism_map_.push_back(*f);
  p.lifts_at_.assign(src.object_count() * tgt.morphism_count(), {});
  for (std::uint32_t x = 0; x < src.object_count(); ++x)
    for (const auto f : src.outgoing_by_name(ObjectIndex{x}))
      p.lifts_at_[x * tgt.morphism_count() + p.morphism_map_[f.value].value].push_back(f);
  return {std::move(p), {}};
}

CategoryFunctor identity_functor(std::shared_ptr<const FiniteCategory> c) {
  FunctorData data;
  for (std::uint32_t x = 0; x < c->object_count(); ++x) {
    const auto& name = c->object_name(ObjectIndex{x});
    data.object_map[name] = name;
  }
  for (std::uint32_t f = c->object_count(); f < c->morphism_count(); ++f) {
    const auto& name = c->morphism_name(MorphismIndex{f});
    data.morphism_map[name] = name;
  }
  auto result = validate_functor(data, c, c);
  return std::move(*result.value);
}

namespace {

// Image multiplicities of `members` under P, indexed by target morphism.
std::vector<std::uint32_t> image_counts(const CategoryFunctor& p, const std::vector<MorphismIndex>& members) {
  std::vector<std::uint32_t> counts(p.target().morphism_count(), 0);
  for (const auto f : members) ++counts[p.map_morphism(f).value];
  return counts;
}

// Empty string when P restricted to the star is a bijection onto `downstairs`.
std::string bijection_failure(const CategoryFunctor& p, const std::vector<MorphismIndex>& upstairs,
                              const std::vector<MorphismIndex>& downstairs) {
  const auto counts = image_counts(p, upstairs);
  for (const auto f : downstairs) {
    if (counts[f.value] > 1) return "not injective: " + p.target().morphism_name(f) + " has several preimages";
    if (counts[f.value] == 0) return "not surjective: " + p.target().morphism_name(f) + " has no preimage";
  }
  return {};
}

std::string star_name(StarKind kind) { return kind == StarKind::source ? "source star" : "target star"; }

}  // namespace

UnramifiedVerdict check_unramified_covering(const CategoryFunctor& p) {
  UnramifiedVerdict verdict;
  const auto& src = p.source();
  const auto& tgt = p.target();
  if (src.empty() || tgt.empty()) {
    verdict.diagnostics.push_back({"empty-category", "coverings of or by the empty category are not considered"});
    return verdict;
  }
  if (!is_connected(tgt)) {
    verdict.diagnostics.push_back({"target-not-connected", "target category is not connected"});
    return verdict;
  }
  for (std::uint32_t i = 0; i < src.object_count(); ++i) {
    const ObjectIndex xt{i};
    const ObjectIndex x = p.map_object(xt);
    for (const auto kind : {StarKind::source, StarKind::target}) {
      const auto up = kind == StarKind::source ? src.source_star(xt) : src.target_star(xt);
      const auto down = kind == StarKind::source ? tgt.source_star(x) : tgt.target_star(x);
      const auto failure = bijection_failure(p, up.members, down.members);
      if (failure.empty()) continue;
      verdict.witness = xt;
      verdict.failing_star = kind;
      verdict.diagnostics.push_back({kind == StarKind::source ? "source-star-not-bijective"
                                                              : "target-star-not-bijective",
                                     star_name(kind) + " at '" + src.object_name(xt) + "' (" +
                                         std::to_string(up.members.size()) + " -> " +
                                         std::to_string(down.members.size()) + ") is " + failure});
      return verdict;
    }
  }
  verdict.holds = true;
  return verdict;
}

Validated<RamificationProfile> check_ramified_covering(const CategoryFunctor& p) {
  const auto& src = p.source();
  const auto& tgt = p.target();
  std::vector<Diagnostic> issues;
  auto report = [&](std::string code, std::string message) {
    issues.push_back({std::move(code), std::move(message)});
  };
  if (src.empty() || tgt.empty()) {
    report("empty-category", "coverings of or by the empty category are not considered");
    return {std::nullopt, std::move(issues)};
  }
  if (!is_connected(tgt)) {
    report("target-not-connected", "target category is not connected");
    return {std::nullopt, std::move(issues)};
  }

  RamificationProfile profile;
  profile.ramification.assign(src.object_count(), 0);
  for (std::uint32_t i = 0; i < src.object_count(); ++i) {
    const ObjectIndex xt{i};
    const ObjectIndex x = p.map_object(xt);
    const std::string at = "'" + src.object_name(xt) + "'";

    const auto t_counts = image_counts(p, src.target_star(xt).members);
    for (const auto f : tgt.target_star(x).members) {
      if (t_counts[f.value] > 1)
        report("target-star-not-injective", "target star at " + at + " is not injective: " + tgt.morphism_name(f) +
                                                " has " + std::to_string(t_counts[f.value]) + " preimages");
      else if (t_counts[f.value] == 0)
        report("target-star-not-surjective",
               "target star at " + at + " is not surjective: " + tgt.morphism_name(f) + " has no preimage");
    }

    const auto reduced_up = src.reduced_source_star(xt);
    const auto reduced_down = tgt.reduced_source_star(x);
    bool hits_identity = false;
    for (const auto f : reduced_up)
      if (tgt.is_identity(p.map_morphism(f))) {
        report("reduced-star-hits-identity", "non-identity '" + src.morphism_name(f) + "' at " + at +
                                                 " maps to an identity");
        hits_identity = true;
      }
    if (hits_identity) continue;
    if (reduced_up.empty() && reduced_down.empty()) {
      profile.ramification[i] = 1;
      continue;
    }
    if (reduced_up.empty()) {
      report("empty-reduced-star", "reduced source star at " + at + " is empty but not at its image '" +
                                       tgt.object_name(x) + "'");
      continue;
    }
    const auto s_counts = image_counts(p, reduced_up);
    const std::uint32_t e = s_counts[reduced_down.front().value];
    bool uniform = e > 0;
    for (const auto f : reduced_down) uniform = uniform && s_counts[f.value] == e;
    if (!uniform) {
      std::string detail;
      for (const auto f : reduced_down)
        detail += (detail.empty() ? "" : ", ") + tgt.morphism_name(f) + ":" + std::to_string(s_counts[f.value]);
      report("unequal-fiber-counts", "reduced source star at " + at + " is not e-to-one (" + detail + ")");
      continue;
    }
    profile.ramification[i] = e;
  }
  if (!issues.empty()) return {std::nullopt, std::move(issues)};

  std::vector<std::uint64_t> weighted(tgt.object_count(), 0);
  for (std::uint32_t i = 0; i < src.object_count(); ++i)
    weighted[p.map_object(ObjectIndex{i}).value] += profile.ramification[i];
  profile.degree = weighted.front();
  for (std::uint32_t x = 1; x < tgt.object_count(); ++x)
    if (weighted[x] != profile.degree)
      report("degree-inconsistent", "#R(" + tgt.object_name(ObjectIndex{x}) + ") = " + std::to_string(weighted[x]) +
                                        " but #R(" + tgt.object_name(ObjectIndex{0}) +
                                        ") = " + std::to_string(profile.degree));
  if (profile.degree == 0) report("degree-inconsistent", "degree is zero");
  if (!issues.empty()) return {std::nullopt, std::move(issues)};

  for (const auto e : profile.ramification) profile.total_ramification += e - 1;
  return {std::move(profile), {}};
}

std::vector<ObjectIndex> fiber(const CategoryFunctor& p, ObjectIndex x) {
  if (x.value >= p.target().object_count()) throw std::out_of_range("unknown object index " + std::to_string(x.value));
  std::vector<ObjectIndex> out;
  for (std::uint32_t i = 0; i < p.source().object_count(); ++i)
    if (p.map_object(ObjectIndex{i}) == x) out.push_back(ObjectIndex{i});
  return out;
}

std::vector<ObjectIndex> weighted_fiber(const CategoryFunctor& p, const RamificationProfile& profile,
                                        ObjectIndex x) {
  std::vector<ObjectIndex> out;
  for (const auto xt : fiber(p, x)) out.insert(out.end(), profile.ramification[xt.value], xt);
  return out;
}

namespace {

void extend_lift(const CategoryFunctor& p, const Chain& base, Chain& partial, std::vector<Chain>& out) {
  const std::size_t k = partial.arrows.size();
  if (k == base.arrows.size()) {
    out.push_back(partial);
    return;
  }
  const ObjectIndex at = k == 0 ? partial.start : p.source().target(partial.arrows.back());
  for (const auto g : p.lifts_at(at, base.arrows[k])) {
    partial.arrows.push_back(g);
    extend_lift(p, base, partial, out);
    partial.arrows.pop_back();
  }
}

}  // namespace

LiftSet lift_chains(const CategoryFunctor& p, const Chain& chain) {
  if (!is_valid_chain(p.target(), chain)) throw std::invalid_argument("not a chain of the target category");
  LiftSet set{chain, {}};
  for (const auto xt : fiber(p, chain.start)) {
    Chain partial{xt, {}};
    extend_lift(p, chain, partial, set.lifts);
  }
  std::sort(set.lifts.begin(), set.lifts.end(),
            [&](const Chain& a, const Chain& b) { return name_order_less(p.source(), a, b); });
  return set;
}

std::vector<Chain> weighted_lifts(const CategoryFunctor& p, const RamificationProfile& profile, const Chain& chain) {
  std::vector<Chain> out;
  if (is_identity_chain(p.target(), chain)) {
    for (const auto xt : fiber(p, chain.start)) {
      Chain lift{xt, std::vector<MorphismIndex>(chain.length(), p.source().identity(xt))};
      out.insert(out.end(), profile.ramification[xt.value], lift);
    }
  } else {
    out = lift_chains(p, chain).lifts;
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::string chain_list(const FiniteCategory& c, const std::vector<Chain>& chains) {
  std::string out = "{";
  for (std::size_t i = 0; i < chains.size(); ++i) out += (i ? " " : "") + format_chain(c, chains[i]);
  return out + "}";
}

void check_one_chain(const CategoryFunctor& p, const RamificationProfile& profile, const Chain& f,
                     std::vector<CompatibilityViolation>& out) {
  const auto& base = p.target();
  const auto& total = p.source();
  const auto lifts = lift_chains(p, f).lifts;

  for (const auto& lift : lifts) {
    bool maps = lift.arrows.size() == f.arrows.size() && p.map_object(lift.start) == f.start;
    for (std::size_t k = 0; maps && k < lift.arrows.size(); ++k) maps = p.map_morphism(lift.arrows[k]) == f.arrows[k];
    if (!maps)
      out.push_back({"lift-image", f, 0, {lift}, {}, "lift " + format_chain(total, lift) + " does not map onto " +
                                                         format_chain(base, f)});
  }

  const auto over = fiber(p, f.start);
  if (is_identity_chain(base, f)) {
    if (lifts.size() != over.size())
      out.push_back({"lift-count", f, 0, lifts, {}, "identity chain " + format_chain(base, f) + " has " +
                                                        std::to_string(lifts.size()) + " lifts, fiber has " +
                                                        std::to_string(over.size()) + " objects"});
  } else {
    if (lifts.size() != profile.degree)
      out.push_back({"lift-count", f, 0, lifts, {}, format_chain(base, f) + " has " + std::to_string(lifts.size()) +
                                                        " lifts, degree is " + std::to_string(profile.degree)});
    for (const auto xt : over) {
      const auto based = std::count_if(lifts.begin(), lifts.end(), [&](const Chain& c) { return c.start == xt; });
      if (static_cast<std::uint64_t>(based) != profile.ramification[xt.value])
        out.push_back({"lift-count", f, 0, lifts, {}, format_chain(base, f) + " has " + std::to_string(based) +
                                                          " lifts at '" + total.object_name(xt) + "', e = " +
                                                          std::to_string(profile.ramification[xt.value])});
    }
  }

  const auto upstairs = weighted_lifts(p, profile, f);
  const std::size_t n = f.length();
  auto compare = [&](const char* kind, std::size_t i, const Chain& image_downstairs, auto&& op) {
    std::vector<Chain> applied;
    for (const auto& lift : upstairs) applied.push_back(op(total, lift, i));
    std::sort(applied.begin(), applied.end());
    auto expected = weighted_lifts(p, profile, image_downstairs);
    if (applied != expected)
      out.push_back({kind, f, i, applied, expected,
                     std::string(kind) + " " + std::to_string(i) + " of " + format_chain(base, f) + ": " +
                         chain_list(total, applied) + " vs " + chain_list(total, expected)});
  };
  if (n > 0)
    for (std::size_t i = 0; i <= n; ++i)
      compare("face", i, face(base, f, i),
              [](const FiniteCategory& c, const Chain& ch, std::size_t j) { return face(c, ch, j); });
  for (std::size_t i = 0; i <= n; ++i)
    compare("degeneracy", i, degeneracy(base, f, i),
            [](const FiniteCategory& c, const Chain& ch, std::size_t j) { return degeneracy(c, ch, j); });
}

}  // namespace

CompatibilityReport check_simplicial_compatibility(const CategoryFunctor& p, const RamificationProfile& profile,
                                                   std::size_t n_max, Execution exec) {
  std::vector<Chain> chains;
  for (std::size_t n = 0; n <= n_max; ++n) {
    auto level = enumerate_chains(p.target(), n, false, std::nullopt, exec);
    std::move(level.begin(), level.end(), std::back_inserter(chains));
  }

  std::vector<std::vector<CompatibilityViolation>> per_chain(chains.size());
  const auto count = static_cast<std::ptrdiff_t>(chains.size());
  const bool parallel = exec == Execution::parallel;
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::ptrdiff_t i = 0; i < count; ++i) check_one_chain(p, profile, chains[i], per_chain[i]);

  CompatibilityReport report;
  report.chains_checked = chains.size();
  for (auto& v : per_chain) std::move(v.begin(), v.end(), std::back_inserter(report.violations));
  return report;
}

LemmaReport check_covering_lemmas(const CategoryFunctor& p, const RamificationProfile& profile) {
  LemmaReport report;
  const auto& src = p.source();
  for (std::uint32_t i = 0; i < src.morphism_count(); ++i) {
    const MorphismIndex f{i};
    if (src.is_identity(f) != p.target().is_identity(p.map_morphism(f))) {
      report.identity_reflection = false;
      report.witnesses.push_back({"identity-reflection", "'" + src.morphism_name(f) + "' maps to '" +
                                                             p.target().morphism_name(p.map_morphism(f)) + "'"});
    }
  }

  // reach[a][b]: a path of one or more non-identity morphisms from a to b.
  const std::size_t n = src.object_count();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::uint32_t i = n; i < src.morphism_count(); ++i)
    reach[src.source(MorphismIndex{i}).value][src.target(MorphismIndex{i}).value] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      if (reach[a][k])
        for (std::size_t b = 0; b < n; ++b)
          if (reach[k][b]) reach[a][b] = true;

  for (std::uint32_t x = 0; x < n; ++x) {
    const auto e = profile.ramification[x];
    if (reach[x][x] && e != 1) {
      report.cycle_lemma = false;
      report.witnesses.push_back({"cycle-lemma", "'" + src.object_name(ObjectIndex{x}) +
                                                     "' lies on a non-identity cycle but e = " + std::to_string(e)});
    }
  }
  for (std::uint32_t i = n; i < src.morphism_count(); ++i) {
    const auto y = src.target(MorphismIndex{i});
    const auto e = profile.ramification[y.value];
    if (e != 1) {
      report.target_lemma = false;
      report.witnesses.push_back({"target-lemma", "'" + src.object_name(y) + "' receives '" +
                                                      src.morphism_name(MorphismIndex{i}) + "' but e = " +
                                                      std::to_string(e)});
    }
  }
  return report;
}

}  // namespace ramcov
