#include "ramcov/category.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ramcov {

std::string identity_name(std::string_view object) {
  return std::string(identity_prefix) + std::string(object);
}

std::optional<ObjectIndex> FiniteCategory::find_object(std::string_view name) const {
  const auto it = object_lookup_.find(std::string(name));
  if (it == object_lookup_.end()) return std::nullopt;
  return ObjectIndex{it->second};
}

std::optional<MorphismIndex> FiniteCategory::find_morphism(std::string_view name) const {
  const auto it = morphism_lookup_.find(std::string(name));
  if (it == morphism_lookup_.end()) return std::nullopt;
  return MorphismIndex{it->second};
}

ObjectIndex FiniteCategory::object(std::string_view name) const {
  if (auto x = find_object(name)) return *x;
  throw std::out_of_range("unknown object '" + std::string(name) + "'");
}

MorphismIndex FiniteCategory::morphism_named(std::string_view name) const {
  if (auto f = find_morphism(name)) return *f;
  throw std::out_of_range("unknown morphism '" + std::string(name) + "'");
}

std::optional<MorphismIndex> FiniteCategory::compose(MorphismIndex first, MorphismIndex second) const {
  const auto r = table_.get(first.value, second.value);
  if (r == kernels::CompositionTable::undefined) return std::nullopt;
  return MorphismIndex{static_cast<std::uint32_t>(r)};
}

MorphismStar FiniteCategory::source_star(ObjectIndex x) const {
  MorphismStar star{x, StarKind::source, outgoing_by_name_[x.value]};
  std::sort(star.members.begin(), star.members.end());
  return star;
}

MorphismStar FiniteCategory::target_star(ObjectIndex x) const {
  return MorphismStar{x, StarKind::target, incoming_[x.value]};
}

std::vector<MorphismIndex> FiniteCategory::reduced_source_star(ObjectIndex x) const {
  std::vector<MorphismIndex> out;
  for (const auto f : outgoing_by_name_[x.value])
    if (!is_identity(f)) out.push_back(f);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MorphismIndex> FiniteCategory::hom(ObjectIndex x, ObjectIndex y) const {
  std::vector<MorphismIndex> out;
  for (const auto f : incoming_[y.value])
    if (source(f) == x) out.push_back(f);
  return out;
}

CategoryData FiniteCategory::to_data() const {
  CategoryData data;
  data.objects = objects_;
  for (std::size_t i = objects_.size(); i < morphisms_.size(); ++i) {
    const auto& m = morphisms_[i];
    data.morphisms.push_back({m.name, objects_[m.source.value], objects_[m.target.value]});
  }
  for (std::size_t f = objects_.size(); f < morphisms_.size(); ++f)
    for (std::size_t g = objects_.size(); g < morphisms_.size(); ++g) {
      const auto r = table_.get(f, g);
      if (r == kernels::CompositionTable::undefined) continue;
      data.composition.push_back({morphisms_[f].name, morphisms_[g].name, morphisms_[r].name});
    }
  return data;
}

namespace {

std::string pair_text(std::string_view f, std::string_view g) {
  return "(" + std::string(f) + "," + std::string(g) + ")";
}

}  // namespace

Validated<FiniteCategory> validate_category(const CategoryData& raw, Execution exec) {
  std::vector<Diagnostic> issues;
  auto report = [&](std::string code, std::string message) {
    issues.push_back({std::move(code), std::move(message)});
  };

  FiniteCategory c;

  for (const auto& name : raw.objects) {
    if (name.empty()) {
      report("empty-id", "object with empty id");
      continue;
    }
    if (c.object_lookup_.count(name)) {
      report("duplicate-object", "duplicate object id '" + name + "'");
      continue;
    }
    c.object_lookup_.emplace(name, static_cast<std::uint32_t>(c.objects_.size()));
    c.objects_.push_back(name);
  }

  for (std::uint32_t i = 0; i < c.objects_.size(); ++i) {
    c.morphisms_.push_back({identity_name(c.objects_[i]), ObjectIndex{i}, ObjectIndex{i}, true});
    c.morphism_lookup_.emplace(c.morphisms_.back().name, i);
  }

  for (const auto& m : raw.morphisms) {
    if (m.id.empty()) {
      report("empty-id", "morphism with empty id");
      continue;
    }
    if (m.id.starts_with(identity_prefix)) {
      report("reserved-id", "morphism id '" + m.id + "' uses the reserved identity prefix");
      continue;
    }
    if (c.morphism_lookup_.count(m.id)) {
      report("duplicate-morphism", "duplicate morphism id '" + m.id + "'");
      continue;
    }
    const auto src = c.object_lookup_.find(m.src);
    const auto tgt = c.object_lookup_.find(m.tgt);
    bool dangling = false;
    if (src == c.object_lookup_.end()) {
      report("dangling-object", "morphism '" + m.id + "' has unknown source '" + m.src + "'");
      dangling = true;
    }
    if (tgt == c.object_lookup_.end()) {
      report("dangling-object", "morphism '" + m.id + "' has unknown target '" + m.tgt + "'");
      dangling = true;
    }
    if (dangling) continue;
    c.morphism_lookup_.emplace(m.id, static_cast<std::uint32_t>(c.morphisms_.size()));
    c.morphisms_.push_back({m.id, ObjectIndex{src->second}, ObjectIndex{tgt->second}, false});
  }

  const std::size_t count = c.morphisms_.size();
  c.table_ = kernels::CompositionTable(count);
  for (std::size_t f = 0; f < count; ++f) {
    const auto& info = c.morphisms_[f];
    c.table_.set(info.source.value, f, static_cast<std::int32_t>(f));
    c.table_.set(f, info.target.value, static_cast<std::int32_t>(f));
  }

  auto lookup = [&](const std::string& name, const CategoryData::Composite& entry) -> std::optional<std::uint32_t> {
    const auto it = c.morphism_lookup_.find(name);
    if (it != c.morphism_lookup_.end()) return it->second;
    report("unknown-morphism", "composite entry " + pair_text(entry.first, entry.second) + " -> " + entry.result +
                                   " references unknown morphism '" + name + "'");
    return std::nullopt;
  };

  for (const auto& entry : raw.composition) {
    const auto f = lookup(entry.first, entry);
    const auto g = lookup(entry.second, entry);
    const auto r = lookup(entry.result, entry);
    if (!f || !g || !r) continue;
    const auto& fi = c.morphisms_[*f];
    const auto& gi = c.morphisms_[*g];
    const auto& ri = c.morphisms_[*r];
    const std::string pair = pair_text(entry.first, entry.second);
    if (fi.target != gi.source) {
      report("not-composable", "composite listed for non-composable pair " + pair);
      continue;
    }
    if (ri.source != fi.source || ri.target != gi.target) {
      report("composite-endpoints", "composite " + pair + " -> " + entry.result + " has source/target " +
                                        c.objects_[ri.source.value] + "->" + c.objects_[ri.target.value] +
                                        ", expected " + c.objects_[fi.source.value] + "->" +
                                        c.objects_[gi.target.value]);
      continue;
    }
    if (fi.identity || gi.identity) {
      const std::uint32_t implied = fi.identity ? *g : *f;
      if (implied != *r)
        report("unit-law", "composite " + pair + " -> " + entry.result + " contradicts the unit law (expected " +
                               c.morphisms_[implied].name + ")");
      continue;
    }
    const auto existing = c.table_.get(*f, *g);
    if (existing != kernels::CompositionTable::undefined && existing != static_cast<std::int32_t>(*r)) {
      report("conflicting-composite", "composite " + pair + " listed as both " + c.morphisms_[existing].name +
                                          " and " + entry.result);
      continue;
    }
    c.table_.set(*f, *g, static_cast<std::int32_t>(*r));
  }

  std::vector<std::int32_t> non_identities;
  for (std::size_t f = c.objects_.size(); f < count; ++f) non_identities.push_back(static_cast<std::int32_t>(f));

  for (const auto f : non_identities)
    for (const auto g : non_identities) {
      if (c.morphisms_[f].target != c.morphisms_[g].source) continue;
      if (c.table_.get(f, g) == kernels::CompositionTable::undefined)
        report("missing-composite",
               "missing composite " + pair_text(c.morphisms_[f].name, c.morphisms_[g].name));
    }

  for (const auto& t : kernels::associativity_failures(c.table_, non_identities, exec)) {
    const auto& n = c.morphisms_;
    const auto left = c.table_.get(c.table_.get(t.f, t.g), t.h);
    const auto right = c.table_.get(t.f, c.table_.get(t.g, t.h));
    report("associativity", "associativity fails for (" + n[t.f].name + "," + n[t.g].name + "," + n[t.h].name +
                                "): " + n[left].name + " vs " + n[right].name);
  }

  if (!issues.empty()) return {std::nullopt, std::move(issues)};

  c.outgoing_by_name_.assign(c.objects_.size(), {});
  c.incoming_.assign(c.objects_.size(), {});
  c.by_name_.resize(count);
  for (std::uint32_t f = 0; f < count; ++f) c.by_name_[f] = MorphismIndex{f};
  std::sort(c.by_name_.begin(), c.by_name_.end(),
            [&](MorphismIndex a, MorphismIndex b) { return c.morphisms_[a.value].name < c.morphisms_[b.value].name; });
  c.name_rank_.resize(count);
  for (std::uint32_t rank = 0; rank < count; ++rank) c.name_rank_[c.by_name_[rank].value] = rank;
  for (const auto f : c.by_name_) c.outgoing_by_name_[c.source(f).value].push_back(f);
  for (std::uint32_t f = 0; f < count; ++f) c.incoming_[c.morphisms_[f].target.value].push_back(MorphismIndex{f});

  return {std::move(c), {}};
}

bool is_connected(const FiniteCategory& c) {
  const std::size_t n = c.object_count();
  if (n == 0) return false;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  for (std::uint32_t f = 0; f < c.morphism_count(); ++f) {
    const auto a = find(c.source(MorphismIndex{f}).value);
    const auto b = find(c.target(MorphismIndex{f}).value);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

std::vector<ObjectIndex> preinitial_objects(const FiniteCategory& c) {
  std::vector<ObjectIndex> out;
  for (std::uint32_t x = 0; x < c.object_count(); ++x)
    if (c.target_star(ObjectIndex{x}).members.size() == 1) out.push_back(ObjectIndex{x});
  return out;
}

Matrix<Integer> adjacency_matrix(const FiniteCategory& c) {
  const std::size_t n = c.object_count();
  Matrix<Integer> a(n, n, Integer(0));
  for (std::uint32_t f = 0; f < c.morphism_count(); ++f) {
    const MorphismIndex m{f};
    a(c.source(m).value, c.target(m).value) += 1;
  }
  return a;
}

}  // namespace ramcov
