#include "ramcov/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <random>

namespace ramcov {

namespace {

std::string join(const std::vector<Diagnostic>& diagnostics) {
  std::string out;
  for (const auto& d : diagnostics) out += (out.empty() ? "" : "; ") + d.message;
  return out;
}

}  // namespace

CategoryPtr make_category(const CategoryData& data) {
  auto validated = validate_category(data);
  if (!validated.ok()) throw ConstructionError("invalid category: " + join(validated.diagnostics));
  return std::make_shared<const FiniteCategory>(std::move(*validated.value));
}

CategoryFunctor make_functor(const FunctorData& data, CategoryPtr source, CategoryPtr target) {
  auto validated = validate_functor(data, std::move(source), std::move(target));
  if (!validated.ok()) throw ConstructionError("invalid functor: " + join(validated.diagnostics));
  return std::move(*validated.value);
}

// ---------------------------------------------------------------------------
// Wedge products

Wedge wedge(const WedgeSpec& spec) {
  if (spec.parts.empty()) throw ConstructionError("wedge of zero parts");
  for (std::size_t i = 0; i < spec.parts.size(); ++i) {
    const auto& part = spec.parts[i];
    if (!part.category) throw ConstructionError("wedge part " + std::to_string(i) + " has no category");
    if (part.basepoint.value >= part.category->object_count())
      throw ConstructionError("wedge part " + std::to_string(i) + ": basepoint out of range");
    if (part.category->target_star(part.basepoint).members.size() != 1)
      throw ConstructionError("wedge part " + std::to_string(i) + ": object '" +
                              part.category->object_name(part.basepoint) + "' is not preinitial");
  }

  auto object_name = [&](std::size_t i, ObjectIndex x) {
    const auto& part = spec.parts[i];
    if (x == part.basepoint) return std::string(wedge_basepoint_name);
    return "p" + std::to_string(i) + ":" + part.category->object_name(x);
  };
  auto morphism_name = [&](std::size_t i, MorphismIndex f) {
    const auto& c = *spec.parts[i].category;
    if (c.is_identity(f)) return identity_name(object_name(i, c.source(f)));
    return "p" + std::to_string(i) + ":" + c.morphism_name(f);
  };

  CategoryData data;
  data.objects.emplace_back(wedge_basepoint_name);
  for (std::size_t i = 0; i < spec.parts.size(); ++i) {
    const auto& c = *spec.parts[i].category;
    for (std::uint32_t x = 0; x < c.object_count(); ++x)
      if (ObjectIndex{x} != spec.parts[i].basepoint) data.objects.push_back(object_name(i, ObjectIndex{x}));
  }
  for (std::size_t i = 0; i < spec.parts.size(); ++i) {
    const auto& c = *spec.parts[i].category;
    for (std::uint32_t f = c.object_count(); f < c.morphism_count(); ++f) {
      const MorphismIndex m{f};
      data.morphisms.push_back({morphism_name(i, m), object_name(i, c.source(m)), object_name(i, c.target(m))});
    }
    for (std::uint32_t f = c.object_count(); f < c.morphism_count(); ++f)
      for (std::uint32_t g = c.object_count(); g < c.morphism_count(); ++g)
        if (const auto r = c.compose(MorphismIndex{f}, MorphismIndex{g}))
          data.composition.push_back(
              {morphism_name(i, MorphismIndex{f}), morphism_name(i, MorphismIndex{g}), morphism_name(i, *r)});
  }

  Wedge out{make_category(data), {}};
  for (std::size_t i = 0; i < spec.parts.size(); ++i) {
    const auto& c = *spec.parts[i].category;
    FunctorData inclusion;
    for (std::uint32_t x = 0; x < c.object_count(); ++x)
      inclusion.object_map[c.object_name(ObjectIndex{x})] = object_name(i, ObjectIndex{x});
    for (std::uint32_t f = c.object_count(); f < c.morphism_count(); ++f)
      inclusion.morphism_map[c.morphism_name(MorphismIndex{f})] = morphism_name(i, MorphismIndex{f});
    out.inclusions.push_back(make_functor(inclusion, spec.parts[i].category, out.category));
  }
  return out;
}

CategoryFunctor wedge_covering(const std::vector<CategoryFunctor>& coverings,
                               const std::vector<ObjectIndex>& basepoints) {
  if (coverings.empty()) throw ConstructionError("wedge covering of zero parts");
  if (coverings.size() != basepoints.size()) throw ConstructionError("one basepoint per covering is required");
  const CategoryPtr base = coverings.front().target_ptr();
  const CategoryData base_data = base->to_data();
  const ObjectIndex image = coverings.front().map_object(basepoints.front());

  WedgeSpec spec;
  std::uint64_t expected_degree = 0;
  for (std::size_t i = 0; i < coverings.size(); ++i) {
    const auto& p = coverings[i];
    const std::string label = "part " + std::to_string(i);
    if (p.target_ptr() != base && p.target().to_data() != base_data)
      throw ConstructionError(label + " covers a different category");
    const auto unramified = check_unramified_covering(p);
    if (!unramified.holds)
      throw ConstructionError(label + " is not an unramified covering: " + join(unramified.diagnostics));
    if (basepoints[i].value >= p.source().object_count())
      throw ConstructionError(label + ": basepoint out of range");
    if (p.map_object(basepoints[i]) != image) throw ConstructionError(label + ": basepoint images differ");
    const auto profile = check_ramified_covering(p);
    if (!profile.ok()) throw ConstructionError(label + ": " + join(profile.diagnostics));
    expected_degree += profile->degree;
    spec.parts.push_back({p.source_ptr(), basepoints[i]});
  }

  const Wedge w = wedge(spec);
  FunctorData data;
  for (std::size_t i = 0; i < coverings.size(); ++i) {
    const auto& p = coverings[i];
    const auto& inclusion = w.inclusions[i];
    for (std::uint32_t x = 0; x < p.source().object_count(); ++x)
      data.object_map[w.category->object_name(inclusion.map_object(ObjectIndex{x}))] =
          base->object_name(p.map_object(ObjectIndex{x}));
    for (std::uint32_t f = p.source().object_count(); f < p.source().morphism_count(); ++f)
      data.morphism_map[w.category->morphism_name(inclusion.map_morphism(MorphismIndex{f}))] =
          base->morphism_name(p.map_morphism(MorphismIndex{f}));
  }
  CategoryFunctor result = make_functor(data, w.category, base);
  const auto profile = check_ramified_covering(result);
  if (!profile.ok()) throw ConstructionError("wedge is not a ramified covering: " + join(profile.diagnostics));
  if (profile->degree != expected_degree)
    throw ConstructionError("wedge has degree " + std::to_string(profile->degree) + ", expected " +
                            std::to_string(expected_degree));
  return result;
}

// ---------------------------------------------------------------------------
// Named examples

namespace {

CategoryData terminal_data() { return {{"pt"}, {}, {}}; }

CategoryData arrow_data() { return {{"x", "y"}, {{"f", "x", "y"}}, {}}; }

CategoryData wedge2_data() { return {{"x", "y1", "y2"}, {{"f1", "x", "y1"}, {"f2", "x", "y2"}}, {}}; }

CategoryData diamond_data() {
  return {{"x", "y", "z", "w"}, {{"xz", "x", "z"}, {"xw", "x", "w"}, {"yz", "y", "z"}, {"yw", "y", "w"}}, {}};
}

// Four-sheeted cover of the diamond: each of x1, x2, y1, y3 reaches two z's and
// two w's, and each z/w receives one arrow from an x and one from a y.
const std::vector<std::pair<std::string, std::vector<std::string>>>& diamond_cover_arrows() {
  static const std::vector<std::pair<std::string, std::vector<std::string>>> arrows = {
      {"x1", {"z1", "z4", "w1", "w4"}},
      {"x2", {"z2", "z3", "w2", "w3"}},
      {"y1", {"z1", "z2", "w1", "w2"}},
      {"y3", {"z3", "z4", "w3", "w4"}},
  };
  return arrows;
}

CategoryData diamond_cover4_data() {
  CategoryData data;
  data.objects = {"x1", "x2", "y1", "y3", "z1", "z2", "z3", "z4", "w1", "w2", "w3", "w4"};
  for (const auto& [from, targets] : diamond_cover_arrows())
    for (const auto& to : targets) data.morphisms.push_back({from + to, from, to});
  return data;
}

// Drops the trailing sheet digits: "x1" -> "x", "y3w4" -> "yw".
std::string strip_indices(const std::string& name) {
  std::string out;
  for (const char ch : name)
    if (ch < '0' || ch > '9') out += ch;
  return out;
}

FunctorData strip_functor(const CategoryData& total) {
  FunctorData data;
  for (const auto& x : total.objects) data.object_map[x] = strip_indices(x);
  for (const auto& m : total.morphisms) data.morphism_map[m.id] = strip_indices(m.id);
  return data;
}

}  // namespace

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {"terminal", "arrow",     "wedge2",    "diamond",
                                                 "diamond-cover4", "P-wedge2", "P-diamond4"};
  return names;
}

Example builtin_example(const std::string& name) {
  if (name == "terminal") return make_category(terminal_data());
  if (name == "arrow") return make_category(arrow_data());
  if (name == "wedge2") return make_category(wedge2_data());
  if (name == "diamond") return make_category(diamond_data());
  if (name == "diamond-cover4") return make_category(diamond_cover4_data());
  if (name == "P-wedge2") {
    const auto total = wedge2_data();
    return make_functor(strip_functor(total), make_category(total), make_category(arrow_data()));
  }
  if (name == "P-diamond4") {
    const auto total = diamond_cover4_data();
    return make_functor(strip_functor(total), make_category(total), make_category(diamond_data()));
  }
  throw std::out_of_range("unknown builtin example '" + name + "'");
}

CategoryPtr builtin_category(const std::string& name) {
  auto example = builtin_example(name);
  if (auto* c = std::get_if<CategoryPtr>(&example)) return *c;
  throw std::out_of_range("builtin '" + name + "' is a functor, not a category");
}

CategoryFunctor builtin_functor(const std::string& name) {
  auto example = builtin_example(name);
  if (auto* p = std::get_if<CategoryFunctor>(&example)) return std::move(*p);
  throw std::out_of_range("builtin '" + name + "' is a category, not a functor");
}

// ---------------------------------------------------------------------------
// Random generation

namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
  bool chance(std::size_t numerator, std::size_t denominator) { return below(denominator) < numerator; }

 private:
  std::mt19937_64 engine_;
};

struct Graph {
  struct Edge {
    std::string name;
    std::size_t from, to;
  };
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
};

std::string vertex_name(std::size_t v) { return "o" + std::to_string(v); }

// Connected DAG: a random spanning tree plus extra edges, all oriented by a
// random ranking of the vertices.
Graph random_dag(Rng& rng, std::size_t n, std::size_t extra_edges, bool allow_parallel) {
  std::vector<std::size_t> rank(n);
  std::iota(rank.begin(), rank.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i) std::swap(rank[i - 1], rank[rng.below(i)]);

  Graph g;
  for (std::size_t v = 0; v < n; ++v) g.vertices.push_back(vertex_name(v));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  auto add = [&](std::size_t a, std::size_t b) {
    if (rank[a] > rank[b]) std::swap(a, b);
    if (!allow_parallel && std::find(pairs.begin(), pairs.end(), std::pair{a, b}) != pairs.end()) return;
    pairs.emplace_back(a, b);
  };
  for (std::size_t v = 1; v < n; ++v) add(rng.below(v), v);
  for (std::size_t k = 0; k < extra_edges && n > 1; ++k) {
    const std::size_t a = rng.below(n);
    std::size_t b = rng.below(n - 1);
    if (b >= a) ++b;
    add(a, b);
  }
  for (std::size_t e = 0; e < pairs.size(); ++e)
    g.edges.push_back({"a" + std::to_string(e), pairs[e].first, pairs[e].second});
  return g;
}

struct FreeCategory {
  CategoryData data;
  std::vector<std::vector<std::size_t>> paths;  // edge indices, aligned with data.morphisms
};

std::string path_name(const Graph& g, const std::vector<std::size_t>& path) {
  std::string out;
  for (const auto e : path) out += (out.empty() ? "" : ".") + g.edges[e].name;
  return out;
}

// Free category on an acyclic graph: morphisms are the nonempty paths.
std::optional<FreeCategory> free_category(const Graph& g, std::size_t limit) {
  FreeCategory fc;
  fc.data.objects = g.vertices;
  std::vector<std::vector<std::size_t>> out_edges(g.vertices.size());
  for (std::size_t e = 0; e < g.edges.size(); ++e) out_edges[g.edges[e].from].push_back(e);

  std::vector<std::size_t> path;
  bool overflow = false;
  auto walk = [&](auto&& self, std::size_t at) -> void {
    for (const auto e : out_edges[at]) {
      if (overflow) return;
      path.push_back(e);
      fc.paths.push_back(path);
      if (fc.paths.size() > limit) overflow = true;
      self(self, g.edges[e].to);
      path.pop_back();
    }
  };
  for (std::size_t v = 0; v < g.vertices.size() && !overflow; ++v) walk(walk, v);
  if (overflow) return std::nullopt;

  std::map<std::vector<std::size_t>, std::string> names;
  for (const auto& p : fc.paths) {
    names[p] = path_name(g, p);
    fc.data.morphisms.push_back({names[p], g.vertices[g.edges[p.front()].from], g.vertices[g.edges[p.back()].to]});
  }
  for (const auto& p : fc.paths)
    for (const auto& q : fc.paths) {
      if (g.edges[p.back()].to != g.edges[q.front()].from) continue;
      auto pq = p;
      pq.insert(pq.end(), q.begin(), q.end());
      fc.data.composition.push_back({names[p], names[q], names.at(pq)});
    }
  return fc;
}

// Transitive closure of a DAG as a poset category.
std::optional<CategoryData> poset_category(const Graph& g, std::size_t limit) {
  const std::size_t n = g.vertices.size();
  std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
  for (const auto& e : g.edges) below[e.from][e.to] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      if (below[a][k])
        for (std::size_t b = 0; b < n; ++b)
          if (below[k][b]) below[a][b] = true;

  auto name = [](std::size_t a, std::size_t b) { return "r" + std::to_string(a) + "_" + std::to_string(b); };
  CategoryData data;
  data.objects = g.vertices;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (below[a][b]) data.morphisms.push_back({name(a, b), g.vertices[a], g.vertices[b]});
  if (data.morphisms.size() > limit) return std::nullopt;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (below[a][b] && below[b][c]) data.composition.push_back({name(a, b), name(b, c), name(a, c)});
  return data;
}

// C x M for the cyclic monoid M = <a | a^(index+period) = a^index>.
CategoryData product_with_cyclic_monoid(const FiniteCategory& c, std::size_t index, std::size_t period) {
  const std::size_t size = index + period;
  auto multiply = [&](std::size_t j, std::size_t k) {
    const std::size_t s = j + k;
    return s < size ? s : index + (s - index) % period;
  };
  auto name = [&](MorphismIndex f, std::size_t k) {
    if (c.is_identity(f)) {
      const auto& x = c.object_name(c.source(f));
      return k == 0 ? identity_name(x) : "e_" + x + "@" + std::to_string(k);
    }
    return k == 0 ? c.morphism_name(f) : c.morphism_name(f) + "@" + std::to_string(k);
  };

  CategoryData data;
  for (std::uint32_t x = 0; x < c.object_count(); ++x) data.objects.push_back(c.object_name(ObjectIndex{x}));
  for (std::uint32_t f = 0; f < c.morphism_count(); ++f)
    for (std::size_t k = 0; k < size; ++k) {
      const MorphismIndex m{f};
      if (c.is_identity(m) && k == 0) continue;
      data.morphisms.push_back({name(m, k), c.object_name(c.source(m)), c.object_name(c.target(m))});
    }
  for (std::uint32_t f = 0; f < c.morphism_count(); ++f)
    for (std::uint32_t g = 0; g < c.morphism_count(); ++g) {
      const auto fg = c.compose(MorphismIndex{f}, MorphismIndex{g});
      if (!fg) continue;
      for (std::size_t j = 0; j < size; ++j)
        for (std::size_t k = 0; k < size; ++k) {
          if ((c.is_identity(MorphismIndex{f}) && j == 0) || (c.is_identity(MorphismIndex{g}) && k == 0)) continue;
          data.composition.push_back(
              {name(MorphismIndex{f}, j), name(MorphismIndex{g}, k), name(*fg, multiply(j, k))});
        }
    }
  return data;
}

struct Cover {
  CategoryData total;
  FunctorData projection;
};

std::string sheet(const std::string& name, std::size_t s) { return name + "#" + std::to_string(s); }

// `sheets` disjoint copies; the identity of x#s is id:x#s, which is sheet(id:x, s).
Cover disjoint_copies(const CategoryData& base, std::size_t sheets) {
  Cover cover;
  for (std::size_t s = 0; s < sheets; ++s) {
    for (const auto& x : base.objects) {
      cover.total.objects.push_back(sheet(x, s));
      cover.projection.object_map[sheet(x, s)] = x;
    }
    for (const auto& m : base.morphisms) {
      cover.total.morphisms.push_back({sheet(m.id, s), sheet(m.src, s), sheet(m.tgt, s)});
      cover.projection.morphism_map[sheet(m.id, s)] = m.id;
    }
    for (const auto& c : base.composition)
      cover.total.composition.push_back({sheet(c.first, s), sheet(c.second, s), sheet(c.result, s)});
  }
  return cover;
}

// Free category on a permutation-voltage cover of the graph.
Cover voltage_cover(Rng& rng, const Graph& base, std::size_t sheets) {
  Graph total;
  for (std::size_t s = 0; s < sheets; ++s)
    for (const auto& v : base.vertices) total.vertices.push_back(sheet(v, s));
  std::vector<std::size_t> base_edge;
  for (std::size_t e = 0; e < base.edges.size(); ++e) {
    std::vector<std::size_t> perm(sheets);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    for (std::size_t i = sheets; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
    for (std::size_t s = 0; s < sheets; ++s) {
      const auto& edge = base.edges[e];
      total.edges.push_back({sheet(edge.name, s), s * base.vertices.size() + edge.from,
                             perm[s] * base.vertices.size() + edge.to});
      base_edge.push_back(e);
    }
  }
  auto fc = free_category(total, std::numeric_limits<std::size_t>::max());
  Cover cover;
  cover.total = std::move(fc->data);
  for (std::size_t s = 0; s < sheets; ++s)
    for (std::size_t v = 0; v < base.vertices.size(); ++v)
      cover.projection.object_map[total.vertices[s * base.vertices.size() + v]] = base.vertices[v];
  for (std::size_t i = 0; i < fc->paths.size(); ++i) {
    std::vector<std::size_t> downstairs;
    for (const auto e : fc->paths[i]) downstairs.push_back(base_edge[e]);
    cover.projection.morphism_map[cover.total.morphisms[i].id] = path_name(base, downstairs);
  }
  return cover;
}

void check_bounds(const RandomBounds& bounds) {
  if (bounds.max_objects < 1 || bounds.max_objects > 12)
    throw ConstructionError("random_covering: max_objects must be in 1..12");
  if (bounds.max_morphisms > 24) throw ConstructionError("random_covering: max_morphisms must be at most 24");
  if (bounds.max_sheets < 1 || bounds.max_parts < 1 || bounds.max_attempts < 1)
    throw ConstructionError("random_covering: sheets, parts and attempts must be positive");
}

}  // namespace

CategoryPtr random_category(std::uint64_t seed, std::size_t max_objects) {
  if (max_objects < 1) throw ConstructionError("random_category: max_objects must be positive");
  Rng rng(seed);
  for (std::size_t attempt = 0; attempt < 64; ++attempt) {
    const std::size_t n = rng.between(1, max_objects);
    const std::size_t flavor = rng.below(3);
    const Graph g = random_dag(rng, n, rng.between(0, n), flavor == 0);
    std::optional<CategoryData> data;
    if (flavor == 0) {
      if (auto fc = free_category(g, 24)) data = std::move(fc->data);
    } else {
      data = poset_category(g, 24);
    }
    if (!data) continue;
    if (flavor == 2) {
      static constexpr std::pair<std::size_t, std::size_t> monoids[] = {{0, 2}, {1, 1}, {0, 3}, {1, 2}, {2, 1}};
      const auto [index, period] = monoids[rng.below(std::size(monoids))];
      return make_category(product_with_cyclic_monoid(*make_category(*data), index, period));
    }
    return make_category(*data);
  }
  throw ConstructionError("random_category: attempt budget exhausted");
}

CategoryFunctor random_covering(std::uint64_t seed, const RandomBounds& bounds) {
  check_bounds(bounds);
  Rng rng(seed);
  for (std::size_t attempt = 0; attempt < bounds.max_attempts; ++attempt) {
    const std::size_t n = rng.between(1, bounds.max_objects);
    const bool free = rng.chance(1, 2);
    const Graph g = random_dag(rng, n, rng.between(0, n), free);

    std::optional<CategoryData> base_data;
    if (free) {
      if (auto fc = free_category(g, bounds.max_morphisms)) base_data = std::move(fc->data);
    } else {
      base_data = poset_category(g, bounds.max_morphisms);
    }
    if (!base_data) continue;
    const CategoryPtr base = make_category(*base_data);

    const auto starts = preinitial_objects(*base);
    const ObjectIndex x = starts[rng.below(starts.size())];
    const std::size_t parts = rng.between(1, bounds.max_parts);

    std::vector<CategoryFunctor> coverings;
    std::vector<ObjectIndex> basepoints;
    for (std::size_t i = 0; i < parts; ++i) {
      const std::size_t sheets = rng.between(1, bounds.max_sheets);
      Cover cover = free && rng.chance(2, 3) ? voltage_cover(rng, g, sheets) : disjoint_copies(*base_data, sheets);
      const CategoryPtr total = make_category(cover.total);
      basepoints.push_back(total->object(sheet(base->object_name(x), rng.below(sheets))));
      coverings.push_back(make_functor(cover.projection, total, base));
    }
    try {
      CategoryFunctor p = wedge_covering(coverings, basepoints);
      if (check_ramified_covering(p).ok()) return p;
    } catch (const ConstructionError&) {
      continue;
    }
  }
  throw ConstructionError("random_covering: attempt budget exhausted");
}

}  // namespace ramcov
