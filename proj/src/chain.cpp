#include "ramcov/chain.hpp"

#include <algorithm>

namespace ramcov {

bool is_valid_chain(const FiniteCategory& c, const Chain& chain) {
  if (chain.start.value >= c.object_count()) return false;
  ObjectIndex at = chain.start;
  for (const auto f : chain.arrows) {
    if (f.value >= c.morphism_count() || c.source(f) != at) return false;
    at = c.target(f);
  }
  return true;
}

ObjectIndex chain_end(const FiniteCategory& c, const Chain& chain) {
  return chain.arrows.empty() ? chain.start : c.target(chain.arrows.back());
}

bool is_identity_chain(const FiniteCategory& c, const Chain& chain) {
  return std::all_of(chain.arrows.begin(), chain.arrows.end(), [&](MorphismIndex f) { return c.is_identity(f); });
}

bool is_nondegenerate(const FiniteCategory& c, const Chain& chain) {
  return std::none_of(chain.arrows.begin(), chain.arrows.end(), [&](MorphismIndex f) { return c.is_identity(f); });
}

std::string format_chain(const FiniteCategory& c, const Chain& chain) {
  if (chain.arrows.empty()) return "(" + c.object_name(chain.start) + ")";
  std::string out = "(";
  for (std::size_t i = 0; i < chain.arrows.size(); ++i) {
    if (i) out += ",";
    out += c.morphism_name(chain.arrows[i]);
  }
  return out + ")";
}

bool name_order_less(const FiniteCategory& c, const Chain& a, const Chain& b) {
  const auto n = std::min(a.arrows.size(), b.arrows.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto ra = c.name_rank(a.arrows[i]);
    const auto rb = c.name_rank(b.arrows[i]);
    if (ra != rb) return ra < rb;
  }
  if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
  return a.start < b.start;
}

}  // namespace ramcov
