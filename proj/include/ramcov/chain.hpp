#pragma once

#include <compare>
#include <string>
#include <vector>

#include "ramcov/category.hpp"

namespace ramcov {

/// A composable string x0 -f1-> x1 -> ... -fn-> xn. A 0-chain is just `start`.
struct Chain {
  ObjectIndex start;
  std::vector<MorphismIndex> arrows;

  std::size_t length() const { return arrows.size(); }
  auto operator<=>(const Chain&) const = default;
};

bool is_valid_chain(const FiniteCategory& c, const Chain& chain);
ObjectIndex chain_end(const FiniteCategory& c, const Chain& chain);
/// True for 0-chains and for chains made only of identities.
bool is_identity_chain(const FiniteCategory& c, const Chain& chain);
/// No arrow is an identity (0-chains count as nondegenerate).
bool is_nondegenerate(const FiniteCategory& c, const Chain& chain);

/// "(f,g)" for positive length, "(x)" for a 0-chain.
std::string format_chain(const FiniteCategory& c, const Chain& chain);

/// Orders chains by start object (only matters for 0-chains) after the tuple
/// of morphism names; the order used by every enumeration.
bool name_order_less(const FiniteCategory& c, const Chain& a, const Chain& b);

}  // namespace ramcov
