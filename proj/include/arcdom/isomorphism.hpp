#pragma once

#include <optional>
#include <vector>

#include "arcdom/graph.hpp"

namespace arcdom {

/// Backtracking isomorphism search with neighbourhood-invariant pruning.
/// Deterministic: the returned bijection maps g-vertex i to map[i]. Orders
/// above the limit raise a resource-limit error.
std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h,
                                                 int order_limit = 24);

inline bool is_isomorphic(const Graph& g, const Graph& h, int order_limit = 24) {
  return find_isomorphism(g, h, order_limit).has_value();
}

}  // namespace arcdom
