#pragma once

#include <vector>

#include "arcdom/graph.hpp"

namespace arcdom {

/// All graphs on exactly n vertices, one per isomorphism class, in a
/// deterministic order. Practical for n <= 8.
std::vector<Graph> all_graphs_upto_iso(int n);

/// Connected graphs with min degree >= min_delta, orders 1..max_n, one per
/// isomorphism class.
std::vector<Graph> connected_min_degree_corpus(int max_n, int min_delta);

/// Graphs with exactly m edges and no isolated vertices, one per isomorphism
/// class, ordered by (order, degree sequence). Practical for m <= 8.
std::vector<Graph> graphs_with_edge_count(int m);

/// Membership test for the exceptional family: connected, min degree >= 2,
/// and domination number above 2n/5.
bool in_exceptional_family(const Graph& g);

/// The exceptional family reconstructed by exhaustive enumeration over all
/// connected graphs with min degree >= 2 and order <= limit. Requires
/// 7 <= limit <= 8.
std::vector<Graph> exceptional_family(int limit);

}  // namespace arcdom
