#pragma once

#include <cstdint>
#include <string>

#include "arcdom/graph.hpp"

namespace arcdom {

// Named graph families. Labelings are fixed so examples are reproducible:
//   cycle:     0-1-...-(n-1)-0
//   friendship: center 0, k triangles (0, 2i+1, 2i+2)
//   corona:    leaf of base vertex x is |V(base)| + x
//   cone:      apex is the highest id
//   two_cliques: K_s on 0..s-1 and K_t on s-1..s+t-2, glued at s-1

Graph make_cycle(int n);               // n >= 3
Graph make_path(int n);                // n >= 1
Graph make_complete(int n);            // n >= 1
Graph make_complete_bipartite(int a, int b);
Graph make_friendship(int k);          // k >= 1 triangles sharing one vertex
Graph make_corona(const Graph& base);  // one pendant leaf per base vertex
Graph cone(const Graph& base);         // base plus a universal apex
Graph make_two_cliques(int s, int t);  // s,t >= 2
Graph make_petersen();

/// Line graph; vertices are the edges of g in lexicographic order.
Graph line_graph(const Graph& g);

/// Seeded G(n,p).
Graph random_graph(int n, double p, std::uint64_t seed);

/// Rejection-sampled connected graph with min degree >= floor; p is tuned to
/// the target mean degree and sampling is bounded at 10^4 retries.
Graph random_min_degree(int n, int degree_floor, std::uint64_t seed);

/// Parsed family request, e.g. "cycle:5", "friendship:3", "two-cliques:3,4",
/// "corona:cycle:4", "random-min-degree:8,2,99". Used by the CLI.
Graph generate(const std::string& family_spec);

}  // namespace arcdom
