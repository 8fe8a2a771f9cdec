#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arcdom/domination.hpp"
#include "arcdom/graph.hpp"
#include "arcdom/rational.hpp"
#include "arcdom/threearc.hpp"

namespace arcdom {

/// Split of V(G) around a dominating set S: W holds the vertices outside S
/// with exactly one S-neighbour, U the rest (each has at least two).
struct SwuPartition {
  VertexSet s, w, u;
};

SwuPartition partition_swu(const Graph& g, const VertexSet& s);

/// For each seed x, a triple {xx1, xx2, x2x3} with x1 < x2 the two lowest
/// neighbours of x and x3 the lowest neighbour of x2 outside {x, x1} (falling
/// back to x1 when x2 has no other neighbour). Requires min degree >= 2.
struct ArcSelection {
  std::vector<Arc> arcs;                    // sorted union
  std::map<int, std::vector<Arc>> per_seed; // seed vertex -> its chosen arcs
};

ArcSelection build_AS(const Graph& g, const VertexSet& s);

/// Exact minimum (G-S : W)-dominating set D, one arc y -> y' per member with
/// y' its lowest neighbour inside S.
struct ArcTargetCover {
  std::vector<Arc> arcs;  // AD, sorted
  VertexSet dominators;   // D, source ids
};

ArcTargetCover build_AD(const Graph& g, const SwuPartition& part);

/// A constructed dominating set of the 3-arc graph, with the artifacts that
/// produced it and the bound it is measured against.
struct ArcDominationPlan {
  VertexSet gamma_set;
  SwuPartition partition;
  std::vector<Arc> arc_cover_s;  // AS after any repair
  std::vector<Arc> arc_cover_d;  // AD after any repair
  VertexSet d_set;
  std::string repair_case;  // none | size1 | case1 | case2-deg3 | case2-deg2 | case3
  std::vector<Arc> result_arcs;
  Rational bound;
  bool verified = false;

  int size() const { return static_cast<int>(result_arcs.size()); }
};

struct ArcDominationCheck {
  bool dominating = false;
  Arc uncovered;  // label of a witness vertex when not dominating
};

/// Does the arc set dominate the labeled arc graph?
ArcDominationCheck arcs_dominate(const LabeledGraph& x, const std::vector<Arc>& arcs);

/// 3*gamma(G) + min over enumerated gamma-sets S of gamma(G-S : V_{d-1}(G-S))
/// minus one, d the min degree of G (>= 2 required).
struct GeneralBound {
  int value = 0;
  VertexSet best_set;
  bool truncated = false;
};

GeneralBound general_bound(const Graph& g, int gamma_set_cap = 10000);

/// Dominating set of the 3-arc graph of size within general_bound: builds
/// AS and AD for the bound-minimizing gamma-set, then either uses their
/// overlap or applies one rewiring case to save an arc. Verified before
/// returning.
ArcDominationPlan general_construct(const Graph& g, int gamma_set_cap = 10000);

/// Same construction pinned to one dominating gamma-set.
ArcDominationPlan general_construct_for(const Graph& g, const VertexSet& s);

/// Augmentation artifact of the restricted-domination covers: the solved
/// graph J, its mapping back to source ids (-1 for gadget vertices), and
/// what was added.
struct AuxiliaryJ {
  Graph j;
  std::vector<int> to_source;
  EdgeList added_edges;       // local ids
  VertexSet gadget_vertices;  // local ids
  std::string kind;           // v1-none | v2-path | v3-cycle
};

struct V1Cover {
  DominationCertificate certificate;  // target V_1(G), size <= n/2, optimal
  bool tight;  // every component is C_4 or a corona of a connected graph
};

struct AugmentedCover {
  DominationCertificate certificate;
  AuxiliaryJ aux;
};

/// Minimum set covering all non-isolated vertices; tight exactly when every
/// component of the graph is C_4 or a corona.
V1Cover cover_v1(const Graph& g);

/// Verified cover of V_2(G) of size <= 2n/5. Rejects inputs with a component
/// in the exceptional family. Solves an augmented graph J (isolated pendant
/// leaves chained into a path) exactly per component.
AugmentedCover cover_v2(const Graph& g);

/// Verified cover of V_3(G) of size <= 3(n+2)/8, via a degree-3 augmentation
/// (cycle over the low-degree fringe, or a two-vertex gadget). Gadget
/// vertices never appear in the certificate.
AugmentedCover cover_v3(const Graph& g);

/// Structural test used by the v1 tightness flag: one pendant leaf per
/// vertex of a connected core.
bool is_corona_of_connected(const Graph& g);

/// Degree-parameterized bound values; entries are absent when the graph's
/// min degree (or order/connectivity for the degree product) does not match.
struct DegreeBoundSet {
  std::optional<Rational> delta2;          // (max_deg/2 + 3) gamma - 1
  std::optional<Rational> delta3;          // (2 max_deg/5 + 3) gamma - 1
  std::optional<Rational> delta4;          // (3(max_deg+2)/8 + 3) gamma - 1
  std::optional<Rational> degree_product;  // (1 + max_deg) gamma
};

DegreeBoundSet degree_bounds(const Graph& g);

/// Min-degree-3 refinement: per-component restricted covers replace the
/// generic AD, with a searched (z,u,y) rewiring for exceptional-family
/// components living entirely in W. Falls back to general_construct when the
/// search fails. Verified; size within the delta3 entry of degree_bounds.
ArcDominationPlan delta3_construct(const Graph& g, int gamma_set_cap = 200);

/// Claw-free construction: four arcs per gamma-set vertex chosen through a
/// dominating pair of its neighbourhood; verified, size <= 4 gamma.
ArcDominationPlan clawfree_construct(const Graph& g);

}  // namespace arcdom
