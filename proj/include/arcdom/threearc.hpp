#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arcdom/graph.hpp"

namespace arcdom {

/// Oriented edge of a graph; each edge {u,v} yields the two arcs uv and vu.
struct Arc {
  int tail = -1;
  int head = -1;

  auto operator<=>(const Arc&) const = default;
};

/// Walk (v,u,x,y) in which (v,u,x) and (u,x,y) are both paths: the edges
/// {v,u}, {u,x}, {x,y} exist, v != x and u != y. v == y is allowed. The arcs
/// uv and xy of such a walk are the adjacencies of the arc graph.
struct ThreeArc {
  int v = -1, u = -1, x = -1, y = -1;

  Arc first_arc() const { return {u, v}; }
  Arc second_arc() const { return {x, y}; }
  ThreeArc reversed() const { return {y, x, u, v}; }

  auto operator<=>(const ThreeArc&) const = default;
};

bool is_three_arc(const Graph& g, const ThreeArc& t);

/// All walks satisfying the ThreeArc shape, sorted. The set is closed under
/// reversal.
std::vector<ThreeArc> all_three_arcs(const Graph& g);

bool is_self_paired(const std::vector<ThreeArc>& arcs);

/// A graph whose vertices carry arc labels of a source graph. The label map
/// is a bijection onto the source's arcs, so the order is 2*m(source).
struct LabeledGraph {
  Graph graph;
  std::vector<Arc> labels;  // vertex id -> source arc, lexicographic by (tail, head)

  int vertex_of(const Arc& a) const;  // -1 when a is not a source arc
};

/// Arcs of g sorted lexicographically by (tail, head).
std::vector<Arc> arcs_of(const Graph& g);

/// The arc graph of g: vertices are the arcs of g, and arcs uv, xy are
/// adjacent exactly when (v,u,x,y) lies in the walk set (all of them by
/// default). A supplied walk set must be valid and closed under reversal;
/// non-conforming input is rejected rather than repaired.
LabeledGraph three_arc_graph(const Graph& g,
                             const std::optional<std::vector<ThreeArc>>& walks = std::nullopt);

/// Directed variant: vertices are the arcs of d; arcs uv, xy are adjacent
/// when v != x, y != u and some arc joins u and x in either direction.
LabeledGraph three_arc_graph(const DiGraph& d);

/// i-fold composition of the arc graph operation. Labels of the result refer
/// to arcs of the (i-1)-th stage. Stages whose vertex count would exceed
/// vertex_cap raise a resource-limit error naming the stage.
LabeledGraph iterate_three_arc_graph(const Graph& g, int i, int vertex_cap = 100000);

/// Sidecar label table, one "vertexId: tail->head" line per vertex.
std::string label_table(const LabeledGraph& lg);

}  // namespace arcdom
