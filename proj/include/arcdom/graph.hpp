#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arcdom/error.hpp"

namespace arcdom {

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<int>;

using EdgeList = std::vector<std::pair<int, int>>;

/// Finite simple undirected graph on vertices 0..n-1. Immutable after
/// construction: loops are rejected, parallel edges collapse.
class Graph {
 public:
  Graph() = default;
  Graph(int n, EdgeList edges);

  int n() const { return n_; }
  int m() const { return m_; }

  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  bool adjacent(int u, int v) const;
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  int min_degree() const;  // 0 for the empty graph
  int max_degree() const;

  /// Edges as (u,v) with u < v, sorted lexicographically.
  EdgeList edges() const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && adj_ == other.adj_;
  }

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<int>> adj_;
};

/// Loopless directed graph; antiparallel arc pairs are allowed.
class DiGraph {
 public:
  DiGraph() = default;
  DiGraph(int n, EdgeList arcs);

  int n() const { return n_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const EdgeList& arcs() const { return arcs_; }  // sorted lexicographically
  bool has_arc(int u, int v) const;
  /// True when at least one of u->v, v->u is present.
  bool adjacent_either_direction(int u, int v) const {
    return has_arc(u, v) || has_arc(v, u);
  }

 private:
  int n_ = 0;
  EdgeList arcs_;
};

// ---- text formats ------------------------------------------------------

/// Parses "u v" lines; '#' starts a comment, blank lines are skipped. The
/// graph gets max-id+1 vertices; duplicate edges collapse. Loops and
/// malformed lines raise errors naming the line number.
Graph from_edge_list(const std::string& text);
std::string to_edge_list(const Graph& g);

/// A "# n <count>" directive line fixes the vertex count, so graphs with
/// trailing isolated vertices survive a round trip through edge-list text.
Graph from_edge_list_with_directives(const std::string& text);
std::string to_edge_list_with_header(const Graph& g);

DiGraph digraph_from_edge_list(const std::string& text);

/// graph6, single line, n <= 62.
Graph from_graph6(const std::string& line);
std::string to_graph6(const Graph& g);

// ---- structure ---------------------------------------------------------

/// Connected components as sorted vertex sets, ordered by minimum element.
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_source;  // local id -> source id
};
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vertices);

Graph remove_vertex(const Graph& g, int v);
Graph disjoint_union(const Graph& a, const Graph& b);

/// Induced K_{1,3} witness as (center, leaf, leaf, leaf), if any.
std::optional<std::array<int, 4>> find_claw(const Graph& g);
inline bool is_claw_free(const Graph& g) { return !find_claw(g).has_value(); }

}  // namespace arcdom
