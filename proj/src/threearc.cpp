#include "arcdom/threearc.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace arcdom {

bool is_three_arc(const Graph& g, const ThreeArc& t) {
  auto in_range = [&](int v) { return v >= 0 && v < g.n(); };
  if (!in_range(t.v) || !in_range(t.u) || !in_range(t.x) || !in_range(t.y)) return false;
  if (t.v == t.x || t.u == t.y) return false;
  return g.adjacent(t.v, t.u) && g.adjacent(t.u, t.x) && g.adjacent(t.x, t.y);
}

std::vector<ThreeArc> all_three_arcs(const Graph& g) {
  std::vector<ThreeArc> out;
  for (int u = 0; u < g.n(); ++u)
    for (int v : g.neighbors(u))
      for (int x : g.neighbors(u)) {
        if (x == v) continue;
        for (int y : g.neighbors(x))
          if (y != u) out.push_back({v, u, x, y});
      }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_self_paired(const std::vector<ThreeArc>& arcs) {
  std::set<ThreeArc> seen(arcs.begin(), arcs.end());
  for (const auto& t : arcs)
    if (!seen.count(t.reversed())) return false;
  return true;
}

std::vector<Arc> arcs_of(const Graph& g) {
  std::vector<Arc> out;
  out.reserve(2 * static_cast<std::size_t>(g.m()));
  for (int u = 0; u < g.n(); ++u)
    for (int v : g.neighbors(u)) out.push_back({u, v});
  return out;  // neighbor lists are sorted, so this is (tail, head) order
}

int LabeledGraph::vertex_of(const Arc& a) const {
  auto it = std::lower_bound(labels.begin(), labels.end(), a);
  if (it == labels.end() || !(*it == a)) return -1;
  return static_cast<int>(it - labels.begin());
}

LabeledGraph three_arc_graph(const Graph& g,
                             const std::optional<std::vector<ThreeArc>>& walks) {
  LabeledGraph out;
  out.labels = arcs_of(g);
  int order = static_cast<int>(out.labels.size());
  EdgeList edges;

  if (!walks) {
    for (int a = 0; a < order; ++a)
      for (int b = a + 1; b < order; ++b) {
        const Arc& p = out.labels[a];
        const Arc& q = out.labels[b];
        if (p.head != q.tail && q.head != p.tail && g.adjacent(p.tail, q.tail))
          edges.emplace_back(a, b);
      }
  } else {
    std::set<ThreeArc> delta;
    for (const auto& t : *walks) {
      if (!is_three_arc(g, t)) {
        std::ostringstream msg;
        msg << "tuple (" << t.v << ',' << t.u << ',' << t.x << ',' << t.y
            << ") is not a 3-arc of the graph";
        throw Error(ErrorKind::Validation, msg.str());
      }
      delta.insert(t);
    }
    for (const auto& t : delta) {
      if (!delta.count(t.reversed())) {
        std::ostringstream msg;
        msg << "walk set is not self-paired: (" << t.v << ',' << t.u << ',' << t.x << ','
            << t.y << ") lacks its reversal";
        throw Error(ErrorKind::Validation, msg.str());
      }
    }
    for (const auto& t : delta) {
      int a = out.vertex_of(t.first_arc());
      int b = out.vertex_of(t.second_arc());
      if (a == b) continue;  // cannot happen for a valid 3-arc
      edges.emplace_back(std::min(a, b), std::max(a, b));
    }
  }
  out.graph = Graph(order, std::move(edges));
  return out;
}

LabeledGraph three_arc_graph(const DiGraph& d) {
  LabeledGraph out;
  for (const auto& [u, v] : d.arcs()) out.labels.push_back({u, v});
  int order = static_cast<int>(out.labels.size());
  EdgeList edges;
  for (int a = 0; a < order; ++a)
    for (int b = a + 1; b < order; ++b) {
      const Arc& p = out.labels[a];
      const Arc& q = out.labels[b];
      if (p.head != q.tail && q.head != p.tail &&
          d.adjacent_either_direction(p.tail, q.tail))
        edges.emplace_back(a, b);
    }
  out.graph = Graph(order, std::move(edges));
  return out;
}

LabeledGraph iterate_three_arc_graph(const Graph& g, int i, int vertex_cap) {
  if (i < 1) throw Error(ErrorKind::Validation, "iteration count must be >= 1");
  Graph current = g;
  LabeledGraph stage;
  for (int k = 1; k <= i; ++k) {
    if (2 * current.m() > vertex_cap)
      throw Error(ErrorKind::ResourceLimit,
                  "stage " + std::to_string(k) + " would have " +
                      std::to_string(2 * current.m()) + " vertices, cap " +
                      std::to_string(vertex_cap));
    stage = three_arc_graph(current);
    current = stage.graph;
  }
  return stage;
}

std::string label_table(const LabeledGraph& lg) {
  std::ostringstream out;
  for (std::size_t i = 0; i < lg.labels.size(); ++i)
    out << i << ": " << lg.labels[i].tail << "->" << lg.labels[i].head << '\n';
  return out.str();
}

}  // namespace arcdom
