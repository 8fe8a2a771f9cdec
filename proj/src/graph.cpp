#include "arcdom/graph.hpp"

#include <algorithm>
#include <sstream>

namespace arcdom {

namespace {

void check_endpoint(int v, int n, const char* what) {
  if (v < 0 || v >= n)
    throw Error(ErrorKind::Validation,
                std::string(what) + " endpoint " + std::to_string(v) + " out of range");
}

}  // namespace

Graph::Graph(int n, EdgeList edges) : n_(n), adj_(n) {
  if (n < 0) throw Error(ErrorKind::Validation, "negative vertex count");
  for (auto& [u, v] : edges) {
    check_endpoint(u, n, "edge");
    check_endpoint(v, n, "edge");
    if (u == v)
      throw Error(ErrorKind::Validation, "loop edge at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (const auto& [u, v] : edges) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  m_ = static_cast<int>(edges.size());
}

bool Graph::adjacent(int u, int v) const {
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::min_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = v == 0 ? degree(v) : std::min(d, degree(v));
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

EdgeList Graph::edges() const {
  EdgeList out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

DiGraph::DiGraph(int n, EdgeList arcs) : n_(n) {
  if (n < 0) throw Error(ErrorKind::Validation, "negative vertex count");
  for (const auto& [u, v] : arcs) {
    check_endpoint(u, n, "arc");
    check_endpoint(v, n, "arc");
    if (u == v)
      throw Error(ErrorKind::Validation, "loop arc at vertex " + std::to_string(u));
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  arcs_ = std::move(arcs);
}

bool DiGraph::has_arc(int u, int v) const {
  return std::binary_search(arcs_.begin(), arcs_.end(), std::make_pair(u, v));
}

// ---- edge-list text ------------------------------------------------------

namespace {

struct ParsedEdgeText {
  EdgeList pairs;
  int max_id = -1;
  std::optional<int> n_directive;
};

ParsedEdgeText parse_edge_text(const std::string& text, bool allow_loops,
                               bool honor_directives) {
  ParsedEdgeText out;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) {
      if (honor_directives) {
        std::istringstream cs(line.substr(hash + 1));
        std::string word;
        long long n;
        if (cs >> word >> n && word == "n" && n >= 0) out.n_directive = static_cast<int>(n);
      }
      line = line.substr(0, hash);
    }
    std::istringstream ls(line);
    long long u, v;
    if (!(ls >> u)) continue;  // blank or comment-only line
    if (!(ls >> v)) {
      throw Error(ErrorKind::Parse,
                  "line " + std::to_string(line_no) + ": expected two vertex ids");
    }
    std::string rest;
    if (ls >> rest)
      throw Error(ErrorKind::Parse,
                  "line " + std::to_string(line_no) + ": trailing token '" + rest + "'");
    if (u < 0 || v < 0)
      throw Error(ErrorKind::Parse,
                  "line " + std::to_string(line_no) + ": negative vertex id");
    if (!allow_loops && u == v)
      throw Error(ErrorKind::Validation,
                  "line " + std::to_string(line_no) + ": loop edge " + std::to_string(u));
    out.pairs.emplace_back(static_cast<int>(u), static_cast<int>(v));
    out.max_id = std::max(out.max_id, static_cast<int>(std::max(u, v)));
  }
  return out;
}

}  // namespace

Graph from_edge_list(const std::string& text) {
  auto parsed = parse_edge_text(text, false, false);
  return Graph(parsed.max_id + 1, std::move(parsed.pairs));
}

Graph from_edge_list_with_directives(const std::string& text) {
  auto parsed = parse_edge_text(text, false, true);
  int n = parsed.max_id + 1;
  if (parsed.n_directive && *parsed.n_directive >= n) n = *parsed.n_directive;
  return Graph(n, std::move(parsed.pairs));
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::string to_edge_list_with_header(const Graph& g) {
  std::ostringstream out;
  out << "# n " << g.n() << '\n';
  out << to_edge_list(g);
  return out.str();
}

DiGraph digraph_from_edge_list(const std::string& text) {
  auto parsed = parse_edge_text(text, false, true);
  int n = parsed.max_id + 1;
  if (parsed.n_directive && *parsed.n_directive >= n) n = *parsed.n_directive;
  return DiGraph(n, std::move(parsed.pairs));
}

// ---- graph6 ---------------------------------------------------------------

Graph from_graph6(const std::string& line) {
  std::string s = line;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  if (s.empty()) throw Error(ErrorKind::Parse, "empty graph6 string");
  if (s[0] == '~')
    throw Error(ErrorKind::Parse, "graph6 extended order (n > 62) not supported");
  int n = static_cast<int>(static_cast<unsigned char>(s[0])) - 63;
  if (n < 0 || n > 62)
    throw Error(ErrorKind::Parse, "graph6 order byte out of range");
  std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::size_t want = 1 + (bits + 5) / 6;
  if (s.size() != want)
    throw Error(ErrorKind::Parse, "graph6 length " + std::to_string(s.size()) +
                                      ", expected " + std::to_string(want));
  EdgeList edges;
  std::size_t bit = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row, ++bit) {
      unsigned char c = static_cast<unsigned char>(s[1 + bit / 6]);
      if (c < 63 || c > 126)
        throw Error(ErrorKind::Parse, "graph6 byte out of range");
      if ((c - 63) & (1 << (5 - bit % 6))) edges.emplace_back(row, col);
    }
  }
  // padding bits must read clean too
  for (std::size_t b = bits; b < (want - 1) * 6; ++b) {
    unsigned char c = static_cast<unsigned char>(s[1 + b / 6]);
    if (c < 63 || c > 126) throw Error(ErrorKind::Parse, "graph6 byte out of range");
  }
  return Graph(n, std::move(edges));
}

std::string to_graph6(const Graph& g) {
  int n = g.n();
  if (n > 62) throw Error(ErrorKind::ResourceLimit, "graph6 emitter handles n <= 62");
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int acc = 0, filled = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      acc = (acc << 1) | (g.adjacent(row, col) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

// ---- structure ------------------------------------------------------------

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<char> seen(g.n(), 0);
  for (int start = 0; start < g.n(); ++start) {
    if (seen[start]) continue;
    VertexSet comp;
    std::vector<int> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;  // starts scan in id order, so already sorted by minimum
}

bool is_connected(const Graph& g) {
  return g.n() <= 1 || components(g).size() == 1;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vertices) {
  std::vector<int> local(g.n(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    int v = vertices[i];
    if (v < 0 || v >= g.n())
      throw Error(ErrorKind::Validation, "vertex " + std::to_string(v) + " out of range");
    if (local[v] != -1)
      throw Error(ErrorKind::Validation, "duplicate vertex " + std::to_string(v));
    local[v] = static_cast<int>(i);
  }
  EdgeList edges;
  for (int v : vertices)
    for (int w : g.neighbors(v))
      if (v < w && local[w] != -1) edges.emplace_back(local[v], local[w]);
  InducedSubgraph out;
  out.graph = Graph(static_cast<int>(vertices.size()), std::move(edges));
  out.to_source = vertices;
  return out;
}

Graph remove_vertex(const Graph& g, int v) {
  VertexSet keep;
  for (int u = 0; u < g.n(); ++u)
    if (u != v) keep.push_back(u);
  return induced_subgraph(g, keep).graph;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  EdgeList edges = a.edges();
  for (const auto& [u, v] : b.edges()) edges.emplace_back(a.n() + u, a.n() + v);
  return Graph(a.n() + b.n(), std::move(edges));
}

std::optional<std::array<int, 4>> find_claw(const Graph& g) {
  for (int x = 0; x < g.n(); ++x) {
    const auto& nb = g.neighbors(x);
    std::size_t d = nb.size();
    if (d < 3) continue;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j) {
        if (g.adjacent(nb[i], nb[j])) continue;
        for (std::size_t k = j + 1; k < d; ++k) {
          if (g.adjacent(nb[i], nb[k]) || g.adjacent(nb[j], nb[k])) continue;
          return std::array<int, 4>{x, nb[i], nb[j], nb[k]};
        }
      }
  }
  return std::nullopt;
}

}  // namespace arcdom
