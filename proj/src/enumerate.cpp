#include "arcdom/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>

#include "arcdom/domination.hpp"
#include "arcdom/isomorphism.hpp"

namespace arcdom {

namespace {

// Canonical code for tiny graphs: vertices are grouped by an isomorphism-
// invariant class signature, and the lower-triangle adjacency bits are
// minimized over all class-respecting placements. Codes compare equal
// exactly for isomorphic graphs.
struct CanonicalCode {
  std::vector<int> signature;
  std::uint64_t bits = 0;

  auto operator<=>(const CanonicalCode&) const = default;
};

struct CanonSearch {
  const Graph& g;
  int n;
  int total_bits;
  std::vector<int> class_of;       // vertex -> class rank
  std::vector<int> class_at_pos;   // position -> required class rank
  std::vector<int> placed;
  std::vector<char> used;
  std::uint64_t best = ~0ull;
  bool have_best = false;

  void dfs(int pos, std::uint64_t cur, int cur_bits) {
    if (pos == n) {
      if (!have_best || cur < best) {
        best = cur;
        have_best = true;
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v] || class_of[v] != class_at_pos[pos]) continue;
      std::uint64_t row = 0;
      for (int q = 0; q < pos; ++q) row = (row << 1) | (g.adjacent(v, placed[q]) ? 1 : 0);
      std::uint64_t next = (cur << pos) | row;
      int next_bits = cur_bits + pos;
      if (have_best) {
        std::uint64_t best_prefix = best >> (total_bits - next_bits);
        if (next > best_prefix) continue;
      }
      used[v] = 1;
      placed[pos] = v;
      dfs(pos + 1, next, next_bits);
      used[v] = 0;
    }
  }
};

CanonicalCode canonical_code(const Graph& g) {
  int n = g.n();
  CanonicalCode code;
  if (n == 0) return code;
  if (n > 11) throw Error(ErrorKind::ResourceLimit, "canonical code limited to n <= 11");

  // class signature: (degree, sorted neighbour degrees) per vertex
  std::vector<std::vector<int>> inv(n);
  for (int v = 0; v < n; ++v) {
    inv[v].push_back(g.degree(v));
    for (int w : g.neighbors(v)) inv[v].push_back(g.degree(w));
    std::sort(inv[v].begin() + 1, inv[v].end());
  }
  std::vector<std::vector<int>> classes(inv.begin(), inv.end());
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());

  CanonSearch search{g, n, n * (n - 1) / 2, std::vector<int>(n), {}, std::vector<int>(n),
                     std::vector<char>(n, 0)};
  for (int v = 0; v < n; ++v)
    search.class_of[v] = static_cast<int>(
        std::lower_bound(classes.begin(), classes.end(), inv[v]) - classes.begin());
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return search.class_of[a] < search.class_of[b]; });
  search.class_at_pos.resize(n);
  for (int p = 0; p < n; ++p) search.class_at_pos[p] = search.class_of[order[p]];

  search.dfs(0, 0, 0);

  for (const auto& cls : classes) {
    code.signature.insert(code.signature.end(), cls.begin(), cls.end());
    code.signature.push_back(-1);
  }
  code.signature.push_back(n);
  code.bits = search.best;
  return code;
}

}  // namespace

std::vector<Graph> all_graphs_upto_iso(int n) {
  if (n < 0 || n > 8)
    throw Error(ErrorKind::ResourceLimit, "graph enumeration limited to n <= 8");
  if (n == 0) return {Graph()};
  std::vector<Graph> level{Graph(1, {})};
  for (int k = 2; k <= n; ++k) {
    std::map<CanonicalCode, Graph> next;
    for (const Graph& g : level) {
      for (std::uint32_t mask = 0; mask < (1u << (k - 1)); ++mask) {
        EdgeList edges = g.edges();
        for (int v = 0; v < k - 1; ++v)
          if (mask & (1u << v)) edges.emplace_back(v, k - 1);
        Graph candidate(k, std::move(edges));
        next.emplace(canonical_code(candidate), std::move(candidate));
      }
    }
    level.clear();
    for (auto& [code, g] : next) level.push_back(std::move(g));
  }
  return level;
}

std::vector<Graph> connected_min_degree_corpus(int max_n, int min_delta) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n)
    for (Graph& g : all_graphs_upto_iso(n))
      if (g.min_degree() >= min_delta && is_connected(g)) out.push_back(std::move(g));
  return out;
}

std::vector<Graph> graphs_with_edge_count(int m) {
  if (m < 0 || m > 8)
    throw Error(ErrorKind::ResourceLimit, "edge-count enumeration limited to m <= 8");
  std::vector<Graph> level{Graph()};
  for (int k = 1; k <= m; ++k) {
    std::vector<Graph> next;
    // buckets of (n, degree sequence) -> indices into next
    std::map<std::pair<int, std::vector<int>>, std::vector<std::size_t>> buckets;
    auto offer = [&](Graph candidate) {
      std::vector<int> degs(candidate.n());
      for (int v = 0; v < candidate.n(); ++v) degs[v] = candidate.degree(v);
      std::sort(degs.begin(), degs.end());
      auto key = std::make_pair(candidate.n(), std::move(degs));
      for (std::size_t idx : buckets[key])
        if (find_isomorphism(next[idx], candidate).has_value()) return;
      buckets[key].push_back(next.size());
      next.push_back(std::move(candidate));
    };
    for (const Graph& g : level) {
      int n = g.n();
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (!g.adjacent(u, v)) {
            EdgeList e = g.edges();
            e.emplace_back(u, v);
            offer(Graph(n, std::move(e)));
          }
      for (int u = 0; u < n; ++u) {
        EdgeList e = g.edges();
        e.emplace_back(u, n);
        offer(Graph(n + 1, std::move(e)));
      }
      {
        EdgeList e = g.edges();
        e.emplace_back(n, n + 1);
        offer(Graph(n + 2, std::move(e)));
      }
    }
    std::stable_sort(next.begin(), next.end(), [](const Graph& a, const Graph& b) {
      if (a.n() != b.n()) return a.n() < b.n();
      return a.edges() < b.edges();
    });
    level = std::move(next);
  }
  return level;
}

bool in_exceptional_family(const Graph& g) {
  if (g.n() < 3 || g.min_degree() < 2 || !is_connected(g)) return false;
  return 5 * gamma_exact(g).size() > 2 * g.n();
}

std::vector<Graph> exceptional_family(int limit) {
  if (limit < 7)
    throw Error(ErrorKind::Validation, "family enumeration needs limit >= 7");
  if (limit > 8)
    throw Error(ErrorKind::ResourceLimit, "family enumeration limited to order 8");

  std::map<CanonicalCode, Graph> found;
  for (int n = 3; n <= limit; ++n) {
    int pairs = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> bit_edge(pairs);
    {
      int b = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) bit_edge[b++] = {i, j};
    }
    const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    // largest dominating-set size that would keep gamma <= 2n/5
    const int threshold = (2 * n) / 5;
    std::vector<std::uint32_t> row(n);
    for (std::uint64_t mask = 0; mask < (1ull << pairs); ++mask) {
      std::fill(row.begin(), row.end(), 0);
      std::uint64_t rem = mask;
      while (rem) {
        int b = std::countr_zero(rem);
        rem &= rem - 1;
        auto [i, j] = bit_edge[b];
        row[i] |= 1u << j;
        row[j] |= 1u << i;
      }
      bool degree_ok = true;
      for (int v = 0; v < n && degree_ok; ++v)
        if (std::popcount(row[v]) < 2) degree_ok = false;
      if (!degree_ok) continue;

      std::uint32_t reach = row[0] | 1u;
      for (;;) {
        std::uint32_t grow = reach;
        std::uint32_t scan = reach;
        while (scan) {
          int v = std::countr_zero(scan);
          scan &= scan - 1;
          grow |= row[v];
        }
        if (grow == reach) break;
        reach = grow;
      }
      if (reach != full) continue;

      // reject unless every dominating set needs more than `threshold` vertices
      bool small_dom = false;
      std::vector<std::uint32_t> closed(n);
      for (int v = 0; v < n; ++v) closed[v] = row[v] | (1u << v);
      auto search = [&](auto&& self, std::uint32_t covered, int start, int left) -> bool {
        if (covered == full) return true;
        if (left == 0) return false;
        for (int v = start; v < n; ++v)
          if (self(self, covered | closed[v], v + 1, left - 1)) return true;
        return false;
      };
      if (threshold > 0) small_dom = search(search, 0, 0, threshold);
      if (small_dom) continue;

      EdgeList edges;
      for (int b = 0; b < pairs; ++b)
        if (mask & (1ull << b)) edges.push_back(bit_edge[b]);
      Graph g(n, std::move(edges));
      found.emplace(canonical_code(g), std::move(g));
    }
  }
  std::vector<Graph> out;
  for (auto& [code, g] : found) out.push_back(std::move(g));
  std::stable_sort(out.begin(), out.end(),
                   [](const Graph& a, const Graph& b) { return a.n() < b.n(); });
  return out;
}

}  // namespace arcdom
