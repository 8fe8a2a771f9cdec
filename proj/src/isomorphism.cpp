#include "arcdom/isomorphism.hpp"

#include <algorithm>
#include <map>

namespace arcdom {

namespace {

// Iterated neighbourhood refinement. Invariant ranks are comparable across
// the two input graphs because they are computed from the pooled value sets.
std::pair<std::vector<int>, std::vector<int>> refine_invariants(const Graph& g,
                                                                const Graph& h) {
  std::vector<int> ig(g.n()), ih(h.n());
  for (int v = 0; v < g.n(); ++v) ig[v] = g.degree(v);
  for (int v = 0; v < h.n(); ++v) ih[v] = h.degree(v);
  for (int round = 0; round < 3; ++round) {
    std::map<std::vector<int>, int> ranks;
    auto signature = [&](const Graph& gr, const std::vector<int>& inv, int v) {
      std::vector<int> sig{inv[v]};
      for (int w : gr.neighbors(v)) sig.push_back(inv[w]);
      std::sort(sig.begin() + 1, sig.end());
      return sig;
    };
    std::vector<std::vector<int>> sg(g.n()), sh(h.n());
    for (int v = 0; v < g.n(); ++v) {
      sg[v] = signature(g, ig, v);
      ranks[sg[v]] = 0;
    }
    for (int v = 0; v < h.n(); ++v) {
      sh[v] = signature(h, ih, v);
      ranks[sh[v]] = 0;
    }
    int next = 0;
    for (auto& [sig, rank] : ranks) rank = next++;
    for (int v = 0; v < g.n(); ++v) ig[v] = ranks[sg[v]];
    for (int v = 0; v < h.n(); ++v) ih[v] = ranks[sh[v]];
  }
  return {ig, ih};
}

struct Matcher {
  const Graph& g;
  const Graph& h;
  const std::vector<int>& ig;
  const std::vector<int>& ih;
  std::vector<int> order;  // g-vertices, most constrained first
  std::vector<int> map;    // g -> h, -1 unset
  std::vector<char> used;  // h-vertex taken

  bool extend(std::size_t pos) {
    if (pos == order.size()) return true;
    int v = order[pos];
    for (int u = 0; u < h.n(); ++u) {
      if (used[u] || ih[u] != ig[v]) continue;
      bool ok = true;
      for (int w : g.neighbors(v)) {
        if (map[w] != -1 && !h.adjacent(u, map[w])) {
          ok = false;
          break;
        }
      }
      // non-edges must map to non-edges as well
      if (ok) {
        for (std::size_t q = 0; q < pos && ok; ++q) {
          int w = order[q];
          if (!g.adjacent(v, w) && h.adjacent(u, map[w])) ok = false;
        }
      }
      if (!ok) continue;
      map[v] = u;
      used[u] = 1;
      if (extend(pos + 1)) return true;
      map[v] = -1;
      used[u] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h,
                                                 int order_limit) {
  if (g.n() != h.n() || g.m() != h.m()) return std::nullopt;
  if (g.n() > order_limit)
    throw Error(ErrorKind::ResourceLimit,
                "isomorphism search limited to " + std::to_string(order_limit) +
                    " vertices, got " + std::to_string(g.n()));
  if (g.n() == 0) return std::vector<int>{};

  auto [ig, ih] = refine_invariants(g, h);
  {
    auto a = ig, b = ih;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }

  // class sizes for the constrainedness ordering
  std::map<int, int> class_size;
  for (int r : ig) ++class_size[r];

  Matcher matcher{g, h, ig, ih, {}, std::vector<int>(g.n(), -1),
                  std::vector<char>(h.n(), 0)};
  matcher.order.resize(g.n());
  for (int v = 0; v < g.n(); ++v) matcher.order[v] = v;
  std::stable_sort(matcher.order.begin(), matcher.order.end(), [&](int a, int b) {
    if (class_size[ig[a]] != class_size[ig[b]]) return class_size[ig[a]] < class_size[ig[b]];
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  });

  if (!matcher.extend(0)) return std::nullopt;
  return matcher.map;
}

}  // namespace arcdom
