#include "arcdom/domination.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace arcdom {

namespace {

constexpr int kSolverMaxOrder = 64;

std::uint64_t bit(int v) { return 1ull << v; }

std::vector<std::uint64_t> closed_neighborhoods(const Graph& g) {
  std::vector<std::uint64_t> closed(g.n());
  for (int v = 0; v < g.n(); ++v) {
    closed[v] = bit(v);
    for (int w : g.neighbors(v)) closed[v] |= bit(w);
  }
  return closed;
}

std::uint64_t set_mask(const VertexSet& s) {
  std::uint64_t m = 0;
  for (int v : s) m |= bit(v);
  return m;
}

VertexSet mask_to_set(std::uint64_t m) {
  VertexSet out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

VertexSet default_target(const Graph& g, const std::optional<VertexSet>& target) {
  if (target) {
    for (int v : *target)
      if (v < 0 || v >= g.n())
        throw Error(ErrorKind::Validation,
                    "target vertex " + std::to_string(v) + " out of range");
    VertexSet t = *target;
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    return t;
  }
  VertexSet all(g.n());
  for (int v = 0; v < g.n(); ++v) all[v] = v;
  return all;
}

// Lower bound on how many more dominators the uncovered targets force: a
// greedy packing of targets with pairwise disjoint closed neighbourhoods,
// and the ceiling of uncovered count over the best single coverage.
int lower_bound(std::uint64_t uncovered, const std::vector<std::uint64_t>& closed, int n) {
  if (!uncovered) return 0;
  int packing = 0;
  std::uint64_t blocked = 0;
  std::uint64_t scan = uncovered;
  while (scan) {
    int u = std::countr_zero(scan);
    scan &= scan - 1;
    if (closed[u] & blocked) continue;
    blocked |= closed[u];
    ++packing;
  }
  int best_cover = 1;
  for (int v = 0; v < n; ++v)
    best_cover = std::max(best_cover, std::popcount(closed[v] & uncovered));
  int by_ratio = (std::popcount(uncovered) + best_cover - 1) / best_cover;
  return std::max(packing, by_ratio);
}

struct BranchState {
  const std::vector<std::uint64_t>& closed;
  int n;
  std::uint64_t target;
  VertexSet best;
  VertexSet current;

  void run(std::uint64_t covered) {
    std::uint64_t uncovered = target & ~covered;
    if (!uncovered) {
      if (current.size() < best.size()) best = current;
      return;
    }
    if (current.size() + lower_bound(uncovered, closed, n) >= best.size()) return;

    // most constrained target vertex: smallest closed neighbourhood, lowest id
    int pick = -1, pick_size = kSolverMaxOrder + 1;
    std::uint64_t scan = uncovered;
    while (scan) {
      int u = std::countr_zero(scan);
      scan &= scan - 1;
      int s = std::popcount(closed[u]);
      if (s < pick_size) {
        pick_size = s;
        pick = u;
      }
    }

    VertexSet options = mask_to_set(closed[pick]);
    std::stable_sort(options.begin(), options.end(), [&](int a, int b) {
      return std::popcount(closed[a] & uncovered) > std::popcount(closed[b] & uncovered);
    });
    for (int v : options) {
      current.push_back(v);
      run(covered | closed[v]);
      current.pop_back();
    }
  }
};

DominationCertificate greedy_core(const Graph& g, const VertexSet& target,
                                  const std::vector<std::uint64_t>& closed) {
  std::uint64_t want = set_mask(target);
  std::uint64_t covered = 0;
  VertexSet picked;
  while ((want & ~covered) != 0) {
    int best_v = -1, best_gain = 0;
    for (int v = 0; v < g.n(); ++v) {
      int gain = std::popcount(closed[v] & want & ~covered);
      if (gain > best_gain) {
        best_gain = gain;
        best_v = v;
      }
    }
    if (best_v < 0) throw Error(ErrorKind::Internal, "greedy cannot cover target");
    picked.push_back(best_v);
    covered |= closed[best_v];
  }
  // redundancy pass: drop members whose removal keeps the target covered
  std::sort(picked.begin(), picked.end());
  for (std::size_t i = 0; i < picked.size();) {
    std::uint64_t rest = 0;
    for (std::size_t j = 0; j < picked.size(); ++j)
      if (j != i) rest |= closed[picked[j]];
    if ((want & ~rest) == 0)
      picked.erase(picked.begin() + static_cast<long>(i));
    else
      ++i;
  }
  return DominationCertificate{picked, target, false};
}

}  // namespace

DominationCheck is_dominating(const Graph& g, const VertexSet& d, const VertexSet& target) {
  std::vector<char> covered(g.n(), 0);
  for (int v : d) {
    if (v < 0 || v >= g.n())
      throw Error(ErrorKind::Validation, "dominator " + std::to_string(v) + " out of range");
    covered[v] = 1;
    for (int w : g.neighbors(v)) covered[w] = 1;
  }
  for (int u : target) {
    if (u < 0 || u >= g.n())
      throw Error(ErrorKind::Validation, "target " + std::to_string(u) + " out of range");
    if (!covered[u]) return {false, u};
  }
  return {true, -1};
}

bool verify_certificate(const Graph& g, const DominationCertificate& cert) {
  return is_dominating(g, cert.dominators, cert.target).dominating;
}

VertexSet vi_set(const Graph& g, int i) {
  if (i < 0) throw Error(ErrorKind::Validation, "degree threshold must be >= 0");
  VertexSet out;
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) >= i) out.push_back(v);
  return out;
}

DominationCertificate gamma_exact(const Graph& g, std::optional<VertexSet> target) {
  VertexSet t = default_target(g, target);
  if (t.empty()) return DominationCertificate{{}, t, true};
  if (g.n() > kSolverMaxOrder) {
    throw SolverLimitError("exact solver limited to 64 vertices, got " +
                               std::to_string(g.n()),
                           greedy_dominating(g, t));
  }
  auto closed = closed_neighborhoods(g);
  DominationCertificate greedy = greedy_core(g, t, closed);
  BranchState state{closed, g.n(), set_mask(t), greedy.dominators, {}};
  state.run(0);
  std::sort(state.best.begin(), state.best.end());
  return DominationCertificate{state.best, t, true};
}

GammaSetList all_gamma_sets(const Graph& g, int cap) {
  if (cap < 1) throw Error(ErrorKind::Validation, "cap must be positive");
  GammaSetList out;
  VertexSet all = default_target(g, std::nullopt);
  int gamma = gamma_exact(g).size();
  if (g.n() == 0) {
    out.sets.push_back({});
    return out;
  }
  auto closed = closed_neighborhoods(g);
  std::uint64_t full = set_mask(all);
  VertexSet current;
  bool stop = false;

  // lexicographic inclusion scan over candidate sets of size gamma
  auto recurse = [&](auto&& self, int next, std::uint64_t covered) -> void {
    if (stop) return;
    std::uint64_t uncovered = full & ~covered;
    int slack = gamma - static_cast<int>(current.size());
    if (!uncovered && slack == 0) {
      if (static_cast<int>(out.sets.size()) == cap) {
        out.truncated = true;
        stop = true;
        return;
      }
      out.sets.push_back(current);
      return;
    }
    if (slack == 0) return;
    if (lower_bound(uncovered, closed, g.n()) > slack) return;
    for (int v = next; v < g.n(); ++v) {
      // enough vertices left to fill the set
      if (g.n() - v < slack) break;
      current.push_back(v);
      self(self, v + 1, covered | closed[v]);
      current.pop_back();
      if (stop) return;
    }
  };
  recurse(recurse, 0, 0);
  return out;
}

DominationCertificate greedy_dominating(const Graph& g, std::optional<VertexSet> target) {
  VertexSet t = default_target(g, target);
  if (g.n() > kSolverMaxOrder) {
    // mask-free fallback: repeatedly take the vertex covering the most
    std::vector<char> covered(g.n(), 0);
    VertexSet picked;
    auto uncovered_count = [&]() {
      int c = 0;
      for (int u : t)
        if (!covered[u]) ++c;
      return c;
    };
    while (uncovered_count() > 0) {
      int best_v = -1, best_gain = -1;
      std::vector<char> inT(g.n(), 0);
      for (int u : t) inT[u] = 1;
      for (int v = 0; v < g.n(); ++v) {
        int gain = (inT[v] && !covered[v]) ? 1 : 0;
        for (int w : g.neighbors(v)) gain += (inT[w] && !covered[w]) ? 1 : 0;
        if (gain > best_gain) {
          best_gain = gain;
          best_v = v;
        }
      }
      picked.push_back(best_v);
      covered[best_v] = 1;
      for (int w : g.neighbors(best_v)) covered[w] = 1;
    }
    std::sort(picked.begin(), picked.end());
    return DominationCertificate{picked, t, false};
  }
  return greedy_core(g, t, closed_neighborhoods(g));
}

}  // namespace arcdom
