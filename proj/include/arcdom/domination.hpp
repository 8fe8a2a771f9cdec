#pragma once

#include <optional>
#include <vector>

#include "arcdom/graph.hpp"

namespace arcdom {

/// A set D together with the target set U it covers: U is contained in N[D].
/// D need not be a subset of U. `optimal` marks solver-proved minimality.
struct DominationCertificate {
  VertexSet dominators;
  VertexSet target;
  bool optimal = false;

  int size() const { return static_cast<int>(dominators.size()); }
};

struct DominationCheck {
  bool dominating = false;
  int uncovered = -1;  // witness when not dominating
};

/// True iff every u in target lies in the closed neighbourhood of d.
DominationCheck is_dominating(const Graph& g, const VertexSet& d, const VertexSet& target);

/// Re-verifies a certificate against its own target set.
bool verify_certificate(const Graph& g, const DominationCertificate& cert);

/// Vertices of degree at least i.
VertexSet vi_set(const Graph& g, int i);

/// Thrown when the solver budget is exceeded; carries the best upper-bound
/// certificate found before giving up.
class SolverLimitError : public Error {
 public:
  SolverLimitError(std::string message, DominationCertificate best)
      : Error(ErrorKind::ResourceLimit, std::move(message)), best_known(std::move(best)) {}

  DominationCertificate best_known;
};

/// Exact minimum set dominating `target` (all of V when absent). Branch and
/// bound seeded with a greedy upper bound; branches on the uncovered target
/// vertex with the smallest closed neighbourhood, ties to the lowest id.
/// Deterministic. Budget: n <= 64.
DominationCertificate gamma_exact(const Graph& g,
                                  std::optional<VertexSet> target = std::nullopt);

struct GammaSetList {
  std::vector<VertexSet> sets;  // lexicographic order
  bool truncated = false;
};

/// Every minimum dominating set, up to `cap` many.
GammaSetList all_gamma_sets(const Graph& g, int cap = 10000);

/// Greedy max-coverage certificate with a redundancy-removal pass. Never
/// optimal-flagged.
DominationCertificate greedy_dominating(const Graph& g,
                                        std::optional<VertexSet> target = std::nullopt);

}  // namespace arcdom
