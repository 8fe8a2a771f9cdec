#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arcdom/graph.hpp"
#include "arcdom/threearc.hpp"

namespace arcdom {

/// Witness that a graph is an arc graph: a partition of the vertices into
/// singleton classes and independent classes of size >= 2, plus a partition
/// of the edges into complete bipartite blocks spanned by the large classes.
struct CharacterizationCertificate {
  std::vector<VertexSet> singleton_classes;    // one vertex each
  std::vector<VertexSet> independent_classes;  // independent, >= 2 vertices
  std::vector<EdgeList> edge_blocks;           // sorted (u,v) pairs, u < v
};

struct CertificateCheck {
  bool ok = false;
  std::string violated;  // "a".."e" when not ok
  std::string detail;
};

/// Checks the five certificate conditions in order and reports the first
/// failure with a witness. Structurally malformed input (ids out of range,
/// overlapping classes or blocks, non-edges) raises a validation error.
/// Edge-partition completeness is checked last and reported under "b".
CertificateCheck verify_certificate(const Graph& g, const CharacterizationCertificate& cert);

/// The certificate of the arc graph of h, built from the out-arc classes
/// A_h(v) and the per-edge bipartite blocks. h needs at least one edge.
/// The certificate indexes vertices of three_arc_graph(h).
CharacterizationCertificate derive_certificate(const Graph& h);

/// Rebuilds a preimage from a valid certificate of g, together with the
/// explicit isomorphism from the preimage's arc graph onto g (arc-graph
/// vertex -> g vertex). The isomorphism is re-verified before returning.
struct Reconstruction {
  Graph h;
  LabeledGraph x;          // three_arc_graph(h)
  std::vector<int> onto_g; // x vertex -> g vertex
};

Reconstruction construct_preimage(const Graph& g, const CharacterizationCertificate& cert);

/// Embedding check: every graph embeds as an induced subgraph of the arc
/// graph of its cone, via v -> (v, apex). Returns the embedding.
struct ConeEmbedding {
  bool ok = false;
  std::vector<int> arc_vertex;  // base vertex -> arc-graph vertex of (v, apex)
};

ConeEmbedding embed_in_cone_check(const Graph& h);

struct RecognitionLimits {
  int max_order = 12;
  bool list_all = false;
};

struct RecognitionResult {
  std::optional<Graph> preimage;  // first hit in enumeration order
  std::optional<CharacterizationCertificate> certificate;
  std::vector<Graph> all_preimages;  // only filled under list_all
};

/// Exhaustive preimage search: scans all graphs with |V(g)|/2 edges and no
/// isolated vertices, up to isomorphism, and returns the first whose arc
/// graph is isomorphic to g. An empty result proves no preimage exists.
/// Odd order is rejected; orders above the limit raise a resource limit.
RecognitionResult recognize_small(const Graph& g, const RecognitionLimits& limits = {});

}  // namespace arcdom
