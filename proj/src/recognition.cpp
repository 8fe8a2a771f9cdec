#include "arcdom/recognition.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "arcdom/enumerate.hpp"
#include "arcdom/generators.hpp"
#include "arcdom/isomorphism.hpp"

namespace arcdom {

namespace {

std::string vertex_list(const VertexSet& s) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
  out << '}';
  return out.str();
}

}  // namespace

CertificateCheck verify_certificate(const Graph& g, const CharacterizationCertificate& cert) {
  const int n = g.n();
  // structural validation first; condition checks assume a sane shape
  std::vector<int> owner(n, -1);
  int class_id = 0;
  auto register_class = [&](const VertexSet& cls) {
    for (int v : cls) {
      if (v < 0 || v >= n)
        throw Error(ErrorKind::Validation, "class vertex " + std::to_string(v) + " out of range");
      if (owner[v] != -1)
        throw Error(ErrorKind::Validation,
                    "vertex " + std::to_string(v) + " appears in two classes");
      owner[v] = class_id;
    }
    if (cls.empty()) throw Error(ErrorKind::Validation, "empty class");
    ++class_id;
  };
  for (const auto& cls : cert.singleton_classes) register_class(cls);
  const int first_large = class_id;
  for (const auto& cls : cert.independent_classes) register_class(cls);

  std::set<std::pair<int, int>> seen_edges;
  for (const auto& block : cert.edge_blocks) {
    if (block.empty()) throw Error(ErrorKind::Validation, "empty edge block");
    for (auto [u, v] : block) {
      if (u > v) std::swap(u, v);
      if (u < 0 || v >= n || !g.adjacent(u, v))
        throw Error(ErrorKind::Validation, "block entry " + std::to_string(u) + "-" +
                                               std::to_string(v) + " is not an edge");
      if (!seen_edges.insert({u, v}).second)
        throw Error(ErrorKind::Validation, "edge " + std::to_string(u) + "-" +
                                               std::to_string(v) + " appears twice");
    }
  }

  // (a) the classes partition V; singletons are single, large classes are
  // independent with at least two vertices
  for (int v = 0; v < n; ++v)
    if (owner[v] == -1)
      return {false, "a", "vertex " + std::to_string(v) + " is in no class"};
  for (const auto& cls : cert.singleton_classes)
    if (cls.size() != 1)
      return {false, "a", "class " + vertex_list(cls) + " is not a singleton"};
  for (const auto& cls : cert.independent_classes) {
    if (cls.size() < 2)
      return {false, "a", "class " + vertex_list(cls) + " has fewer than two vertices"};
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (std::size_t j = i + 1; j < cls.size(); ++j)
        if (g.adjacent(cls[i], cls[j]))
          return {false, "a",
                  "class " + vertex_list(cls) + " contains edge " + std::to_string(cls[i]) +
                      "-" + std::to_string(cls[j])};
  }

  // (b) every block induces a complete bipartite graph whose parts sit in
  // two distinct large classes with size one less than the class
  struct BlockInfo {
    int class_a = -1, class_b = -1;  // large-class indices (offset into independent_classes)
    VertexSet part_a, part_b;
    VertexSet vertices;
  };
  std::vector<BlockInfo> info(cert.edge_blocks.size());
  for (std::size_t bi = 0; bi < cert.edge_blocks.size(); ++bi) {
    const auto& block = cert.edge_blocks[bi];
    std::set<int> verts;
    for (auto [u, v] : block) {
      verts.insert(u);
      verts.insert(v);
    }
    std::map<int, VertexSet> by_class;
    for (int v : verts) by_class[owner[v]].push_back(v);
    if (by_class.size() != 2)
      return {false, "b",
              "block " + std::to_string(bi) + " spans " + std::to_string(by_class.size()) +
                  " classes"};
    auto it = by_class.begin();
    auto [ca, pa] = *it++;
    auto [cb, pb] = *it;
    if (ca < first_large || cb < first_large)
      return {false, "b", "block " + std::to_string(bi) + " touches a singleton class"};
    const auto& cls_a = cert.independent_classes[ca - first_large];
    const auto& cls_b = cert.independent_classes[cb - first_large];
    if (pa.size() + 1 != cls_a.size() || pb.size() + 1 != cls_b.size())
      return {false, "b",
              "block " + std::to_string(bi) + " parts are not class size minus one"};
    if (block.size() != pa.size() * pb.size())
      return {false, "b", "block " + std::to_string(bi) + " is not complete bipartite"};
    for (int u : pa)
      for (int v : pb)
        if (!g.adjacent(u, v))
          return {false, "b", "block " + std::to_string(bi) + " is not complete bipartite"};
    info[bi] = {ca - first_large, cb - first_large, pa, pb, VertexSet(verts.begin(), verts.end())};
  }

  // (c) a vertex of a large class V meets at most |V|-1 blocks
  {
    std::map<int, int> hits;
    for (const auto& bi : info)
      for (int v : bi.vertices) ++hits[v];
    for (const auto& cls : cert.independent_classes)
      for (int v : cls)
        if (hits.count(v) && hits[v] > static_cast<int>(cls.size()) - 1)
          return {false, "c",
                  "vertex " + std::to_string(v) + " meets " + std::to_string(hits[v]) +
                      " blocks"};
  }

  // (d) blocks sharing a part class overlap in exactly |V|-2 vertices of
  // that class; two blocks never share both part classes
  for (std::size_t i = 0; i < info.size(); ++i)
    for (std::size_t j = i + 1; j < info.size(); ++j) {
      std::vector<std::pair<int, const VertexSet*>> pi{{info[i].class_a, &info[i].part_a},
                                                       {info[i].class_b, &info[i].part_b}};
      std::vector<std::pair<int, const VertexSet*>> pj{{info[j].class_a, &info[j].part_a},
                                                       {info[j].class_b, &info[j].part_b}};
      int shared_classes = 0;
      for (auto& [ci, parti] : pi)
        for (auto& [cj, partj] : pj) {
          if (ci != cj) continue;
          ++shared_classes;
          const auto& cls = cert.independent_classes[ci];
          VertexSet common;
          std::set_intersection(parti->begin(), parti->end(), partj->begin(), partj->end(),
                                std::back_inserter(common));
          if (common.size() != cls.size() - 2)
            return {false, "d",
                    "blocks " + std::to_string(i) + "," + std::to_string(j) + " share " +
                        std::to_string(common.size()) + " vertices in a class of " +
                        std::to_string(cls.size())};
        }
      // outside the shared classes the blocks must not intersect
      VertexSet inter;
      std::set_intersection(info[i].vertices.begin(), info[i].vertices.end(),
                            info[j].vertices.begin(), info[j].vertices.end(),
                            std::back_inserter(inter));
      std::size_t allowed = 0;
      for (auto& [ci, parti] : pi)
        for (auto& [cj, partj] : pj)
          if (ci == cj) allowed += cert.independent_classes[ci].size() - 2;
      if (inter.size() != allowed)
        return {false, "d",
                "blocks " + std::to_string(i) + "," + std::to_string(j) +
                    " share vertices outside their common class"};
      if (shared_classes == 2)
        return {false, "d",
                "blocks " + std::to_string(i) + "," + std::to_string(j) +
                    " span the same pair of classes"};
    }

  // (e) block count against class sizes
  {
    long long sum = 0;
    for (const auto& cls : cert.independent_classes) sum += static_cast<long long>(cls.size());
    long long lhs = 2ll * static_cast<long long>(cert.edge_blocks.size());
    long long rhs = sum - static_cast<long long>(cert.singleton_classes.size());
    if (lhs != rhs)
      return {false, "e",
              "2|blocks| = " + std::to_string(lhs) + " but class sum minus singletons = " +
                  std::to_string(rhs)};
  }

  // edge partition completeness, reported under (b)
  if (static_cast<int>(seen_edges.size()) != g.m())
    return {false, "b",
            "blocks cover " + std::to_string(seen_edges.size()) + " of " +
                std::to_string(g.m()) + " edges"};

  return {true, "", ""};
}

CharacterizationCertificate derive_certificate(const Graph& h) {
  if (h.m() < 1)
    throw Error(ErrorKind::Precondition, "certificate derivation needs at least one edge");
  auto x = three_arc_graph(h);
  CharacterizationCertificate cert;
  std::vector<VertexSet> out_arcs(h.n());
  for (int id = 0; id < x.graph.n(); ++id) out_arcs[x.labels[id].tail].push_back(id);
  for (int v = 0; v < h.n(); ++v) {
    if (h.degree(v) == 1) cert.singleton_classes.push_back(out_arcs[v]);
    if (h.degree(v) >= 2) cert.independent_classes.push_back(out_arcs[v]);
  }
  for (const auto& [u, v] : h.edges()) {
    if (h.degree(u) < 2 || h.degree(v) < 2) continue;
    EdgeList block;
    for (int a : out_arcs[u])
      for (int b : out_arcs[v])
        if (x.graph.adjacent(a, b)) block.emplace_back(std::min(a, b), std::max(a, b));
    std::sort(block.begin(), block.end());
    cert.edge_blocks.push_back(std::move(block));
  }
  return cert;
}

Reconstruction construct_preimage(const Graph& g, const CharacterizationCertificate& cert) {
  auto check = verify_certificate(g, cert);
  if (!check.ok)
    throw Error(ErrorKind::Precondition,
                "certificate fails condition (" + check.violated + "): " + check.detail);

  const int large = static_cast<int>(cert.independent_classes.size());
  const int small = static_cast<int>(cert.singleton_classes.size());
  std::vector<int> owner(g.n(), -1);  // vertex -> large-class index
  for (int c = 0; c < large; ++c)
    for (int v : cert.independent_classes[c]) owner[v] = c;

  // one preimage vertex per large class, then one per singleton class in
  // order of their lowest (only) vertex
  std::vector<int> singleton_order(small);
  for (int i = 0; i < small; ++i) singleton_order[i] = i;
  std::sort(singleton_order.begin(), singleton_order.end(), [&](int a, int b) {
    return cert.singleton_classes[a][0] < cert.singleton_classes[b][0];
  });

  EdgeList h_edges;
  std::vector<std::pair<int, int>> block_ends(cert.edge_blocks.size());
  std::vector<std::vector<int>> blocks_at(large);
  // excluded[c][block] = the class-c vertex missing from that block's part
  std::map<std::pair<int, std::size_t>, int> excluded;
  for (std::size_t bi = 0; bi < cert.edge_blocks.size(); ++bi) {
    std::set<int> verts;
    for (auto [u, v] : cert.edge_blocks[bi]) {
      verts.insert(u);
      verts.insert(v);
    }
    std::set<int> classes;
    for (int v : verts) classes.insert(owner[v]);
    auto it = classes.begin();
    int ca = *it++;
    int cb = *it;
    block_ends[bi] = {ca, cb};
    blocks_at[ca].push_back(static_cast<int>(bi));
    blocks_at[cb].push_back(static_cast<int>(bi));
    h_edges.emplace_back(ca, cb);
    for (int c : {ca, cb}) {
      for (int v : cert.independent_classes[c])
        if (!verts.count(v)) excluded[{c, bi}] = v;
    }
  }

  // leaves absorb the remaining degree of each large class
  int next_leaf = large;
  std::vector<int> leaf_class(small, -1);   // leaf order index -> singleton class
  std::vector<int> leaf_anchor(small, -1);  // leaf order index -> large class
  int used = 0;
  for (int c = 0; c < large; ++c) {
    int want = static_cast<int>(cert.independent_classes[c].size()) -
               static_cast<int>(blocks_at[c].size());
    for (int k = 0; k < want; ++k) {
      if (used >= small)
        throw Error(ErrorKind::Internal, "certificate balance exhausted singleton classes");
      leaf_class[used] = singleton_order[used];
      leaf_anchor[used] = c;
      h_edges.emplace_back(c, next_leaf);
      ++next_leaf;
      ++used;
    }
  }
  if (used != small)
    throw Error(ErrorKind::Internal, "certificate balance left singleton classes unused");

  Reconstruction out;
  out.h = Graph(large + small, std::move(h_edges));
  out.x = three_arc_graph(out.h);
  out.onto_g.assign(out.x.graph.n(), -1);

  // arcs out of class vertices: toward another class through its block's
  // excluded vertex, toward a leaf through the unmatched class vertices
  for (int c = 0; c < large; ++c) {
    VertexSet unmatched = cert.independent_classes[c];
    for (int bi : blocks_at[c]) {
      int v = excluded.at({c, static_cast<std::size_t>(bi)});
      unmatched.erase(std::remove(unmatched.begin(), unmatched.end(), v), unmatched.end());
    }
    std::size_t next_unmatched = 0;
    for (int nb : out.h.neighbors(c)) {
      int xid = out.x.vertex_of({c, nb});
      if (nb < large) {
        // the unique block joining classes c and nb
        int found = -1;
        for (int bi : blocks_at[c])
          if (block_ends[bi] == std::make_pair(std::min(c, nb), std::max(c, nb)) ||
              block_ends[bi] == std::make_pair(std::max(c, nb), std::min(c, nb)))
            found = bi;
        out.onto_g[xid] = excluded.at({c, static_cast<std::size_t>(found)});
      } else {
        out.onto_g[xid] = unmatched.at(next_unmatched++);
      }
    }
  }
  // arcs out of leaves land on their singleton classes
  for (int li = 0; li < small; ++li) {
    int leaf = large + li;
    int xid = out.x.vertex_of({leaf, leaf_anchor[li]});
    out.onto_g[xid] = cert.singleton_classes[leaf_class[li]][0];
  }

  // the map must be a bijection carrying edges onto edges
  if (out.x.graph.n() != g.n())
    throw Error(ErrorKind::Internal, "reconstructed arc graph has the wrong order");
  std::vector<char> seen(g.n(), 0);
  for (int v : out.onto_g) {
    if (v < 0 || seen[v])
      throw Error(ErrorKind::Internal, "reconstructed map is not a bijection");
    seen[v] = 1;
  }
  for (int a = 0; a < out.x.graph.n(); ++a)
    for (int b = a + 1; b < out.x.graph.n(); ++b)
      if (out.x.graph.adjacent(a, b) != g.adjacent(out.onto_g[a], out.onto_g[b]))
        throw Error(ErrorKind::Internal,
                    "reconstructed arc graph is not isomorphic to the input");
  return out;
}

ConeEmbedding embed_in_cone_check(const Graph& h) {
  Graph star = cone(h);
  int apex = h.n();
  auto x = three_arc_graph(star);
  ConeEmbedding out;
  out.arc_vertex.resize(h.n());
  for (int v = 0; v < h.n(); ++v) out.arc_vertex[v] = x.vertex_of({v, apex});
  out.ok = true;
  for (int u = 0; u < h.n() && out.ok; ++u)
    for (int v = u + 1; v < h.n(); ++v)
      if (x.graph.adjacent(out.arc_vertex[u], out.arc_vertex[v]) != h.adjacent(u, v)) {
        out.ok = false;
        break;
      }
  return out;
}

RecognitionResult recognize_small(const Graph& g, const RecognitionLimits& limits) {
  if (g.n() % 2 != 0)
    throw Error(ErrorKind::Validation,
                "arc graphs have even order; got " + std::to_string(g.n()));
  if (g.n() > limits.max_order)
    throw Error(ErrorKind::ResourceLimit,
                "recognition limited to order " + std::to_string(limits.max_order));
  RecognitionResult out;
  if (g.n() == 0) {
    out.preimage = Graph();
    out.certificate = CharacterizationCertificate{};
    return out;
  }
  int m = g.n() / 2;
  for (const Graph& h : graphs_with_edge_count(m)) {
    auto x = three_arc_graph(h);
    if (!find_isomorphism(x.graph, g).has_value()) continue;
    if (!out.preimage) {
      out.preimage = h;
      out.certificate = derive_certificate(h);
      if (!limits.list_all) return out;
    }
    bool fresh = true;
    for (const Graph& known : out.all_preimages)
      if (find_isomorphism(known, h).has_value()) fresh = false;
    if (fresh) out.all_preimages.push_back(h);
  }
  return out;
}

}  // namespace arcdom
