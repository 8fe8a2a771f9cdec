#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arcdom/enumerate.hpp"
#include "arcdom/generators.hpp"
#include "arcdom/isomorphism.hpp"
#include "arcdom/recognition.hpp"
#include "oracles.hpp"

using namespace arcdom;

namespace {

bool has_single_edge_component(const Graph& g) {
  for (const auto& comp : components(g))
    if (comp.size() == 2) return true;
  return false;
}

}  // namespace

TEST_CASE("cones") {
  CHECK(is_isomorphic(cone(Graph(3, {})), make_complete_bipartite(1, 3)));
  CHECK(is_isomorphic(cone(make_complete(3)), make_complete(4)));
  SUBCASE("cone of the 4-cycle is the wheel") {
    Graph wheel(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 4}, {2, 4}, {3, 4}});
    CHECK(is_isomorphic(cone(make_cycle(4)), wheel));
  }
}

TEST_CASE("cone embedding") {
  CHECK(embed_in_cone_check(make_path(3)).ok);
  CHECK(embed_in_cone_check(Graph(5, {})).ok);
  CHECK(embed_in_cone_check(make_petersen()).ok);
  SUBCASE("holds across a fuzz corpus") {
    for (const Graph& g : oracle::fuzz_graphs(30, 7, 515)) CHECK(embed_in_cone_check(g).ok);
  }
}

TEST_CASE("certificate derivation") {
  SUBCASE("triangle") {
    auto cert = derive_certificate(make_cycle(3));
    CHECK(cert.singleton_classes.empty());
    REQUIRE(cert.independent_classes.size() == 3);
    for (const auto& cls : cert.independent_classes) CHECK(cls.size() == 2);
    REQUIRE(cert.edge_blocks.size() == 3);
    for (const auto& block : cert.edge_blocks) CHECK(block.size() == 1);
    CHECK(verify_certificate(three_arc_graph(make_cycle(3)).graph, cert).ok);
  }
  SUBCASE("star") {
    auto cert = derive_certificate(make_complete_bipartite(1, 3));
    CHECK(cert.singleton_classes.size() == 3);
    REQUIRE(cert.independent_classes.size() == 1);
    CHECK(cert.independent_classes[0].size() == 3);
    CHECK(cert.edge_blocks.empty());
    CHECK(verify_certificate(three_arc_graph(make_complete_bipartite(1, 3)).graph, cert).ok);
  }
  SUBCASE("path on four vertices") {
    auto cert = derive_certificate(make_path(4));
    CHECK(cert.singleton_classes.size() == 2);
    CHECK(cert.independent_classes.size() == 2);
    CHECK(cert.edge_blocks.size() == 1);
    CHECK(verify_certificate(three_arc_graph(make_path(4)).graph, cert).ok);
  }
  SUBCASE("edgeless inputs are rejected") {
    CHECK_THROWS_AS(derive_certificate(Graph(3, {})), Error);
  }
}

TEST_CASE("certificate verification") {
  SUBCASE("derived certificates pass on a fuzz corpus") {
    for (const Graph& h : oracle::fuzz_graphs(60, 6, 626)) {
      if (h.m() < 1 || has_single_edge_component(h)) continue;
      auto x = three_arc_graph(h);
      CHECK(verify_certificate(x.graph, derive_certificate(h)).ok);
    }
  }
  SUBCASE("a lone-edge component breaks the block count") {
    Graph h = disjoint_union(Graph(2, {{0, 1}}), make_cycle(3));
    auto check = verify_certificate(three_arc_graph(h).graph, derive_certificate(h));
    CHECK_FALSE(check.ok);
    CHECK(check.violated == "e");
  }
  SUBCASE("all singletons on the 4-cycle fail the count") {
    CharacterizationCertificate cert;
    for (int v = 0; v < 4; ++v) cert.singleton_classes.push_back({v});
    auto check = verify_certificate(make_cycle(4), cert);
    CHECK_FALSE(check.ok);
    CHECK(check.violated == "e");
  }
  SUBCASE("a pair moved into the singletons fails the size clause") {
    Graph p4 = make_path(4);
    auto cert = derive_certificate(p4);
    auto moved = cert.independent_classes.back();
    cert.independent_classes.pop_back();
    cert.singleton_classes.push_back(moved);
    auto check = verify_certificate(three_arc_graph(p4).graph, cert);
    CHECK_FALSE(check.ok);
    CHECK(check.violated == "a");
  }
  SUBCASE("paired single-edge blocks over the same classes are rejected") {
    // C4 would wrongly verify without the distinct-pair clause
    Graph c4 = make_cycle(4);
    CharacterizationCertificate cert;
    cert.independent_classes = {{0, 2}, {1, 3}};
    cert.edge_blocks = {{{0, 1}}, {{2, 3}}};
    auto check = verify_certificate(c4, cert);
    CHECK_FALSE(check.ok);
    CHECK(check.violated == "d");
  }
  SUBCASE("malformed certificates raise validation errors") {
    Graph c3x = three_arc_graph(make_cycle(3)).graph;
    auto cert = derive_certificate(make_cycle(3));
    auto broken = cert;
    broken.independent_classes[0].push_back(99);
    CHECK_THROWS_AS(verify_certificate(c3x, broken), Error);
    broken = cert;
    broken.edge_blocks[0].push_back(broken.edge_blocks[1][0]);
    CHECK_THROWS_AS(verify_certificate(c3x, broken), Error);
  }
}

TEST_CASE("preimage reconstruction") {
  SUBCASE("triangle round trip") {
    Graph h = make_cycle(3);
    auto x = three_arc_graph(h);
    auto rec = construct_preimage(x.graph, derive_certificate(h));
    CHECK(is_isomorphic(rec.h, h));
  }
  SUBCASE("path round trip") {
    Graph h = make_path(4);
    auto x = three_arc_graph(h);
    auto rec = construct_preimage(x.graph, derive_certificate(h));
    CHECK(is_isomorphic(rec.h, h));
  }
  SUBCASE("complete graph reconstructs up to arc-graph isomorphism") {
    Graph h = make_complete(4);
    auto x = three_arc_graph(h);
    auto rec = construct_preimage(x.graph, derive_certificate(h));
    CHECK(is_isomorphic(three_arc_graph(rec.h).graph, x.graph));
  }
  SUBCASE("the returned map is an explicit isomorphism") {
    Graph h = make_cycle(5);
    auto x = three_arc_graph(h);
    auto rec = construct_preimage(x.graph, derive_certificate(h));
    REQUIRE(rec.onto_g.size() == static_cast<std::size_t>(x.graph.n()));
    for (int a = 0; a < rec.x.graph.n(); ++a)
      for (int b = a + 1; b < rec.x.graph.n(); ++b)
        CHECK(rec.x.graph.adjacent(a, b) ==
              x.graph.adjacent(rec.onto_g[a], rec.onto_g[b]));
  }
  SUBCASE("invalid certificates are rejected up front") {
    CharacterizationCertificate cert;
    for (int v = 0; v < 4; ++v) cert.singleton_classes.push_back({v});
    CHECK_THROWS_AS(construct_preimage(make_cycle(4), cert), Error);
  }
}

TEST_CASE("preimage search") {
  SUBCASE("three disjoint edges come from the triangle") {
    auto result = recognize_small(oracle::matching_graph(3));
    REQUIRE(result.preimage.has_value());
    CHECK(is_isomorphic(*result.preimage, make_cycle(3)));
  }
  SUBCASE("odd order is rejected") {
    CHECK_THROWS_AS(recognize_small(make_complete(3)), Error);
  }
  SUBCASE("the edgeless graph on six vertices has a three-edge preimage") {
    auto result = recognize_small(Graph(6, {}));
    REQUIRE(result.preimage.has_value());
    CHECK(result.preimage->m() == 3);
    CHECK(is_isomorphic(*result.preimage, make_complete_bipartite(1, 3)));
  }
  SUBCASE("multiple preimages are reported when asked") {
    RecognitionLimits limits;
    limits.list_all = true;
    auto result = recognize_small(Graph(6, {}), limits);
    CHECK(result.all_preimages.size() >= 3);  // star, path+edge, three edges
  }
  SUBCASE("the 4-cycle has no preimage") {
    auto result = recognize_small(make_cycle(4));
    CHECK_FALSE(result.preimage.has_value());
  }
  SUBCASE("the order budget raises a resource error") {
    RecognitionLimits limits;
    limits.max_order = 4;
    CHECK_THROWS_AS(recognize_small(Graph(6, {}), limits), Error);
  }
  SUBCASE("sound and complete over all small preimages") {
    for (int m = 1; m <= 5; ++m) {
      for (const Graph& h : graphs_with_edge_count(m)) {
        auto x = three_arc_graph(h);
        auto result = recognize_small(x.graph);
        REQUIRE(result.preimage.has_value());
        CHECK(is_isomorphic(three_arc_graph(*result.preimage).graph, x.graph));
      }
    }
  }
}
