#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arcdom/constructions.hpp"
#include "arcdom/enumerate.hpp"
#include "arcdom/generators.hpp"
#include "arcdom/isomorphism.hpp"
#include "oracles.hpp"

using namespace arcdom;

namespace {

std::vector<Graph> delta2_corpus(int max_n) {
  return connected_min_degree_corpus(max_n, 2);
}

}  // namespace

TEST_CASE("seed partition") {
  SUBCASE("triangle around one vertex") {
    auto part = partition_swu(make_cycle(3), {0});
    CHECK(part.w == VertexSet{1, 2});
    CHECK(part.u.empty());
  }
  SUBCASE("4-cycle around opposite corners") {
    auto part = partition_swu(make_cycle(4), {0, 2});
    CHECK(part.w.empty());
    CHECK(part.u == VertexSet{1, 3});
  }
  SUBCASE("friendship center") {
    auto part = partition_swu(make_friendship(2), {0});
    CHECK(part.w == VertexSet{1, 2, 3, 4});
    CHECK(part.u.empty());
  }
  SUBCASE("non-dominating seeds are rejected with a witness") {
    try {
      partition_swu(make_cycle(4), {0});
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Validation);
      CHECK(std::string(e.what()).find("2") != std::string::npos);
    }
  }
}

TEST_CASE("seed arc triples") {
  SUBCASE("triangle") {
    auto sel = build_AS(make_cycle(3), {0});
    CHECK(sel.per_seed.at(0) == std::vector<Arc>{{0, 1}, {0, 2}, {2, 1}});
  }
  SUBCASE("complete graph avoids the first neighbour downstream") {
    auto sel = build_AS(make_complete(4), {0});
    CHECK(sel.per_seed.at(0) == std::vector<Arc>{{0, 1}, {0, 2}, {2, 3}});
  }
  SUBCASE("three arcs per seed before collisions") {
    for (const Graph& g : delta2_corpus(6)) {
      for (const auto& s : all_gamma_sets(g).sets) {
        auto sel = build_AS(g, s);
        CHECK(sel.arcs.size() <= 3 * s.size());
        for (const auto& [x, arcs] : sel.per_seed) {
          REQUIRE(arcs.size() == 3);
          CHECK(arcs[0].tail == x);
          CHECK(arcs[1].tail == x);
          CHECK(arcs[2].tail == arcs[1].head);
          CHECK(arcs[2].head != x);
          CHECK(g.adjacent(arcs[2].tail, arcs[2].head));
        }
      }
    }
  }
  SUBCASE("degree floor enforced") {
    try {
      build_AS(make_path(3), {1});
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Precondition);
    }
  }
}

TEST_CASE("restricted arc cover") {
  SUBCASE("triangle") {
    Graph g = make_cycle(3);
    auto cover = build_AD(g, partition_swu(g, {0}));
    CHECK(cover.dominators == VertexSet{1});
    CHECK(cover.arcs == std::vector<Arc>{{1, 0}});
  }
  SUBCASE("no fringe, no cover") {
    Graph g = make_cycle(4);
    auto cover = build_AD(g, partition_swu(g, {0, 2}));
    CHECK(cover.dominators.empty());
    CHECK(cover.arcs.empty());
  }
  SUBCASE("friendship graph needs one per triangle") {
    Graph g = make_friendship(2);
    auto cover = build_AD(g, partition_swu(g, {0}));
    CHECK(cover.arcs.size() == 2);
    for (const Arc& a : cover.arcs) CHECK(a.head == 0);
  }
}

TEST_CASE("general construction") {
  SUBCASE("triangle is tight at three arcs") {
    auto plan = general_construct(make_cycle(3));
    CHECK(plan.verified);
    CHECK(plan.size() == 3);
    CHECK(plan.bound == Rational(3));
    CHECK(plan.repair_case == "size1");
  }
  SUBCASE("friendship graphs hit the bound") {
    for (int k = 1; k <= 4; ++k) {
      auto plan = general_construct(make_friendship(k));
      CHECK(plan.verified);
      CHECK(plan.bound == Rational(k + 2));
      CHECK(plan.size() == k + 2);
    }
  }
  SUBCASE("4-cycle stays within its bound") {
    auto plan = general_construct(make_cycle(4));
    CHECK(plan.verified);
    CHECK(plan.bound == Rational(5));
    CHECK(plan.size() <= 5);
  }
  SUBCASE("bound values") {
    CHECK(general_bound(make_cycle(3)).value == 3);
    CHECK(general_bound(make_friendship(3)).value == 5);
    CHECK(general_bound(make_complete(4)).value == 3);
  }
  SUBCASE("degree floor enforced") {
    CHECK_THROWS_AS(general_construct(make_path(4)), Error);
  }
}

TEST_CASE("union and repair properties across every minimum seed set") {
  for (const Graph& g : delta2_corpus(6)) {
    auto x = three_arc_graph(g);
    for (const auto& s : all_gamma_sets(g).sets) {
      auto part = partition_swu(g, s);
      auto sel = build_AS(g, s);
      auto cover = build_AD(g, part);
      std::vector<Arc> both = sel.arcs;
      both.insert(both.end(), cover.arcs.begin(), cover.arcs.end());
      std::sort(both.begin(), both.end());
      both.erase(std::unique(both.begin(), both.end()), both.end());
      CHECK(arcs_dominate(x, both).dominating);

      auto plan = general_construct_for(g, s);
      CHECK(plan.verified);
      bool disjoint = both.size() == sel.arcs.size() + cover.arcs.size();
      bool full = sel.arcs.size() == 3 * s.size();
      if (disjoint && full) {
        CHECK(plan.size() <= static_cast<int>(both.size()) - 1);
        CHECK(plan.repair_case != "none");
      } else {
        // coincidences between seed triples already bank the saving
        CHECK(static_cast<int>(both.size()) <=
              3 * static_cast<int>(s.size()) + static_cast<int>(cover.arcs.size()) - 1);
      }
    }
  }
}

TEST_CASE("v1 cover") {
  SUBCASE("coronas are tight") {
    auto out = cover_v1(make_corona(make_cycle(3)));
    CHECK(out.certificate.size() == 3);
    CHECK(out.certificate.optimal);
    CHECK(out.tight);
  }
  SUBCASE("the 4-cycle is tight") {
    auto out = cover_v1(make_cycle(4));
    CHECK(out.certificate.size() == 2);
    CHECK(out.tight);
  }
  SUBCASE("the 5-cycle is not") {
    auto out = cover_v1(make_cycle(5));
    CHECK(out.certificate.size() == 2);
    CHECK_FALSE(out.tight);
  }
  SUBCASE("the path on four vertices is a corona") {
    CHECK(cover_v1(make_path(4)).tight);
  }
  SUBCASE("an isolated vertex spoils tightness") {
    Graph g = disjoint_union(make_cycle(4), Graph(1, {}));
    auto out = cover_v1(g);
    CHECK(out.certificate.size() == 2);
    CHECK_FALSE(out.tight);
  }
  SUBCASE("certificates verify and respect the half bound") {
    for (const Graph& g : oracle::fuzz_graphs(60, 8, 606)) {
      auto out = cover_v1(g);
      CHECK(verify_certificate(g, out.certificate));
      CHECK(2 * out.certificate.size() <= g.n());
    }
  }
}

TEST_CASE("corona recognition") {
  CHECK(is_corona_of_connected(make_path(2)));
  CHECK(is_corona_of_connected(make_path(4)));
  CHECK(is_corona_of_connected(make_corona(make_cycle(5))));
  CHECK(is_corona_of_connected(make_corona(make_path(3))));
  CHECK_FALSE(is_corona_of_connected(make_cycle(4)));
  CHECK_FALSE(is_corona_of_connected(make_complete_bipartite(1, 3)));
  CHECK_FALSE(is_corona_of_connected(make_cycle(6)));
}

TEST_CASE("v2 cover") {
  SUBCASE("cycles") {
    CHECK(cover_v2(make_cycle(5)).certificate.size() == 2);
    CHECK(cover_v2(make_cycle(6)).certificate.size() == 2);
  }
  SUBCASE("matchings have nothing to cover") {
    CHECK(cover_v2(oracle::matching_graph(5)).certificate.size() == 0);
  }
  SUBCASE("exceptional components are rejected") {
    CHECK_THROWS_AS(cover_v2(make_cycle(4)), Error);
    CHECK_THROWS_AS(cover_v2(make_cycle(7)), Error);
    CHECK_THROWS_AS(cover_v2(disjoint_union(make_cycle(5), make_cycle(4))), Error);
  }
  SUBCASE("triangle with a pendant needs one vertex") {
    Graph paw(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}});
    auto out = cover_v2(paw);
    CHECK(out.certificate.size() == 1);
    CHECK(out.aux.added_edges.size() == 1);
  }
  SUBCASE("random graphs verify within two fifths") {
    int done = 0;
    for (const Graph& g : oracle::fuzz_graphs(120, 8, 909)) {
      bool exceptional = false;
      for (const auto& comp : components(g))
        if (in_exceptional_family(induced_subgraph(g, comp).graph)) exceptional = true;
      if (exceptional) continue;
      ++done;
      auto out = cover_v2(g);
      CHECK(verify_certificate(g, out.certificate));
      CHECK(5 * out.certificate.size() <= 2 * g.n());
      if (out.aux.j.n() > 0) CHECK(out.aux.j.min_degree() >= 2);
    }
    CHECK(done > 60);
  }
}

TEST_CASE("v3 cover") {
  SUBCASE("complete graph needs one vertex") {
    CHECK(cover_v3(make_complete(4)).certificate.size() == 1);
  }
  SUBCASE("low-degree graphs have nothing to cover") {
    CHECK(cover_v3(make_cycle(5)).certificate.size() == 0);
  }
  SUBCASE("petersen") {
    auto out = cover_v3(make_petersen());
    CHECK(out.certificate.size() == 3);
    CHECK(8 * 3 <= 3 * (10 + 2));
  }
  SUBCASE("single pendant brings the two-vertex gadget") {
    Graph g(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}});
    auto out = cover_v3(g);
    CHECK(out.aux.gadget_vertices.size() == 2);
    CHECK(verify_certificate(g, out.certificate));
    for (int v : out.certificate.dominators) CHECK(v < g.n());
  }
  SUBCASE("two pendants glue into a clique gadget") {
    Graph g(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {1, 5}});
    auto out = cover_v3(g);
    CHECK(out.aux.gadget_vertices.size() == 2);
    CHECK(verify_certificate(g, out.certificate));
  }
  SUBCASE("three pendants close into a cycle") {
    Graph g(7, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {1, 5}, {2, 6}});
    auto out = cover_v3(g);
    CHECK(out.aux.gadget_vertices.empty());
    CHECK(out.aux.added_edges.size() == 3);
    CHECK(verify_certificate(g, out.certificate));
  }
  SUBCASE("a matched fringe pair stays consecutive on the cycle") {
    // K4 plus an edge w1-w2 hanging off vertices 0 and 1, plus a pendant on 2
    Graph g(7, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {4, 5}, {1, 5},
                {2, 6}});
    auto out = cover_v3(g);
    CHECK(verify_certificate(g, out.certificate));
    CHECK(8 * out.certificate.size() <= 3 * (g.n() + 2));
  }
  SUBCASE("random graphs verify within the bound") {
    for (const Graph& g : oracle::fuzz_graphs(80, 8, 1212)) {
      auto out = cover_v3(g);
      CHECK(verify_certificate(g, out.certificate));
      CHECK(8 * out.certificate.size() <= 3 * (g.n() + 2));
      for (int v : out.certificate.dominators) CHECK(v < g.n());
    }
  }
}

TEST_CASE("degree bounds") {
  SUBCASE("triangle") {
    auto b = degree_bounds(make_cycle(3));
    REQUIRE(b.delta2.has_value());
    CHECK(*b.delta2 == Rational(3));
    CHECK_FALSE(b.delta3.has_value());
  }
  SUBCASE("complete graph on four") {
    auto b = degree_bounds(make_complete(4));
    REQUIRE(b.delta3.has_value());
    CHECK(*b.delta3 == Rational(16, 5));
  }
  SUBCASE("petersen") {
    auto b = degree_bounds(make_petersen());
    REQUIRE(b.delta3.has_value());
    CHECK(*b.delta3 == Rational(58, 5));
    REQUIRE(b.degree_product.has_value());
    CHECK(*b.degree_product == Rational(12));
  }
  SUBCASE("complete graph on five") {
    auto b = degree_bounds(make_complete(5));
    REQUIRE(b.delta4.has_value());
    CHECK(*b.delta4 == Rational(17, 4));
  }
  SUBCASE("degree product needs order four") {
    CHECK_FALSE(degree_bounds(make_cycle(3)).degree_product.has_value());
    CHECK(degree_bounds(make_cycle(4)).degree_product.has_value());
  }
}

TEST_CASE("min-degree-3 construction") {
  SUBCASE("complete graph on four hits its floor") {
    auto plan = delta3_construct(make_complete(4));
    CHECK(plan.verified);
    CHECK(plan.size() <= 3);
    CHECK(plan.size() == oracle::brute_gamma(three_arc_graph(make_complete(4)).graph));
  }
  SUBCASE("complete bipartite 3x3") {
    auto plan = delta3_construct(make_complete_bipartite(3, 3));
    CHECK(plan.verified);
    CHECK(plan.size() <= 7);
  }
  SUBCASE("petersen") {
    auto plan = delta3_construct(make_petersen());
    CHECK(plan.verified);
    CHECK(plan.size() <= 11);
  }
  SUBCASE("wrong degree floor is rejected") {
    CHECK_THROWS_AS(delta3_construct(make_cycle(4)), Error);
    CHECK_THROWS_AS(delta3_construct(make_complete(5)), Error);
  }
  SUBCASE("the wheel routes through the fringe-component rewiring") {
    // removing the hub leaves a 4-cycle living entirely in the fringe
    Graph wheel = cone(make_cycle(4));
    auto plan = delta3_construct(wheel);
    CHECK(plan.verified);
    CHECK(plan.size() == 3);  // optimal: the arc graph needs three
    CHECK(plan.size() ==
          gamma_exact(three_arc_graph(wheel).graph).size());
  }
  SUBCASE("every small cubic-floor graph verifies within the bound") {
    for (const Graph& g : connected_min_degree_corpus(7, 3)) {
      if (g.min_degree() != 3) continue;
      auto plan = delta3_construct(g);
      CHECK(plan.verified);
      auto b = degree_bounds(g);
      REQUIRE(b.delta3.has_value());
      CHECK(Rational(plan.size()) <= *b.delta3);
    }
  }
}

TEST_CASE("claw-free construction") {
  SUBCASE("bowtie is tight at four arcs") {
    Graph g = make_friendship(2);
    auto plan = clawfree_construct(g);
    CHECK(plan.verified);
    CHECK(plan.size() == 4);
    CHECK(oracle::brute_gamma(three_arc_graph(g).graph) == 4);
  }
  SUBCASE("complete graph on four") {
    auto plan = clawfree_construct(make_complete(4));
    CHECK(plan.verified);
    CHECK(plan.size() <= 4);
  }
  SUBCASE("5-cycle uses all eight arcs") {
    auto plan = clawfree_construct(make_cycle(5));
    CHECK(plan.verified);
    CHECK(plan.size() == 8);
  }
  SUBCASE("claws are rejected with a witness") {
    try {
      clawfree_construct(make_complete_bipartite(1, 3));
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Precondition);
      CHECK(std::string(e.what()).find("claw") != std::string::npos);
    }
  }
  SUBCASE("glued cliques achieve equality") {
    for (auto [s, t] : std::vector<std::pair<int, int>>{{3, 3}, {3, 4}, {3, 5},
                                                        {4, 4}, {4, 5}, {5, 5}}) {
      Graph g = make_two_cliques(s, t);
      auto plan = clawfree_construct(g);
      CHECK(plan.verified);
      CHECK(plan.size() == 4);
      CHECK(gamma_exact(three_arc_graph(g).graph).size() == 4);
    }
  }
  SUBCASE("sweep of small claw-free graphs") {
    for (const Graph& g : delta2_corpus(6)) {
      if (!is_claw_free(g)) continue;
      auto plan = clawfree_construct(g);
      CHECK(plan.verified);
      CHECK(plan.size() <= 4 * gamma_exact(g).size());
      CHECK(gamma_exact(three_arc_graph(g).graph).size() >= 3);
    }
  }
}
