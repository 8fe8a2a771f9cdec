#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "arcdom/generators.hpp"
#include "arcdom/isomorphism.hpp"
#include "oracles.hpp"

using namespace arcdom;

TEST_CASE("walk enumeration") {
  SUBCASE("triangle has six walks") {
    auto walks = all_three_arcs(make_cycle(3));
    CHECK(walks.size() == 6);
    CHECK(walks == oracle::brute_three_arcs(make_cycle(3)));
    for (const auto& t : walks) CHECK(t.v == t.y);  // all wrap around
  }
  SUBCASE("a single edge has none") {
    CHECK(all_three_arcs(Graph(2, {{0, 1}})).empty());
  }
  SUBCASE("the star has none") {
    CHECK(all_three_arcs(make_complete_bipartite(1, 3)).empty());
  }
  SUBCASE("matches the exhaustive filter and is self-paired") {
    for (const Graph& g : oracle::fuzz_graphs(40, 6, 7070)) {
      auto walks = all_three_arcs(g);
      CHECK(walks == oracle::brute_three_arcs(g));
      CHECK(is_self_paired(walks));
    }
  }
}

TEST_CASE("arc graph construction") {
  SUBCASE("triangle gives three disjoint edges") {
    auto x = three_arc_graph(make_cycle(3));
    CHECK(x.graph.n() == 6);
    CHECK(is_isomorphic(x.graph, oracle::matching_graph(3)));
    // lexicographic labels
    std::vector<Arc> want{{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}};
    CHECK(x.labels == want);
  }
  SUBCASE("cycles give perfect matchings") {
    for (int n = 4; n <= 6; ++n)
      CHECK(is_isomorphic(three_arc_graph(make_cycle(n)).graph, oracle::matching_graph(n)));
  }
  SUBCASE("the star gives an edgeless graph") {
    auto x = three_arc_graph(make_complete_bipartite(1, 3));
    CHECK(x.graph.n() == 6);
    CHECK(x.graph.m() == 0);
  }
  SUBCASE("adjacency agrees with the walk oracle") {
    for (const Graph& g : oracle::fuzz_graphs(40, 6, 1234)) {
      auto x = three_arc_graph(g);
      CHECK(x.graph == oracle::brute_x(g));
      CHECK(x.graph.n() == 2 * g.m());
    }
  }
  SUBCASE("every edge satisfies the walk conditions") {
    for (const Graph& g : oracle::fuzz_graphs(30, 7, 4321)) {
      auto x = three_arc_graph(g);
      for (const auto& [a, b] : x.graph.edges()) {
        Arc p = x.labels[a], q = x.labels[b];
        CHECK(g.adjacent(p.tail, q.tail));
        CHECK(p.head != q.tail);
        CHECK(q.head != p.tail);
      }
    }
  }
  SUBCASE("arcs out of leaves are isolated") {
    Graph g = make_corona(make_cycle(4));
    auto x = three_arc_graph(g);
    for (int id = 0; id < x.graph.n(); ++id)
      if (g.degree(x.labels[id].tail) == 1) CHECK(x.graph.degree(id) == 0);
  }
}

TEST_CASE("restricted walk sets") {
  Graph g = make_cycle(5);
  auto all = all_three_arcs(g);

  SUBCASE("the full set reproduces the default") {
    CHECK(three_arc_graph(g, all).graph == three_arc_graph(g).graph);
  }
  SUBCASE("the empty set gives no edges") {
    CHECK(three_arc_graph(g, std::vector<ThreeArc>{}).graph.m() == 0);
  }
  SUBCASE("non-self-paired input is rejected with the tuple") {
    std::vector<ThreeArc> bad{all[0]};
    try {
      three_arc_graph(g, bad);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Validation);
      CHECK(std::string(e.what()).find("self-paired") != std::string::npos);
    }
  }
  SUBCASE("tuples that are not walks are rejected") {
    std::vector<ThreeArc> bad{{0, 0, 0, 0}};
    CHECK_THROWS_AS(three_arc_graph(g, bad), Error);
  }
  SUBCASE("edge sets grow with the walk set") {
    std::mt19937_64 rng(99);
    for (const Graph& h : oracle::fuzz_graphs(20, 6, 3131)) {
      auto walks = all_three_arcs(h);
      std::vector<ThreeArc> small, large;
      for (const auto& t : walks) {
        bool in_large = rng() % 2 == 0;
        bool in_small = in_large && rng() % 2 == 0;
        if (in_large) {
          large.push_back(t);
          large.push_back(t.reversed());
        }
        if (in_small) {
          small.push_back(t);
          small.push_back(t.reversed());
        }
      }
      auto es = three_arc_graph(h, small).graph.edges();
      auto el = three_arc_graph(h, large).graph.edges();
      for (const auto& e : es)
        CHECK(std::find(el.begin(), el.end(), e) != el.end());
    }
  }
}

TEST_CASE("directed arc graphs") {
  SUBCASE("a directed 2-cycle gives two isolated vertices") {
    DiGraph d(2, {{0, 1}, {1, 0}});
    auto x = three_arc_graph(d);
    CHECK(x.graph.n() == 2);
    CHECK(x.graph.m() == 0);
  }
  SUBCASE("a directed triangle gives three isolated vertices") {
    DiGraph d(3, {{0, 1}, {1, 2}, {2, 0}});
    auto x = three_arc_graph(d);
    CHECK(x.graph.n() == 3);
    CHECK(x.graph.m() == 0);
  }
  SUBCASE("the symmetric orientation contains the undirected arc graph") {
    for (const Graph& g : oracle::fuzz_graphs(5, 6, 808)) {
      EdgeList arcs;
      for (const auto& [u, v] : g.edges()) {
        arcs.emplace_back(u, v);
        arcs.emplace_back(v, u);
      }
      auto xd = three_arc_graph(DiGraph(g.n(), arcs));
      auto xg = three_arc_graph(g);
      REQUIRE(xd.labels == xg.labels);
      for (const auto& e : xg.graph.edges())
        CHECK(xd.graph.adjacent(e.first, e.second));
    }
  }
}

TEST_CASE("iterated arc graphs") {
  SUBCASE("second iterate of the triangle is edgeless") {
    auto x = iterate_three_arc_graph(make_cycle(3), 2);
    CHECK(x.graph.n() == 6);
    CHECK(x.graph.m() == 0);
  }
  SUBCASE("one iteration is the plain operation") {
    for (const Graph& g : oracle::fuzz_graphs(15, 6, 2222))
      CHECK(iterate_three_arc_graph(g, 1).graph == three_arc_graph(g).graph);
  }
  SUBCASE("the vertex cap names the failing stage") {
    try {
      iterate_three_arc_graph(make_complete(5), 3, 50);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ResourceLimit);
      CHECK(std::string(e.what()).find("stage") != std::string::npos);
    }
  }
  SUBCASE("order doubles the edge count at every stage") {
    Graph g = make_complete(4);
    auto x1 = three_arc_graph(g);
    CHECK(x1.graph.n() == 2 * g.m());
    auto x2 = iterate_three_arc_graph(g, 2, 1000);
    CHECK(x2.graph.n() == 2 * x1.graph.m());
  }
}

TEST_CASE("label sidecar") {
  auto x = three_arc_graph(Graph(2, {{0, 1}}));
  CHECK(label_table(x) == "0: 0->1\n1: 1->0\n");
}
