#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "degseq/recognize.hpp"
#include "degseq/structure.hpp"
#include "degseq/transform.hpp"
#include "oracles.hpp"

using namespace degseq;

TEST_CASE("is_connected") {
  CHECK(is_connected(path_graph(5)));
  CHECK_FALSE(is_connected(clique_union_graph(ClassSignature{3, 4})));
  for (const Graph& g : enumerate_class(ClassSignature{3, 4}).representatives)
    CHECK(is_connected(g));
}

TEST_CASE("block_decomposition") {
  SUBCASE("path") {
    const auto d = block_decomposition(path_graph(5));
    CHECK(d.cut_vertices == std::vector<int>{1, 2, 3});
    CHECK(d.bridges.size() == 4);
    CHECK(d.blocks.size() == 4);
  }
  SUBCASE("cube has no cuts or bridges") {
    const auto d = block_decomposition(cube_graph());
    CHECK(d.cut_vertices.empty());
    CHECK(d.bridges.empty());
    CHECK(d.blocks.size() == 1);
  }
  SUBCASE("pendant family") {
    const auto d = block_decomposition(pendant_family(4));
    CHECK(d.cut_vertices.size() == 2);
    CHECK(d.bridges.size() == 2);
  }
  SUBCASE("bridges are 2-vertex blocks; every edge in exactly one block") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 80; ++trial) {
      const Graph g = oracles::random_graph(2 + int(rng() % 9), 0.3, rng);
      const auto d = block_decomposition(g);
      for (auto [u, v] : d.bridges) {
        bool found = false;
        for (const auto& blk : d.blocks)
          if (blk == std::vector<int>{u, v}) found = true;
        CHECK(found);
      }
      std::set<VertexPair> covered;
      std::size_t block_edges = 0;
      for (const auto& blk : d.blocks) {
        for (std::size_t i = 0; i < blk.size(); ++i)
          for (std::size_t j = i + 1; j < blk.size(); ++j)
            if (g.has_edge(blk[i], blk[j])) {
              ++block_edges;
              covered.emplace(blk[i], blk[j]);
            }
      }
      CHECK(covered.size() == g.edge_count());
      CHECK(block_edges == g.edge_count());  // no edge shared between blocks
    }
  }
  SUBCASE("agrees with the delete-and-recount oracle") {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 120; ++trial) {
      const Graph g = oracles::random_graph(2 + int(rng() % 9), 0.35, rng);
      const auto d = block_decomposition(g);
      CHECK(d.cut_vertices == oracles::brute_cut_vertices(g));
      auto bridges = oracles::brute_bridges(g);
      std::sort(bridges.begin(), bridges.end());
      CHECK(d.bridges == bridges);
    }
  }
}

TEST_CASE("separability_case") {
  CHECK(separability_case(path_graph(5)) == 5);
  CHECK(separability_case(twin_bridge_two_cliques(4, 6)) == 1);
  CHECK(separability_case(pendant_family(5)) == 4);

  SUBCASE("a member of {3,5} hits case 2") {
    bool found = false;
    for (const Graph& g :
         enumerate_class(ClassSignature{3, 5}).representatives)
      if (separability_case(g) == 2) found = true;
    CHECK(found);
  }
  SUBCASE("members never fall outside the table") {
    for (auto sig : {ClassSignature{3, 4}, ClassSignature{4, 4}})
      for (const Graph& g : enumerate_class(sig).representatives)
        CHECK(separability_case(g) != 0);
  }
}

TEST_CASE("diameter") {
  CHECK(diameter(complete_graph(6)) == 1);
  CHECK(diameter(path_graph(5)) == 4);
  CHECK_FALSE(diameter(clique_union_graph(ClassSignature{3, 4})).has_value());
  CHECK(diameter(Graph(1, {})) == 0);

  SUBCASE("some member of {3,4} has diameter 2") {
    bool found = false;
    for (const Graph& g :
         enumerate_class(ClassSignature{3, 4}).representatives)
      if (diameter(g) == 2) found = true;
    CHECK(found);
  }
}

TEST_CASE("bipartition") {
  SUBCASE("C6 splits evenly") {
    const auto r = bipartition(cycle_graph(6));
    REQUIRE(r.parts);
    CHECK(r.parts->left.size() == 3);
    CHECK(r.parts->right.size() == 3);
    CHECK(r.odd_cycle.empty());
  }
  SUBCASE("C5 yields itself as certificate") {
    const auto r = bipartition(cycle_graph(5));
    CHECK_FALSE(r.parts);
    CHECK(r.odd_cycle.size() == 5);
  }
  SUBCASE("prism certificate is a triangle") {
    const auto r = bipartition(complement(cycle_graph(6)));
    CHECK_FALSE(r.parts);
    CHECK(r.odd_cycle.size() == 3);
  }
  SUBCASE("certificates are genuine odd cycles") {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 80; ++trial) {
      const Graph g = oracles::random_graph(3 + int(rng() % 8), 0.4, rng);
      const auto r = bipartition(g);
      if (r.parts) {
        for (int u : r.parts->left)
          for (int v : r.parts->left) CHECK_FALSE(g.has_edge(u, v));
        for (int u : r.parts->right)
          for (int v : r.parts->right) CHECK_FALSE(g.has_edge(u, v));
      } else {
        const auto& c = r.odd_cycle;
        REQUIRE(c.size() >= 3);
        CHECK(c.size() % 2 == 1);
        std::set<int> distinct(c.begin(), c.end());
        CHECK(distinct.size() == c.size());
        for (std::size_t i = 0; i < c.size(); ++i)
          CHECK(g.has_edge(c[i], c[(i + 1) % c.size()]));
      }
    }
  }
  SUBCASE("edgeless graphs keep both sides nonempty") {
    const auto r = bipartition(Graph(4, {}));
    REQUIRE(r.parts);
    CHECK(r.parts->left.size() >= 1);
    CHECK(r.parts->right.size() >= 1);
  }
}

TEST_CASE("bipartite_case") {
  SUBCASE("cube is case 3") {
    const Graph cube = cube_graph();
    const auto parts = bipartition(cube).parts;
    REQUIRE(parts);
    CHECK(bipartite_case(cube, *parts) == 3);
  }
  SUBCASE("P5 is case 2") {
    const Graph p5 = path_graph(5);
    const auto parts = bipartition(p5).parts;
    REQUIRE(parts);
    CHECK(parts->left.size() == 2);
    CHECK(parts->right.size() == 3);
    CHECK(bipartite_case(p5, *parts) == 2);
  }
  SUBCASE("a balanced bipartite member of {4,6} is case 1") {
    bool found = false;
    for (const Graph& g :
         enumerate_class(ClassSignature{4, 6}).representatives) {
      const auto r = bipartition(g);
      if (!r.parts || r.parts->left.size() != r.parts->right.size()) continue;
      found = true;
      CHECK(bipartite_case(g, *r.parts) == 1);
    }
    CHECK(found);
  }
  SUBCASE("non-members are rejected") {
    const auto parts = bipartition(cycle_graph(4)).parts;
    REQUIRE(parts);
    CHECK_THROWS_AS(bipartite_case(cycle_graph(4), *parts),
                    std::invalid_argument);
  }
}
