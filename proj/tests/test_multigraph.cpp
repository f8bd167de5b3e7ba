#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "subcubic/blocks.hpp"
#include "subcubic/canonical.hpp"
#include "subcubic/errors.hpp"
#include "subcubic/families.hpp"
#include "subcubic/multigraph.hpp"

using namespace subcubic;

TEST_CASE("construction and degree") {
  Multigraph c1 = Multigraph::from_pairs(1, {{0, 0}});
  CHECK(c1.degree(0) == 2);  // loop counts twice
  CHECK(c1.loop_count(0) == 1);

  Multigraph k4 = complete_graph(4);
  for (Vertex v = 0; v < 4; ++v) CHECK(k4.degree(v) == 3);
  CHECK(path_graph(3).degree(1) == 2);

  // theta: three parallel edges give both vertices degree exactly 3
  Multigraph theta = Multigraph::from_pairs(2, {{0, 1}, {0, 1}, {0, 1}});
  CHECK(theta.degree(0) == 3);
  CHECK_FALSE(theta.is_simple());

  CHECK_THROWS_AS(Multigraph::from_pairs(2, {{0, 1}, {0, 1}, {0, 1}, {0, 1}}),
                  DegreeExceeded);
  CHECK_THROWS_AS(Multigraph::from_pairs(2, {{0, 2}}), BadEndpoint);
  CHECK_THROWS_AS(Multigraph::from_pairs(1, {{0, 0}, {0, 0}}), DegreeExceeded);
}

TEST_CASE("subdivide_edge") {
  Multigraph c1 = cycle_graph(1);
  CHECK(canonical_code(c1.subdivide_edge(0)) == canonical_code(cycle_graph(2)));
  CHECK(canonical_code(cycle_graph(4).subdivide_edge(1)) ==
        canonical_code(cycle_graph(5)));

  Multigraph k4p = complete_graph(4).subdivide_edge(0);
  CHECK(k4p.vertex_count() == 5);
  CHECK(k4p.edge_count() == 7);
  CHECK(canonical_code(k4p) == canonical_code(default_catalog().named("K4plus")));

  // vertex/edge counts and girth monotonicity
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    Multigraph g = oracles::random_subcubic(rng, 6, true);
    if (g.edge_count() == 0) continue;
    EdgeId e = std::uniform_int_distribution<int>(0, g.edge_count() - 1)(rng);
    Multigraph h = g.subdivide_edge(e);
    CHECK(h.vertex_count() == g.vertex_count() + 1);
    CHECK(h.edge_count() == g.edge_count() + 1);
    auto before = g.girth(), after = h.girth();
    if (before) {
      REQUIRE(after);
      CHECK(*after >= *before);
    } else {
      CHECK(!after);
    }
  }
}

TEST_CASE("suppress_vertex") {
  CHECK(canonical_code(cycle_graph(3).suppress_vertex(0)) ==
        canonical_code(cycle_graph(2)));
  CHECK(canonical_code(cycle_graph(2).suppress_vertex(1)) ==
        canonical_code(cycle_graph(1)));
  Multigraph k4p = default_catalog().named("K4plus");
  Vertex deg2 = degree_two_vertices(k4p).front();
  CHECK(canonical_code(k4p.suppress_vertex(deg2)) ==
        canonical_code(complete_graph(4)));

  CHECK_THROWS_AS(complete_graph(4).suppress_vertex(0), NotDegreeTwo);
  CHECK_THROWS_AS(cycle_graph(1).suppress_vertex(0), LoopAtVertex);

  // subdivision and suppression are mutually inverse up to isomorphism
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    Multigraph g = oracles::random_subcubic(rng, 6, true);
    if (g.edge_count() == 0) continue;
    EdgeId e = std::uniform_int_distribution<int>(0, g.edge_count() - 1)(rng);
    Multigraph h = g.subdivide_edge(e);
    CHECK(canonical_code(h.suppress_vertex(g.vertex_count())) == canonical_code(g));
  }
}

TEST_CASE("circ operation") {
  // C1 circ (loop, loop, 0) = K4
  CHECK(canonical_code(cycle_graph(1).circ(0, 0, 0)) ==
        canonical_code(complete_graph(4)));
  CHECK_THROWS_AS(complete_graph(4).circ(0, 1, 0), NotDegreeTwo);

  Multigraph c2 = cycle_graph(2);
  Multigraph r = c2.circ(0, 1, 0);
  CHECK(r.vertex_count() == 5);
  CHECK(r.edge_count() == 7);

  // adds exactly 3 vertices and 5 edges
  std::mt19937 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    Multigraph g = oracles::random_subcubic(rng, 7, true);
    auto deg2 = degree_two_vertices(g);
    if (deg2.empty() || g.edge_count() == 0) continue;
    std::uniform_int_distribution<int> pick(0, g.edge_count() - 1);
    Multigraph h = g.circ(pick(rng), pick(rng), deg2.front());
    CHECK(h.vertex_count() == g.vertex_count() + 3);
    CHECK(h.edge_count() == g.edge_count() + 5);
    CHECK(h.degree(deg2.front()) == 3);
  }
}

TEST_CASE("girth") {
  CHECK(complete_graph(4).girth() == 3);
  CHECK(default_catalog().named("Petersen").girth() == 5);
  CHECK(!path_graph(5).girth().has_value());
  CHECK(cycle_graph(1).girth() == 1);
  CHECK(cycle_graph(2).girth() == 2);
  CHECK(default_catalog().named("Q3").girth() == 4);
  CHECK(default_catalog().named("Dodecahedron").girth() == 5);
}

TEST_CASE("short_cycles against subset oracle") {
  Multigraph k4 = complete_graph(4);
  CHECK(k4.short_cycles(4).size() == 4);  // the four triangles
  CHECK(default_catalog().named("Petersen").short_cycles(5).empty());
  CHECK(default_catalog().named("Q3").short_cycles(5).size() == 6);

  std::mt19937 rng(17);
  for (int trial = 0; trial < 80; ++trial) {
    Multigraph g = oracles::random_subcubic(rng, 7, true);
    for (int girth_class : {4, 5}) {
      auto got = g.short_cycles(girth_class);
      auto want = oracles::brute_cycle_sets(g, girth_class - 1);
      CHECK(std::set<std::vector<Vertex>>(got.begin(), got.end()) == want);
    }
  }
}

TEST_CASE("two disjoint short cycles") {
  CHECK(default_catalog().named("Q3").has_two_disjoint_short_cycles(5));
  CHECK_FALSE(default_catalog().named("Petersen").has_two_disjoint_short_cycles(5));
  CHECK_FALSE(complete_graph(4).has_two_disjoint_short_cycles(4));
  // brute-force agreement over all pairs
  std::mt19937 rng(19);
  for (int trial = 0; trial < 60; ++trial) {
    Multigraph g = oracles::random_subcubic(rng, 8, true);
    for (int girth_class : {4, 5}) {
      auto cycles = oracles::brute_cycle_sets(g, girth_class - 1);
      bool want = false;
      for (auto a = cycles.begin(); a != cycles.end(); ++a)
        for (auto b = std::next(a); b != cycles.end(); ++b) {
          std::vector<Vertex> inter;
          std::set_intersection(a->begin(), a->end(), b->begin(), b->end(),
                                std::back_inserter(inter));
          if (inter.empty()) want = true;
        }
      CHECK(g.has_two_disjoint_short_cycles(girth_class) == want);
    }
  }
}

TEST_CASE("block decomposition") {
  auto d = block_decomposition(path_graph(3));
  CHECK(d.blocks.size() == 2);
  CHECK(d.cut_vertices == std::vector<Vertex>{1});

  auto dk4 = block_decomposition(complete_graph(4));
  CHECK(dk4.blocks.size() == 1);
  CHECK(dk4.cut_vertices.empty());

  // two triangles sharing a vertex would need degree 4; the subcubic
  // analogue joins them by a bridge
  Multigraph twok3 = Multigraph::from_pairs(
      6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {2, 3}});
  auto db = block_decomposition(twok3);
  CHECK(db.blocks.size() == 3);
  CHECK(db.cut_vertices == std::vector<Vertex>{2, 3});
  int k3_blocks = 0;
  for (auto& b : db.blocks)
    if (b.graph.vertex_count() == 3) ++k3_blocks;
  CHECK(k3_blocks == 2);

  // a loop forms its own nontrivial one-vertex block
  Multigraph lolly = Multigraph::from_pairs(2, {{0, 0}, {0, 1}});
  auto dl = block_decomposition(lolly);
  CHECK(dl.blocks.size() == 2);
  int nontrivial = 0;
  for (auto& b : dl.blocks)
    if (b.nontrivial()) ++nontrivial;
  CHECK(nontrivial == 1);

  // every edge lies in exactly one block; cut-vertex removal disconnects
  std::mt19937 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    Multigraph g = oracles::random_subcubic(rng, 8, true);
    auto dec = block_decomposition(g);
    std::multiset<EdgeId> seen;
    for (auto& b : dec.blocks)
      for (EdgeId e : b.parent_edge) seen.insert(e);
    CHECK(seen.size() == static_cast<size_t>(g.edge_count()));
    CHECK(std::set<EdgeId>(seen.begin(), seen.end()).size() == seen.size());
    size_t base = g.components().size();
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      bool cuts = std::binary_search(dec.cut_vertices.begin(),
                                     dec.cut_vertices.end(), v);
      size_t after = g.delete_vertex(v).components().size();
      // deleting an isolated or full component vertex can lower the count
      if (cuts)
        CHECK(after > base);
      else
        CHECK(after <= base);
    }
  }
}

TEST_CASE("is_2connected") {
  CHECK(is_2connected(cycle_graph(4)));
  CHECK_FALSE(is_2connected(path_graph(4)));
  CHECK(is_2connected(default_catalog().named("K4plus")));
  CHECK_FALSE(is_2connected(cycle_graph(2)));  // fewer than three vertices
  CHECK(is_single_block(cycle_graph(2)));
  CHECK(is_single_block(cycle_graph(1)));
}

TEST_CASE("canonical code vs permutation oracle") {
  // equal codes on relabelings
  Multigraph c5a = cycle_graph(5);
  Multigraph c5b =
      Multigraph::from_pairs(5, {{2, 4}, {4, 1}, {1, 3}, {3, 0}, {0, 2}});
  CHECK(canonical_code(c5a) == canonical_code(c5b));
  CHECK(canonical_code(default_catalog().named("Q3")) !=
        canonical_code(default_catalog().named("V8")));

  std::mt19937 rng(29);
  for (int trial = 0; trial < 120; ++trial) {
    int n = 1 + trial % 7;
    Multigraph a = oracles::random_subcubic(rng, n, true);
    Multigraph b = oracles::random_subcubic(rng, n, true);
    CHECK((canonical_code(a) == canonical_code(b)) ==
          oracles::brute_isomorphic(a, b));
    // a shuffled copy must always collide
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::pair<int, int>> es;
    for (const Edge& e : a.edges()) es.push_back({perm[e.u], perm[e.v]});
    std::shuffle(es.begin(), es.end(), rng);
    CHECK(canonical_code(Multigraph::from_pairs(n, es)) == canonical_code(a));
  }
}

TEST_CASE("canonical round trip") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    Multigraph g = oracles::random_subcubic(rng, 8, true);
    CHECK(canonical_code(from_canonical_code(canonical_code(g))) ==
          canonical_code(g));
  }
}
