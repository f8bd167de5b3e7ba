#include <random>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "subcubic/canonical.hpp"
#include "subcubic/enumerate.hpp"
#include "subcubic/errors.hpp"
#include "subcubic/families.hpp"

using namespace subcubic;

TEST_CASE("enumeration counts match labeled-graph filtering") {
  Enumerator en({.vertex_cap = 7});
  for (int n = 1; n <= 7; ++n)
    CHECK(static_cast<long long>(en.level(n).size()) ==
          oracles::labeled_class_count(n));
}

TEST_CASE("small levels explicitly") {
  Enumerator en({.vertex_cap = 4});
  CHECK(canonical_code(en.level(2)[0]) == canonical_code(path_graph(2)));
  auto l3 = en.level(3);
  REQUIRE(l3.size() == 2);
  std::set<CanonicalCode> got{canonical_code(l3[0]), canonical_code(l3[1])};
  CHECK(got == std::set<CanonicalCode>{canonical_code(path_graph(3)),
                                       canonical_code(cycle_graph(3))});
  CHECK(en.level(4).size() == 6);
}

TEST_CASE("every yielded graph is connected simple subcubic, stream deterministic") {
  EnumOptions opts{.vertex_cap = 9};
  auto a = enumerate_connected_subcubic(9, opts);
  auto b = enumerate_connected_subcubic(9, opts);
  REQUIRE(a.size() == b.size());
  for (size_t idx = 0; idx < a.size(); ++idx) {
    CHECK(a[idx].edges() == b[idx].edges());
    CHECK(a[idx].vertex_count() == 9);
    CHECK(a[idx].is_connected());
    CHECK(a[idx].is_simple());
    CHECK(a[idx].max_degree() <= 3);
  }
  // sorted strictly by canonical code: pairwise non-isomorphic for free
  for (size_t idx = 1; idx < a.size(); ++idx)
    CHECK(canonical_code(a[idx - 1]) < canonical_code(a[idx]));
  CHECK_THROWS_AS(enumerate_connected_subcubic(10, opts), TooLarge);
}

TEST_CASE("girth-restricted and cubic-target enumeration") {
  Enumerator en({.vertex_cap = 10, .min_girth = 5});
  for (int n = 1; n <= 10; ++n)
    for (const Multigraph& g : en.level(n)) {
      auto gir = g.girth();
      CHECK((!gir || *gir >= 5));
    }
  // the Petersen graph is the unique cubic girth-5 graph on 10 vertices
  Enumerator target({.vertex_cap = 10, .min_girth = 5, .cubic_target_n = 10});
  std::vector<Multigraph> cubic;
  for (const Multigraph& g : target.level(10))
    if (g.is_cubic()) cubic.push_back(g);
  REQUIRE(cubic.size() == 1);
  CHECK(canonical_code(cubic[0]) ==
        canonical_code(default_catalog().named("Petersen")));
}

TEST_CASE("graph6 known strings") {
  CHECK(to_graph6(complete_graph(4)) == "C~");
  CHECK(to_graph6(cycle_graph(3)) == "Bw");
  CHECK(canonical_code(from_graph6("C~")) == canonical_code(complete_graph(4)));
  CHECK(canonical_code(from_graph6("Bw")) == canonical_code(cycle_graph(3)));
}

TEST_CASE("graph6 round trip and errors") {
  Enumerator en({.vertex_cap = 6});
  for (int n = 1; n <= 6; ++n)
    for (const Multigraph& g : en.level(n))
      CHECK(canonical_code(from_graph6(to_graph6(g))) == canonical_code(g));
  CHECK_THROWS_AS(to_graph6(cycle_graph(1)), NotSimple);
  CHECK_THROWS_AS(to_graph6(cycle_graph(2)), NotSimple);
  CHECK_THROWS_AS(from_graph6(""), ParseError);
  CHECK_THROWS_AS(from_graph6("C"), ParseError);    // truncated
  CHECK_THROWS_AS(from_graph6("C~~"), ParseError);  // trailing junk
  CHECK_THROWS_AS(from_graph6("C\x01"), ParseError);
}

TEST_CASE("medge round trip") {
  std::vector<Multigraph> graphs{cycle_graph(1), cycle_graph(2),
                                 default_catalog().named("L"),
                                 Multigraph::from_pairs(2, {{0, 1}, {0, 1}, {0, 1}})};
  std::ostringstream os;
  write_graphs(os, graphs, GraphFormat::medge);
  std::istringstream is(os.str());
  auto back = read_graphs(is, GraphFormat::medge);
  REQUIRE(back.size() == graphs.size());
  for (size_t idx = 0; idx < graphs.size(); ++idx)
    CHECK(canonical_code(back[idx]) == canonical_code(graphs[idx]));
}

TEST_CASE("medge parsing details") {
  std::istringstream c1("# the one-vertex loop\n1 1\n0 0\n");
  auto graphs = read_graphs(c1, GraphFormat::medge);
  REQUIRE(graphs.size() == 1);
  CHECK(canonical_code(graphs[0]) == canonical_code(cycle_graph(1)));

  std::istringstream empty_graph("3 0\n");
  CHECK(read_graphs(empty_graph, GraphFormat::medge)[0].vertex_count() == 3);

  std::istringstream bad1("2 1\n0 two\n");
  CHECK_THROWS_AS(read_graphs(bad1, GraphFormat::medge), ParseError);
  std::istringstream bad2("2 2\n0 1\n");
  CHECK_THROWS_AS(read_graphs(bad2, GraphFormat::medge), ParseError);
  std::istringstream bad3("1 1\n0 5\n");
  CHECK_THROWS_AS(read_graphs(bad3, GraphFormat::medge), ParseError);
  try {
    std::istringstream bad4("# intro\n\n2 1\nx y\n");
    read_graphs(bad4, GraphFormat::medge);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line == 4);
  }
}

TEST_CASE("graph stream") {
  GraphStream s = GraphStream::generated(5, {.vertex_cap = 5});
  size_t count = 0;
  std::optional<Multigraph> g;
  while ((g = s.next())) {
    ++count;
    CHECK(g->is_connected());
  }
  CHECK(count == 1 + 1 + 2 + 6 + 10);
}
