#pragma once

#include <string>
#include <vector>

#include "subcubic/errorfn.hpp"
#include "subcubic/families.hpp"
#include "subcubic/fvs.hpp"
#include "subcubic/multigraph.hpp"
#include "subcubic/rational.hpp"

namespace subcubic {

struct Verdict {
  std::string claim;
  std::string input;  // canonical code hex (or a name set by the caller)
  bool holds = false;
  Rational lhs;       // for bound claims, phi
  Rational rhs;       // for bound claims, the bound
  std::string case_id;  // classification case ("1a".."2c"), when applicable
  int phi = -1;
  std::vector<Vertex> witness;  // an optimal feedback vertex set
};

// phi(G) <= t_g |E| + r_g(G) for subcubic G without two disjoint cycles of
// length < g.  Refuses precondition-violating inputs.
Verdict check_main_bound(FamilyCatalog& catalog, const Multigraph& g, int girth_class,
                         SolverOptions opts = {});

// The explicit classification for connected subcubic graphs of girth >= 4
// (cases 1a-1d) or girth >= 5 (cases 2a-2c), with the per-case phi formula
// checked against the exact solver: 1a-1c and 2a assert equality, the rest
// assert the stated upper bound.
Verdict classify_explicit(FamilyCatalog& catalog, const Multigraph& g,
                          int girth_class, SolverOptions opts = {});

// Girth five, and for every vertex v with neighbor pair {a,b}, G - v has two
// disjoint 5-cycles, one through a and one through b.
bool dodeca_condition(const Multigraph& g);

// The biconditional: dodeca_condition(G) holds iff every component of the
// cubic graph G is a dodecahedron.
Verdict check_dodeca_theorem(FamilyCatalog& catalog, const Multigraph& g);

// All 5-cycles of the graph, each as a sorted vertex vector.
std::vector<std::vector<Vertex>> five_cycles(const Multigraph& g);

}  // namespace subcubic
