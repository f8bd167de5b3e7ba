#pragma once

#include <string>
#include <vector>

#include "subcubic/families.hpp"
#include "subcubic/multigraph.hpp"
#include "subcubic/rational.hpp"

namespace subcubic {

// t_4 = 2/9, t_5 = 1/5.
Rational t_value(int g);

// Per-block error value: max{1 - j(5t-1) - it, 0} on F_{i,j}, the same less t
// on F^g_{i,j,k}, -t on K2, 0 otherwise.  The input must be a single block.
Rational epsilon(FamilyCatalog& catalog, const Multigraph& block, int g);

// Sum of epsilon over the blocks.
Rational r_value(FamilyCatalog& catalog, const Multigraph& graph, int g);

// The two defining formulas, exposed for table cross-checks.
Rational epsilon_f_formula(int g, int i, int j);
Rational epsilon_fg_formula(int g, int i, int j);

struct WellDefinedOverlap {
  CanonicalCode code;
  FgIndex fg;
  std::pair<int, int> f;
  Rational eps_fg;
  Rational eps_f;
  bool agree;
};

struct WellDefinedReport {
  int g;
  std::vector<WellDefinedOverlap> overlaps;
  bool all_agree() const;
};

// Generates every F^g_{i,j,k} within the catalog budget (k <= max_k), finds
// members that also lie in some F_{i',j'}, and checks the two epsilon
// formulas agree on each.  max_k < 0 yields an empty report.
WellDefinedReport check_well_defined(FamilyCatalog& catalog, int g, int max_k);

// Outcome of the structural r-value classification for graphs with no two
// disjoint short cycles.  case_id follows the case numbering used by the
// per-girth classification (1..6 for g=4, 1..4 for g=5); subcase is 'a', 'b',
// 'c' where the case splits, else 0.
struct RClassification {
  int g;
  int case_id;
  char subcase;
  Rational r;
  struct BlockWitness {
    std::vector<Vertex> vertices;  // parent ids
    std::string tag;               // e.g. "K4+", "L", "F(3,2)", "Fg(3,0,k=1)"
  };
  std::vector<BlockWitness> blocks;  // nontrivial blocks
  std::vector<EdgeId> cut_edges;
};

RClassification classify_r4(FamilyCatalog& catalog, const Multigraph& graph);
RClassification classify_r5(FamilyCatalog& catalog, const Multigraph& graph);

}  // namespace subcubic
