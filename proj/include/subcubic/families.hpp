#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "subcubic/canonical.hpp"
#include "subcubic/multigraph.hpp"

namespace subcubic {

// Index of a family: F refers to F_{i,j}, Fg to F^g_{i,j,k}.
struct FamilyIndex {
  enum class Kind { F, Fg };
  Kind kind;
  int g = 0;  // 4 or 5, Fg only
  int i = 0;
  int j = 0;
  int k = 0;  // Fg only
};

struct FgIndex {
  int i;
  int j;
  int k;
  friend bool operator==(const FgIndex&, const FgIndex&) = default;
};

struct FamilyBudget {
  int max_vertices = 20;
};

// Generates and decides membership in the families F_{i,j} (grown from the
// one-vertex loop C1 by edge subdivisions and the circ operation) and
// F^g_{i,j,k} (k copies of L for g=4 / R for g=5 plus one F_{i,j} member,
// joined 2-connectedly by k+1 edges).  Also the catalog of named graphs.
// All methods are thread-safe; results are memoized per index.
class FamilyCatalog {
 public:
  explicit FamilyCatalog(FamilyBudget budget = {}) : budget_(budget) {}

  // F_{i,j} up to isomorphism, sorted by canonical code.  Empty for invalid
  // indices (i <= 0, j < 0 or j > i); throws OutOfBudget past the vertex cap.
  const std::vector<Multigraph>& family(int i, int j);

  // F^g_{i,j,k} up to isomorphism, sorted by canonical code.
  const std::vector<Multigraph>& family_g(int g, int i, int j, int k);

  // The unique candidate index is forced by |V| = i+3j, |E| = i+5j; decides
  // membership by suppressing degree-2 vertices and, once cubic, searching
  // for an inverse circ application.
  std::optional<std::pair<int, int>> member_of_f(const Multigraph& g);

  // Searches k+1 deleted edges splitting the graph into k piece copies plus
  // one F_{i,j} member whose quotient is a single cycle; i restricted to the
  // range the error tables use (i <= 3).
  std::optional<FgIndex> member_of_fg(const Multigraph& graph, int g);

  // Named catalog: C1, C<n>, K3, K4, K4plus/K4+, L, Q3, V8, K33/K3,3,
  // Petersen, R, R1, R2, Dodecahedron.  Case-insensitive.
  Multigraph named(std::string_view name);

  const FamilyBudget& budget() const { return budget_; }

 private:
  const std::vector<Multigraph>& family_locked(int i, int j);
  std::vector<Multigraph> generate_f(int i, int j);
  std::vector<Multigraph> generate_fg(int g, int i, int j, int k);
  bool decide_f(const Multigraph& g, int i, int j);
  std::optional<std::pair<int, int>> member_of_f_locked(const Multigraph& g);
  void validate_r1_r2();

  FamilyBudget budget_;
  std::recursive_mutex mu_;
  std::map<std::pair<int, int>, std::vector<Multigraph>> f_memo_;
  std::map<std::tuple<int, int, int, int>, std::vector<Multigraph>> fg_memo_;
  std::map<CanonicalCode, bool> member_memo_;
  bool r1_r2_checked_ = false;
};

// Process-wide catalog with default budget.
FamilyCatalog& default_catalog();

// The vertices of degree two, ascending.
std::vector<Vertex> degree_two_vertices(const Multigraph& g);

// Joins `copies` copies of `piece` (which must have exactly two degree-2
// vertices) into a ring with `copies` new edges; one copy yields piece+e.
Multigraph ring_of_copies(const Multigraph& piece, int copies);

}  // namespace subcubic
