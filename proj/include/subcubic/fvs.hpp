#pragma once

#include <vector>

#include "subcubic/multigraph.hpp"

namespace subcubic {

// Exact minimum feedback vertex set with proof-of-minimality telemetry.
// `vertices` is the lexicographically least optimal set under vertex order.
struct FvsCertificate {
  std::vector<Vertex> vertices;
  int size = 0;
  long long nodes_explored = 0;
};

struct SolverOptions {
  int vertex_cap = 24;
};

FvsCertificate min_fvs(const Multigraph& g, SolverOptions opts = {});

// Minimum among feedback vertex sets containing all of `required`.
FvsCertificate min_fvs_with_required(const Multigraph& g,
                                     const std::vector<Vertex>& required,
                                     SolverOptions opts = {});

// Exact phi(G - e).
FvsCertificate min_fvs_minus_edge(const Multigraph& g, EdgeId e,
                                  SolverOptions opts = {});

// Complement of min_fvs: a largest vertex set inducing a forest.
std::vector<Vertex> max_induced_forest(const Multigraph& g, SolverOptions opts = {});

// True iff G - S is acyclic (loops and parallel pairs count as cycles).
bool is_fvs(const Multigraph& g, const std::vector<Vertex>& s);

}  // namespace subcubic
