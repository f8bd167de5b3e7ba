#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace subcubic {

using Vertex = int;
using EdgeId = int;

// Undirected edge; loops have u == v.  Endpoints are kept normalized u <= v.
struct Edge {
  Vertex u;
  Vertex v;
  bool is_loop() const { return u == v; }
  Vertex other(Vertex w) const { return w == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Immutable subcubic multigraph: dense vertex ids 0..n-1, edges addressed by
// their index in the edge list.  Loops and parallel edges are allowed; a loop
// contributes 2 to the degree of its vertex, and every degree is at most 3.
// All rewriting operations return new graphs.
class Multigraph {
 public:
  Multigraph() = default;
  Multigraph(int vertex_count, std::vector<Edge> edges);
  static Multigraph from_pairs(int vertex_count,
                               const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }

  int degree(Vertex v) const;
  int loop_count(Vertex v) const;
  int multiplicity(Vertex u, Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const { return multiplicity(u, v) > 0; }
  int min_degree() const;
  int max_degree() const;
  bool is_simple() const;
  bool is_cubic() const;

  // Adjacency derived on demand: for each vertex the incident (neighbor, edge
  // id) pairs; a loop appears once with neighbor == vertex.
  std::vector<std::vector<std::pair<Vertex, EdgeId>>> adjacency() const;

  // --- rewriting (all pure; edge/vertex ids of the result are re-packed) ---

  // Replace e = uv by uw, wv through a new vertex w (= old vertex_count).
  // Slot e keeps the uw half so other edge ids are unchanged.
  Multigraph subdivide_edge(EdgeId e) const;

  // Remove a degree-2 vertex and join its two neighbors directly (may create
  // a loop or a parallel edge).  Requires degree(v) == 2, no loop at v, and
  // at least two vertices.
  Multigraph suppress_vertex(Vertex v) const;

  // Subdivide e1 and e2 once each (e1 == e2 is subdivided twice), then add a
  // new vertex adjacent to a and the two subdivision vertices.  Requires
  // degree(a) == 2.
  Multigraph circ(EdgeId e1, EdgeId e2, Vertex a) const;

  Multigraph delete_vertex(Vertex v) const;  // ids above v shift down
  Multigraph delete_edge(EdgeId e) const;    // ids above e shift down
  Multigraph delete_vertices(std::vector<Vertex> vs) const;
  Multigraph add_edge(Vertex u, Vertex v) const;
  Multigraph disjoint_union(const Multigraph& other) const;

  // --- structural queries ---

  bool is_connected() const;  // empty graph counts as connected
  std::vector<std::vector<Vertex>> components() const;
  Multigraph induced(const std::vector<Vertex>& vs) const;

  // Length of a shortest cycle (loop = 1, parallel pair = 2); nullopt iff the
  // graph is a forest.
  std::optional<int> girth() const;

  // All cycles of length < g (g in {4,5}), each reported as its sorted vertex
  // set, deduplicated, in lexicographic order.
  std::vector<std::vector<Vertex>> short_cycles(int g) const;

  bool has_two_disjoint_short_cycles(int g) const;

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  void validate() const;

  int n_ = 0;
  std::vector<Edge> edges_;
};

// Convenience builders used throughout tests and the catalog.
Multigraph cycle_graph(int n);     // C1 = loop, C2 = parallel pair, C3 = K3, ...
Multigraph complete_graph(int n);  // n <= 4 in a subcubic world
Multigraph path_graph(int n);

}  // namespace subcubic
