#include "subcubic/fvs.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>

#include "subcubic/errors.hpp"

namespace subcubic {

namespace {

using Mask = uint64_t;

// Branch and bound on the vertex-subset lattice: pick a shortest alive
// cycle, branch on deleting each of its vertices, prune with a greedily
// packed set of vertex-disjoint cycles.  Masks index alive vertices.
struct Solver {
  int n;
  std::vector<std::vector<std::pair<Vertex, EdgeId>>> adj;
  std::vector<Edge> edges;
  Mask forbidden = 0;
  long long nodes = 0;
  std::unordered_map<Mask, int> exact;

  explicit Solver(const Multigraph& g)
      : n(g.vertex_count()), adj(g.adjacency()), edges(g.edges()) {}

  int alive_degree(Mask mask, Vertex v) const {
    int d = 0;
    for (auto [w, id] : adj[v])
      if (mask >> w & 1) d += (w == v ? 2 : 1);
    return d;
  }

  Mask strip_trees(Mask mask) const {
    bool again = true;
    while (again) {
      again = false;
      for (Vertex v = 0; v < n; ++v)
        if ((mask >> v & 1) && alive_degree(mask, v) <= 1) {
          mask &= ~(Mask(1) << v);
          again = true;
        }
    }
    return mask;
  }

  // Vertices of some shortest cycle in the alive subgraph; empty = forest.
  std::vector<Vertex> shortest_cycle(Mask mask) const {
    for (Vertex v = 0; v < n; ++v)
      if ((mask >> v & 1))
        for (auto [w, id] : adj[v])
          if (w == v) return {v};
    int best = -1;
    std::vector<Vertex> cycle;
    for (EdgeId e = 0; e < static_cast<int>(edges.size()); ++e) {
      Vertex src = edges[e].u, dst = edges[e].v;
      if (src == dst || !(mask >> src & 1) || !(mask >> dst & 1)) continue;
      std::vector<int> dist(n, -1), from(n, -1);
      dist[src] = 0;
      std::vector<Vertex> queue{src};
      for (size_t qi = 0; qi < queue.size(); ++qi) {
        Vertex x = queue[qi];
        if (x == dst) break;
        if (best >= 0 && dist[x] + 1 >= best) break;
        for (auto [y, id] : adj[x]) {
          if (id == e || y == x || !(mask >> y & 1) || dist[y] >= 0) continue;
          dist[y] = dist[x] + 1;
          from[y] = x;
          queue.push_back(y);
        }
      }
      if (dist[dst] < 0) continue;
      int len = dist[dst] + 1;
      if (best < 0 || len < best) {
        best = len;
        cycle.clear();
        for (Vertex x = dst; x != -1; x = from[x]) cycle.push_back(x);
        if (best == 2) break;
      }
    }
    return cycle;
  }

  int packing_bound(Mask mask) const {
    int count = 0;
    while (true) {
      std::vector<Vertex> c = shortest_cycle(mask);
      if (c.empty()) return count;
      ++count;
      for (Vertex v : c) mask &= ~(Mask(1) << v);
    }
  }

  // Exact minimum if it is <= budget, otherwise budget+1.
  int solve(Mask mask, int budget) {
    ++nodes;
    mask = strip_trees(mask);
    auto it = exact.find(mask);
    if (it != exact.end()) return std::min(it->second, budget + 1);
    std::vector<Vertex> cycle = shortest_cycle(mask);
    if (cycle.empty()) {
      exact[mask] = 0;
      return 0;
    }
    if (budget <= 0) return budget + 1;
    if (packing_bound(mask) > budget) return budget + 1;
    int best = budget + 1;
    std::sort(cycle.begin(), cycle.end());
    for (Vertex v : cycle) {
      if (forbidden >> v & 1) continue;
      int sub = solve(mask & ~(Mask(1) << v), best - 2);
      if (1 + sub < best) best = 1 + sub;
    }
    if (best <= budget) exact[mask] = best;
    return best;
  }
};

Mask full_mask(int n) { return n >= 64 ? ~Mask(0) : (Mask(1) << n) - 1; }

FvsCertificate solve_lexmin(const Multigraph& g, const std::vector<Vertex>& required,
                            SolverOptions opts) {
  int n = g.vertex_count();
  if (n > opts.vertex_cap)
    throw TooLarge("graph exceeds the solver vertex cap (" +
                   std::to_string(opts.vertex_cap) + ")");
  if (n > 62) throw TooLarge("solver handles at most 62 vertices");
  Mask req = 0;
  for (Vertex v : required) {
    if (v < 0 || v >= n) throw BadEndpoint(v);
    req |= Mask(1) << v;
  }
  FvsCertificate cert;
  Solver solver(g);
  int base = static_cast<int>(std::popcount(req));
  int phi = base + solver.solve(full_mask(n) & ~req, n);
  cert.size = phi;
  cert.nodes_explored = solver.nodes;

  // Fix vertices in ascending order: keep v iff some optimal solution
  // extends the decisions made so far.
  Mask chosen = req, rejected = 0;
  for (Vertex v = 0; v < n && std::popcount(chosen) < phi; ++v) {
    if (chosen >> v & 1) continue;
    Mask try_chosen = chosen | (Mask(1) << v);
    Solver probe(g);
    probe.forbidden = rejected;
    int count = static_cast<int>(std::popcount(try_chosen));
    int rest = probe.solve(full_mask(n) & ~try_chosen, phi - count);
    cert.nodes_explored += probe.nodes;
    if (count + rest == phi)
      chosen = try_chosen;
    else
      rejected |= Mask(1) << v;
  }
  for (Vertex v = 0; v < n; ++v)
    if (chosen >> v & 1) cert.vertices.push_back(v);
  return cert;
}

}  // namespace

FvsCertificate min_fvs(const Multigraph& g, SolverOptions opts) {
  return solve_lexmin(g, {}, opts);
}

FvsCertificate min_fvs_with_required(const Multigraph& g,
                                     const std::vector<Vertex>& required,
                                     SolverOptions opts) {
  return solve_lexmin(g, required, opts);
}

FvsCertificate min_fvs_minus_edge(const Multigraph& g, EdgeId e, SolverOptions opts) {
  return solve_lexmin(g.delete_edge(e), {}, opts);
}

std::vector<Vertex> max_induced_forest(const Multigraph& g, SolverOptions opts) {
  FvsCertificate cert = min_fvs(g, opts);
  std::vector<Vertex> forest;
  size_t at = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (at < cert.vertices.size() && cert.vertices[at] == v)
      ++at;
    else
      forest.push_back(v);
  }
  return forest;
}

bool is_fvs(const Multigraph& g, const std::vector<Vertex>& s) {
  std::vector<bool> dead(g.vertex_count(), false);
  for (Vertex v : s) {
    if (v < 0 || v >= g.vertex_count()) throw BadEndpoint(v);
    dead[v] = true;
  }
  int alive_n = 0, alive_m = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!dead[v]) ++alive_n;
  for (const Edge& e : g.edges())
    if (!dead[e.u] && !dead[e.v]) ++alive_m;
  // Forest check: edge count equals vertex count minus component count.
  std::vector<Vertex> stack;
  std::vector<bool> seen(g.vertex_count(), false);
  auto adj = g.adjacency();
  int comps = 0;
  for (Vertex s0 = 0; s0 < g.vertex_count(); ++s0) {
    if (dead[s0] || seen[s0]) continue;
    ++comps;
    seen[s0] = true;
    stack.push_back(s0);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (auto [w, id] : adj[v])
        if (!dead[w] && !seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
  }
  return alive_m == alive_n - comps;
}

}  // namespace subcubic
