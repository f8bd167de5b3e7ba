#include "subcubic/multigraph.hpp"

#include <algorithm>
#include <set>

#include "subcubic/errors.hpp"

namespace subcubic {

namespace {
Edge normalized(Vertex u, Vertex v) { return u <= v ? Edge{u, v} : Edge{v, u}; }
}  // namespace

Multigraph::Multigraph(int vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
  for (Edge& e : edges_) e = normalized(e.u, e.v);
  validate();
}

Multigraph Multigraph::from_pairs(int vertex_count,
                                  const std::vector<std::pair<int, int>>& edges) {
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (auto [u, v] : edges) es.push_back(normalized(u, v));
  return Multigraph(vertex_count, std::move(es));
}

void Multigraph::validate() const {
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.u >= n_) throw BadEndpoint(e.u);
    if (e.v < 0 || e.v >= n_) throw BadEndpoint(e.v);
  }
  for (Vertex v = 0; v < n_; ++v)
    if (degree(v) > 3) throw DegreeExceeded(v);
}

int Multigraph::degree(Vertex v) const {
  if (v < 0 || v >= n_) throw BadEndpoint(v);
  int d = 0;
  for (const Edge& e : edges_) {
    if (e.u == v) ++d;
    if (e.v == v) ++d;  // loop counts twice
  }
  return d;
}

int Multigraph::loop_count(Vertex v) const {
  int c = 0;
  for (const Edge& e : edges_)
    if (e.is_loop() && e.u == v) ++c;
  return c;
}

int Multigraph::multiplicity(Vertex u, Vertex v) const {
  Edge probe = normalized(u, v);
  int c = 0;
  for (const Edge& e : edges_)
    if (e == probe) ++c;
  return c;
}

int Multigraph::min_degree() const {
  int d = n_ == 0 ? 0 : 4;
  for (Vertex v = 0; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

int Multigraph::max_degree() const {
  int d = 0;
  for (Vertex v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

bool Multigraph::is_simple() const {
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : edges_) {
    if (e.is_loop()) return false;
    if (!seen.insert({e.u, e.v}).second) return false;
  }
  return true;
}

bool Multigraph::is_cubic() const {
  for (Vertex v = 0; v < n_; ++v)
    if (degree(v) != 3) return false;
  return true;
}

std::vector<std::vector<std::pair<Vertex, EdgeId>>> Multigraph::adjacency() const {
  std::vector<std::vector<std::pair<Vertex, EdgeId>>> adj(n_);
  for (EdgeId id = 0; id < edge_count(); ++id) {
    const Edge& e = edges_[id];
    if (e.is_loop()) {
      adj[e.u].push_back({e.u, id});
    } else {
      adj[e.u].push_back({e.v, id});
      adj[e.v].push_back({e.u, id});
    }
  }
  return adj;
}

Multigraph Multigraph::subdivide_edge(EdgeId e) const {
  if (e < 0 || e >= edge_count()) throw BadEndpoint(e);
  Vertex w = n_;
  std::vector<Edge> es = edges_;
  Vertex u = es[e].u, v = es[e].v;
  es[e] = normalized(u, w);
  es.push_back(normalized(w, v));
  return Multigraph(n_ + 1, std::move(es));
}

Multigraph Multigraph::suppress_vertex(Vertex v) const {
  if (degree(v) != 2) throw NotDegreeTwo(v);
  if (loop_count(v) > 0) throw LoopAtVertex(v);
  if (n_ < 2) throw NotDegreeTwo(v);
  std::vector<Vertex> nbrs;
  std::vector<Edge> es;
  for (const Edge& e : edges_) {
    if (e.u == v || e.v == v)
      nbrs.push_back(e.other(v));
    else
      es.push_back(e);
  }
  es.push_back(normalized(nbrs[0], nbrs[1]));
  auto relabel = [v](Vertex x) { return x > v ? x - 1 : x; };
  for (Edge& e : es) e = normalized(relabel(e.u), relabel(e.v));
  return Multigraph(n_ - 1, std::move(es));
}

Multigraph Multigraph::circ(EdgeId e1, EdgeId e2, Vertex a) const {
  if (degree(a) != 2) throw NotDegreeTwo(a);
  if (e1 < 0 || e1 >= edge_count()) throw BadEndpoint(e1);
  if (e2 < 0 || e2 >= edge_count()) throw BadEndpoint(e2);
  // Subdividing keeps edge slot ids stable, so e2 still names the original
  // edge (or its first half when e1 == e2, which realizes "subdivided twice").
  Multigraph g = subdivide_edge(e1);
  Vertex v1 = n_;
  g = g.subdivide_edge(e2 == e1 ? e1 : e2);
  Vertex v2 = n_ + 1;
  Vertex w = n_ + 2;
  std::vector<Edge> es = g.edges_;
  es.push_back(normalized(a, w));
  es.push_back(normalized(v1, w));
  es.push_back(normalized(v2, w));
  return Multigraph(g.n_ + 1, std::move(es));
}

Multigraph Multigraph::delete_vertex(Vertex v) const { return delete_vertices({v}); }

Multigraph Multigraph::delete_vertices(std::vector<Vertex> vs) const {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  std::vector<int> newid(n_, -1);
  int next = 0;
  for (Vertex v = 0; v < n_; ++v)
    if (!std::binary_search(vs.begin(), vs.end(), v)) newid[v] = next++;
  std::vector<Edge> es;
  for (const Edge& e : edges_)
    if (newid[e.u] >= 0 && newid[e.v] >= 0)
      es.push_back(normalized(newid[e.u], newid[e.v]));
  return Multigraph(next, std::move(es));
}

Multigraph Multigraph::delete_edge(EdgeId e) const {
  if (e < 0 || e >= edge_count()) throw BadEndpoint(e);
  std::vector<Edge> es = edges_;
  es.erase(es.begin() + e);
  return Multigraph(n_, std::move(es));
}

Multigraph Multigraph::add_edge(Vertex u, Vertex v) const {
  std::vector<Edge> es = edges_;
  es.push_back(normalized(u, v));
  return Multigraph(n_, std::move(es));
}

Multigraph Multigraph::disjoint_union(const Multigraph& other) const {
  std::vector<Edge> es = edges_;
  for (const Edge& e : other.edges_) es.push_back({e.u + n_, e.v + n_});
  return Multigraph(n_ + other.n_, std::move(es));
}

bool Multigraph::is_connected() const { return components().size() <= 1; }

std::vector<std::vector<Vertex>> Multigraph::components() const {
  auto adj = adjacency();
  std::vector<int> comp(n_, -1);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < n_; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<Vertex> stack{s}, members;
    comp[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (auto [w, id] : adj[v])
        if (comp[w] < 0) {
          comp[w] = comp[s];
          stack.push_back(w);
        }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

Multigraph Multigraph::induced(const std::vector<Vertex>& vs) const {
  std::vector<int> newid(n_, -1);
  for (size_t i = 0; i < vs.size(); ++i) newid[vs[i]] = static_cast<int>(i);
  std::vector<Edge> es;
  for (const Edge& e : edges_)
    if (newid[e.u] >= 0 && newid[e.v] >= 0)
      es.push_back(normalized(newid[e.u], newid[e.v]));
  return Multigraph(static_cast<int>(vs.size()), std::move(es));
}

std::optional<int> Multigraph::girth() const {
  int best = -1;
  for (Vertex v = 0; v < n_; ++v)
    if (loop_count(v) > 0) return 1;
  // Shortest cycle through edge e = shortest u-v path avoiding e, plus e.
  auto adj = adjacency();
  for (EdgeId e = 0; e < edge_count(); ++e) {
    Vertex src = edges_[e].u, dst = edges_[e].v;
    std::vector<int> dist(n_, -1);
    dist[src] = 0;
    std::vector<Vertex> queue{src};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      Vertex x = queue[qi];
      if (x == dst) break;
      for (auto [y, id] : adj[x]) {
        if (id == e || dist[y] >= 0) continue;
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
    if (dist[dst] >= 0 && (best < 0 || dist[dst] + 1 < best)) best = dist[dst] + 1;
  }
  if (best < 0) return std::nullopt;
  return best;
}

std::vector<std::vector<Vertex>> Multigraph::short_cycles(int g) const {
  if (g != 4 && g != 5) throw PreconditionViolated("short_cycles requires g in {4,5}");
  std::set<std::vector<Vertex>> found;
  for (Vertex v = 0; v < n_; ++v)
    if (loop_count(v) > 0) found.insert({v});
  for (EdgeId e = 0; e < edge_count(); ++e) {
    const Edge& a = edges_[e];
    if (a.is_loop()) continue;
    for (EdgeId f = e + 1; f < edge_count(); ++f)
      if (edges_[f] == a) found.insert({a.u, a.v});
  }
  // Triangles and (for g = 5) quadrilaterals on distinct vertices.
  for (Vertex a = 0; a < n_; ++a)
    for (Vertex b = a + 1; b < n_; ++b) {
      if (!adjacent(a, b)) continue;
      for (Vertex c = b + 1; c < n_; ++c)
        if (adjacent(a, c) && adjacent(b, c)) found.insert({a, b, c});
    }
  if (g == 5) {
    for (Vertex a = 0; a < n_; ++a)
      for (Vertex b = a + 1; b < n_; ++b)
        for (Vertex c = b + 1; c < n_; ++c)
          for (Vertex d = c + 1; d < n_; ++d) {
            // Any cyclic order of {a,b,c,d} with all four edges present.
            bool ab = adjacent(a, b), ac = adjacent(a, c), ad = adjacent(a, d);
            bool bc = adjacent(b, c), bd = adjacent(b, d), cd = adjacent(c, d);
            if ((ab && bc && cd && ad) || (ab && bd && cd && ac) ||
                (ac && bc && bd && ad))
              found.insert({a, b, c, d});
          }
  }
  return {found.begin(), found.end()};
}

bool Multigraph::has_two_disjoint_short_cycles(int g) const {
  auto cycles = short_cycles(g);
  for (size_t i = 0; i < cycles.size(); ++i)
    for (size_t j = i + 1; j < cycles.size(); ++j) {
      std::vector<Vertex> inter;
      std::set_intersection(cycles[i].begin(), cycles[i].end(), cycles[j].begin(),
                            cycles[j].end(), std::back_inserter(inter));
      if (inter.empty()) return true;
    }
  return false;
}

Multigraph cycle_graph(int n) {
  if (n == 1) return Multigraph::from_pairs(1, {{0, 0}});
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n; ++i) es.push_back({i, (i + 1) % n});
  return Multigraph::from_pairs(n, es);
}

Multigraph complete_graph(int n) {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.push_back({i, j});
  return Multigraph::from_pairs(n, es);
}

Multigraph path_graph(int n) {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
  return Multigraph::from_pairs(n, es);
}

}  // namespace subcubic
