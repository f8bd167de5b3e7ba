#include "subcubic/families.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

#include "subcubic/blocks.hpp"
#include "subcubic/errors.hpp"

namespace subcubic {

namespace {

std::vector<Multigraph> sorted_unique(std::set<CanonicalCode>&& codes) {
  std::vector<Multigraph> out;
  out.reserve(codes.size());
  for (const CanonicalCode& c : codes) out.push_back(from_canonical_code(c));
  return out;
}

Multigraph make_q3() {
  std::vector<std::pair<int, int>> es;
  for (int v = 0; v < 8; ++v)
    for (int b : {1, 2, 4})
      if ((v ^ b) > v) es.push_back({v, v ^ b});
  return Multigraph::from_pairs(8, es);
}

Multigraph make_v8() {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < 8; ++i) es.push_back({i, (i + 1) % 8});
  for (int i = 0; i < 4; ++i) es.push_back({i, i + 4});
  return Multigraph::from_pairs(8, es);
}

Multigraph make_l() {
  // K4 on {0..3} with the perfect matching 01, 23 subdivided by 4 and 5.
  return Multigraph::from_pairs(
      6, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {0, 4}, {4, 1}, {2, 5}, {5, 3}});
}

Multigraph make_k33() {
  std::vector<std::pair<int, int>> es;
  for (int a = 0; a < 3; ++a)
    for (int b = 3; b < 6; ++b) es.push_back({a, b});
  return Multigraph::from_pairs(6, es);
}

Multigraph make_petersen() {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < 5; ++i) {
    es.push_back({i, (i + 1) % 5});
    es.push_back({5 + i, 5 + (i + 2) % 5});
    es.push_back({i, 5 + i});
  }
  return Multigraph::from_pairs(10, es);
}

// Figure layout shared by R1 and R2: outer square 0..3, inner square 4..7,
// spokes i to 4+i, three subdivision vertices 8..10 and an apex 11 joined to
// them.  R1 starts from the cube drawing, R2 from the V8 drawing.
Multigraph make_r1() {
  return Multigraph::from_pairs(
      12, {{1, 2}, {2, 3}, {3, 0}, {4, 5}, {6, 7}, {7, 4}, {0, 4}, {1, 5}, {2, 6},
           {3, 8}, {8, 7}, {5, 9}, {9, 6}, {0, 10}, {10, 1}, {11, 8}, {11, 9},
           {11, 10}});
}

Multigraph make_r2() {
  return Multigraph::from_pairs(
      12, {{1, 2}, {3, 0}, {5, 7}, {7, 6}, {6, 4}, {0, 4}, {1, 5}, {2, 6}, {3, 7},
           {2, 8}, {8, 3}, {4, 9}, {9, 5}, {0, 10}, {10, 1}, {11, 8}, {11, 9},
           {11, 10}});
}

Multigraph make_dodecahedron() {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < 5; ++i) {
    int next = (i + 1) % 5;
    es.push_back({i, next});               // outer face
    es.push_back({i, 5 + i});              // outer spokes
    es.push_back({5 + i, 10 + i});         // middle ring, forward
    es.push_back({5 + i, 10 + (i + 4) % 5});  // middle ring, backward
    es.push_back({10 + i, 15 + i});        // inner spokes
    es.push_back({15 + i, 15 + next});     // inner face
  }
  return Multigraph::from_pairs(20, es);
}

}  // namespace

std::vector<Vertex> degree_two_vertices(const Multigraph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 2) out.push_back(v);
  return out;
}

const std::vector<Multigraph>& FamilyCatalog::family(int i, int j) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  return family_locked(i, j);
}

const std::vector<Multigraph>& FamilyCatalog::family_locked(int i, int j) {
  auto key = std::make_pair(i, j);
  auto it = f_memo_.find(key);
  if (it != f_memo_.end()) return it->second;
  if (i >= 1 && j >= 0 && j <= i && i + 3 * j > budget_.max_vertices)
    throw OutOfBudget("F_{" + std::to_string(i) + "," + std::to_string(j) +
                      "} exceeds the vertex budget");
  return f_memo_.emplace(key, generate_f(i, j)).first->second;
}

std::vector<Multigraph> FamilyCatalog::generate_f(int i, int j) {
  if (i <= 0 || j < 0 || j > i) return {};
  if (i == 1 && j == 0) return {cycle_graph(1)};
  std::set<CanonicalCode> codes;
  if (i > j) {
    // Every member arises from F_{i-1,j} by one subdivision.
    for (const Multigraph& h : family_locked(i - 1, j))
      for (EdgeId e = 0; e < h.edge_count(); ++e)
        codes.insert(canonical_code(h.subdivide_edge(e)));
  } else {
    // Cubic members (i == j) arise from F_{i,j-1} by one circ application.
    for (const Multigraph& h : family_locked(i, j - 1))
      for (Vertex a : degree_two_vertices(h))
        for (EdgeId e1 = 0; e1 < h.edge_count(); ++e1)
          for (EdgeId e2 = e1; e2 < h.edge_count(); ++e2)
            codes.insert(canonical_code(h.circ(e1, e2, a)));
  }
  return sorted_unique(std::move(codes));
}

const std::vector<Multigraph>& FamilyCatalog::family_g(int g, int i, int j, int k) {
  if (g != 4 && g != 5) throw PreconditionViolated("family_g requires g in {4,5}");
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto key = std::make_tuple(g, i, j, k);
  auto it = fg_memo_.find(key);
  if (it != fg_memo_.end()) return it->second;
  int piece_n = g == 4 ? 6 : 10;
  if (i >= 1 && j >= 0 && j <= i && k >= 0 &&
      i + 3 * j + piece_n * k > budget_.max_vertices)
    throw OutOfBudget("F^g family exceeds the vertex budget");
  return fg_memo_.emplace(key, generate_fg(g, i, j, k)).first->second;
}

std::vector<Multigraph> FamilyCatalog::generate_fg(int g, int i, int j, int k) {
  if (i <= 0 || j < 0 || j > i || k < 0) return {};
  if (i - j < 2) return {};  // not enough degree-2 vertices to stay subcubic
  Multigraph piece = named(g == 4 ? "L" : "R");
  std::set<CanonicalCode> codes;
  for (const Multigraph& f : family_locked(i, j)) {
    if (k == 0) {
      for (Vertex u = 0; u < f.vertex_count(); ++u) {
        if (f.degree(u) > 2) continue;
        for (Vertex v = u + 1; v < f.vertex_count(); ++v) {
          if (f.degree(v) > 2) continue;
          Multigraph h = f.add_edge(u, v);
          if (is_single_block(h)) codes.insert(canonical_code(h));
        }
      }
      continue;
    }
    // Ring of k+1 components: the F member plus k piece copies.  Each
    // component spends one degree-2 vertex per incident ring edge.
    Multigraph u = f;
    std::vector<int> offset{0};
    for (int c = 0; c < k; ++c) {
      offset.push_back(u.vertex_count());
      u = u.disjoint_union(piece);
    }
    std::vector<std::vector<Vertex>> slots(k + 1);
    slots[0] = degree_two_vertices(f);
    std::vector<Vertex> piece_slots = degree_two_vertices(piece);
    for (int c = 1; c <= k; ++c)
      for (Vertex v : piece_slots) slots[c].push_back(v + offset[c]);
    // Ordered (entry, exit) pair per component; ring edge t joins
    // exit(component t) to entry(component t+1).
    std::vector<std::pair<Vertex, Vertex>> choice(k + 1);
    auto place = [&](auto&& self, int c) -> void {
      if (c == k + 1) {
        Multigraph h = u;
        for (int t = 0; t <= k; ++t)
          h = h.add_edge(choice[t].second, choice[(t + 1) % (k + 1)].first);
        if (is_single_block(h)) codes.insert(canonical_code(h));
        return;
      }
      for (Vertex in : slots[c])
        for (Vertex out : slots[c]) {
          if (in == out) continue;
          choice[c] = {in, out};
          self(self, c + 1);
        }
    };
    place(place, 0);
  }
  return sorted_unique(std::move(codes));
}

std::optional<std::pair<int, int>> FamilyCatalog::member_of_f(const Multigraph& g) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  return member_of_f_locked(g);
}

std::optional<std::pair<int, int>> FamilyCatalog::member_of_f_locked(
    const Multigraph& g) {
  int n = g.vertex_count(), m = g.edge_count();
  if (n == 0 || m < n || (m - n) % 2 != 0) return std::nullopt;
  int j = (m - n) / 2;
  int i = n - 3 * j;
  if (i < 1 || j < 0 || j > i) return std::nullopt;
  if (g.min_degree() < 2 || g.max_degree() > 3 || !g.is_connected())
    return std::nullopt;
  if (decide_f(g, i, j)) return std::make_pair(i, j);
  return std::nullopt;
}

bool FamilyCatalog::decide_f(const Multigraph& g, int i, int j) {
  if (i == 1 && j == 0)
    return canonical_code(g) == canonical_code(cycle_graph(1));
  CanonicalCode code = canonical_code(g);
  auto it = member_memo_.find(code);
  if (it != member_memo_.end()) return it->second;
  bool ok = false;
  std::vector<Vertex> deg2 = degree_two_vertices(g);
  if (!deg2.empty()) {
    // Any degree-2 suppression of a member lands in F_{i-1,j}, and
    // conversely a subdivision of an F_{i-1,j} member is in F_{i,j}.
    Vertex v = deg2.front();
    if (g.loop_count(v) == 0)
      ok = i > 1 && decide_f(g.suppress_vertex(v), i - 1, j);
  } else {
    // Cubic: search for an inverse circ.  The apex x has three distinct
    // neighbors; one plays the role of a, the other two were subdivision
    // vertices and get suppressed after removing x.
    for (Vertex x = 0; x < g.vertex_count() && !ok; ++x) {
      std::set<Vertex> nbrs;
      for (const Edge& e : g.edges()) {
        if (e.u == x && e.v != x) nbrs.insert(e.v);
        if (e.v == x && e.u != x) nbrs.insert(e.u);
      }
      if (nbrs.size() != 3 || g.loop_count(x) > 0) continue;
      std::vector<Vertex> nb(nbrs.begin(), nbrs.end());
      for (int role = 0; role < 3 && !ok; ++role) {
        Vertex v1 = nb[(role + 1) % 3], v2 = nb[(role + 2) % 3];
        try {
          Multigraph h = g.delete_vertex(x);
          Vertex w1 = v1 - (v1 > x ? 1 : 0);
          Vertex w2 = v2 - (v2 > x ? 1 : 0);
          h = h.suppress_vertex(w1);
          w2 -= (w2 > w1 ? 1 : 0);
          h = h.suppress_vertex(w2);
          ok = j > 0 && decide_f(h, i, j - 1);
        } catch (const GraphError&) {
          // this (x, role) choice does not invert a circ application
        }
      }
    }
  }
  member_memo_[code] = ok;
  return ok;
}

std::optional<FgIndex> FamilyCatalog::member_of_fg(const Multigraph& graph, int g) {
  if (g != 4 && g != 5) throw PreconditionViolated("member_of_fg requires g in {4,5}");
  if (!is_single_block(graph) || graph.edge_count() < 2) return std::nullopt;
  if (graph.max_degree() > 3) return std::nullopt;
  std::lock_guard<std::recursive_mutex> lock(mu_);
  int piece_n = g == 4 ? 6 : 10;
  int piece_m = g == 4 ? 8 : 14;
  CanonicalCode piece_code = canonical_code(named(g == 4 ? "L" : "R"));
  int n = graph.vertex_count(), m = graph.edge_count();
  for (int k = 0; n - piece_n * k >= 1; ++k) {
    int n0 = n - piece_n * k;
    int m0 = m - piece_m * k - (k + 1);
    if (m0 < n0 || (m0 - n0) % 2 != 0) continue;
    int j = (m0 - n0) / 2;
    int i = n0 - 3 * j;
    if (i < 1 || i > 3 || j < 0 || j > i || i - j < 2) continue;
    // Choose the k+1 added edges; no two share an endpoint since every
    // original vertex keeps degree >= 2.
    std::vector<EdgeId> pick;
    auto search = [&](auto&& self, EdgeId from) -> bool {
      if (static_cast<int>(pick.size()) == k + 1) {
        std::vector<bool> drop(m, false);
        for (EdgeId e : pick) drop[e] = true;
        Multigraph rest = graph;
        for (int e = m - 1; e >= 0; --e)
          if (drop[e]) rest = rest.delete_edge(e);
        auto comps = rest.components();
        if (static_cast<int>(comps.size()) != k + 1) return false;
        std::vector<int> comp_of(n);
        for (size_t c = 0; c < comps.size(); ++c)
          for (Vertex v : comps[c]) comp_of[v] = static_cast<int>(c);
        std::vector<int> used(k + 1, 0);
        for (EdgeId e : pick) {
          if (comp_of[graph.edge(e).u] == comp_of[graph.edge(e).v] && k > 0)
            return false;
          ++used[comp_of[graph.edge(e).u]];
          ++used[comp_of[graph.edge(e).v]];
        }
        for (int c = 0; c <= k; ++c)
          if (used[c] != 2) return false;
        // One component must lie in F_{i,j}, the rest must be piece copies.
        // A piece copy may itself serve as the F member (L is in F_{3,1}).
        int pieces = 0, f_candidates = 0;
        bool piece_is_f = false;
        for (size_t c = 0; c < comps.size(); ++c) {
          Multigraph part = rest.induced(comps[c]);
          bool as_piece = static_cast<int>(comps[c].size()) == piece_n &&
                          canonical_code(part) == piece_code;
          bool as_f = static_cast<int>(comps[c].size()) == n0 &&
                      part.edge_count() == m0 && decide_f(part, i, j);
          if (as_piece) {
            ++pieces;
            piece_is_f = piece_is_f || as_f;
          } else if (as_f) {
            ++f_candidates;
          } else {
            return false;
          }
        }
        if (pieces == k + 1) return piece_is_f;
        return pieces == k && f_candidates == 1;
      }
      for (EdgeId e = from; e < m; ++e) {
        if (graph.edge(e).is_loop()) continue;
        bool clash = false;
        for (EdgeId p : pick) {
          const Edge &a = graph.edge(p), &b = graph.edge(e);
          if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) clash = true;
        }
        if (clash) continue;
        pick.push_back(e);
        if (self(self, e + 1)) return true;
        pick.pop_back();
      }
      return false;
    };
    if (search(search, 0)) return FgIndex{i, j, k};
  }
  return std::nullopt;
}

Multigraph FamilyCatalog::named(std::string_view name) {
  std::string key;
  for (char c : name) key.push_back(static_cast<char>(std::tolower(c)));
  if (key == "c1") return cycle_graph(1);
  if (key == "k3") return cycle_graph(3);
  if (key == "k4") return complete_graph(4);
  if (key == "k4plus" || key == "k4+") return complete_graph(4).subdivide_edge(0);
  if (key == "l") return make_l();
  if (key == "q3") return make_q3();
  if (key == "v8") return make_v8();
  if (key == "k33" || key == "k3,3") return make_k33();
  if (key == "petersen") return make_petersen();
  if (key == "r") return make_petersen().delete_edge(0);
  if (key == "r1" || key == "r2") {
    validate_r1_r2();
    return key == "r1" ? make_r1() : make_r2();
  }
  if (key == "dodecahedron") return make_dodecahedron();
  if (key.size() >= 2 && key[0] == 'c') {
    int n = 0;
    bool digits = true;
    for (size_t p = 1; p < key.size(); ++p) {
      if (!std::isdigit(static_cast<unsigned char>(key[p]))) digits = false;
      n = n * 10 + (key[p] - '0');
    }
    if (digits && n >= 1) return cycle_graph(n);
  }
  throw UnknownName(std::string(name));
}

void FamilyCatalog::validate_r1_r2() {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  if (r1_r2_checked_) return;
  std::set<CanonicalCode> generated;
  for (const Multigraph& g : family_locked(3, 3)) {
    auto gir = g.girth();
    if (!gir || *gir >= 5) generated.insert(canonical_code(g));
  }
  std::set<CanonicalCode> transcribed{canonical_code(make_r1()),
                                      canonical_code(make_r2())};
  if (transcribed.size() != 2 || generated != transcribed)
    throw std::logic_error(
        "R1/R2 transcription does not match the girth-5 members of F_{3,3}");
  r1_r2_checked_ = true;
}

FamilyCatalog& default_catalog() {
  static FamilyCatalog catalog;
  return catalog;
}

Multigraph ring_of_copies(const Multigraph& piece, int copies) {
  std::vector<Vertex> slots = degree_two_vertices(piece);
  if (slots.size() != 2)
    throw PreconditionViolated("ring_of_copies wants exactly two degree-2 vertices");
  if (copies < 1) throw PreconditionViolated("ring_of_copies wants copies >= 1");
  Multigraph g = piece;
  for (int c = 1; c < copies; ++c) g = g.disjoint_union(piece);
  int pn = piece.vertex_count();
  for (int c = 0; c < copies; ++c) {
    Vertex out = slots[1] + c * pn;
    Vertex in = slots[0] + ((c + 1) % copies) * pn;
    g = g.add_edge(out, in);
  }
  return g;
}

}  // namespace subcubic
