#include "subcubic/verify.hpp"

#include <algorithm>

#include "subcubic/blocks.hpp"
#include "subcubic/canonical.hpp"
#include "subcubic/errors.hpp"

namespace subcubic {

Verdict check_main_bound(FamilyCatalog& catalog, const Multigraph& g, int girth_class,
                         SolverOptions opts) {
  if (g.max_degree() > 3) throw PreconditionViolated("input is not subcubic");
  if (g.has_two_disjoint_short_cycles(girth_class))
    throw PreconditionViolated("two disjoint short cycles present");
  Verdict v;
  v.claim = "main_bound_g" + std::to_string(girth_class);
  v.input = canonical_code(g).hex();
  FvsCertificate cert = min_fvs(g, opts);
  v.phi = cert.size;
  v.witness = cert.vertices;
  v.lhs = cert.size;
  v.rhs = t_value(girth_class) * Rational(g.edge_count()) +
          r_value(catalog, g, girth_class);
  v.holds = v.lhs <= v.rhs;
  return v;
}

namespace {

bool girth_at_least(const Multigraph& g, int bound) {
  auto gir = g.girth();
  return !gir || *gir >= bound;
}

struct ExplicitShape {
  bool covered = true;
  int n_l = 0;          // blocks isomorphic to L
  int n_f32_or_c4 = 0;  // blocks in F_{3,2} or F_{4,0}
  int n_r = 0;          // blocks isomorphic to R
  int n_f43_g5 = 0;     // blocks in F_{4,3} with girth >= 5
  int nontrivial = 0;
};

ExplicitShape explicit_shape(FamilyCatalog& catalog, const Multigraph& g) {
  ExplicitShape s;
  CanonicalCode l = canonical_code(catalog.named("L"));
  CanonicalCode r = canonical_code(catalog.named("R"));
  std::vector<bool> in_nontrivial(g.vertex_count(), false);
  for (auto& b : block_decomposition(g).blocks) {
    if (!b.nontrivial()) continue;
    ++s.nontrivial;
    for (Vertex v : b.parent_vertex) in_nontrivial[v] = true;
    CanonicalCode code = canonical_code(b.graph);
    if (code == l) ++s.n_l;
    if (code == r) ++s.n_r;
    auto f = catalog.member_of_f(b.graph);
    if (f && (*f == std::make_pair(3, 2) || *f == std::make_pair(4, 0)))
      ++s.n_f32_or_c4;
    if (f && *f == std::make_pair(4, 3) && girth_at_least(b.graph, 5)) ++s.n_f43_g5;
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!in_nontrivial[v]) s.covered = false;
  return s;
}

}  // namespace

Verdict classify_explicit(FamilyCatalog& catalog, const Multigraph& g,
                          int girth_class, SolverOptions opts) {
  if (!g.is_connected() || g.max_degree() > 3)
    throw PreconditionViolated("input is not a connected subcubic graph");
  if (!girth_at_least(g, girth_class))
    throw PreconditionViolated("girth below " + std::to_string(girth_class));
  Verdict v;
  v.claim = "explicit_classification_g" + std::to_string(girth_class);
  CanonicalCode code = canonical_code(g);
  v.input = code.hex();
  FvsCertificate cert = min_fvs(g, opts);
  v.phi = cert.size;
  v.witness = cert.vertices;
  v.lhs = cert.size;
  Rational m(g.edge_count());
  ExplicitShape s = explicit_shape(catalog, g);
  bool equality = false;
  if (girth_class == 4) {
    Rational t(2, 9);
    if (code == canonical_code(catalog.named("Q3")) ||
        code == canonical_code(catalog.named("V8"))) {
      v.case_id = "1a";
      v.rhs = t * m + Rational(1, 3);
      equality = true;
    } else if (s.covered && s.n_l >= 1 && s.n_l == s.nontrivial) {
      v.case_id = "1b";
      v.rhs = t * m + Rational(2, 9);
      equality = true;
    } else if (s.covered && s.n_f32_or_c4 == 1 &&
               s.n_l + s.n_f32_or_c4 == s.nontrivial) {
      v.case_id = "1c";
      v.rhs = t * m + Rational(1, 9);
      equality = true;
    } else {
      v.case_id = "1d";
      v.rhs = t * m;
    }
  } else if (girth_class == 5) {
    Rational t(1, 5);
    auto f = catalog.member_of_f(g);
    if (code == canonical_code(catalog.named("R1")) ||
        code == canonical_code(catalog.named("R2"))) {
      v.case_id = "2a";
      v.rhs = t * m + Rational(2, 5);
      equality = true;
    } else if ((f && *f == std::make_pair(4, 4)) ||
               (s.covered && s.nontrivial >= 1 &&
                s.n_r + s.n_f43_g5 == s.nontrivial)) {
      v.case_id = "2b";
      v.rhs = t * m + Rational(1, 5);
    } else {
      v.case_id = "2c";
      v.rhs = t * m;
    }
  } else {
    throw PreconditionViolated("girth class must be 4 or 5");
  }
  v.holds = equality ? v.lhs == v.rhs : v.lhs <= v.rhs;
  return v;
}

std::vector<std::vector<Vertex>> five_cycles(const Multigraph& g) {
  std::vector<std::vector<Vertex>> out;
  auto adj = g.adjacency();
  int n = g.vertex_count();
  std::vector<Vertex> path;
  std::vector<bool> used(n, false);
  auto dfs = [&](auto&& self, Vertex v) -> void {
    if (path.size() == 5) {
      if (g.adjacent(v, path[0]) && path[1] < path[4]) out.push_back(path);
      return;
    }
    for (auto [w, id] : adj[v]) {
      if (w <= path[0] || used[w]) continue;
      used[w] = true;
      path.push_back(w);
      self(self, w);
      path.pop_back();
      used[w] = false;
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    path = {s};
    used.assign(n, false);
    used[s] = true;
    dfs(dfs, s);
  }
  for (auto& c : out) std::sort(c.begin(), c.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool dodeca_condition(const Multigraph& g) {
  if (!g.is_cubic()) throw NotCubic();
  if (g.girth() != std::optional<int>(5)) return false;
  auto adj = g.adjacency();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::vector<Vertex> nbrs;
    for (auto [w, id] : adj[v]) nbrs.push_back(w);
    Multigraph rest = g.delete_vertex(v);
    auto cycles = five_cycles(rest);
    auto shifted = [v](Vertex x) { return x > v ? x - 1 : x; };
    for (size_t x = 0; x < nbrs.size(); ++x)
      for (size_t y = x + 1; y < nbrs.size(); ++y) {
        Vertex a = shifted(nbrs[x]), b = shifted(nbrs[y]);
        bool ok = false;
        for (const auto& ca : cycles) {
          if (!std::binary_search(ca.begin(), ca.end(), a)) continue;
          for (const auto& cb : cycles) {
            if (!std::binary_search(cb.begin(), cb.end(), b)) continue;
            std::vector<Vertex> inter;
            std::set_intersection(ca.begin(), ca.end(), cb.begin(), cb.end(),
                                  std::back_inserter(inter));
            if (inter.empty()) {
              ok = true;
              break;
            }
          }
          if (ok) break;
        }
        if (!ok) return false;
      }
  }
  return true;
}

Verdict check_dodeca_theorem(FamilyCatalog& catalog, const Multigraph& g) {
  Verdict v;
  v.claim = "dodecahedron_characterization";
  v.input = canonical_code(g).hex();
  bool condition = dodeca_condition(g);
  CanonicalCode dodeca = canonical_code(catalog.named("Dodecahedron"));
  bool all_dodeca = g.vertex_count() > 0;
  for (const auto& comp : g.components())
    if (canonical_code(g.induced(comp)) != dodeca) all_dodeca = false;
  v.lhs = condition ? 1 : 0;
  v.rhs = all_dodeca ? 1 : 0;
  v.case_id = condition ? "condition_holds" : "condition_fails";
  v.holds = condition == all_dodeca;
  return v;
}

}  // namespace subcubic
