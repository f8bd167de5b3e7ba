#include "subcubic/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace subcubic {

std::string CanonicalCode::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes_.size() * 2);
  for (unsigned char c : bytes_) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

namespace {

struct Searcher {
  int n;
  std::vector<std::vector<uint8_t>> mult;  // multiplicity matrix, loops on diagonal
  std::vector<std::vector<std::pair<int, int>>> nbrs;  // (neighbor, multiplicity)
  bool want_aut;

  std::string best;                 // smallest code seen so far
  std::vector<int> best_labeling;   // original -> position achieving `best`
  std::vector<int> best_inverse;    // position -> original
  std::vector<std::vector<int>> automorphisms;

  // Refine colors until stable.  New colors are ranks of (old color,
  // signature) pairs, so refinement preserves the existing cell order.
  // Degrees are at most 3, so a signature packs into one word: old color,
  // loop count, and up to three sorted (neighbor color, multiplicity) slots.
  void refine(std::vector<int>& color) const {
    std::vector<std::pair<uint64_t, int>> sig(n);
    std::vector<int> next(n);
    while (true) {
      for (int v = 0; v < n; ++v) {
        uint64_t slot[3] = {0, 0, 0};
        int c = 0;
        for (auto [u, m] : nbrs[v])
          slot[c++] = static_cast<uint64_t>(color[u]) << 2 | static_cast<uint64_t>(m);
        if (slot[0] < slot[1]) std::swap(slot[0], slot[1]);
        if (slot[1] < slot[2]) std::swap(slot[1], slot[2]);
        if (slot[0] < slot[1]) std::swap(slot[0], slot[1]);
        sig[v] = {static_cast<uint64_t>(color[v]) << 42 |
                      static_cast<uint64_t>(mult[v][v]) << 40 | slot[0] << 27 |
                      slot[1] << 14 | slot[2] << 1,
                  v};
      }
      std::sort(sig.begin(), sig.end());
      int rank = -1;
      for (int i = 0; i < n; ++i) {
        if (i == 0 || sig[i].first != sig[i - 1].first) ++rank;
        next[sig[i].second] = rank;
      }
      if (next == color) return;
      color = next;
      if (rank == n - 1) return;  // discrete
    }
  }

  // First smallest non-singleton cell, as the list of its vertices.
  std::vector<int> target_cell(const std::vector<int>& color) const {
    std::map<int, std::vector<int>> cells;
    for (int v = 0; v < n; ++v) cells[color[v]].push_back(v);
    std::vector<int> pick;
    for (auto& [c, vs] : cells)
      if (vs.size() > 1 && (pick.empty() || vs.size() < pick.size())) pick = vs;
    return pick;
  }

  std::string encode(const std::vector<int>& labeling) const {
    std::vector<int> inv(n);
    for (int v = 0; v < n; ++v) inv[labeling[v]] = v;
    std::string code;
    code.push_back(static_cast<char>(n));
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j)
        code.push_back(static_cast<char>(mult[inv[i]][inv[j]]));
    return code;
  }

  void visit_leaf(const std::vector<int>& color) {
    std::string code = encode(color);
    if (best.empty() || code < best) {
      best = code;
      best_labeling = color;
      best_inverse.assign(n, 0);
      for (int v = 0; v < n; ++v) best_inverse[color[v]] = v;
      automorphisms.clear();
      if (want_aut) {
        std::vector<int> id(n);
        std::iota(id.begin(), id.end(), 0);
        automorphisms.push_back(std::move(id));
      }
    } else if (want_aut && code == best) {
      std::vector<int> perm(n);
      for (int v = 0; v < n; ++v) perm[v] = best_inverse[color[v]];
      if (std::find(automorphisms.begin(), automorphisms.end(), perm) ==
          automorphisms.end())
        automorphisms.push_back(std::move(perm));
    }
  }

  void search(std::vector<int> color) {
    refine(color);
    std::vector<int> cell = target_cell(color);
    if (cell.empty()) {
      visit_leaf(color);
      return;
    }
    for (int v : cell) {
      std::vector<int> child(n);
      for (int u = 0; u < n; ++u) child[u] = 2 * color[u] + (u == v ? 0 : 1);
      search(std::move(child));
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const Multigraph& g, bool with_automorphisms) {
  int n = g.vertex_count();
  Searcher s;
  s.n = n;
  s.want_aut = with_automorphisms;
  s.mult.assign(n, std::vector<uint8_t>(n, 0));
  for (const Edge& e : g.edges()) {
    if (e.is_loop())
      ++s.mult[e.u][e.u];
    else {
      ++s.mult[e.u][e.v];
      ++s.mult[e.v][e.u];
    }
  }
  s.nbrs.assign(n, {});
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < n; ++u)
      if (u != v && s.mult[v][u] > 0) s.nbrs[v].push_back({u, s.mult[v][u]});
  if (n == 0) {
    CanonicalForm out;
    out.code = CanonicalCode(std::string(1, '\0'));
    return out;
  }
  s.search(std::vector<int>(n, 0));
  CanonicalForm out;
  out.code = CanonicalCode(s.best);
  out.labeling = s.best_labeling;
  out.automorphisms = std::move(s.automorphisms);
  return out;
}

CanonicalCode canonical_code(const Multigraph& g) { return canonical_form(g).code; }

Multigraph from_canonical_code(const CanonicalCode& code) {
  const std::string& b = code.bytes();
  int n = static_cast<unsigned char>(b[0]);
  std::vector<Edge> es;
  size_t pos = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      int m = static_cast<unsigned char>(b[pos++]);
      for (int t = 0; t < m; ++t) es.push_back({i, j});
    }
  return Multigraph(n, std::move(es));
}

}  // namespace subcubic
