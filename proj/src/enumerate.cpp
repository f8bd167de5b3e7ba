#include "subcubic/enumerate.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>

#include "subcubic/canonical.hpp"
#include "subcubic/errors.hpp"

namespace subcubic {

namespace {

bool girth_ok(const Multigraph& g, int min_girth) {
  if (min_girth <= 1) return true;
  auto gir = g.girth();
  return !gir || *gir >= min_girth;
}

// Orbit of `target` under the listed permutations (original labels).
std::set<Vertex> orbit_of(const std::vector<std::vector<int>>& perms, Vertex target) {
  std::set<Vertex> orbit{target};
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& p : perms)
      for (Vertex v : std::vector<Vertex>(orbit.begin(), orbit.end()))
        if (orbit.insert(p[v]).second) grew = true;
  }
  return orbit;
}

std::vector<std::vector<Vertex>> attachment_orbit_reps(
    const Multigraph& p, const std::vector<std::vector<int>>& auts) {
  std::vector<Vertex> open;
  for (Vertex v = 0; v < p.vertex_count(); ++v)
    if (p.degree(v) <= 2) open.push_back(v);
  std::vector<std::vector<Vertex>> subsets;
  int c = static_cast<int>(open.size());
  for (int a = 0; a < c; ++a) {
    subsets.push_back({open[a]});
    for (int b = a + 1; b < c; ++b) {
      subsets.push_back({open[a], open[b]});
      for (int d = b + 1; d < c; ++d) subsets.push_back({open[a], open[b], open[d]});
    }
  }
  std::vector<std::vector<Vertex>> reps;
  for (const auto& s : subsets) {
    bool minimal = true;
    for (const auto& perm : auts) {
      std::vector<Vertex> image;
      image.reserve(s.size());
      for (Vertex v : s) image.push_back(perm[v]);
      std::sort(image.begin(), image.end());
      if (image < s) {
        minimal = false;
        break;
      }
    }
    if (minimal) reps.push_back(s);
  }
  return reps;
}

}  // namespace

const std::vector<Multigraph>& Enumerator::level(int n) {
  if (n < 1) throw PreconditionViolated("enumeration needs n >= 1");
  if (n > opts_.vertex_cap)
    throw TooLarge("enumeration cap is " + std::to_string(opts_.vertex_cap) +
                   " vertices");
  while (static_cast<int>(levels_.size()) < n) {
    int depth = static_cast<int>(levels_.size()) + 1;
    std::vector<Multigraph> out;
    if (depth == 1) {
      out.push_back(Multigraph(1, {}));
    } else {
      std::map<CanonicalCode, Multigraph> found;
      for (const Multigraph& parent : levels_[depth - 2]) {
        CanonicalForm pf = canonical_form(parent, true);
        for (const auto& attach : attachment_orbit_reps(parent, pf.automorphisms)) {
          std::vector<Edge> es = parent.edges();
          for (Vertex v : attach) es.push_back({v, depth - 1});
          Multigraph child(depth, es);
          if (!girth_ok(child, opts_.min_girth)) continue;
          if (opts_.cubic_target_n > 0) {
            int deficiency = 3 * depth - 2 * child.edge_count();
            if (deficiency > 3 * (opts_.cubic_target_n - depth)) continue;
          }
          CanonicalForm cf = canonical_form(child, true);
          Vertex top = -1;
          int top_pos = -1;
          for (Vertex u = 0; u < depth; ++u)
            if (cf.labeling[u] > top_pos && child.delete_vertex(u).is_connected()) {
              top = u;
              top_pos = cf.labeling[u];
            }
          std::set<Vertex> orb = orbit_of(cf.automorphisms, top);
          if (!orb.count(depth - 1)) continue;
          bool inserted = found.emplace(cf.code, std::move(child)).second;
          if (!inserted)
            throw std::logic_error("canonical augmentation produced a duplicate");
        }
      }
      for (auto& [code, g] : found) out.push_back(std::move(g));
    }
    levels_.push_back(std::move(out));
  }
  return levels_[n - 1];
}

std::vector<Multigraph> enumerate_connected_subcubic(int n, EnumOptions opts) {
  Enumerator e(opts);
  return e.level(n);
}

// ---------------------------------------------------------------- graph6 --

std::string to_graph6(const Multigraph& g) {
  if (!g.is_simple()) throw NotSimple();
  int n = g.vertex_count();
  if (n > 62) throw TooLarge("graph6 writer supports at most 62 vertices here");
  std::string out(1, static_cast<char>(n + 63));
  int bitpos = 5;
  char acc = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (g.adjacent(i, j)) acc |= static_cast<char>(1 << bitpos);
      if (--bitpos < 0) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        bitpos = 5;
      }
    }
  if (n >= 2 && bitpos != 5) out.push_back(static_cast<char>(acc + 63));
  return out;
}

Multigraph from_graph6(std::string_view line, int line_no) {
  if (line.empty()) throw ParseError(line_no, "empty graph6 line");
  int n = static_cast<unsigned char>(line[0]) - 63;
  if (n < 0 || n > 62)
    throw ParseError(line_no, "unsupported graph6 vertex count byte");
  int bits = n * (n - 1) / 2;
  size_t need = 1 + (bits + 5) / 6;
  if (line.size() != need)
    throw ParseError(line_no, "graph6 line has wrong length");
  std::vector<std::pair<int, int>> es;
  int bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit) {
      unsigned char c = static_cast<unsigned char>(line[1 + bit / 6]);
      if (c < 63 || c > 126) throw ParseError(line_no, "graph6 byte out of range");
      if ((c - 63) >> (5 - bit % 6) & 1) es.push_back({i, j});
    }
  try {
    return Multigraph::from_pairs(n, es);
  } catch (const GraphError& err) {
    throw ParseError(line_no, err.what());
  }
}

// ------------------------------------------------------------------ medge --

namespace {

void write_medge(std::ostream& os, const Multigraph& g) {
  os << g.vertex_count() << " " << g.edge_count() << "\n";
  for (const Edge& e : g.edges()) os << e.u << " " << e.v << "\n";
}

std::vector<Multigraph> read_medge(std::istream& is) {
  std::vector<Multigraph> out;
  std::string line;
  int line_no = 0;
  int want_edges = -1;  // -1: expecting a header
  int n = 0;
  std::vector<std::pair<int, int>> es;
  auto flush = [&](int at_line) {
    if (want_edges > static_cast<int>(es.size()))
      throw ParseError(at_line, "fewer edge lines than announced");
    if (want_edges >= 0) {
      try {
        out.push_back(Multigraph::from_pairs(n, es));
      } catch (const GraphError& err) {
        throw ParseError(at_line, err.what());
      }
    }
    want_edges = -1;
    es.clear();
  };
  while (std::getline(is, line)) {
    ++line_no;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    long a, b;
    char extra;
    int got = std::sscanf(line.c_str(), " %ld %ld %c", &a, &b, &extra);
    if (got <= 0) continue;  // blank
    if (got != 2) throw ParseError(line_no, "expected two integers");
    if (want_edges < 0) {
      if (a < 0 || b < 0) throw ParseError(line_no, "negative header values");
      n = static_cast<int>(a);
      want_edges = static_cast<int>(b);
      if (want_edges == 0) flush(line_no);
    } else {
      es.push_back({static_cast<int>(a), static_cast<int>(b)});
      if (static_cast<int>(es.size()) == want_edges) flush(line_no);
    }
  }
  if (want_edges >= 0) throw ParseError(line_no, "unexpected end of medge data");
  return out;
}

}  // namespace

void write_graphs(std::ostream& os, const std::vector<Multigraph>& graphs,
                  GraphFormat format) {
  for (const Multigraph& g : graphs) {
    if (format == GraphFormat::graph6)
      os << to_graph6(g) << "\n";
    else
      write_medge(os, g);
  }
}

std::vector<Multigraph> read_graphs(std::istream& is, GraphFormat format) {
  if (format == GraphFormat::medge) return read_medge(is);
  std::vector<Multigraph> out;
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line == ">>graph6<<") continue;
    if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
    out.push_back(from_graph6(line, line_no));
  }
  return out;
}

GraphStream GraphStream::generated(int n_max, EnumOptions opts) {
  GraphStream s;
  Enumerator e(opts);
  for (int n = 1; n <= n_max; ++n)
    for (const Multigraph& g : e.level(n)) s.graphs_.push_back(g);
  return s;
}

GraphStream GraphStream::from_file(const std::string& path, GraphFormat format) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open " + path);
  GraphStream s;
  s.graphs_ = read_graphs(in, format);
  return s;
}

std::optional<Multigraph> GraphStream::next() {
  if (at_ >= graphs_.size()) return std::nullopt;
  return graphs_[at_++];
}

}  // namespace subcubic
