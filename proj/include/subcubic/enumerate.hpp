#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "subcubic/multigraph.hpp"

namespace subcubic {

struct EnumOptions {
  int vertex_cap = 12;
  // Discard graphs whose girth is below this (forests always pass).
  int min_girth = 1;
  // When > 0, prune graphs that cannot extend to a cubic graph on exactly
  // this many vertices (degree-deficiency bound).
  int cubic_target_n = 0;
};

// Orderly generation by canonical augmentation: a child produced by
// attaching a new vertex is kept only when that vertex sits in the
// automorphism orbit of the canonically chosen deletable vertex.  Levels are
// memoized; each holds exactly one representative per isomorphism class of
// connected simple subcubic graphs, sorted by canonical code.
class Enumerator {
 public:
  explicit Enumerator(EnumOptions opts = {}) : opts_(opts) {}
  const std::vector<Multigraph>& level(int n);
  const EnumOptions& options() const { return opts_; }

 private:
  EnumOptions opts_;
  std::vector<std::vector<Multigraph>> levels_;
};

// All connected simple subcubic graphs on exactly n vertices, one per
// isomorphism class, sorted by canonical code.  Throws TooLarge past the cap.
std::vector<Multigraph> enumerate_connected_subcubic(int n, EnumOptions opts = {});

enum class GraphFormat { graph6, medge };

// Standard graph6 line (simple graphs only; bytes offset by 63).
std::string to_graph6(const Multigraph& g);
Multigraph from_graph6(std::string_view line, int line_no = 1);

// medge: "n m" then m lines "u v" (0-based; loops as "u u"); '#' comments and
// blank lines are ignored; several graphs may follow one another.
void write_graphs(std::ostream& os, const std::vector<Multigraph>& graphs,
                  GraphFormat format);
std::vector<Multigraph> read_graphs(std::istream& is, GraphFormat format);

// Yields multigraphs from a generated range or a parsed file.
class GraphStream {
 public:
  static GraphStream generated(int n_max, EnumOptions opts = {});
  static GraphStream from_file(const std::string& path, GraphFormat format);
  std::optional<Multigraph> next();
  const std::vector<Multigraph>& all() const { return graphs_; }

 private:
  std::vector<Multigraph> graphs_;
  size_t at_ = 0;
};

}  // namespace subcubic
