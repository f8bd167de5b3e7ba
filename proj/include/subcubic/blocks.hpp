#pragma once

#include <vector>

#include "subcubic/multigraph.hpp"

namespace subcubic {

// Standard block / cut-vertex decomposition.  Every edge of the parent lies
// in exactly one block; an isolated vertex forms a K1 block; a loop forms the
// one-vertex loop block of its vertex.
struct BlockDecomposition {
  struct Block {
    Multigraph graph;
    std::vector<Vertex> parent_vertex;  // block-local id -> parent id
    std::vector<EdgeId> parent_edge;    // block-local edge -> parent edge
    bool nontrivial() const;            // not K1 and not K2
  };
  std::vector<Block> blocks;
  std::vector<Vertex> cut_vertices;  // sorted
};

BlockDecomposition block_decomposition(const Multigraph& g);

// Connected, at least three vertices, and no cut-vertex.
bool is_2connected(const Multigraph& g);

// The graph consists of a single block (this admits C1, C2 and other
// cycle-carrying multigraphs on < 3 vertices, unlike is_2connected).
bool is_single_block(const Multigraph& g);

// Edges whose removal disconnects their component.
std::vector<EdgeId> bridges(const Multigraph& g);

}  // namespace subcubic
