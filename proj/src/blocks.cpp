#include "subcubic/blocks.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace subcubic {

bool BlockDecomposition::Block::nontrivial() const {
  int n = graph.vertex_count();
  int m = graph.edge_count();
  if (n == 1) return m > 0;  // loop block
  return !(n == 1 || (n == 2 && m == 1));
}

namespace {

struct BlockFinder {
  const Multigraph& g;
  std::vector<std::vector<std::pair<Vertex, EdgeId>>> adj;
  std::vector<int> depth, low;
  std::vector<EdgeId> stack;
  std::vector<std::vector<EdgeId>> edge_groups;
  std::set<Vertex> cuts;

  explicit BlockFinder(const Multigraph& graph) : g(graph), adj(graph.adjacency()) {
    depth.assign(g.vertex_count(), -1);
    low.assign(g.vertex_count(), -1);
  }

  void pop_group(size_t mark) {
    edge_groups.emplace_back(stack.begin() + mark, stack.end());
    stack.resize(mark);
  }

  void dfs(Vertex root) {
    // Iterative Hopcroft-Tarjan; parallel edges to the parent are back edges
    // (only the single tree edge is skipped), loops become singleton groups.
    struct Frame {
      Vertex v;
      Vertex parent;
      EdgeId parent_edge;
      size_t next = 0;
    };
    std::vector<Frame> frames{{root, -1, -1}};
    depth[root] = 0;
    low[root] = 0;
    int root_children = 0;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.next < adj[f.v].size()) {
        auto [w, id] = adj[f.v][f.next++];
        if (w == f.v) {
          edge_groups.push_back({id});  // loop
          continue;
        }
        if (id == f.parent_edge) continue;
        if (depth[w] >= 0) {
          if (depth[w] < depth[f.v]) {
            stack.push_back(id);
            low[f.v] = std::min(low[f.v], depth[w]);
          }
          continue;
        }
        depth[w] = depth[f.v] + 1;
        low[w] = depth[w];
        if (f.v == root) ++root_children;
        stack.push_back(id);
        frames.push_back({w, f.v, id});
      } else {
        Frame done = f;
        frames.pop_back();
        if (frames.empty()) break;
        Frame& p = frames.back();
        low[p.v] = std::min(low[p.v], low[done.v]);
        if (low[done.v] >= depth[p.v]) {
          // p.v separates done.v's subtree: close the block.
          size_t mark = stack.size();
          while (mark > 0 && stack[mark - 1] != done.parent_edge) --mark;
          assert(mark > 0);
          pop_group(mark - 1);
          if (p.v != root || root_children > 1) cuts.insert(p.v);
        }
      }
    }
    // A root with exactly one child is not a cut vertex; its block was
    // closed above.  Remaining stack edges would indicate a bug.
  }
};

}  // namespace

BlockDecomposition block_decomposition(const Multigraph& g) {
  BlockFinder finder(g);
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (finder.depth[v] < 0) finder.dfs(v);

  BlockDecomposition out;
  std::vector<bool> covered(g.vertex_count(), false);
  for (auto& group : finder.edge_groups) {
    std::set<Vertex> verts;
    for (EdgeId id : group) {
      verts.insert(g.edge(id).u);
      verts.insert(g.edge(id).v);
    }
    BlockDecomposition::Block b;
    b.parent_vertex.assign(verts.begin(), verts.end());
    std::map<Vertex, int> local;
    for (size_t i = 0; i < b.parent_vertex.size(); ++i) {
      local[b.parent_vertex[i]] = static_cast<int>(i);
      covered[b.parent_vertex[i]] = true;
    }
    std::vector<Edge> es;
    for (EdgeId id : group) {
      es.push_back({local[g.edge(id).u], local[g.edge(id).v]});
      b.parent_edge.push_back(id);
    }
    b.graph = Multigraph(static_cast<int>(verts.size()), std::move(es));
    out.blocks.push_back(std::move(b));
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!covered[v]) {
      BlockDecomposition::Block b;
      b.graph = Multigraph(1, {});
      b.parent_vertex = {v};
      out.blocks.push_back(std::move(b));
    }
  out.cut_vertices.assign(finder.cuts.begin(), finder.cuts.end());
  return out;
}

bool is_2connected(const Multigraph& g) {
  if (g.vertex_count() < 3 || !g.is_connected()) return false;
  return block_decomposition(g).cut_vertices.empty();
}

bool is_single_block(const Multigraph& g) {
  if (g.vertex_count() == 0) return false;
  return block_decomposition(g).blocks.size() == 1;
}

std::vector<EdgeId> bridges(const Multigraph& g) {
  std::vector<EdgeId> out;
  BlockDecomposition d = block_decomposition(g);
  for (const auto& b : d.blocks)
    if (b.graph.vertex_count() == 2 && b.graph.edge_count() == 1)
      out.push_back(b.parent_edge[0]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace subcubic
