#include "cutideal/sp_tree.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace cutideal {

std::vector<Edge> SPTree::edges_of(int id) const {
  std::vector<Edge> out;
  std::vector<int> stack{id};
  while (!stack.empty()) {
    const SPNode& n = node(stack.back());
    stack.pop_back();
    if (n.kind == SPKind::Leaf) {
      out.emplace_back(n.u, n.v);
    } else {
      stack.push_back(n.left);
      stack.push_back(n.right);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Graph SPTree::graph_of(int id) const { return subgraph(host_, node(id).vertices, edges_of(id)); }

Graph SPTree::compose() const { return Graph(host_.vertex_count(), edges_of(root_)); }

int SPTree::add_leaf(Edge e) {
  if (!host_.has_edge(e.a, e.b)) throw DomainError("leaf edge is not in the host graph");
  SPNode n;
  n.kind = SPKind::Leaf;
  n.u = e.a;
  n.v = e.b;
  n.vertices = singleton(e.a) | singleton(e.b);
  n.edge_count = 1;
  nodes_.push_back(n);
  return static_cast<int>(nodes_.size()) - 1;
}

int SPTree::add_series(int left, int right, Vertex shared, Vertex u, Vertex v) {
  const SPNode& l = node(left);
  const SPNode& r = node(right);
  if ((l.vertices & r.vertices) != singleton(shared)) {
    throw DomainError("series children must share exactly the vertex " + std::to_string(shared));
  }
  SPNode n;
  n.kind = SPKind::Series;
  n.left = left;
  n.right = right;
  n.shared = shared;
  n.u = u;
  n.v = v;
  n.vertices = l.vertices | r.vertices;
  n.edge_count = l.edge_count + r.edge_count;
  nodes_.push_back(n);
  return static_cast<int>(nodes_.size()) - 1;
}

int SPTree::add_parallel(int left, int right, Vertex u, Vertex v) {
  const SPNode& l = node(left);
  const SPNode& r = node(right);
  if ((l.vertices & r.vertices) != (singleton(u) | singleton(v)) || u == v) {
    throw DomainError("parallel children must share exactly the pair {" + std::to_string(u) +
                      "," + std::to_string(v) + "}");
  }
  SPNode n;
  n.kind = SPKind::Parallel;
  n.left = left;
  n.right = right;
  n.u = std::min(u, v);
  n.v = std::max(u, v);
  n.vertices = l.vertices | r.vertices;
  n.edge_count = l.edge_count + r.edge_count;
  nodes_.push_back(n);
  const int id = static_cast<int>(nodes_.size()) - 1;
  const bool in_left = contains_terminal_edge(left);
  const bool in_right = contains_terminal_edge(right);
  if (in_left && in_right) throw DomainError("parallel composition duplicates an edge");
  nodes_.back().direct_edge = in_left || in_right;
  return id;
}

bool SPTree::contains_terminal_edge(int id) const {
  const SPNode& n = node(id);
  switch (n.kind) {
    case SPKind::Leaf:
      return true;
    case SPKind::Parallel:
      return n.direct_edge;
    case SPKind::Series:
      // Terminals sit in different children, which share only `shared`.
      return false;
  }
  return false;
}

K4MinorError::K4MinorError(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : DomainError("graph has a K4 minor"), vertices_(std::move(vertices)), edges_(std::move(edges)) {}

std::vector<std::vector<Edge>> biconnected_blocks(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> disc(static_cast<std::size_t>(n), 0);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<Edge> stack;
  std::vector<std::vector<Edge>> blocks;
  int clock = 0;

  std::function<void(Vertex, Vertex)> dfs = [&](Vertex x, Vertex parent) {
    disc[x] = low[x] = ++clock;
    for (Vertex w : members(g.neighbors(x))) {
      if (disc[w] == 0) {
        stack.emplace_back(x, w);
        dfs(w, x);
        low[x] = std::min(low[x], low[w]);
        if (low[w] >= disc[x]) {
          std::vector<Edge> block;
          const Edge stop(x, w);
          while (true) {
            Edge e = stack.back();
            stack.pop_back();
            block.push_back(e);
            if (e == stop) break;
          }
          std::sort(block.begin(), block.end());
          blocks.push_back(std::move(block));
        }
      } else if (w != parent && disc[w] < disc[x]) {
        stack.emplace_back(x, w);
        low[x] = std::min(low[x], disc[w]);
      }
    }
  };
  for (Vertex x = 0; x < n; ++x) {
    if (disc[x] == 0) dfs(x, -1);
  }
  return blocks;
}

namespace {

/// Series/parallel reduction of one biconnected block. Returns the node of
/// the final edge, or throws K4MinorError with the stuck multigraph.
int reduce_block(SPTree& tree, const std::vector<Edge>& block) {
  std::map<Edge, int> virtual_edges;
  auto insert = [&](Edge e, int id) {
    auto it = virtual_edges.find(e);
    if (it == virtual_edges.end()) {
      virtual_edges.emplace(e, id);
    } else {
      it->second = tree.add_parallel(it->second, id, e.a, e.b);
    }
  };
  for (const Edge& e : block) insert(e, tree.add_leaf(e));

  auto neighbors = [&](Vertex x) {
    std::vector<Vertex> out;
    for (const auto& [e, id] : virtual_edges) {
      if (e.a == x) out.push_back(e.b);
      if (e.b == x) out.push_back(e.a);
    }
    return out;
  };

  while (virtual_edges.size() > 1) {
    VertexSet live = 0;
    for (const auto& [e, id] : virtual_edges) live |= singleton(e.a) | singleton(e.b);
    bool reduced = false;
    for (Vertex w : members(live)) {
      std::vector<Vertex> nb = neighbors(w);
      if (nb.size() != 2) continue;
      std::sort(nb.begin(), nb.end());
      const Edge ex(nb[0], w);
      const Edge ey(w, nb[1]);
      const int left = virtual_edges.at(ex);
      const int right = virtual_edges.at(ey);
      virtual_edges.erase(ex);
      virtual_edges.erase(ey);
      insert(Edge(nb[0], nb[1]), tree.add_series(left, right, w, nb[0], nb[1]));
      reduced = true;
      break;
    }
    if (!reduced) {
      std::vector<Edge> edges;
      for (const auto& [e, id] : virtual_edges) edges.push_back(e);
      throw K4MinorError(members(live), edges);
    }
  }
  return virtual_edges.begin()->second;
}

}  // namespace

bool is_k4_minor_free(const Graph& g) {
  SPTree scratch(g);
  try {
    for (const auto& block : biconnected_blocks(g)) reduce_block(scratch, block);
  } catch (const K4MinorError&) {
    return false;
  }
  return true;
}

SPTree sp_decompose(const Graph& g) {
  if (g.edge_count() == 0) throw DomainError("graph has no edges to decompose");
  if (!is_connected(g)) throw DomainError("graph is not connected");
  SPTree tree(g);
  std::vector<std::vector<Edge>> blocks = biconnected_blocks(g);
  std::vector<int> roots;
  std::vector<VertexSet> spans;
  for (const auto& block : blocks) {
    roots.push_back(reduce_block(tree, block));
    spans.push_back(tree.node(roots.back()).vertices);
  }
  // Attach blocks one at a time along the block/cut-vertex tree.
  int current = roots[0];
  VertexSet covered = spans[0];
  std::vector<bool> used(blocks.size(), false);
  used[0] = true;
  for (std::size_t attached = 1; attached < blocks.size(); ++attached) {
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if (used[i] || (spans[i] & covered) == 0) continue;
      const Vertex w = lowest_vertex(spans[i] & covered);
      current = tree.add_series(current, roots[i], w);
      covered |= spans[i];
      used[i] = true;
      break;
    }
  }
  tree.set_root(current);
  return tree;
}

}  // namespace cutideal
