#pragma once

#include <vector>

#include "cutideal/error.hpp"
#include "cutideal/graph.hpp"

namespace cutideal {

enum class SPKind { Leaf, Series, Parallel };

/// One node of a series/parallel decomposition. Leaves are edges. Series
/// children share exactly `shared`; Parallel children share exactly {u, v}.
/// Two-terminal nodes (leaves, nodes produced by block reduction) carry their
/// terminals in (u, v); Series nodes that join blocks at a cut vertex have
/// u = v = -1.
struct SPNode {
  SPKind kind = SPKind::Leaf;
  int left = -1;
  int right = -1;
  Vertex u = -1;
  Vertex v = -1;
  Vertex shared = -1;
  bool direct_edge = false;  // Parallel: the composed graph contains edge uv
  VertexSet vertices = 0;
  std::size_t edge_count = 0;

  bool two_terminal() const { return u >= 0 && v >= 0; }
};

/// Arena-backed decomposition tree over a fixed host graph. Nodes are never
/// removed; rewriting appends new nodes and moves the root.
class SPTree {
 public:
  explicit SPTree(Graph host) : host_(std::move(host)) {}

  const Graph& host() const { return host_; }
  const std::vector<SPNode>& nodes() const { return nodes_; }
  const SPNode& node(int id) const { return nodes_.at(static_cast<std::size_t>(id)); }
  int root() const { return root_; }
  void set_root(int id) { root_ = id; }

  /// Edges of the subgraph composed at `id`, ascending.
  std::vector<Edge> edges_of(int id) const;
  /// Subgraph composed at `id`, relabeled onto 0..|V|-1 order-preservingly.
  Graph graph_of(int id) const;
  /// Graph on the host's vertex count with the root's edges.
  Graph compose() const;

  int add_leaf(Edge e);
  /// Validates that the children share exactly `shared`.
  int add_series(int left, int right, Vertex shared, Vertex u = -1, Vertex v = -1);
  /// Validates that the children share exactly {u, v}.
  int add_parallel(int left, int right, Vertex u, Vertex v);

  /// True when the node is a two-terminal subgraph with terminals {a, b}
  /// that contains the edge ab.
  bool contains_terminal_edge(int id) const;

 private:
  Graph host_;
  std::vector<SPNode> nodes_;
  int root_ = -1;
};

/// Thrown when a graph has a K4 minor. Carries the reduced block on which
/// series/parallel reduction got stuck (minimum degree >= 3, hence a K4
/// minor).
class K4MinorError : public DomainError {
 public:
  K4MinorError(std::vector<Vertex> vertices, std::vector<Edge> edges);
  const std::vector<Vertex>& certificate_vertices() const { return vertices_; }
  const std::vector<Edge>& certificate_edges() const { return edges_; }

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
};

bool is_k4_minor_free(const Graph& g);

/// Series/parallel decomposition of a connected K4-minor-free graph with at
/// least one edge. Throws DomainError when disconnected or edgeless and
/// K4MinorError when a K4 minor exists.
SPTree sp_decompose(const Graph& g);

/// Biconnected blocks as edge lists (bridges are single-edge blocks).
std::vector<std::vector<Edge>> biconnected_blocks(const Graph& g);

}  // namespace cutideal
