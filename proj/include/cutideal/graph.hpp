#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cutideal/bits.hpp"

namespace cutideal {

using Vertex = int;

/// Undirected edge stored with a < b.
struct Edge {
  Vertex a = 0;
  Vertex b = 0;

  Edge() = default;
  Edge(Vertex x, Vertex y) : a(x < y ? x : y), b(x < y ? y : x) {}

  bool touches(Vertex v) const { return a == v || b == v; }
  auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..n-1. Edges are kept sorted, so the
/// edge order (which fixes the layout of exponent vectors) is canonical.
class Graph {
 public:
  /// Single vertex, no edges.
  Graph() : Graph(1, std::vector<Edge>{}) {}

  /// Throws DomainError on loops, duplicate edges, or out-of-range endpoints.
  Graph(int vertex_count, const std::vector<std::pair<Vertex, Vertex>>& edges);
  Graph(int vertex_count, const std::vector<Edge>& edges);

  int vertex_count() const { return n_; }
  VertexSet vertices() const { return full_set(n_); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_edge(Vertex u, Vertex v) const;
  VertexSet neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return set_size(neighbors(v)); }

  /// Index of `e` in edges(), or -1.
  int edge_index(Edge e) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 1;
  std::vector<Edge> edges_;
  std::vector<VertexSet> adj_;
};

/// Parses `{"n": <int>, "edges": [[u,v],...]}`. Throws ParseError on malformed
/// JSON, a bad schema, loops, duplicate edges, or endpoints out of range.
Graph parse_graph(std::string_view text);

/// Canonical unordered bipartition. `side` holds the part containing the
/// smallest vertex of the ground set the cut lives on (vertex 0 for cuts of a
/// whole graph). The complement is implicit.
struct Cut {
  VertexSet side = 0;
  auto operator<=>(const Cut&) const = default;
};

/// Canonicalizes an arbitrary side of a bipartition of `ground`.
inline Cut canonical_cut(VertexSet side, VertexSet ground) {
  side &= ground;
  if (ground != 0 && !contains(side, lowest_vertex(ground))) side = ground & ~side;
  return Cut{side};
}

inline bool separates(Cut c, Vertex u, Vertex v) {
  return contains(c.side, u) != contains(c.side, v);
}

/// All 2^(n-1) cuts of g in ascending bitmask order.
std::vector<Cut> enumerate_cuts(const Graph& g);

/// All cuts of the vertex set `ground`, canonical on its minimum vertex,
/// ascending.
std::vector<Cut> enumerate_cuts_of(VertexSet ground);

/// Restriction of a cut to `s`, canonical on min(s), vertex labels kept.
/// Throws DomainError if s is empty.
Cut restrict_cut(Cut c, VertexSet s);

/// Restriction to `s` followed by order-preserving relabeling of s to 0..|s|-1.
Cut localize_cut(Cut c, VertexSet s);

/// Inverse relabeling of localize_cut: a cut of 0..|s|-1 placed onto s.
Cut globalize_cut(Cut local, VertexSet s);

Graph add_edge(const Graph& g, Vertex u, Vertex v);
Graph contract_edge(const Graph& g, Edge e);
Graph delete_vertex(const Graph& g, Vertex v);

/// G[s], relabeled order-preservingly to 0..|s|-1.
Graph induced_subgraph(const Graph& g, VertexSet s);

/// Graph on `s` (relabeled order-preservingly) with the listed edges, which
/// must lie inside s.
Graph subgraph(const Graph& g, VertexSet s, const std::vector<Edge>& edges);

/// Vertices reachable from `start` using only vertices in `within`.
VertexSet reachable(const Graph& g, Vertex start, VertexSet within);

bool is_connected(const Graph& g);

std::string describe(const Graph& g);

}  // namespace cutideal
