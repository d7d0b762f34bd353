#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cutideal/cut_algebra.hpp"
#include "cutideal/oracle.hpp"
#include "cutideal/sp_tree.hpp"

namespace cutideal {

/// A graph split into two vertex sets that overlap in the shared vertices.
/// For two-vertex gluings the shared pair is {u, v}; for a one-vertex
/// (series) gluing the shared vertex is u and v is -1.
///
/// Generating sets handed to the gluing operations live on the induced
/// subgraphs G[left] and G[right] (or those plus the edge uv), relabeled
/// order-preservingly onto 0..k-1, which is what induced_subgraph returns.
struct GluingSpec {
  Graph graph;
  VertexSet left = 0;
  VertexSet right = 0;
  Vertex u = -1;
  Vertex v = -1;
};

/// Checks the two-vertex gluing hypotheses: left/right cover V(G) and meet
/// in {u, v}; every edge lies in G[left] or G[right]; uv is not an edge; u
/// and v are joined by a path inside each side. Throws DomainError.
void validate_nonadjacent(const GluingSpec& spec);
/// Same cover conditions, but uv must be an edge.
void validate_edge_gluing(const GluingSpec& spec);
/// Cover conditions with a single shared vertex u (v == -1).
void validate_series(const GluingSpec& spec);

/// Local labels of u and v inside one side.
Vertex local_vertex(VertexSet side, Vertex x);

struct GlueOptions {
  /// Degree bound for the oracle that produces base-case generators.
  int base_degree_bound = 4;
  /// Drop binomials whose two sides are already joined by the others.
  bool prune = false;
  OracleOptions oracle;
};

/// Generators for a connected graph on at most three vertices, computed by
/// the bounded oracle. Throws DomainError for larger or disconnected graphs,
/// or if a generator above degree 2 shows up.
GeneratingSet base_generators(const Graph& g, const GlueOptions& options = {});

/// Lifts of both sides' generators plus the sorting quadrics, for a
/// one-vertex gluing.
GeneratingSet lift_series(const GluingSpec& spec, const GeneratingSet& gens_left,
                          const GeneratingSet& gens_right);

/// Lifts plus sorting quadrics for a gluing along the edge uv. The inputs
/// generate I(G[left]) and I(G[right]), both of which contain uv.
GeneratingSet lift_edge_gluing(const GluingSpec& spec, const GeneratingSet& gens_left,
                               const GeneratingSet& gens_right);

/// F1 and F2: lifts of generators of I(G[left]+uv) and I(G[right]+uv) with
/// the other side's parts held fixed position by position.
GeneratingSet build_F1_F2(const GluingSpec& spec, const GeneratingSet& gens_left_uv,
                          const GeneratingSet& gens_right_uv);

/// F3: joins of generators of I(G[left]) and I(G[right]) that drop the
/// (u, v)-height by exactly 2, after extending both by monomial multipliers
/// up to total degree 2M - 2.
GeneratingSet build_F3(const GluingSpec& spec, const GeneratingSet& gens_left,
                       const GeneratingSet& gens_right, int max_input_degree);

/// F4: quadrics fixing the left parts of two cuts and swapping their right
/// parts. Empty when degree_cap < 2.
GeneratingSet build_F4(const GluingSpec& spec, int degree_cap = 2);

struct GlueReport {
  GeneratingSet generators;
  /// max{2 mu_L - 2, 2 mu_R - 2, mu_{L+uv}, mu_{R+uv}} from the input degrees.
  int mu_bound = 0;
  std::size_t f1_f2_count = 0;
  std::size_t f3_count = 0;
  std::size_t f4_count = 0;
};

GlueReport glue_nonadjacent(const GluingSpec& spec, const GeneratingSet& gens_left,
                            const GeneratingSet& gens_right, const GeneratingSet& gens_left_uv,
                            const GeneratingSet& gens_right_uv);

/// One rule firing during quadratic_basis_sp.
struct TraceEntry {
  Graph graph;       // the subgraph handled at this step, relabeled
  std::string rule;  // "base", "series", "edge-gluing", "nonadjacent-gluing"
  bool rewritten = false;  // the tree node was re-associated first
  std::size_t generator_count = 0;
};

struct QuadraticBasis {
  GeneratingSet generators;
  std::vector<TraceEntry> trace;
};

/// Quadratic generating set for a connected K4-minor-free graph, built by
/// recursion over its series/parallel tree. Throws K4MinorError or
/// DomainError (disconnected).
QuadraticBasis quadratic_basis_sp(const Graph& g, const GlueOptions& options = {});

/// Greedily removes binomials whose sides are connected in their own fiber
/// by the remaining ones. Keeps generation intact.
GeneratingSet prune_redundant(const GeneratingSet& s);

struct MoveSequence {
  CutMonomial start;
  std::vector<MoveApplication> steps;

  const CutMonomial& finish() const { return steps.empty() ? start : steps.back().result; }
  /// start, then each step's result.
  std::vector<CutMonomial> states() const;
  /// Steps chain, each step is a correct application, images stay equal.
  bool is_valid(const Graph& g) const;
};

struct MoveSearch {
  std::optional<MoveSequence> sequence;
  /// Everything reachable from `from` when no sequence exists.
  std::vector<CutMonomial> reached;
};

/// Shortest move sequence (BFS) between two monomials of one fiber. Throws
/// DomainError when their images differ.
MoveSearch find_move_sequence(const Graph& g, const GeneratingSet& moves, const CutMonomial& from,
                              const CutMonomial& to);

/// Rewrites a sequence over G[L] so its (u, v)-height never increases:
/// plateaus are bridged with moves of `aux` (generators of G[L]+uv) and each
/// height drop reuses the original move. Throws DomainError when a step
/// changes the height by more than 2, the end is higher than the start, or
/// aux cannot bridge a plateau.
MoveSequence normalize_sequence(const Graph& g, const MoveSequence& seq, Vertex u, Vertex v,
                                const GeneratingSet& aux);

}  // namespace cutideal
