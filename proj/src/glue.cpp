#include "cutideal/glue.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "cutideal/error.hpp"

namespace cutideal {

namespace {

void validate_cover(const GluingSpec& spec, VertexSet shared) {
  const Graph& g = spec.graph;
  if ((spec.left | spec.right) != g.vertices()) {
    throw DomainError("gluing sides do not cover the vertex set");
  }
  if ((spec.left & spec.right) != shared) {
    throw DomainError("gluing sides do not meet exactly in the shared vertices");
  }
  for (const Edge& e : g.edges()) {
    const VertexSet ends = singleton(e.a) | singleton(e.b);
    if ((ends & spec.left) != ends && (ends & spec.right) != ends) {
      throw DomainError("edge [" + std::to_string(e.a) + "," + std::to_string(e.b) +
                        "] crosses the gluing");
    }
  }
}

VertexSet pair_of(const GluingSpec& spec) {
  if (spec.u < 0 || spec.v < 0 || spec.u == spec.v || spec.u >= spec.graph.vertex_count() ||
      spec.v >= spec.graph.vertex_count()) {
    throw DomainError("gluing needs two distinct shared vertices");
  }
  return singleton(spec.u) | singleton(spec.v);
}

/// Degree of the largest binomial, 0 for an empty set.
int top_degree(const GeneratingSet& s) {
  int d = 0;
  for (const Binomial& b : s.binomials) d = std::max(d, static_cast<int>(b.degree()));
  return d;
}

void require_set_for(const GeneratingSet& s, const Graph& expected, const char* what) {
  if (!(s.graph == expected)) {
    throw DomainError(std::string("generating set for ") + what + " is for a different graph (" +
                      describe(s.graph) + ", expected " + describe(expected) + ")");
  }
  for (const Binomial& b : s.binomials) {
    if (!binomial_in_kernel(s.graph, b)) {
      throw DomainError(std::string("generator not in the kernel of ") + what);
    }
  }
}

std::vector<Cut> globalize(const CutMonomial& m, VertexSet side) {
  std::vector<Cut> out;
  out.reserve(m.degree());
  for (const Cut& c : m.cuts()) out.push_back(globalize_cut(c, side));
  return out;
}

/// Cuts of the glued graph assembled from cuts of the two sides.
class Splice {
 public:
  explicit Splice(const GluingSpec& spec)
      : spec_(spec),
        left_cuts_(enumerate_cuts_of(spec.left)),
        right_cuts_(enumerate_cuts_of(spec.right)) {}

  bool graded() const { return spec_.v >= 0; }
  bool status(Cut c) const { return graded() && separates(c, spec_.u, spec_.v); }

  /// Cut of G restricting to `a` on the left and `b` on the right, if they
  /// agree at the shared vertices.
  std::optional<Cut> compose(Cut a, Cut b) const {
    const VertexSet A = contains(a.side, spec_.u) ? a.side : spec_.left & ~a.side;
    const VertexSet B = contains(b.side, spec_.u) ? b.side : spec_.right & ~b.side;
    if (graded() && contains(A, spec_.v) != contains(B, spec_.v)) return std::nullopt;
    return canonical_cut(A | B, spec_.graph.vertices());
  }

  Cut compose_or_throw(Cut a, Cut b) const {
    auto c = compose(a, b);
    if (!c) throw DomainError("cut parts disagree at the shared vertices");
    return *c;
  }

  /// Positions of a side's binomial: sorted by (u,v)-height when graded.
  std::vector<Cut> positions(const CutMonomial& local, VertexSet side) const {
    CutMonomial global(globalize(local, side));
    return graded() ? sort_by_height(global, spec_.u, spec_.v) : global.cuts();
  }

  /// Lifts of a generator of one side: each position gets every other-side
  /// part of matching status, identically on both sides of the binomial.
  void lift(const Binomial& local, bool from_left, std::set<Binomial>& out) const {
    const VertexSet side = from_left ? spec_.left : spec_.right;
    const std::vector<Cut> lo = positions(local.lhs(), side);
    const std::vector<Cut> hi = positions(local.rhs(), side);
    const auto& others = from_left ? right_cuts_ : left_cuts_;
    std::vector<std::vector<Cut>> choices;
    for (std::size_t i = 0; i < lo.size(); ++i) {
      if (status(lo[i]) != status(hi[i])) {
        throw DomainError("generator changes the (u,v)-height; it is not in the kernel of the side plus uv");
      }
      std::vector<Cut> fit;
      for (const Cut& c : others) {
        if (status(c) == status(lo[i])) fit.push_back(c);
      }
      choices.push_back(std::move(fit));
    }
    auto join = [&](Cut mine, Cut other) {
      return from_left ? compose_or_throw(mine, other) : compose_or_throw(other, mine);
    };
    std::vector<std::size_t> pick(lo.size(), 0);
    if (std::any_of(choices.begin(), choices.end(), [](const auto& c) { return c.empty(); })) return;
    while (true) {
      std::vector<Cut> a;
      std::vector<Cut> b;
      for (std::size_t i = 0; i < lo.size(); ++i) {
        a.push_back(join(lo[i], choices[i][pick[i]]));
        b.push_back(join(hi[i], choices[i][pick[i]]));
      }
      CutMonomial ma(std::move(a));
      CutMonomial mb(std::move(b));
      if (ma != mb) out.emplace(std::move(ma), std::move(mb));
      std::size_t k = 0;
      while (k < pick.size() && ++pick[k] == choices[k].size()) pick[k++] = 0;
      if (k == pick.size()) return;
    }
  }

  void sorting_quadrics(std::set<Binomial>& out) const {
    for (std::size_t i = 0; i < left_cuts_.size(); ++i) {
      for (std::size_t j = i + 1; j < left_cuts_.size(); ++j) {
        const Cut a1 = left_cuts_[i];
        const Cut a2 = left_cuts_[j];
        if (status(a1) != status(a2)) continue;
        for (std::size_t k = 0; k < right_cuts_.size(); ++k) {
          for (std::size_t l = k + 1; l < right_cuts_.size(); ++l) {
            const Cut b1 = right_cuts_[k];
            const Cut b2 = right_cuts_[l];
            if (status(b1) != status(a1) || status(b2) != status(a1)) continue;
            out.emplace(CutMonomial{compose_or_throw(a1, b1), compose_or_throw(a2, b2)},
                        CutMonomial{compose_or_throw(a1, b2), compose_or_throw(a2, b1)});
          }
        }
      }
    }
  }

  const GluingSpec& spec() const { return spec_; }

 private:
  const GluingSpec& spec_;
  std::vector<Cut> left_cuts_;
  std::vector<Cut> right_cuts_;
};

GeneratingSet to_set(const Graph& g, const std::set<Binomial>& binomials) {
  GeneratingSet out;
  out.graph = g;
  out.binomials.assign(binomials.begin(), binomials.end());
  out.normalize();
  return out;
}

Graph side_plus_uv(const GluingSpec& spec, VertexSet side) {
  return add_edge(induced_subgraph(spec.graph, side), local_vertex(side, spec.u),
                  local_vertex(side, spec.v));
}

/// Height-dropping elements of the multiplier-extended generating set of one
/// side, positions sorted by (u,v)-height.
struct Drop {
  std::vector<Cut> upper;
  std::vector<Cut> lower;
  int upper_height = 0;
};

std::vector<Drop> height_drops(const GeneratingSet& gens, VertexSet side, Vertex u, Vertex v,
                               int max_input_degree) {
  const Vertex lu = local_vertex(side, u);
  const Vertex lv = local_vertex(side, v);
  const int limit = 2 * max_input_degree - 2;
  const std::vector<Cut> cuts = enumerate_cuts(gens.graph);
  std::vector<Drop> out;
  for (const Binomial& b : gens.binomials) {
    const int gap = height(b.lhs(), lu, lv) - height(b.rhs(), lu, lv);
    if (std::abs(gap) != 2) continue;
    const CutMonomial& hi = gap > 0 ? b.lhs() : b.rhs();
    const CutMonomial& lo = gap > 0 ? b.rhs() : b.lhs();
    for (int extra = 0; extra + static_cast<int>(b.degree()) <= limit; ++extra) {
      for_each_monomial(cuts, extra, [&](const CutMonomial& q) {
        CutMonomial up(globalize(q.times(hi), side));
        CutMonomial down(globalize(q.times(lo), side));
        Drop d;
        d.upper_height = height(up, u, v);
        d.upper = sort_by_height(up, u, v);
        d.lower = sort_by_height(down, u, v);
        out.push_back(std::move(d));
      });
    }
  }
  return out;
}

}  // namespace

Vertex local_vertex(VertexSet side, Vertex x) {
  if (!contains(side, x)) throw DomainError("vertex " + std::to_string(x) + " is not on this side");
  return std::popcount(side & (singleton(x) - 1));
}

void validate_series(const GluingSpec& spec) {
  if (spec.u < 0 || spec.u >= spec.graph.vertex_count() || spec.v != -1) {
    throw DomainError("series gluing needs one shared vertex");
  }
  validate_cover(spec, singleton(spec.u));
}

void validate_edge_gluing(const GluingSpec& spec) {
  validate_cover(spec, pair_of(spec));
  if (!spec.graph.has_edge(spec.u, spec.v)) throw DomainError("edge gluing needs the edge uv");
}

void validate_nonadjacent(const GluingSpec& spec) {
  validate_cover(spec, pair_of(spec));
  if (spec.graph.has_edge(spec.u, spec.v)) throw DomainError("u and v must not be adjacent");
  for (VertexSet side : {spec.left, spec.right}) {
    if (!contains(reachable(spec.graph, spec.u, side), spec.v)) {
      throw DomainError("no path from u to v inside one side");
    }
  }
}

GeneratingSet base_generators(const Graph& g, const GlueOptions& options) {
  if (g.vertex_count() > 3) throw DomainError("base case needs at most three vertices");
  if (!is_connected(g)) throw DomainError("graph is not connected");
  MarkovBasisReport report =
      markov_basis_up_to_degree(g, std::max(2, options.base_degree_bound), options.oracle);
  if (report.max_degree_needed > 2) {
    throw DomainError("base graph needs generators above degree 2");
  }
  report.basis.normalize();
  return report.basis;
}

GeneratingSet lift_series(const GluingSpec& spec, const GeneratingSet& gens_left,
                          const GeneratingSet& gens_right) {
  validate_series(spec);
  require_set_for(gens_left, induced_subgraph(spec.graph, spec.left), "the left side");
  require_set_for(gens_right, induced_subgraph(spec.graph, spec.right), "the right side");
  const Splice splice(spec);
  std::set<Binomial> out;
  for (const Binomial& b : gens_left.binomials) splice.lift(b, true, out);
  for (const Binomial& b : gens_right.binomials) splice.lift(b, false, out);
  splice.sorting_quadrics(out);
  return to_set(spec.graph, out);
}

GeneratingSet lift_edge_gluing(const GluingSpec& spec, const GeneratingSet& gens_left,
                               const GeneratingSet& gens_right) {
  validate_edge_gluing(spec);
  require_set_for(gens_left, induced_subgraph(spec.graph, spec.left), "the left side");
  require_set_for(gens_right, induced_subgraph(spec.graph, spec.right), "the right side");
  const Splice splice(spec);
  std::set<Binomial> out;
  for (const Binomial& b : gens_left.binomials) splice.lift(b, true, out);
  for (const Binomial& b : gens_right.binomials) splice.lift(b, false, out);
  splice.sorting_quadrics(out);
  return to_set(spec.graph, out);
}

GeneratingSet build_F1_F2(const GluingSpec& spec, const GeneratingSet& gens_left_uv,
                          const GeneratingSet& gens_right_uv) {
  validate_nonadjacent(spec);
  require_set_for(gens_left_uv, side_plus_uv(spec, spec.left), "the left side plus uv");
  require_set_for(gens_right_uv, side_plus_uv(spec, spec.right), "the right side plus uv");
  const Splice splice(spec);
  std::set<Binomial> out;
  for (const Binomial& b : gens_left_uv.binomials) splice.lift(b, true, out);
  for (const Binomial& b : gens_right_uv.binomials) splice.lift(b, false, out);
  return to_set(spec.graph, out);
}

GeneratingSet build_F3(const GluingSpec& spec, const GeneratingSet& gens_left,
                       const GeneratingSet& gens_right, int max_input_degree) {
  validate_nonadjacent(spec);
  require_set_for(gens_left, induced_subgraph(spec.graph, spec.left), "the left side");
  require_set_for(gens_right, induced_subgraph(spec.graph, spec.right), "the right side");
  if (!is_slow_varying(gens_left, local_vertex(spec.left, spec.u), local_vertex(spec.left, spec.v)) ||
      !is_slow_varying(gens_right, local_vertex(spec.right, spec.u),
                       local_vertex(spec.right, spec.v))) {
    throw DomainError("input generators are not slow-varying with respect to u and v");
  }
  const Splice splice(spec);
  const std::vector<Drop> left = height_drops(gens_left, spec.left, spec.u, spec.v, max_input_degree);
  const std::vector<Drop> right =
      height_drops(gens_right, spec.right, spec.u, spec.v, max_input_degree);
  std::map<std::pair<std::size_t, int>, std::vector<const Drop*>> right_by_shape;
  for (const Drop& d : right) right_by_shape[{d.upper.size(), d.upper_height}].push_back(&d);

  std::set<Binomial> out;
  for (const Drop& l : left) {
    auto it = right_by_shape.find({l.upper.size(), l.upper_height});
    if (it == right_by_shape.end()) continue;
    for (const Drop* r : it->second) {
      std::vector<Cut> up;
      std::vector<Cut> down;
      for (std::size_t i = 0; i < l.upper.size(); ++i) {
        up.push_back(splice.compose_or_throw(l.upper[i], r->upper[i]));
        down.push_back(splice.compose_or_throw(l.lower[i], r->lower[i]));
      }
      out.emplace(CutMonomial(std::move(up)), CutMonomial(std::move(down)));
    }
  }
  return to_set(spec.graph, out);
}

GeneratingSet build_F4(const GluingSpec& spec, int degree_cap) {
  validate_cover(spec, pair_of(spec));
  std::set<Binomial> out;
  if (degree_cap >= 2) Splice(spec).sorting_quadrics(out);
  return to_set(spec.graph, out);
}

GlueReport glue_nonadjacent(const GluingSpec& spec, const GeneratingSet& gens_left,
                            const GeneratingSet& gens_right, const GeneratingSet& gens_left_uv,
                            const GeneratingSet& gens_right_uv) {
  validate_nonadjacent(spec);
  const int mu_left = top_degree(gens_left);
  const int mu_right = top_degree(gens_right);
  const int max_input = std::max(mu_left, mu_right);

  GlueReport report;
  const GeneratingSet f12 = build_F1_F2(spec, gens_left_uv, gens_right_uv);
  const GeneratingSet f3 = build_F3(spec, gens_left, gens_right, max_input);
  const GeneratingSet f4 = build_F4(spec, 2);
  report.f1_f2_count = f12.binomials.size();
  report.f3_count = f3.binomials.size();
  report.f4_count = f4.binomials.size();
  report.mu_bound = std::max({2 * mu_left - 2, 2 * mu_right - 2, top_degree(gens_left_uv),
                              top_degree(gens_right_uv)});

  report.generators.graph = spec.graph;
  for (const GeneratingSet* part : {&f12, &f3, &f4}) {
    report.generators.binomials.insert(report.generators.binomials.end(), part->binomials.begin(),
                                       part->binomials.end());
  }
  report.generators.normalize();
  return report;
}

// ---------------------------------------------------------------------------
// Recursive construction over the series/parallel tree.

namespace {

using GraphKey = std::pair<int, std::vector<Edge>>;

class Builder {
 public:
  explicit Builder(const GlueOptions& options) : options_(options) {}

  GeneratingSet for_graph(const Graph& h) {
    if (auto hit = memo_.find(key(h)); hit != memo_.end()) return hit->second;
    if (h.vertex_count() <= 3) return base(h);
    SPTree tree = sp_decompose(h);
    return build(tree, tree.root());
  }

  GeneratingSet build(SPTree& tree, int id) {
    const Graph h = tree.graph_of(id);
    if (auto hit = memo_.find(key(h)); hit != memo_.end()) return hit->second;
    if (h.vertex_count() <= 3) return base(h);

    SPNode node = tree.node(id);
    bool rewritten = false;
    if (node.kind == SPKind::Parallel && (tree.node(node.left).kind == SPKind::Leaf ||
                                          tree.node(node.right).kind == SPKind::Leaf)) {
      id = rewrite_bare_edge(tree, id);
      node = tree.node(id);
      rewritten = true;
    }
    const VertexSet span = node.vertices;
    GluingSpec spec;
    spec.graph = h;
    spec.left = compress_bits(tree.node(node.left).vertices, span);
    spec.right = compress_bits(tree.node(node.right).vertices, span);

    GeneratingSet result;
    std::string rule;
    if (node.kind == SPKind::Series) {
      spec.u = local_vertex(span, node.shared);
      result = lift_series(spec, build(tree, node.left), build(tree, node.right));
      rule = "series";
    } else if (node.kind == SPKind::Parallel) {
      spec.u = local_vertex(span, node.u);
      spec.v = local_vertex(span, node.v);
      if (node.direct_edge) {
        const int left = with_terminal_edge(tree, node.left);
        const int right = with_terminal_edge(tree, node.right);
        result = lift_edge_gluing(spec, build(tree, left), build(tree, right));
        rule = "edge-gluing";
      } else {
        const GeneratingSet gl = build(tree, node.left);
        const GeneratingSet gr = build(tree, node.right);
        const GeneratingSet gl_uv = for_graph(side_plus_uv(spec, spec.left));
        const GeneratingSet gr_uv = for_graph(side_plus_uv(spec, spec.right));
        result = glue_nonadjacent(spec, gl, gr, gl_uv, gr_uv).generators;
        rule = "nonadjacent-gluing";
      }
    } else {
      throw DomainError("leaf with more than three vertices");
    }
    if (options_.prune) result = prune_redundant(result);
    trace_.push_back({h, rule, rewritten, result.binomials.size()});
    memo_.emplace(key(h), result);
    return result;
  }

  std::vector<TraceEntry> take_trace() { return std::move(trace_); }

 private:
  static GraphKey key(const Graph& h) { return {h.vertex_count(), h.edges()}; }

  GeneratingSet base(const Graph& h) {
    GeneratingSet result = base_generators(h, options_);
    trace_.push_back({h, "base", false, result.binomials.size()});
    memo_.emplace(key(h), result);
    return result;
  }

  /// The two-terminal child plus its terminal edge (already in the host).
  static int with_terminal_edge(SPTree& tree, int child) {
    if (tree.contains_terminal_edge(child)) return child;
    const SPNode c = tree.node(child);
    return tree.add_parallel(child, tree.add_leaf(Edge(c.u, c.v)), c.u, c.v);
  }

  /// A parallel node with a bare edge uv on one side is re-associated so
  /// both sides have at least three vertices: if the other side is itself
  /// parallel at {u, v}, the edge moves into one of its halves; if it is a
  /// series u..w..v, the node becomes parallel at the series vertex w.
  static int rewrite_bare_edge(SPTree& tree, int id) {
    const SPNode node = tree.node(id);
    const bool left_is_edge = tree.node(node.left).kind == SPKind::Leaf;
    const int edge = left_is_edge ? node.left : node.right;
    const SPNode other = tree.node(left_is_edge ? node.right : node.left);
    const Vertex u = node.u;
    const Vertex v = node.v;
    if (other.kind == SPKind::Parallel) {
      return tree.add_parallel(other.left, tree.add_parallel(other.right, edge, u, v), u, v);
    }
    if (other.kind != SPKind::Series || !other.two_terminal()) {
      throw DomainError("unexpected tree shape under a parallel node");
    }
    const Vertex w = other.shared;
    int near_u = other.left;
    int near_v = other.right;
    if (!contains(tree.node(near_u).vertices, u)) std::swap(near_u, near_v);
    if (set_size(tree.node(near_v).vertices) >= 3) {
      // Parallel at {w, v}: the v-part against (u-part + uv).
      const int detour = tree.add_series(near_u, edge, u, w, v);
      return tree.add_parallel(near_v, detour, w, v);
    }
    if (set_size(tree.node(near_u).vertices) >= 3) {
      const int detour = tree.add_series(edge, near_v, v, u, w);
      return tree.add_parallel(near_u, detour, u, w);
    }
    throw DomainError("bare-edge parallel node on a triangle reached the rewrite step");
  }

  GlueOptions options_;
  std::map<GraphKey, GeneratingSet> memo_;
  std::vector<TraceEntry> trace_;
};

}  // namespace

QuadraticBasis quadratic_basis_sp(const Graph& g, const GlueOptions& options) {
  if (!is_connected(g)) throw DomainError("graph is not connected");
  Builder builder(options);
  QuadraticBasis out;
  if (g.vertex_count() <= 3) {
    out.generators = builder.for_graph(g);
  } else {
    SPTree tree = sp_decompose(g);
    out.generators = builder.build(tree, tree.root());
  }
  out.trace = builder.take_trace();
  return out;
}

GeneratingSet prune_redundant(const GeneratingSet& s) {
  GeneratingSet sorted = s;
  sorted.normalize();
  const auto& moves = sorted.binomials;
  std::map<CutMonomial, std::vector<std::pair<std::size_t, bool>>> by_side;
  std::set<std::size_t> degrees;
  for (std::size_t i = 0; i < moves.size(); ++i) {
    by_side[moves[i].lhs()].push_back({i, true});
    by_side[moves[i].rhs()].push_back({i, false});
    degrees.insert(moves[i].degree());
  }
  std::vector<bool> alive(moves.size(), true);

  auto connected_without = [&](const CutMonomial& from, const CutMonomial& to) {
    std::set<CutMonomial> seen{from};
    std::deque<CutMonomial> queue{from};
    while (!queue.empty()) {
      const CutMonomial m = queue.front();
      queue.pop_front();
      if (m == to) return true;
      for (std::size_t k : degrees) {
        if (k > m.degree()) break;
        // Sub-multisets of size k.
        std::vector<Cut> pick;
        auto rec = [&](auto&& self, std::size_t first) -> void {
          if (pick.size() == k) {
            const CutMonomial side(pick);
            auto it = by_side.find(side);
            if (it == by_side.end()) return;
            for (auto [idx, forward] : it->second) {
              if (!alive[idx]) continue;
              CutMonomial next =
                  m.without(side).times(forward ? moves[idx].rhs() : moves[idx].lhs());
              if (seen.insert(next).second) queue.push_back(std::move(next));
            }
            return;
          }
          for (std::size_t i = first; i < m.cuts().size(); ++i) {
            if (i > first && m.cuts()[i] == m.cuts()[i - 1]) continue;
            pick.push_back(m.cuts()[i]);
            self(self, i + 1);
            pick.pop_back();
          }
        };
        rec(rec, 0);
      }
    }
    return false;
  };

  for (std::size_t i = moves.size(); i-- > 0;) {
    alive[i] = false;
    if (!connected_without(moves[i].lhs(), moves[i].rhs())) alive[i] = true;
  }
  GeneratingSet out;
  out.graph = sorted.graph;
  for (std::size_t i = 0; i < moves.size(); ++i) {
    if (alive[i]) out.binomials.push_back(moves[i]);
  }
  out.normalize();
  return out;
}

std::vector<CutMonomial> MoveSequence::states() const {
  std::vector<CutMonomial> out{start};
  for (const MoveApplication& s : steps) out.push_back(s.result);
  return out;
}

bool MoveSequence::is_valid(const Graph& g) const {
  const EdgeExponentVector image = phi_image(g, start);
  CutMonomial current = start;
  for (const MoveApplication& s : steps) {
    if (s.source != current) return false;
    auto next = apply_move(s.source, s.move, s.direction);
    if (!next || *next != s.result || phi_image(g, s.result) != image) return false;
    current = s.result;
  }
  return true;
}

MoveSearch find_move_sequence(const Graph& g, const GeneratingSet& moves, const CutMonomial& from,
                              const CutMonomial& to) {
  if (from.degree() != to.degree() || phi_image(g, from) != phi_image(g, to)) {
    throw DomainError("endpoints lie in different fibers");
  }
  MoveSearch out;
  const MoveIndex index(moves.binomials);
  std::map<CutMonomial, std::optional<MoveApplication>> parent;
  parent.emplace(from, std::nullopt);
  std::deque<CutMonomial> queue{from};
  while (!queue.empty()) {
    const CutMonomial m = queue.front();
    queue.pop_front();
    if (m == to) {
      MoveSequence seq;
      seq.start = from;
      for (CutMonomial at = to; parent.at(at).has_value();) {
        const MoveApplication step = *parent.at(at);
        seq.steps.push_back(step);
        at = step.source;
      }
      std::reverse(seq.steps.begin(), seq.steps.end());
      out.sequence = std::move(seq);
      return out;
    }
    for (MoveApplication& step : index.applications(m)) {
      if (parent.contains(step.result)) continue;
      queue.push_back(step.result);
      parent.emplace(step.result, std::move(step));
    }
  }
  for (const auto& [m, p] : parent) out.reached.push_back(m);
  return out;
}

MoveSequence normalize_sequence(const Graph& g, const MoveSequence& seq, Vertex u, Vertex v,
                                const GeneratingSet& aux) {
  if (!seq.is_valid(g)) throw DomainError("input is not a valid move sequence");
  if (g.has_edge(u, v)) throw DomainError("u and v must not be adjacent");
  if (!(aux.graph == add_edge(g, u, v))) throw DomainError("aux set must be for the graph plus uv");
  const std::vector<CutMonomial> states = seq.states();
  std::vector<int> heights;
  for (const CutMonomial& m : states) heights.push_back(height(m, u, v));
  for (std::size_t i = 1; i < heights.size(); ++i) {
    if (std::abs(heights[i] - heights[i - 1]) > 2) {
      throw DomainError("a step changes the height by more than 2");
    }
  }
  const int top = heights.front();
  const int bottom = heights.back();
  if (bottom > top) throw DomainError("sequence ends higher than it starts; reverse it first");

  const std::set<Binomial> aux_moves(aux.binomials.begin(), aux.binomials.end());
  MoveSequence out;
  out.start = seq.start;
  std::size_t plateau_start = 0;  // index of q_h
  for (int h = top;; h -= 2) {
    std::size_t plateau_end = plateau_start;  // last index with height h
    for (std::size_t i = plateau_start; i < heights.size(); ++i) {
      if (heights[i] == h) plateau_end = i;
    }
    bool keep = true;
    for (std::size_t i = plateau_start; i < plateau_end && keep; ++i) {
      keep = heights[i + 1] == h && aux_moves.contains(seq.steps[i].move);
    }
    if (keep) {
      for (std::size_t i = plateau_start; i < plateau_end; ++i) out.steps.push_back(seq.steps[i]);
    } else {
      MoveSearch bridge = find_move_sequence(aux.graph, aux, states[plateau_start], states[plateau_end]);
      if (!bridge.sequence) {
        throw DomainError("aux generators do not connect a height plateau");
      }
      for (const MoveApplication& s : bridge.sequence->steps) out.steps.push_back(s);
    }
    if (h == bottom) break;
    out.steps.push_back(seq.steps[plateau_end]);
    plateau_start = plateau_end + 1;
  }
  return out;
}

}  // namespace cutideal
