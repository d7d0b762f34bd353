#include "cutideal/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cutideal/error.hpp"
#include "cutideal/parallel.hpp"

namespace cutideal {

std::optional<CutMonomial> apply_move(const CutMonomial& m, const Binomial& b, Direction dir) {
  const CutMonomial& from = dir == Direction::Forward ? b.lhs() : b.rhs();
  const CutMonomial& to = dir == Direction::Forward ? b.rhs() : b.lhs();
  if (!m.contains(from)) return std::nullopt;
  return m.without(from).times(to);
}

MoveIndex::MoveIndex(std::span<const Binomial> moves) : moves_(moves.begin(), moves.end()) {
  std::set<std::size_t> degrees;
  for (std::size_t i = 0; i < moves_.size(); ++i) {
    by_side_[moves_[i].lhs()].push_back({i, Direction::Forward});
    by_side_[moves_[i].rhs()].push_back({i, Direction::Backward});
    degrees.insert(moves_[i].degree());
  }
  side_degrees_.assign(degrees.begin(), degrees.end());
}

std::vector<MoveApplication> MoveIndex::applications(const CutMonomial& m) const {
  std::vector<MoveApplication> out;
  for (std::size_t k : side_degrees_) {
    if (k > m.degree()) break;
    for_each_submultiset(m, k, [&](const CutMonomial& side) {
      auto it = by_side_.find(side);
      if (it == by_side_.end()) return;
      for (const Entry& e : it->second) {
        const Binomial& b = moves_[e.move];
        out.push_back({m, b, e.direction, *apply_move(m, b, e.direction)});
      }
    });
  }
  return out;
}

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

FiberConnectivity fiber_components(std::span<const CutMonomial> fiber, const MoveIndex& index) {
  FiberConnectivity out;
  if (fiber.size() <= 1) {
    if (!fiber.empty()) out.components.push_back({fiber.front()});
    return out;
  }
  std::vector<CutMonomial> sorted(fiber.begin(), fiber.end());
  std::sort(sorted.begin(), sorted.end());
  std::unordered_map<CutMonomial, std::size_t, CutMonomialHash> position;
  for (std::size_t i = 0; i < sorted.size(); ++i) position.emplace(sorted[i], i);
  DisjointSets sets(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    index.for_each_neighbor(sorted[i], [&](const CutMonomial& next) {
      auto it = position.find(next);
      if (it != position.end()) sets.unite(i, it->second);
    });
  }
  // Union keeps the smallest index as root, so roots appear in order of
  // their least member.
  std::unordered_map<std::size_t, std::size_t> slot;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    auto [it, inserted] = slot.try_emplace(sets.find(i), out.components.size());
    if (inserted) out.components.emplace_back();
    out.components[it->second].push_back(sorted[i]);
  }
  out.connected = out.components.size() == 1;
  return out;
}

FiberConnectivity fiber_graph_connected(std::span<const CutMonomial> fiber,
                                        const GeneratingSet& moves) {
  if (fiber.empty()) throw DomainError("empty fiber");
  const EdgeExponentVector image = phi_image(moves.graph, fiber.front());
  for (const CutMonomial& m : fiber) {
    if (m.degree() != fiber.front().degree() || phi_image(moves.graph, m) != image) {
      throw DomainError("fiber members have different images");
    }
  }
  return fiber_components(fiber, MoveIndex(moves.binomials));
}

namespace {

void require_injective_on_cuts(const Graph& g) {
  std::set<EdgeExponentVector> seen;
  for (const Cut& c : enumerate_cuts(g)) {
    if (!seen.insert(phi_image(g, CutMonomial{c})).second) {
      throw DomainError("distinct cuts share an image (graph is disconnected)");
    }
  }
}

}  // namespace

MarkovBasisReport markov_basis_up_to_degree(const Graph& g, int max_degree,
                                            const OracleOptions& options) {
  if (max_degree < 2) throw DomainError("max degree must be at least 2");
  if (!is_connected(g)) throw DomainError("graph is not connected");
  require_injective_on_cuts(g);

  MarkovBasisReport report;
  report.basis.graph = g;
  report.new_per_degree.assign(static_cast<std::size_t>(max_degree) + 1, 0);
  for (int d = 2; d <= max_degree; ++d) {
    const auto fibers = enumerate_all_fibers(g, d, options.fiber_cap);
    const MoveIndex index(report.basis.binomials);
    std::vector<FiberConnectivity> parts(fibers.size());
    parallel_for(fibers.size(), [&](std::size_t i) {
      if (fibers[i].size() > 1) parts[i] = fiber_components(fibers[i], index);
    });
    for (const FiberConnectivity& p : parts) {
      for (std::size_t c = 1; c < p.components.size(); ++c) {
        report.basis.binomials.emplace_back(p.components[0].front(), p.components[c].front());
        ++report.new_per_degree[static_cast<std::size_t>(d)];
      }
    }
    if (report.new_per_degree[static_cast<std::size_t>(d)] > 0) report.max_degree_needed = d;
  }
  report.basis.max_degree = report.max_degree_needed;
  return report;
}

GenerationCheck generates_up_to_degree(const Graph& g, const GeneratingSet& s, int max_degree,
                                       const OracleOptions& options) {
  for (const Binomial& b : s.binomials) {
    if (!binomial_in_kernel(g, b)) throw DomainError("generating set contains a non-kernel binomial");
  }
  const MoveIndex index(s.binomials);
  GenerationCheck out;
  for (int d = 1; d <= max_degree; ++d) {
    const auto fibers = enumerate_all_fibers(g, d, options.fiber_cap);
    std::vector<FiberConnectivity> parts(fibers.size());
    parallel_for(fibers.size(), [&](std::size_t i) {
      if (fibers[i].size() > 1) parts[i] = fiber_components(fibers[i], index);
    });
    for (const FiberConnectivity& p : parts) {
      if (!p.connected) {
        out.generates = false;
        out.witness = GenerationWitness{d, p.components};
        return out;
      }
    }
  }
  return out;
}

bool is_slow_varying(const GeneratingSet& s, Vertex u, Vertex v) {
  return std::all_of(s.binomials.begin(), s.binomials.end(), [&](const Binomial& b) {
    return std::abs(height(b.lhs(), u, v) - height(b.rhs(), u, v)) <= 2;
  });
}

GeneratingSet all_quadratic_kernel_binomials(const Graph& g, const OracleOptions& options) {
  GeneratingSet out;
  out.graph = g;
  for (const auto& fiber : enumerate_all_fibers(g, 2, options.fiber_cap)) {
    for (std::size_t i = 0; i < fiber.size(); ++i) {
      for (std::size_t j = i + 1; j < fiber.size(); ++j) out.binomials.emplace_back(fiber[i], fiber[j]);
    }
  }
  out.normalize();
  return out;
}

}  // namespace cutideal
