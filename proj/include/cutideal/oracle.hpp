#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "cutideal/cut_algebra.hpp"

namespace cutideal {

enum class Direction { Forward, Backward };

/// Replaces the chosen side of `b` (lhs for Forward) by the other side when it
/// divides `m`; nullopt when the move does not apply.
std::optional<CutMonomial> apply_move(const CutMonomial& m, const Binomial& b, Direction dir);

struct MoveApplication {
  CutMonomial source;
  Binomial move;
  Direction direction;
  CutMonomial result;
};

/// Binomials indexed by side, so the moves applicable to a monomial are found
/// by looking up its sub-multisets.
class MoveIndex {
 public:
  explicit MoveIndex(std::span<const Binomial> moves);

  /// All single-move applications from m, in a fixed order.
  std::vector<MoveApplication> applications(const CutMonomial& m) const;

  /// Calls visit(result) for every monomial one move away from m.
  template <typename Visit>
  void for_each_neighbor(const CutMonomial& m, Visit&& visit) const;

  std::size_t size() const { return moves_.size(); }

 private:
  struct Entry {
    std::size_t move;
    Direction direction;
  };
  template <typename Visit>
  void for_each_submultiset(const CutMonomial& m, std::size_t k, Visit&& visit) const;

  std::vector<Binomial> moves_;
  std::vector<std::size_t> side_degrees_;
  std::unordered_map<CutMonomial, std::vector<Entry>, CutMonomialHash> by_side_;
};

struct FiberConnectivity {
  bool connected = true;
  /// Components ordered by least member; members ascending.
  std::vector<std::vector<CutMonomial>> components;
};

/// Throws DomainError when the fiber is empty or mixes images.
FiberConnectivity fiber_graph_connected(std::span<const CutMonomial> fiber,
                                        const GeneratingSet& moves);

/// Components of a fiber under an index; no validation.
FiberConnectivity fiber_components(std::span<const CutMonomial> fiber, const MoveIndex& index);

struct OracleOptions {
  std::uint64_t fiber_cap = 1'000'000;  // monomials per degree
};

struct MarkovBasisReport {
  GeneratingSet basis;  // basis.max_degree == max_degree_needed
  /// new_per_degree[d] = generators added at degree d.
  std::vector<std::size_t> new_per_degree;
  int max_degree_needed = 0;
};

/// Bounded-degree Markov basis by fiber connectivity. Requires a connected
/// graph and max_degree >= 2.
MarkovBasisReport markov_basis_up_to_degree(const Graph& g, int max_degree,
                                            const OracleOptions& options = {});

struct GenerationWitness {
  int degree = 0;
  std::vector<std::vector<CutMonomial>> components;
};

struct GenerationCheck {
  bool generates = true;
  std::optional<GenerationWitness> witness;  // first disconnected fiber
};

/// Every fiber of degree <= max_degree connected under `s`? Throws
/// DomainError if some binomial of `s` is not in the kernel for g.
GenerationCheck generates_up_to_degree(const Graph& g, const GeneratingSet& s, int max_degree,
                                       const OracleOptions& options = {});

bool is_slow_varying(const GeneratingSet& s, Vertex u, Vertex v);

/// Every degree-2 kernel binomial of g.
GeneratingSet all_quadratic_kernel_binomials(const Graph& g, const OracleOptions& options = {});

// ---------------------------------------------------------------------------

template <typename Visit>
void MoveIndex::for_each_submultiset(const CutMonomial& m, std::size_t k, Visit&& visit) const {
  const auto& cuts = m.cuts();
  std::vector<Cut> chosen;
  chosen.reserve(k);
  // Distinct k-sub-multisets: at each depth skip repeats of the same cut.
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (chosen.size() == k) {
      visit(CutMonomial(chosen));
      return;
    }
    for (std::size_t i = from; i < cuts.size(); ++i) {
      if (i > from && cuts[i] == cuts[i - 1]) continue;
      if (cuts.size() - i < k - chosen.size()) break;
      chosen.push_back(cuts[i]);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
}

template <typename Visit>
void MoveIndex::for_each_neighbor(const CutMonomial& m, Visit&& visit) const {
  for (std::size_t k : side_degrees_) {
    if (k > m.degree()) break;
    for_each_submultiset(m, k, [&](const CutMonomial& side) {
      auto it = by_side_.find(side);
      if (it == by_side_.end()) return;
      const CutMonomial rest = m.without(side);
      for (const Entry& e : it->second) {
        const Binomial& b = moves_[e.move];
        visit(rest.times(e.direction == Direction::Forward ? b.rhs() : b.lhs()));
      }
    });
  }
}

}  // namespace cutideal
