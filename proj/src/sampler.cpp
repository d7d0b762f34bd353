#include "cutideal/sampler.hpp"

#include "cutideal/error.hpp"

namespace cutideal {

CutTable::CutTable(const std::map<Cut, std::int64_t>& counts) {
  for (const auto& [c, n] : counts) adjust(c, n);
}

std::int64_t CutTable::count(Cut c) const {
  auto it = counts_.find(c);
  return it == counts_.end() ? 0 : it->second;
}

void CutTable::adjust(Cut c, std::int64_t delta) {
  const std::int64_t next = count(c) + delta;
  if (next < 0) throw DomainError("cut count would become negative");
  if (next == 0) {
    counts_.erase(c);
  } else {
    counts_[c] = next;
  }
  total_ += delta;
}

CutMonomial CutTable::as_monomial() const {
  std::vector<Cut> cuts;
  for (const auto& [c, n] : counts_) cuts.insert(cuts.end(), static_cast<std::size_t>(n), c);
  return CutMonomial(std::move(cuts));
}

MarginalVector marginals(const CutTable& t, const Graph& g) {
  MarginalVector out;
  out.edges = g.edges();
  out.cut_counts.assign(g.edge_count(), 0);
  for (const auto& [c, n] : t.counts()) {
    if (!contains(c.side, 0) || (c.side & ~g.vertices()) != 0) {
      throw DomainError("table key is not a canonical cut of the graph");
    }
    for (std::size_t e = 0; e < out.edges.size(); ++e) {
      if (separates(c, out.edges[e].a, out.edges[e].b)) out.cut_counts[e] += n;
    }
  }
  out.total = t.total();
  return out;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + (stream + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

bool holds(const CutTable& t, const CutMonomial& side) {
  const auto& cuts = side.cuts();
  for (std::size_t i = 0; i < cuts.size();) {
    std::size_t j = i;
    while (j < cuts.size() && cuts[j] == cuts[i]) ++j;
    if (t.count(cuts[i]) < static_cast<std::int64_t>(j - i)) return false;
    i = j;
  }
  return true;
}

/// Applies a random move in place; returns whether the table changed.
bool step_in_place(CutTable& t, const std::vector<Binomial>& moves, Rng& rng) {
  if (moves.empty()) return false;
  std::uniform_int_distribution<std::size_t> pick(0, 2 * moves.size() - 1);
  const std::size_t r = pick(rng);
  const Binomial& b = moves[r / 2];
  const bool forward = r % 2 == 0;
  const CutMonomial& from = forward ? b.lhs() : b.rhs();
  const CutMonomial& to = forward ? b.rhs() : b.lhs();
  if (!holds(t, from)) return false;
  for (const Cut& c : from.cuts()) t.adjust(c, -1);
  for (const Cut& c : to.cuts()) t.adjust(c, +1);
  return true;
}

}  // namespace

CutTable markov_step(const CutTable& t, const std::vector<Binomial>& moves, Rng& rng) {
  CutTable next = t;
  step_in_place(next, moves, rng);
  return next;
}

SampleRun sample_fiber(const Graph& g, const CutTable& t0, const GeneratingSet& moves,
                       std::int64_t steps, std::int64_t burn_in, std::int64_t thin,
                       std::uint64_t seed) {
  if (burn_in < 0 || steps <= burn_in) throw DomainError("need steps > burn_in >= 0");
  if (thin < 1) throw DomainError("thin must be at least 1");
  for (const Binomial& b : moves.binomials) {
    if (!binomial_in_kernel(g, b)) throw DomainError("move is not in the kernel of the graph");
  }
  marginals(t0, g);  // validates keys

  SampleRun run;
  run.header = {seed, steps, burn_in, thin};
  Rng rng(seed);
  CutTable state = t0;
  for (std::int64_t k = 1; k <= steps; ++k) {
    if (step_in_place(state, moves.binomials, rng)) ++run.accepted;
    if (k > burn_in && (k - burn_in) % thin == 0) run.samples.push_back(state);
  }
  return run;
}

}  // namespace cutideal
