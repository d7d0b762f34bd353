#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "cutideal/cut_algebra.hpp"

namespace cutideal {

/// Observed counts per cut. Zero counts are not stored.
class CutTable {
 public:
  CutTable() = default;
  explicit CutTable(const std::map<Cut, std::int64_t>& counts);

  std::int64_t count(Cut c) const;
  std::int64_t total() const { return total_; }
  const std::map<Cut, std::int64_t>& counts() const { return counts_; }

  /// Adds `delta` to one cut; throws DomainError if it would go negative.
  void adjust(Cut c, std::int64_t delta);

  /// The table as a monomial (each cut repeated by its count).
  CutMonomial as_monomial() const;

  bool operator==(const CutTable& other) const { return counts_ == other.counts_; }

 private:
  std::map<Cut, std::int64_t> counts_;
  std::int64_t total_ = 0;
};

/// How many observed cuts separate each edge, in the graph's edge order.
struct MarginalVector {
  std::vector<Edge> edges;
  std::vector<std::int64_t> cut_counts;
  std::int64_t total = 0;

  bool operator==(const MarginalVector&) const = default;
};

/// Throws DomainError when a key is not a canonical cut of g.
MarginalVector marginals(const CutTable& t, const Graph& g);

using Rng = std::mt19937_64;

/// Independent stream seeds from one master seed (splitmix64 mixing).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// One step: a uniformly random (move, direction); applied when the table
/// holds the source side as a multiset, otherwise the table is returned as is.
CutTable markov_step(const CutTable& t, const std::vector<Binomial>& moves, Rng& rng);

struct SampleHeader {
  std::uint64_t seed = 0;
  std::int64_t steps = 0;
  std::int64_t burn_in = 0;
  std::int64_t thin = 1;
};

struct SampleRun {
  SampleHeader header;
  std::vector<CutTable> samples;
  std::int64_t accepted = 0;  // steps that changed the table
};

/// Runs `steps` Markov steps from t0 and keeps the state after step k when
/// k > burn_in and (k - burn_in) is a multiple of thin. Throws DomainError
/// unless steps > burn_in >= 0 and thin >= 1, or when a move is not a kernel
/// binomial of g.
SampleRun sample_fiber(const Graph& g, const CutTable& t0, const GeneratingSet& moves,
                       std::int64_t steps, std::int64_t burn_in, std::int64_t thin,
                       std::uint64_t seed);

}  // namespace cutideal
