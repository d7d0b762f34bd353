#include <gtest/gtest.h>

#include <cstdlib>

#include "cutideal/error.hpp"
#include "cutideal/json_io.hpp"
#include "cutideal/oracle.hpp"
#include "test_support.hpp"

using namespace cutideal;
using namespace cutideal::testing;

namespace {

Binomial first_path_move() {
  return Binomial(CutMonomial{paper_cut({1, 3, 4}), paper_cut({1, 2, 3})},
                  CutMonomial{paper_cut({1, 4}), paper_cut({1, 2})});
}

// Connected components of a fiber by plain BFS over single moves, without
// the index.
std::size_t component_count_direct(const std::vector<CutMonomial>& fiber,
                                   const std::vector<Binomial>& moves) {
  std::set<CutMonomial> unseen(fiber.begin(), fiber.end());
  std::size_t count = 0;
  while (!unseen.empty()) {
    ++count;
    std::vector<CutMonomial> stack{*unseen.begin()};
    unseen.erase(unseen.begin());
    while (!stack.empty()) {
      const CutMonomial m = stack.back();
      stack.pop_back();
      for (const Binomial& b : moves) {
        for (Direction d : {Direction::Forward, Direction::Backward}) {
          const CutMonomial& from = d == Direction::Forward ? b.lhs() : b.rhs();
          const CutMonomial& to = d == Direction::Forward ? b.rhs() : b.lhs();
          if (!m.contains(from)) continue;
          const CutMonomial next = m.without(from).times(to);
          if (unseen.erase(next) != 0) stack.push_back(next);
        }
      }
    }
  }
  return count;
}

}  // namespace

TEST(ApplyMove, PathExample) {
  const CutMonomial m{paper_cut({1, 3, 4}), paper_cut({1, 2, 3})};
  const Binomial b = first_path_move();
  // Stored orientation puts the smaller side first, which here is the target.
  ASSERT_EQ(b.rhs(), m);
  const auto out = apply_move(m, b, Direction::Backward);
  ASSERT_TRUE(out.has_value());
  EXPECT_EQ(*out, (CutMonomial{paper_cut({1, 4}), paper_cut({1, 2})}));
  EXPECT_EQ(apply_move(*out, b, Direction::Forward), m);
  EXPECT_FALSE(apply_move(m, b, Direction::Forward));
  EXPECT_FALSE(apply_move(CutMonomial{paper_cut({1}), paper_cut({1, 2})}, first_path_move(),
                          Direction::Forward));
}

TEST(ApplyMove, PreservesImage) {
  for (const Graph& g : {path(4), cycle(4), k4_minus_edge(), complete(4)}) {
    const auto moves = all_quadratic_kernel_binomials(g).binomials;
    for (const auto& fiber : enumerate_all_fibers(g, 3, 1'000'000)) {
      for (const CutMonomial& m : fiber) {
        for (const Binomial& b : moves) {
          for (Direction d : {Direction::Forward, Direction::Backward}) {
            if (auto r = apply_move(m, b, d)) {
              EXPECT_EQ(phi_image(g, *r), phi_image(g, m));
              EXPECT_EQ(apply_move(*r, b, d == Direction::Forward ? Direction::Backward
                                                                  : Direction::Forward),
                        m);
            }
          }
        }
      }
    }
  }
}

TEST(MoveIndex, NeighborsMatchDirectApplication) {
  const Graph g = cycle(4);
  const auto moves = all_quadratic_kernel_binomials(g).binomials;
  const MoveIndex index(moves);
  for (const auto& fiber : enumerate_all_fibers(g, 3, 1'000'000)) {
    for (const CutMonomial& m : fiber) {
      std::multiset<CutMonomial> via_index, direct;
      index.for_each_neighbor(m, [&](const CutMonomial& r) { via_index.insert(r); });
      for (const Binomial& b : moves)
        for (Direction d : {Direction::Forward, Direction::Backward})
          if (auto r = apply_move(m, b, d)) direct.insert(*r);
      EXPECT_EQ(via_index, direct);
      EXPECT_EQ(index.applications(m).size(), direct.size());
    }
  }
}

TEST(FiberConnectivity, Examples) {
  const Graph g = path(4);
  const CutMonomial single{paper_cut({1})};
  EXPECT_TRUE(fiber_graph_connected(std::vector<CutMonomial>{single}, GeneratingSet{g, {}, 0})
                  .connected);

  const auto fiber = enumerate_fiber(g, EdgeExponentVector({{1, 1}, {1, 1}, {1, 1}}), 2);
  const auto basis = markov_basis_up_to_degree(g, 4).basis;
  EXPECT_TRUE(fiber_graph_connected(fiber, basis).connected);

  const auto none = fiber_graph_connected(fiber, GeneratingSet{g, {}, 0});
  EXPECT_FALSE(none.connected);
  EXPECT_EQ(none.components.size(), 4u);

  const std::vector<CutMonomial> mixed{single, CutMonomial{paper_cut({1, 2})}};
  EXPECT_THROW(fiber_graph_connected(mixed, basis), DomainError);
  EXPECT_THROW(fiber_graph_connected(std::vector<CutMonomial>{}, basis), DomainError);
}

TEST(FiberConnectivity, K4HasDisconnectedFiberUnderQuadrics) {
  const Graph g = complete(4);
  const auto quadrics = all_quadratic_kernel_binomials(g);
  bool found = false;
  for (int d = 2; d <= 4 && !found; ++d) {
    for (const auto& fiber : enumerate_all_fibers(g, d, 1'000'000)) {
      if (!fiber_graph_connected(fiber, quadrics).connected) found = true;
    }
  }
  EXPECT_TRUE(found);
}

TEST(FiberConnectivity, MatchesDirectSearch) {
  for (const Graph& g : {path(4), cycle(4), complete(4)}) {
    const auto quadrics = all_quadratic_kernel_binomials(g);
    const MoveIndex index(quadrics.binomials);
    for (int d = 2; d <= 3; ++d) {
      for (const auto& fiber : enumerate_all_fibers(g, d, 1'000'000)) {
        EXPECT_EQ(fiber_components(fiber, index).components.size(),
                  component_count_direct(fiber, quadrics.binomials));
      }
    }
  }
}

TEST(MarkovBasis, PathsNeedOnlyQuadrics) {
  for (int n : {3, 4}) {
    const auto report = markov_basis_up_to_degree(path(n), 4);
    EXPECT_EQ(report.max_degree_needed, 2);
    ASSERT_GE(report.new_per_degree.size(), 5u);
    EXPECT_GT(report.new_per_degree[2], 0u);
    EXPECT_EQ(report.new_per_degree[3], 0u);
    EXPECT_EQ(report.new_per_degree[4], 0u);
    for (const Binomial& b : report.basis.binomials) EXPECT_TRUE(binomial_in_kernel(path(n), b));
  }
}

TEST(MarkovBasis, K4NeedsHigherDegree) {
  const auto report = markov_basis_up_to_degree(complete(4), 4);
  EXPECT_GE(report.max_degree_needed, 3);
  EXPECT_EQ(report.basis.max_degree, report.max_degree_needed);
}

TEST(MarkovBasis, OutputGeneratesAtItsBound) {
  for (const Graph& g : {path(4), cycle(4), k4_minus_edge(), complete(4), cycle(5)}) {
    const auto report = markov_basis_up_to_degree(g, 4);
    EXPECT_TRUE(generates_up_to_degree(g, report.basis, 4).generates) << describe(g);
  }
}

TEST(MarkovBasis, Errors) {
  EXPECT_THROW(markov_basis_up_to_degree(path(3), 1), DomainError);
  EXPECT_THROW(markov_basis_up_to_degree(make(3, {{0, 1}}), 2), DomainError);
  OracleOptions tight;
  tight.fiber_cap = 20;
  EXPECT_THROW(markov_basis_up_to_degree(path(4), 4, tight), ResourceError);
}

TEST(GenerationCheck, Examples) {
  const Graph g = path(4);
  const auto basis = markov_basis_up_to_degree(g, 4).basis;
  EXPECT_TRUE(generates_up_to_degree(g, basis, 4).generates);

  const auto empty = generates_up_to_degree(g, GeneratingSet{g, {}, 0}, 2);
  EXPECT_FALSE(empty.generates);
  ASSERT_TRUE(empty.witness.has_value());
  EXPECT_EQ(empty.witness->degree, 2);
  EXPECT_GE(empty.witness->components.size(), 2u);

  const Graph k4 = complete(4);
  const auto check = generates_up_to_degree(k4, all_quadratic_kernel_binomials(k4), 4);
  EXPECT_FALSE(check.generates);
  ASSERT_TRUE(check.witness.has_value());
  const auto& comps = check.witness->components;
  ASSERT_GE(comps.size(), 2u);
  const auto image = phi_image(k4, comps[0][0]);
  for (const auto& comp : comps)
    for (const CutMonomial& m : comp) EXPECT_EQ(phi_image(k4, m), image);

  GeneratingSet bad{g, {Binomial(CutMonomial{paper_cut({1})}, CutMonomial{paper_cut({1, 2})})}, 1};
  EXPECT_THROW(generates_up_to_degree(g, bad, 2), DomainError);
}

TEST(SlowVarying, QuadraticSetsAreSlowVarying) {
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : graphs_up_to_isomorphism(n, true)) {
      const auto quadrics = all_quadratic_kernel_binomials(g);
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) EXPECT_TRUE(is_slow_varying(quadrics, u, v));
    }
  }
  EXPECT_TRUE(is_slow_varying(GeneratingSet{path(3), {}, 0}, 0, 2));
}

TEST(SlowVarying, HeightGapFourIsRejected) {
  // On 0-1-2 the squares of {0}{0,1} and {0,2}{0,1,2} have the same image
  // but heights 4 and 0 at (0, 2).
  const Graph g = path(3);
  const CutMonomial a{Cut{0b001}, Cut{0b001}, Cut{0b011}, Cut{0b011}};
  const CutMonomial b{Cut{0b101}, Cut{0b101}, Cut{0b111}, Cut{0b111}};
  const Binomial quartic(a, b);
  ASSERT_TRUE(binomial_in_kernel(g, quartic));
  ASSERT_EQ(std::abs(height(a, 0, 2) - height(b, 0, 2)), 4);
  EXPECT_FALSE(is_slow_varying(GeneratingSet{g, {quartic}, 4}, 0, 2));
  EXPECT_TRUE(is_slow_varying(GeneratingSet{g, {quartic}, 4}, 0, 1));
}

TEST(SlowVarying, QuadricHeightGapIsZeroOrTwo) {
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : graphs_up_to_isomorphism(n, true)) {
      for (const Binomial& b : all_quadratic_kernel_binomials(g).binomials) {
        ASSERT_TRUE(binomial_in_kernel(g, b));
        for (Vertex u = 0; u < n; ++u) {
          for (Vertex v = u + 1; v < n; ++v) {
            const int gap = std::abs(height(b.lhs(), u, v) - height(b.rhs(), u, v));
            EXPECT_TRUE(gap == 0 || gap == 2) << describe(g);
          }
        }
      }
    }
  }
}

TEST(QuadraticKernel, MatchesBruteForceCount) {
  for (const Graph& g : {path(4), cycle(4), complete(4)}) {
    std::size_t expected = 0;
    for (const auto& fiber : enumerate_all_fibers(g, 2, 1'000'000))
      expected += fiber.size() * (fiber.size() - 1) / 2;
    EXPECT_EQ(all_quadratic_kernel_binomials(g).binomials.size(), expected);
  }
}

TEST(Determinism, SerializationIsStableAcrossThreadCounts) {
  const Graph g = cycle(5);
  setenv("CUTIDEAL_THREADS", "1", 1);
  const std::string one = io::generating_set_to_json(markov_basis_up_to_degree(g, 3).basis).dump();
  setenv("CUTIDEAL_THREADS", "4", 1);
  const std::string four = io::generating_set_to_json(markov_basis_up_to_degree(g, 3).basis).dump();
  unsetenv("CUTIDEAL_THREADS");
  const std::string again = io::generating_set_to_json(markov_basis_up_to_degree(g, 3).basis).dump();
  EXPECT_EQ(one, four);
  EXPECT_EQ(one, again);
}
