#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "cutideal/graph.hpp"

namespace cutideal {

/// Multiset of cuts, kept sorted by canonical code. Its size is the degree.
class CutMonomial {
 public:
  CutMonomial() = default;
  explicit CutMonomial(std::vector<Cut> cuts);
  CutMonomial(std::initializer_list<Cut> cuts) : CutMonomial(std::vector<Cut>(cuts)) {}

  std::size_t degree() const { return cuts_.size(); }
  bool empty() const { return cuts_.empty(); }
  const std::vector<Cut>& cuts() const { return cuts_; }

  /// Multiset inclusion.
  bool contains(const CutMonomial& sub) const;
  /// Multiset difference; `sub` must be contained.
  CutMonomial without(const CutMonomial& sub) const;
  CutMonomial times(const CutMonomial& other) const;

  auto operator<=>(const CutMonomial&) const = default;

 private:
  std::vector<Cut> cuts_;
};

struct CutMonomialHash {
  std::size_t operator()(const CutMonomial& m) const noexcept;
};

struct EdgeExponent {
  int s = 0;  // cuts separating the edge
  int t = 0;  // cuts keeping it together
  auto operator<=>(const EdgeExponent&) const = default;
};

/// Image of a cut monomial under the monomial map: one (s, t) pair per edge,
/// in the graph's edge order.
class EdgeExponentVector {
 public:
  EdgeExponentVector() = default;
  explicit EdgeExponentVector(std::vector<EdgeExponent> entries) : entries_(std::move(entries)) {}

  const std::vector<EdgeExponent>& entries() const& { return entries_; }
  // By value on temporaries, so range-for over phi_image(...).entries() is safe.
  std::vector<EdgeExponent> entries() && { return std::move(entries_); }
  std::size_t size() const { return entries_.size(); }
  const EdgeExponent& operator[](std::size_t i) const { return entries_[i]; }

  /// Componentwise sum; sizes must agree.
  EdgeExponentVector operator+(const EdgeExponentVector& other) const;

  auto operator<=>(const EdgeExponentVector&) const = default;

 private:
  std::vector<EdgeExponent> entries_;
};

/// Two distinct cut monomials of equal positive degree. The smaller side
/// (by lexicographic monomial order) is stored as lhs.
class Binomial {
 public:
  /// Throws DomainError on degree mismatch, identical sides, or degree 0.
  Binomial(CutMonomial a, CutMonomial b);

  const CutMonomial& lhs() const { return lhs_; }
  const CutMonomial& rhs() const { return rhs_; }
  std::size_t degree() const { return lhs_.degree(); }

  auto operator<=>(const Binomial&) const = default;

 private:
  CutMonomial lhs_;
  CutMonomial rhs_;
};

/// A set of kernel binomials for one graph. `max_degree` is the largest
/// degree where generators were needed (oracle output) or simply the largest
/// binomial degree (constructed sets).
struct GeneratingSet {
  Graph graph;
  std::vector<Binomial> binomials;
  int max_degree = 0;

  /// Sorts, deduplicates, and recomputes max_degree from the binomials.
  void normalize();

  bool operator==(const GeneratingSet&) const = default;
};

EdgeExponentVector phi_image(const Graph& g, const CutMonomial& m);

/// Number of cuts in m separating u from v. Throws DomainError if u == v.
int height(const CutMonomial& m, Vertex u, Vertex v);

bool binomial_in_kernel(const Graph& g, const Binomial& b);
/// Throws DomainError when the sides differ in degree.
bool binomial_in_kernel(const Graph& g, const CutMonomial& lhs, const CutMonomial& rhs);

/// Cuts in position order: those separating u and v first, ties by code.
std::vector<Cut> sort_by_height(const CutMonomial& m, Vertex u, Vertex v);

/// All degree-`degree` monomials with image `target`, ascending. Throws
/// DomainError when the target is inconsistent (s + t != degree somewhere,
/// or wrong length).
std::vector<CutMonomial> enumerate_fiber(const Graph& g, const EdgeExponentVector& target,
                                         int degree);

/// Same result as enumerate_fiber, computed by grouping every degree-d
/// monomial by image. Only for small instances; used to cross-check.
std::vector<CutMonomial> enumerate_fiber_by_grouping(const Graph& g,
                                                     const EdgeExponentVector& target, int degree);

/// Number of degree-d monomials on `cut_count` cuts, saturating at UINT64_MAX.
std::uint64_t monomial_count(std::uint64_t cut_count, int degree);

/// Every fiber of degree d: members ascending, fibers ordered by their least
/// member. Throws ResourceError when the monomial count exceeds `cap`.
std::vector<std::vector<CutMonomial>> enumerate_all_fibers(const Graph& g, int degree,
                                                           std::uint64_t cap);

/// Calls `visit` on each degree-d monomial over `cuts` in lexicographic order.
void for_each_monomial(std::span<const Cut> cuts, int degree,
                       const std::function<void(const CutMonomial&)>& visit);

}  // namespace cutideal
