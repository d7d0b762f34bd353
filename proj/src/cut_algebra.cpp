#include "cutideal/cut_algebra.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

#include "cutideal/error.hpp"

namespace cutideal {

CutMonomial::CutMonomial(std::vector<Cut> cuts) : cuts_(std::move(cuts)) {
  std::sort(cuts_.begin(), cuts_.end());
}

bool CutMonomial::contains(const CutMonomial& sub) const {
  return std::includes(cuts_.begin(), cuts_.end(), sub.cuts_.begin(), sub.cuts_.end());
}

CutMonomial CutMonomial::without(const CutMonomial& sub) const {
  CutMonomial out;
  std::set_difference(cuts_.begin(), cuts_.end(), sub.cuts_.begin(), sub.cuts_.end(),
                      std::back_inserter(out.cuts_));
  return out;
}

CutMonomial CutMonomial::times(const CutMonomial& other) const {
  CutMonomial out;
  out.cuts_.reserve(cuts_.size() + other.cuts_.size());
  std::merge(cuts_.begin(), cuts_.end(), other.cuts_.begin(), other.cuts_.end(),
             std::back_inserter(out.cuts_));
  return out;
}

std::size_t CutMonomialHash::operator()(const CutMonomial& m) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL ^ m.degree();
  for (const Cut& c : m.cuts()) {
    h ^= std::hash<VertexSet>{}(c.side) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

EdgeExponentVector EdgeExponentVector::operator+(const EdgeExponentVector& other) const {
  if (size() != other.size()) throw DomainError("exponent vectors of different graphs");
  std::vector<EdgeExponent> sum(entries_);
  for (std::size_t i = 0; i < sum.size(); ++i) {
    sum[i].s += other[i].s;
    sum[i].t += other[i].t;
  }
  return EdgeExponentVector(std::move(sum));
}

Binomial::Binomial(CutMonomial a, CutMonomial b) {
  if (a.degree() != b.degree()) {
    throw DomainError("binomial sides differ in degree (" + std::to_string(a.degree()) + " vs " +
                      std::to_string(b.degree()) + ")");
  }
  if (a.degree() == 0) throw DomainError("binomial of degree 0");
  if (a == b) throw DomainError("binomial with identical sides");
  if (b < a) std::swap(a, b);
  lhs_ = std::move(a);
  rhs_ = std::move(b);
}

void GeneratingSet::normalize() {
  std::sort(binomials.begin(), binomials.end(), [](const Binomial& x, const Binomial& y) {
    if (x.degree() != y.degree()) return x.degree() < y.degree();
    return x < y;
  });
  binomials.erase(std::unique(binomials.begin(), binomials.end()), binomials.end());
  max_degree = 0;
  for (const Binomial& b : binomials) max_degree = std::max(max_degree, static_cast<int>(b.degree()));
}

EdgeExponentVector phi_image(const Graph& g, const CutMonomial& m) {
  const int degree = static_cast<int>(m.degree());
  std::vector<EdgeExponent> out;
  out.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    int s = 0;
    for (const Cut& c : m.cuts()) s += separates(c, e.a, e.b) ? 1 : 0;
    out.push_back({s, degree - s});
  }
  return EdgeExponentVector(std::move(out));
}

int height(const CutMonomial& m, Vertex u, Vertex v) {
  if (u == v) throw DomainError("height needs two distinct vertices");
  int h = 0;
  for (const Cut& c : m.cuts()) h += separates(c, u, v) ? 1 : 0;
  return h;
}

bool binomial_in_kernel(const Graph& g, const CutMonomial& lhs, const CutMonomial& rhs) {
  if (lhs.degree() != rhs.degree()) throw DomainError("binomial sides differ in degree");
  return phi_image(g, lhs) == phi_image(g, rhs);
}

bool binomial_in_kernel(const Graph& g, const Binomial& b) {
  return binomial_in_kernel(g, b.lhs(), b.rhs());
}

std::vector<Cut> sort_by_height(const CutMonomial& m, Vertex u, Vertex v) {
  if (u == v) throw DomainError("height order needs two distinct vertices");
  std::vector<Cut> out = m.cuts();
  std::stable_sort(out.begin(), out.end(), [&](Cut a, Cut b) {
    return separates(a, u, v) && !separates(b, u, v);
  });
  return out;
}

namespace {

void check_target(const Graph& g, const EdgeExponentVector& target, int degree) {
  if (degree < 0) throw DomainError("negative degree");
  if (target.size() != g.edge_count()) {
    throw DomainError("target has " + std::to_string(target.size()) + " entries, graph has " +
                      std::to_string(g.edge_count()) + " edges");
  }
  for (const EdgeExponent& x : target.entries()) {
    if (x.s < 0 || x.t < 0 || x.s + x.t != degree) {
      throw DomainError("inconsistent target: s + t must equal the degree on every edge");
    }
  }
}

}  // namespace

std::vector<CutMonomial> enumerate_fiber(const Graph& g, const EdgeExponentVector& target,
                                         int degree) {
  check_target(g, target, degree);
  const std::vector<Cut> cuts = enumerate_cuts(g);
  const auto& edges = g.edges();
  std::vector<int> s_left;
  for (const EdgeExponent& x : target.entries()) s_left.push_back(x.s);

  std::vector<CutMonomial> out;
  std::vector<Cut> chosen;
  // Picks cuts in nondecreasing index order; s_left[e] must stay within
  // [0, remaining] for every edge.
  std::function<void(std::size_t, int)> search = [&](std::size_t first, int remaining) {
    if (remaining == 0) {
      out.emplace_back(chosen);
      return;
    }
    for (std::size_t i = first; i < cuts.size(); ++i) {
      const Cut c = cuts[i];
      bool ok = true;
      for (std::size_t e = 0; e < edges.size() && ok; ++e) {
        const int after = s_left[e] - (separates(c, edges[e].a, edges[e].b) ? 1 : 0);
        ok = after >= 0 && after <= remaining - 1;
      }
      if (!ok) continue;
      for (std::size_t e = 0; e < edges.size(); ++e) {
        s_left[e] -= separates(c, edges[e].a, edges[e].b) ? 1 : 0;
      }
      chosen.push_back(c);
      search(i, remaining - 1);
      chosen.pop_back();
      for (std::size_t e = 0; e < edges.size(); ++e) {
        s_left[e] += separates(c, edges[e].a, edges[e].b) ? 1 : 0;
      }
    }
  };
  search(0, degree);
  return out;
}

std::vector<CutMonomial> enumerate_fiber_by_grouping(const Graph& g,
                                                     const EdgeExponentVector& target, int degree) {
  check_target(g, target, degree);
  const std::vector<Cut> cuts = enumerate_cuts(g);
  std::vector<CutMonomial> out;
  for_each_monomial(cuts, degree, [&](const CutMonomial& m) {
    if (phi_image(g, m) == target) out.push_back(m);
  });
  return out;
}

std::uint64_t monomial_count(std::uint64_t cut_count, int degree) {
  // C(cut_count + degree - 1, degree), saturating.
  if (degree == 0) return 1;
  if (cut_count == 0) return 0;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t acc = 1;
  for (int i = 1; i <= degree; ++i) {
    const std::uint64_t factor = cut_count + static_cast<std::uint64_t>(i) - 1;
    if (acc > kMax / factor) return kMax;
    acc = acc * factor / static_cast<std::uint64_t>(i);
  }
  return acc;
}

void for_each_monomial(std::span<const Cut> cuts, int degree,
                       const std::function<void(const CutMonomial&)>& visit) {
  if (degree == 0) {
    visit(CutMonomial{});
    return;
  }
  if (cuts.empty()) return;
  std::vector<std::size_t> idx(static_cast<std::size_t>(degree), 0);
  std::vector<Cut> buf(static_cast<std::size_t>(degree));
  while (true) {
    for (std::size_t k = 0; k < idx.size(); ++k) buf[k] = cuts[idx[k]];
    visit(CutMonomial(buf));
    // Next nondecreasing index tuple.
    std::size_t k = idx.size();
    while (k > 0 && idx[k - 1] == cuts.size() - 1) --k;
    if (k == 0) return;
    const std::size_t bumped = idx[k - 1] + 1;
    for (std::size_t j = k - 1; j < idx.size(); ++j) idx[j] = bumped;
  }
}

namespace {

struct ImageHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = v.size();
    for (int x : v) h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

}  // namespace

std::vector<std::vector<CutMonomial>> enumerate_all_fibers(const Graph& g, int degree,
                                                           std::uint64_t cap) {
  const std::vector<Cut> cuts = enumerate_cuts(g);
  const std::uint64_t count = monomial_count(cuts.size(), degree);
  if (count > cap) {
    throw ResourceError("degree-" + std::to_string(degree) + " enumeration needs " +
                        std::to_string(count) + " monomials, above the cap of " +
                        std::to_string(cap));
  }
  const auto& edges = g.edges();
  // Per-cut separation rows, summed per monomial.
  std::vector<std::vector<int>> rows;
  for (const Cut& c : cuts) {
    std::vector<int> row;
    for (const Edge& e : edges) row.push_back(separates(c, e.a, e.b) ? 1 : 0);
    rows.push_back(std::move(row));
  }
  auto row_of = [&](Cut c) {
    return static_cast<std::size_t>(std::lower_bound(cuts.begin(), cuts.end(), c) - cuts.begin());
  };

  std::unordered_map<std::vector<int>, std::size_t, ImageHash> fiber_of;
  std::vector<std::vector<CutMonomial>> fibers;
  std::vector<int> key(edges.size());
  for_each_monomial(cuts, degree, [&](const CutMonomial& m) {
    std::fill(key.begin(), key.end(), 0);
    for (const Cut& c : m.cuts()) {
      const auto& row = rows[row_of(c)];
      for (std::size_t e = 0; e < key.size(); ++e) key[e] += row[e];
    }
    auto [it, inserted] = fiber_of.try_emplace(key, fibers.size());
    if (inserted) fibers.emplace_back();
    fibers[it->second].push_back(m);
  });
  return fibers;
}

}  // namespace cutideal
