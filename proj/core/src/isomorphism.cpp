#include "graphreg/isomorphism.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace graphreg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Any two distinct midpoints of a regular simplex with edge sqrt(2) are at
// least 1/sqrt(2) apart, so every mapped midpoint that is not an edge
// midpoint of the target graph contributes at least 1/2 to the assignment
// cost. Used as a certified lower bound to skip the assignment solve.
constexpr double kMinMismatchCost = 0.5;

// Counts edges of g1 whose image is not an edge of g2, stopping as soon as
// the implied lower bound already exceeds tol.
int missing_image_edges(const Graph& g1, const Graph& g2, const std::vector<int>& image,
                        double tol) {
  int missing = 0;
  for (auto [u, v] : g1.edges()) {
    if (!g2.has_edge(image[static_cast<std::size_t>(u)], image[static_cast<std::size_t>(v)])) {
      ++missing;
      if (kMinMismatchCost * missing > tol) break;
    }
  }
  return missing;
}

// Full (n+m) x (n+m) correspondence for an edge-preserving candidate:
// vertex block P_pi, edge block induced.
Correspondence full_correspondence(const VertexMapping& pi, const Correspondence& edge_corr, int n) {
  const int m = edge_corr.size();
  Correspondence full;
  full.perm.resize(static_cast<std::size_t>(n + m));
  for (int i = 0; i < n; ++i) full.perm[static_cast<std::size_t>(pi(i))] = i;
  for (int j = 0; j < m; ++j) {
    full.perm[static_cast<std::size_t>(n + j)] = n + edge_corr.perm[static_cast<std::size_t>(j)];
  }
  return full;
}

// ||P_pi * S1 - S2 * P||^2_F with everything materialized. This is the
// honest geometric check; callers decide when it is worth running.
double exact_candidate_residual(const PointCloud& s1, const PointCloud& s2,
                                const VertexMapping& pi, const Correspondence& full) {
  const int n = static_cast<int>(s1.vertex_count);
  const Eigen::MatrixXd m_pi = orthogonal_from_vertex_permutation(pi, n).matrix;
  const Eigen::MatrixXd lhs = m_pi * s1.points;
  const Eigen::MatrixXd rhs = s2.points * full.to_matrix();
  return (lhs - rhs).squaredNorm();
}

// Mapped edge midpoints of g1 under pi, columns in canonical e1 order.
// Canonicalizing the image pair makes equal midpoints bit-identical to the
// target graph's own columns.
Eigen::MatrixXd mapped_midpoints(const Eigen::MatrixXd& sv, const Graph& g1,
                                 const std::vector<int>& image) {
  std::vector<Edge> mapped;
  mapped.reserve(g1.edges().size());
  for (auto [u, v] : g1.edges()) {
    int a = image[static_cast<std::size_t>(u)];
    int b = image[static_cast<std::size_t>(v)];
    if (a > b) std::swap(a, b);
    mapped.emplace_back(a, b);
  }
  return edge_points(sv, mapped);
}

// Best edge-block assignment cost for a candidate that does not preserve
// edges (the vertex block contributes nothing: P_pi commutes with the
// simplex).
double edge_assignment_cost(const Graph& g1, const Graph& g2, const std::vector<int>& image) {
  const int m = g1.edge_count();
  if (m == 0) return 0.0;
  const Eigen::MatrixXd sv = simplex_points(g1.vertex_count());
  const Eigen::MatrixXd mapped = mapped_midpoints(sv, g1, image);
  const Eigen::MatrixXd target = edge_points(sv, g2.edges());
  const Correspondence corr = solve_assignment(mapped, target);
  double total = 0.0;
  for (int j = 0; j < m; ++j) {
    total += (mapped.col(corr.perm[static_cast<std::size_t>(j)]) - target.col(j)).squaredNorm();
  }
  return total;
}

// Enumerates degree-compatible vertex bijections of g1 onto g2 in
// lexicographic order of the image array. The visitor returns true to stop
// the search. Returns true if the search was stopped.
class BijectionSearch {
public:
  BijectionSearch(const Graph& g1, const Graph& g2)
      : n_(g1.vertex_count()), deg1_(g1.degrees()), deg2_(g2.degrees()) {}

  template <typename Visitor>
  bool run(Visitor&& visit) {
    image_.assign(static_cast<std::size_t>(n_), -1);
    used_.assign(static_cast<std::size_t>(n_), 0);
    return descend(0, visit);
  }

private:
  template <typename Visitor>
  bool descend(int v, Visitor&& visit) {
    if (v == n_) return visit(image_);
    for (int w = 0; w < n_; ++w) {
      if (used_[static_cast<std::size_t>(w)]) continue;
      if (deg1_[static_cast<std::size_t>(v)] != deg2_[static_cast<std::size_t>(w)]) continue;
      used_[static_cast<std::size_t>(w)] = 1;
      image_[static_cast<std::size_t>(v)] = w;
      if (descend(v + 1, visit)) return true;
      used_[static_cast<std::size_t>(w)] = 0;
    }
    image_[static_cast<std::size_t>(v)] = -1;
    return false;
  }

  int n_;
  std::vector<int> deg1_, deg2_;
  std::vector<int> image_;
  std::vector<char> used_;
};

// Residual of a complete candidate, cheap enough to run at every leaf:
// exact when the candidate preserves edges or when the lower bound cannot
// already reject it, otherwise the certified lower bound.
double leaf_residual(const Graph& g1, const Graph& g2, const PointCloud& s1,
                     const PointCloud& s2, const std::vector<int>& image, double tol) {
  const int missing = missing_image_edges(g1, g2, image, tol);
  if (missing == 0) {
    const VertexMapping pi(image);
    const auto induced = induced_edge_permutation(pi, g1.edges(), g2.edges());
    return exact_candidate_residual(s1, s2, pi,
                                    full_correspondence(pi, *induced, g1.vertex_count()));
  }
  const double lower_bound = kMinMismatchCost * missing;
  if (lower_bound > tol) return lower_bound;
  return edge_assignment_cost(g1, g2, image);
}

bool sorted_degrees_differ(const Graph& g1, const Graph& g2) {
  auto d1 = g1.degrees();
  auto d2 = g2.degrees();
  std::sort(d1.begin(), d1.end());
  std::sort(d2.begin(), d2.end());
  return d1 != d2;
}

}  // namespace

std::optional<Correspondence> induced_edge_permutation(const VertexMapping& pi,
                                                       const std::vector<Edge>& e1,
                                                       const std::vector<Edge>& e2) {
  if (e1.size() != e2.size()) return std::nullopt;
  Correspondence corr;
  corr.perm.assign(e1.size(), -1);
  for (std::size_t i = 0; i < e1.size(); ++i) {
    auto [u, v] = e1[i];
    int a = pi(u);
    int b = pi(v);
    if (a > b) std::swap(a, b);
    const auto it = std::lower_bound(e2.begin(), e2.end(), Edge{a, b});
    if (it == e2.end() || *it != Edge{a, b}) return std::nullopt;
    corr.perm[static_cast<std::size_t>(it - e2.begin())] = static_cast<int>(i);
  }
  return corr;
}

double vertex_map_residual(const Graph& g1, const Graph& g2, const VertexMapping& pi) {
  if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count()) {
    return kInf;
  }
  if (!pi.is_bijection(g1.vertex_count())) {
    throw std::invalid_argument("vertex_map_residual: not a bijection");
  }
  if (g1.vertex_count() == 0) return 0.0;
  const PointCloud s1 = embed(g1);
  const PointCloud s2 = embed(g2);
  const auto induced = induced_edge_permutation(pi, g1.edges(), g2.edges());
  if (induced) {
    return exact_candidate_residual(s1, s2, pi, full_correspondence(pi, *induced, g1.vertex_count()));
  }
  return edge_assignment_cost(g1, g2, pi.map());
}

IsoResult is_isomorphic(const Graph& g1, const Graph& g2, double tol) {
  IsoResult result;
  result.residual = kInf;
  if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count()) {
    return result;
  }
  const int n = g1.vertex_count();
  // Edgeless graphs of equal order are isomorphic, no search needed.
  if (g1.edge_count() == 0) {
    result.decision = true;
    result.witness = VertexMapping::identity(n);
    result.residual = 0.0;
    return result;
  }
  const PointCloud s1 = embed(g1);
  const PointCloud s2 = embed(g2);
  BijectionSearch search(g1, g2);
  search.run([&](const std::vector<int>& image) {
    const double residual = leaf_residual(g1, g2, s1, s2, image, tol);
    if (residual <= tol) {
      result.decision = true;
      result.witness = VertexMapping(image);
      result.residual = residual;
      return true;
    }
    return false;
  });
  return result;
}

IsoResult oracle_is_isomorphic(const Graph& g1, const Graph& g2) {
  IsoResult result;
  result.residual = kInf;
  const int n = g1.vertex_count();
  if (n != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return result;
  if (g1.edge_count() == 0) {
    result.decision = true;
    result.witness = VertexMapping::identity(n);
    result.residual = 0.0;
    return result;
  }
  if (sorted_degrees_differ(g1, g2)) return result;

  // Adjacency rows as bitmasks; relabeling criterion checked incrementally.
  std::vector<std::uint64_t> adj1(static_cast<std::size_t>(n), 0);
  std::vector<std::uint64_t> adj2(static_cast<std::size_t>(n), 0);
  if (n > 64) throw std::invalid_argument("oracle_is_isomorphic: more than 64 vertices");
  for (auto [u, v] : g1.edges()) {
    adj1[static_cast<std::size_t>(u)] |= 1ull << v;
    adj1[static_cast<std::size_t>(v)] |= 1ull << u;
  }
  for (auto [u, v] : g2.edges()) {
    adj2[static_cast<std::size_t>(u)] |= 1ull << v;
    adj2[static_cast<std::size_t>(v)] |= 1ull << u;
  }

  std::vector<int> image(static_cast<std::size_t>(n), -1);
  std::uint64_t used = 0;
  auto backtrack = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used & (1ull << w)) continue;
      bool ok = true;
      for (int u = 0; u < v; ++u) {
        const bool e1 = (adj1[static_cast<std::size_t>(v)] >> u) & 1u;
        const bool e2 = (adj2[static_cast<std::size_t>(w)] >> image[static_cast<std::size_t>(u)]) & 1u;
        if (e1 != e2) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      image[static_cast<std::size_t>(v)] = w;
      used |= 1ull << w;
      if (self(self, v + 1)) return true;
      used &= ~(1ull << w);
      image[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  };
  if (backtrack(backtrack, 0)) {
    VertexMapping pi(image);
    // The decision is adjacency-only; the relabeling criterion must close.
    if (apply_vertex_permutation(g1, pi) != g2) {
      throw std::logic_error("oracle_is_isomorphic: witness failed the relabeling check");
    }
    result.decision = true;
    result.witness = std::move(pi);
    result.residual = 0.0;
  }
  return result;
}

std::uint64_t count_automorphisms(const Graph& g, double tol) {
  const int n = g.vertex_count();
  if (n == 0) return 1;
  if (g.edge_count() == 0) {
    std::uint64_t fact = 1;
    for (int i = 2; i <= n; ++i) fact *= static_cast<std::uint64_t>(i);
    return fact;
  }
  const PointCloud s = embed(g);
  std::uint64_t count = 0;
  BijectionSearch search(g, g);
  search.run([&](const std::vector<int>& image) {
    if (leaf_residual(g, g, s, s, image, tol) <= tol) ++count;
    return false;
  });
  return count;
}

bool has_nontrivial_automorphism(const Graph& g, double tol) {
  const int n = g.vertex_count();
  if (n <= 1) return false;
  if (g.edge_count() == 0) return true;
  const PointCloud s = embed(g);
  const auto identity = VertexMapping::identity(n).map();
  bool found = false;
  BijectionSearch search(g, g);
  search.run([&](const std::vector<int>& image) {
    if (image == identity) return false;
    if (leaf_residual(g, g, s, s, image, tol) <= tol) {
      found = true;
      return true;
    }
    return false;
  });
  return found;
}

IsoResult is_subgraph_isomorphic(const Graph& g1, const Graph& g2, double tol) {
  IsoResult result;
  result.residual = kInf;
  const int n1 = g1.vertex_count();
  const int n2 = g2.vertex_count();
  if (n2 > n1 || g2.edge_count() > g1.edge_count()) return result;
  if (n2 == 0) {
    result.decision = true;
    result.witness = VertexMapping(std::vector<int>{});
    result.residual = 0.0;
    return result;
  }

  const auto deg1 = g1.degrees();
  const auto deg2 = g2.degrees();
  std::vector<int> image(static_cast<std::size_t>(n2), -1);
  std::vector<char> used(static_cast<std::size_t>(n1), 0);
  auto backtrack = [&](auto&& self, int v) -> bool {
    if (v == n2) return true;
    for (int w = 0; w < n1; ++w) {
      if (used[static_cast<std::size_t>(w)]) continue;
      if (deg2[static_cast<std::size_t>(v)] > deg1[static_cast<std::size_t>(w)]) continue;
      bool ok = true;
      for (int u = 0; u < v; ++u) {
        if (g2.has_edge(u, v) && !g1.has_edge(image[static_cast<std::size_t>(u)], w)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      image[static_cast<std::size_t>(v)] = w;
      used[static_cast<std::size_t>(w)] = 1;
      if (self(self, v + 1)) return true;
      used[static_cast<std::size_t>(w)] = 0;
      image[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  };
  if (!backtrack(backtrack, 0)) return result;

  const VertexMapping witness(image);

  // Geometric certificate: image columns of g1's cloud, recentered on the
  // image simplex centroid, against g2's cloud padded into g1's space.
  const PointCloud s1 = embed(g1);
  const int m2 = g2.edge_count();
  Eigen::MatrixXd selected(n1, n2 + m2);
  for (int j = 0; j < n2; ++j) selected.col(j) = s1.points.col(image[static_cast<std::size_t>(j)]);
  for (int e = 0; e < m2; ++e) {
    auto [a, b] = g2.edges()[static_cast<std::size_t>(e)];
    const int idx = g1.edge_index(image[static_cast<std::size_t>(a)], image[static_cast<std::size_t>(b)]);
    selected.col(n2 + e) = s1.points.col(n1 + idx);
  }
  const Eigen::VectorXd centroid = selected.leftCols(n2).rowwise().mean();
  selected.colwise() -= centroid;

  const PointCloud s2 = embed(g2);
  Eigen::MatrixXd target = Eigen::MatrixXd::Zero(n1, s2.total_points());
  target.topRows(n2) = s2.points;

  const OrthogonalTransform m = solve_procrustes(selected, target);
  const double residual = (m.matrix * selected - target).squaredNorm();
  if (residual > tol) {
    throw std::logic_error(
        "is_subgraph_isomorphic: combinatorial witness failed the geometric certificate");
  }
  result.decision = true;
  result.witness = witness;
  result.residual = residual;
  return result;
}

bool verify_isomorphism(const Graph& g1, const Graph& g2, const VertexMapping& pi, double tol) {
  if (g1.vertex_count() != g2.vertex_count() || !pi.is_bijection(g1.vertex_count())) {
    throw std::invalid_argument("verify_isomorphism: mapping is not a bijection of matching size");
  }
  const bool combinatorial = apply_vertex_permutation(g1, pi) == g2;
  const bool geometric = vertex_map_residual(g1, g2, pi) <= tol;
  if (combinatorial != geometric) {
    throw std::logic_error("verify_isomorphism: combinatorial and geometric verdicts disagree");
  }
  return combinatorial;
}

}  // namespace graphreg
