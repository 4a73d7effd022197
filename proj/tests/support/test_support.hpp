#pragma once

// Shared fixtures and independent brute-force oracles for the test suites.
// Everything here is deliberately naive: full enumeration, no pruning, no
// reuse of the library's search code, so that the oracles stay independent
// of the implementations they check.

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "graphreg/embedding.hpp"
#include "graphreg/graph.hpp"
#include "graphreg/registration.hpp"

namespace testsupport {

inline graphreg::Graph path_graph(int n) {
  std::vector<graphreg::Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return graphreg::Graph(n, std::move(edges));
}

inline graphreg::Graph cycle_graph(int n) {
  std::vector<graphreg::Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  if (n > 2) edges.emplace_back(0, n - 1);
  return graphreg::Graph(n, std::move(edges));
}

inline graphreg::Graph complete_graph(int n) {
  std::vector<graphreg::Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return graphreg::Graph(n, std::move(edges));
}

/// 4 vertices, 4 edges: triangle 0-1-2 plus pendant 3 hanging off 2.
inline graphreg::Graph triangle_with_pendant() {
  return graphreg::Graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
}

inline graphreg::Graph star_graph(int n) {
  std::vector<graphreg::Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
  return graphreg::Graph(n, std::move(edges));
}

inline graphreg::Graph petersen_graph() {
  return graphreg::Graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},
                              {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                              {5, 7}, {5, 8}, {6, 8}, {6, 9}, {7, 9}});
}

inline graphreg::Graph complement(const graphreg::Graph& g) {
  std::vector<graphreg::Edge> edges;
  for (int u = 0; u < g.vertex_count(); ++u) {
    for (int v = u + 1; v < g.vertex_count(); ++v) {
      if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    }
  }
  return graphreg::Graph(g.vertex_count(), std::move(edges));
}

inline graphreg::Graph random_graph(int n, int m, std::mt19937_64& rng) {
  std::vector<graphreg::Edge> all;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
  }
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(static_cast<std::size_t>(m));
  return graphreg::Graph(n, std::move(all));
}

inline graphreg::VertexMapping random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  std::shuffle(images.begin(), images.end(), rng);
  return graphreg::VertexMapping(std::move(images));
}

/// All vertex bijections 0..n-1 -> 0..n-1 in lexicographic order.
inline std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(image);
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

/// Brute-force assignment oracle: minimum total cost over every
/// permutation, by full enumeration.
inline double brute_assignment_cost(const Eigen::MatrixXd& cost) {
  const int k = static_cast<int>(cost.rows());
  double best = std::numeric_limits<double>::infinity();
  for (const auto& perm : all_permutations(k)) {
    double total = 0.0;
    for (int j = 0; j < k; ++j) total += cost(perm[static_cast<std::size_t>(j)], j);
    best = std::min(best, total);
  }
  return best;
}

/// Brute-force isomorphism oracle: tries every bijection and checks edge
/// preservation directly on the edge lists.
inline bool brute_isomorphic(const graphreg::Graph& g1, const graphreg::Graph& g2) {
  if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count()) {
    return false;
  }
  for (const auto& image : all_permutations(g1.vertex_count())) {
    bool ok = true;
    for (auto [u, v] : g1.edges()) {
      if (!g2.has_edge(image[static_cast<std::size_t>(u)], image[static_cast<std::size_t>(v)])) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

/// Brute-force automorphism count.
inline std::uint64_t brute_automorphisms(const graphreg::Graph& g) {
  std::uint64_t count = 0;
  for (const auto& image : all_permutations(g.vertex_count())) {
    bool ok = true;
    for (auto [u, v] : g.edges()) {
      if (!g.has_edge(image[static_cast<std::size_t>(u)], image[static_cast<std::size_t>(v)])) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  }
  return count == 0 ? 1 : count;
}

/// Brute-force subgraph oracle: every injection of pattern vertices into
/// host vertices, edge containment checked directly.
inline bool brute_subgraph(const graphreg::Graph& host, const graphreg::Graph& pattern) {
  const int n1 = host.vertex_count();
  const int n2 = pattern.vertex_count();
  if (n2 > n1) return false;
  if (n2 == 0) return true;
  std::vector<int> image(static_cast<std::size_t>(n2), -1);
  std::vector<char> used(static_cast<std::size_t>(n1), 0);
  auto rec = [&](auto&& self, int v) -> bool {
    if (v == n2) {
      for (auto [a, b] : pattern.edges()) {
        if (!host.has_edge(image[static_cast<std::size_t>(a)], image[static_cast<std::size_t>(b)])) {
          return false;
        }
      }
      return true;
    }
    for (int w = 0; w < n1; ++w) {
      if (used[static_cast<std::size_t>(w)]) continue;
      image[static_cast<std::size_t>(v)] = w;
      used[static_cast<std::size_t>(w)] = 1;
      if (self(self, v + 1)) return true;
      used[static_cast<std::size_t>(w)] = 0;
    }
    return false;
  };
  return rec(rec, 0);
}

/// Brute-force GGD oracle: minimum over every vertex bijection of the
/// minimum over every edge bijection of the summed squared midpoint
/// distances. Exponential and proud of it.
inline double brute_ggd(const graphreg::Graph& g1, const graphreg::Graph& g2) {
  const int n = g1.vertex_count();
  const int m = g1.edge_count();
  if (m == 0) return 0.0;
  const Eigen::MatrixXd sv = graphreg::simplex_points(n);
  const Eigen::MatrixXd target = graphreg::edge_points(sv, g2.edges());
  double best = std::numeric_limits<double>::infinity();
  for (const auto& image : all_permutations(n)) {
    Eigen::MatrixXd mapped(n, m);
    for (int e = 0; e < m; ++e) {
      auto [u, v] = g1.edges()[static_cast<std::size_t>(e)];
      mapped.col(e) = (sv.col(image[static_cast<std::size_t>(u)]) +
                       sv.col(image[static_cast<std::size_t>(v)])) /
                      2.0;
    }
    Eigen::MatrixXd cost(m, m);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        cost(i, j) = (mapped.col(i) - target.col(j)).squaredNorm();
      }
    }
    best = std::min(best, brute_assignment_cost(cost));
  }
  return best;
}

/// True minimum of the unrestricted joint registration problem: for every
/// full-column permutation P, the closed-form optimal transform. Feasible
/// for clouds of up to ~8 columns.
inline double brute_min_registration(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) {
  const int k = static_cast<int>(x.cols());
  double best = std::numeric_limits<double>::infinity();
  for (const auto& perm : all_permutations(k)) {
    Eigen::MatrixXd target(y.rows(), y.cols());
    for (int j = 0; j < k; ++j) target.col(perm[static_cast<std::size_t>(j)]) = y.col(j);
    const auto m = graphreg::solve_procrustes(x, target);
    best = std::min(best, (m.matrix * x - target).squaredNorm());
  }
  return best;
}

}  // namespace testsupport
