#include "graphreg/metrics.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

#include "graphreg/embedding.hpp"

namespace graphreg {

namespace {

constexpr std::uint64_t kMaxEnumeratedGraphs = 200000;

// Mapped midpoints of g1's edges under pi, with image pairs canonicalized
// so edge-preserving mappings reproduce g2's columns bit for bit.
Eigen::MatrixXd mapped_midpoints(const Eigen::MatrixXd& sv, const Graph& g1,
                                 const VertexMapping& pi) {
  std::vector<Edge> mapped;
  mapped.reserve(g1.edges().size());
  for (auto [u, v] : g1.edges()) {
    int a = pi(u);
    int b = pi(v);
    if (a > b) std::swap(a, b);
    mapped.emplace_back(a, b);
  }
  return edge_points(sv, mapped);
}

bool preserves_all_edges(const Graph& g1, const Graph& g2, const VertexMapping& pi) {
  for (auto [u, v] : g1.edges()) {
    if (!g2.has_edge(pi(u), pi(v))) return false;
  }
  return true;
}

double assignment_cost(const Eigen::MatrixXd& mapped, const Eigen::MatrixXd& target) {
  const Correspondence corr = solve_assignment(mapped, target);
  double total = 0.0;
  for (int j = 0; j < corr.size(); ++j) {
    total += (mapped.col(corr.perm[static_cast<std::size_t>(j)]) - target.col(j)).squaredNorm();
  }
  return total;
}

void check_same_shape(const Graph& g1, const Graph& g2) {
  if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count()) {
    throw std::invalid_argument(
        "ggd: graphs must have the same number of vertices and edges");
  }
}

GgdResult exact_ggd(const Graph& g1, const Graph& g2) {
  const int n = g1.vertex_count();
  const int m = g1.edge_count();
  GgdResult best;
  best.exact = true;
  if (n == 0 || m == 0) {
    best.optimal_mapping = VertexMapping::identity(n);
    return best;
  }
  const Eigen::MatrixXd sv = simplex_points(n);
  const Eigen::MatrixXd target = edge_points(sv, g2.edges());
  best.distance = std::numeric_limits<double>::infinity();
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  do {
    const VertexMapping pi(image);
    double cost;
    if (preserves_all_edges(g1, g2, pi)) {
      cost = 0.0;
    } else {
      cost = assignment_cost(mapped_midpoints(sv, g1, pi), target);
    }
    if (cost < best.distance) {
      best.distance = cost;
      best.optimal_mapping = pi;
      if (cost == 0.0) break;  // no mapping can do better
    }
  } while (std::next_permutation(image.begin(), image.end()));
  best.normalized = best.distance / static_cast<double>(n + m);
  return best;
}

GgdResult heuristic_ggd(const Graph& g1, const Graph& g2, const RegisterOptions& options) {
  const int n = g1.vertex_count();
  const int m = g1.edge_count();
  GgdResult best;
  best.exact = false;
  if (n == 0) {
    best.optimal_mapping = VertexMapping::identity(0);
    return best;
  }
  if (options.restarts < 1) throw std::invalid_argument("ggd: restarts must be >= 1");

  const PointCloud s1 = embed(g1);
  const PointCloud s2 = embed(g2);
  std::mt19937_64 rng(options.seed);
  best.distance = std::numeric_limits<double>::infinity();

  for (int restart = 0; restart < options.restarts; ++restart) {
    Eigen::MatrixXd transform = (restart == 0) ? Eigen::MatrixXd::Identity(n, n)
                                               : random_orthogonal(n, rng);
    Correspondence vertex_corr = Correspondence::identity(n);
    double residual = std::numeric_limits<double>::infinity();
    for (int iter = 0; iter < options.max_iters; ++iter) {
      const Eigen::MatrixXd moved = transform * s1.points;
      // Vertex columns may only match vertex columns and edge columns only
      // edge columns; both blocks solved exactly.
      vertex_corr = solve_assignment(moved.leftCols(n), s2.vertex_block());
      Eigen::MatrixXd target(n, n + m);
      for (int j = 0; j < n; ++j) {
        target.col(vertex_corr.perm[static_cast<std::size_t>(j)]) = s2.points.col(j);
      }
      if (m > 0) {
        const Correspondence edge_corr =
            solve_assignment(moved.rightCols(m), s2.sample_block());
        for (int j = 0; j < m; ++j) {
          target.col(n + edge_corr.perm[static_cast<std::size_t>(j)]) = s2.points.col(n + j);
        }
      }
      transform = solve_procrustes(s1.points, target).matrix;
      const double next = (transform * s1.points - target).squaredNorm();
      const bool converged = residual - next < options.tol;
      residual = next;
      if (converged) break;
    }
    // Round the converged correspondence to a vertex bijection and score it
    // in the restricted (transform = permutation) sense.
    std::vector<int> image(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) image[static_cast<std::size_t>(vertex_corr.perm[static_cast<std::size_t>(j)])] = j;
    const VertexMapping pi(image);
    const double cost = ggd_mapping_cost(g1, g2, pi);
    if (cost < best.distance) {
      best.distance = cost;
      best.optimal_mapping = pi;
    }
  }
  best.normalized = best.distance / static_cast<double>(n + m);
  return best;
}

std::vector<Edge> all_possible_edges(int n) {
  std::vector<Edge> all;
  all.reserve(static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) - 1) / 2);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
  }
  return all;
}

}  // namespace

double ggd_mapping_cost(const Graph& g1, const Graph& g2, const VertexMapping& pi) {
  check_same_shape(g1, g2);
  if (!pi.is_bijection(g1.vertex_count())) {
    throw std::invalid_argument("ggd_mapping_cost: not a bijection");
  }
  if (g1.edge_count() == 0) return 0.0;
  if (preserves_all_edges(g1, g2, pi)) return 0.0;
  const Eigen::MatrixXd sv = simplex_points(g1.vertex_count());
  return assignment_cost(mapped_midpoints(sv, g1, pi), edge_points(sv, g2.edges()));
}

GgdResult ggd(const Graph& g1, const Graph& g2, GgdMode mode, const RegisterOptions& options) {
  check_same_shape(g1, g2);
  return mode == GgdMode::exact ? exact_ggd(g1, g2) : heuristic_ggd(g1, g2, options);
}

std::uint64_t count_graphs(int n, int m) {
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (static_cast<std::uint64_t>(n) - 1) / 2;
  if (m < 0 || static_cast<std::uint64_t>(m) > pairs) return 0;
  std::uint64_t count = 1;
  for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(m); ++i) {
    if (count > 2 * kMaxEnumeratedGraphs) return count;  // saturated, exact value unneeded
    count = count * (pairs - i) / (i + 1);
  }
  return count;
}

std::vector<Graph> enumerate_graphs(int n, int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("enumerate_graphs: negative size");
  if (count_graphs(n, m) > kMaxEnumeratedGraphs) {
    throw std::domain_error("enumerate_graphs: too many edge subsets to enumerate");
  }
  const auto all = all_possible_edges(n);
  const int pairs = static_cast<int>(all.size());
  if (m > pairs) return {};
  std::vector<Graph> out;
  std::vector<int> pick(static_cast<std::size_t>(m));
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (int idx : pick) edges.push_back(all[static_cast<std::size_t>(idx)]);
    out.emplace_back(n, std::move(edges));
    // next combination in lexicographic order
    int i = m - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == pairs - m + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < m; ++j) {
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j) - 1] + 1;
    }
  }
  return out;
}

TelomorphResult telomorph_distance(const Graph& g) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (n > 7) {
    throw std::domain_error("telomorph_distance: exact mode handles at most 7 vertices");
  }
  if (count_graphs(n, m) > kMaxEnumeratedGraphs) {
    throw std::domain_error("telomorph_distance: too many candidate graphs to enumerate");
  }

  // One representative per isomorphism class, bucketed by degree sequence.
  std::map<std::vector<int>, std::vector<Graph>> representatives;
  TelomorphResult best{-1.0, g};
  for (const Graph& candidate : enumerate_graphs(n, m)) {
    std::vector<int> key = candidate.degrees();
    std::sort(key.begin(), key.end());
    auto& bucket = representatives[key];
    bool duplicate = false;
    for (const Graph& rep : bucket) {
      if (oracle_is_isomorphic(rep, candidate).decision) {
        duplicate = true;
        break;
      }
    }
    if (duplicate) continue;
    bucket.push_back(candidate);
    const double distance = ggd(g, candidate).distance;
    if (distance > best.distance) {
      best.distance = distance;
      best.witness = candidate;
    }
  }
  if (best.distance < 0.0) {
    // No candidate exists only if the (n, m) combination itself is empty.
    throw std::logic_error("telomorph_distance: empty candidate set");
  }
  return best;
}

}  // namespace graphreg
