#pragma once

#include <cstdint>
#include <vector>

#include "graphreg/graph.hpp"
#include "graphreg/isomorphism.hpp"
#include "graphreg/registration.hpp"

namespace graphreg {

enum class GgdMode { exact, heuristic };

struct GgdResult {
  /// Squared-Frobenius registration residual of the best mapping found.
  double distance = 0.0;
  /// Same value divided by |V| + |E|; informational only.
  double normalized = 0.0;
  VertexMapping optimal_mapping;
  /// True when the distance came from exhausting every vertex bijection.
  bool exact = false;
};

/// Registration cost of one vertex bijection: vertex columns matched by pi
/// (which costs nothing), edge columns by the exact minimum-cost
/// assignment between mapped midpoints and g2's midpoints.
double ggd_mapping_cost(const Graph& g1, const Graph& g2, const VertexMapping& pi);

/// Graph Geometric Distance between two graphs with the same number of
/// vertices and edges (anything else is std::invalid_argument).
///
/// Exact mode minimizes ggd_mapping_cost over all vertex bijections; the
/// lexicographically smallest argmin is reported. Heuristic mode runs the
/// alternating registration on the full clouds with vertex/edge blocks
/// assigned separately, extracts the vertex bijection of each converged
/// restart and reports the best one evaluated exactly, so the heuristic
/// never reports below the true minimum. Zero distance certifies
/// isomorphism either way.
GgdResult ggd(const Graph& g1, const Graph& g2, GgdMode mode = GgdMode::exact,
              const RegisterOptions& options = {});

struct TelomorphResult {
  double distance = 0.0;
  Graph witness;
};

/// The farthest graph from g: maximizes exact GGD over all graphs with the
/// same vertex and edge counts (one representative per isomorphism class).
/// Desk scale only: n <= 7 and an enumerable number of edge subsets;
/// beyond that std::domain_error.
TelomorphResult telomorph_distance(const Graph& g);

/// All labeled graphs with n vertices and m edges, in lexicographic order
/// of their edge lists. Throws std::domain_error when the count would
/// exceed the telomorphism enumeration budget.
std::vector<Graph> enumerate_graphs(int n, int m);

/// Number of m-subsets of the n(n-1)/2 possible edges, saturating at the
/// enumeration budget limit.
std::uint64_t count_graphs(int n, int m);

}  // namespace graphreg
