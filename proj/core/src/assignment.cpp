#include <limits>
#include <stdexcept>
#include <vector>

#include "graphreg/registration.hpp"

namespace graphreg {

// Shortest-augmenting-path assignment with dual potentials (the O(k^3)
// Jonker-Volgenant scheme). Exact for real-valued costs: no scaling, no
// epsilon comparisons. All scans run in increasing index order and use
// strict comparisons, so equal costs resolve to the lowest index.
std::vector<int> solve_assignment_matrix(const Eigen::MatrixXd& cost) {
  if (cost.rows() != cost.cols()) {
    throw std::invalid_argument("assignment: cost matrix must be square");
  }
  const int k = static_cast<int>(cost.rows());
  if (k == 0) return {};

  constexpr double kInf = std::numeric_limits<double>::infinity();
  // 1-based over columns; column 0 is the virtual root of each augmentation.
  std::vector<double> row_potential(static_cast<std::size_t>(k) + 1, 0.0);
  std::vector<double> col_potential(static_cast<std::size_t>(k) + 1, 0.0);
  std::vector<int> matched_row(static_cast<std::size_t>(k) + 1, 0);  // 0 = free
  std::vector<int> previous_col(static_cast<std::size_t>(k) + 1, 0);

  for (int row = 1; row <= k; ++row) {
    matched_row[0] = row;
    int j0 = 0;
    std::vector<double> min_reduced(static_cast<std::size_t>(k) + 1, kInf);
    std::vector<char> visited(static_cast<std::size_t>(k) + 1, 0);
    do {
      visited[static_cast<std::size_t>(j0)] = 1;
      const int i0 = matched_row[static_cast<std::size_t>(j0)];
      double delta = kInf;
      int j1 = -1;
      for (int j = 1; j <= k; ++j) {
        if (visited[static_cast<std::size_t>(j)]) continue;
        const double reduced = cost(i0 - 1, j - 1) - row_potential[static_cast<std::size_t>(i0)] -
                               col_potential[static_cast<std::size_t>(j)];
        if (reduced < min_reduced[static_cast<std::size_t>(j)]) {
          min_reduced[static_cast<std::size_t>(j)] = reduced;
          previous_col[static_cast<std::size_t>(j)] = j0;
        }
        if (min_reduced[static_cast<std::size_t>(j)] < delta) {
          delta = min_reduced[static_cast<std::size_t>(j)];
          j1 = j;
        }
      }
      for (int j = 0; j <= k; ++j) {
        if (visited[static_cast<std::size_t>(j)]) {
          row_potential[static_cast<std::size_t>(matched_row[static_cast<std::size_t>(j)])] += delta;
          col_potential[static_cast<std::size_t>(j)] -= delta;
        } else {
          min_reduced[static_cast<std::size_t>(j)] -= delta;
        }
      }
      j0 = j1;
    } while (matched_row[static_cast<std::size_t>(j0)] != 0);
    // Walk the augmenting path back to the root.
    while (j0 != 0) {
      const int j1 = previous_col[static_cast<std::size_t>(j0)];
      matched_row[static_cast<std::size_t>(j0)] = matched_row[static_cast<std::size_t>(j1)];
      j0 = j1;
    }
  }

  std::vector<int> perm(static_cast<std::size_t>(k), -1);
  for (int j = 1; j <= k; ++j) {
    perm[static_cast<std::size_t>(j) - 1] = matched_row[static_cast<std::size_t>(j)] - 1;
  }
  return perm;
}

Correspondence solve_assignment(const Eigen::MatrixXd& x_transformed,
                                const Eigen::MatrixXd& y) {
  if (x_transformed.rows() != y.rows() || x_transformed.cols() != y.cols()) {
    throw std::invalid_argument("assignment: point sets must have the same shape");
  }
  const Eigen::Index k = y.cols();
  Eigen::MatrixXd cost(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) {
      cost(i, j) = (x_transformed.col(i) - y.col(j)).squaredNorm();
    }
  }
  return Correspondence{solve_assignment_matrix(cost)};
}

}  // namespace graphreg
