#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "graphreg/mapping.hpp"

namespace graphreg {

/// d x d real matrix with M^T M = I (determinant +1 or -1).
struct OrthogonalTransform {
  Eigen::MatrixXd matrix;

  /// ||M^T M - I||_F and | |det M| - 1 | both below tol.
  bool is_orthogonal(double tol = 1e-9) const;
};

/// Column correspondence between two equally sized point sets X and Y:
/// perm[j] is the index of the column of X matched to column j of Y.
struct Correspondence {
  std::vector<int> perm;

  static Correspondence identity(int k);
  bool is_valid() const;
  int size() const { return static_cast<int>(perm.size()); }

  /// Permutation matrix P with P(j, perm[j]) = 1, so that column c of Y*P
  /// is the Y column matched to X column c.
  Eigen::MatrixXd to_matrix() const;

  friend bool operator==(const Correspondence&, const Correspondence&) = default;
};

struct RegistrationResult {
  OrthogonalTransform transform;
  Correspondence correspondence;
  /// Squared Frobenius norm of M*X - Y*P.
  double residual = 0.0;
};

struct RegisterOptions {
  int restarts = 32;
  int max_iters = 200;
  /// Stop a restart once the residual improves by less than this.
  double tol = 1e-9;
  std::uint64_t seed = 0;
};

/// Per-restart convergence record, mainly for tests and reporting.
struct RegisterDiagnostics {
  /// residuals[r][i] = residual after full iteration i of restart r.
  std::vector<std::vector<double>> residuals;
  int best_restart = -1;
};

/// ||M*X - Y*P||^2_F for the given correspondence.
double registration_residual(const Eigen::MatrixXd& m, const Eigen::MatrixXd& x,
                             const Eigen::MatrixXd& y, const Correspondence& corr);

/// Closed-form orthogonal Procrustes: argmin over M of ||M*X - Y||^2_F
/// subject to M^T M = I, via SVD of Y*X^T. With allow_reflections false the
/// search is restricted to determinant +1 (sign flip on the smallest
/// singular direction).
OrthogonalTransform solve_procrustes(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y,
                                     bool allow_reflections = true);

/// Exact minimum-cost assignment between the columns of x_transformed and y
/// under squared Euclidean column distances. Lowest-index preference on
/// exact cost ties.
Correspondence solve_assignment(const Eigen::MatrixXd& x_transformed,
                                const Eigen::MatrixXd& y);

/// Exact solver for a dense square cost matrix (shortest augmenting path,
/// O(k^3)): returns perm with perm[j] = row assigned to column j minimizing
/// the summed cost.
std::vector<int> solve_assignment_matrix(const Eigen::MatrixXd& cost);

/// Joint registration of two clouds with unknown transform and unknown
/// correspondence: alternates the closed-form transform step and the exact
/// assignment step from several initial transforms (the first is the
/// identity, the rest random orthogonal, all reproducible from the seed).
/// Residuals are non-increasing within one restart; the best restart wins,
/// earliest index on ties.
///
/// This is a heuristic: a returned residual <= eps certifies an exact
/// match, but a larger residual does not prove none exists.
RegistrationResult register_clouds(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y,
                                   const RegisterOptions& options = {},
                                   RegisterDiagnostics* diagnostics = nullptr);

/// The n x n permutation matrix P with P*e_i = e_{pi(i)}. Orthogonal, and
/// commutes with the centered simplex: P * simplex_points(n) equals
/// simplex_points(n) * P exactly.
OrthogonalTransform orthogonal_from_vertex_permutation(const VertexMapping& pi, int n);

/// Decomposes a permutation into transpositions; composing the
/// corresponding swap matrices reproduces orthogonal_from_vertex_permutation.
std::vector<std::pair<int, int>> reflection_decomposition(const VertexMapping& pi, int n);

/// Haar-ish random orthogonal matrix: QR of a Gaussian matrix with the
/// sign convention that makes the factorization unique.
Eigen::MatrixXd random_orthogonal(int d, std::mt19937_64& rng);

}  // namespace graphreg
