#include "graphreg/registration.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include <Eigen/QR>
#include <Eigen/SVD>

namespace graphreg {

bool OrthogonalTransform::is_orthogonal(double tol) const {
  if (matrix.rows() != matrix.cols() || matrix.rows() == 0) return false;
  const Eigen::Index d = matrix.rows();
  const double defect =
      (matrix.transpose() * matrix - Eigen::MatrixXd::Identity(d, d)).norm();
  const double det_defect = std::abs(std::abs(matrix.determinant()) - 1.0);
  return defect < tol && det_defect < tol;
}

Correspondence Correspondence::identity(int k) {
  Correspondence c;
  c.perm.resize(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) c.perm[static_cast<std::size_t>(i)] = i;
  return c;
}

bool Correspondence::is_valid() const {
  const int k = size();
  std::vector<char> seen(static_cast<std::size_t>(k), 0);
  for (int v : perm) {
    if (v < 0 || v >= k || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  return true;
}

Eigen::MatrixXd Correspondence::to_matrix() const {
  const int k = size();
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(k, k);
  for (int j = 0; j < k; ++j) p(j, perm[static_cast<std::size_t>(j)]) = 1.0;
  return p;
}

double registration_residual(const Eigen::MatrixXd& m, const Eigen::MatrixXd& x,
                             const Eigen::MatrixXd& y, const Correspondence& corr) {
  const Eigen::MatrixXd mx = m * x;
  double total = 0.0;
  for (int j = 0; j < corr.size(); ++j) {
    total += (mx.col(corr.perm[static_cast<std::size_t>(j)]) - y.col(j)).squaredNorm();
  }
  return total;
}

OrthogonalTransform solve_procrustes(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y,
                                     bool allow_reflections) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) {
    throw std::invalid_argument("procrustes: point sets must have the same shape");
  }
  if (x.cols() < 1 || x.rows() < 1) {
    throw std::invalid_argument("procrustes: need at least one point");
  }
  const Eigen::MatrixXd covariance = y * x.transpose();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(covariance,
                                        Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::MatrixXd u = svd.matrixU();
  const Eigen::MatrixXd v = svd.matrixV();
  Eigen::MatrixXd m = u * v.transpose();
  if (!allow_reflections && m.determinant() < 0.0) {
    // Cheapest correction: negate the direction of least variance.
    u.col(u.cols() - 1) *= -1.0;
    m = u * v.transpose();
  }
  return OrthogonalTransform{std::move(m)};
}

Eigen::MatrixXd random_orthogonal(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd a(d, d);
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) a(r, c) = gauss(rng);
  }
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int c = 0; c < d; ++c) {
    if (r(c, c) < 0.0) q.col(c) *= -1.0;
  }
  return q;
}

RegistrationResult register_clouds(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y,
                                   const RegisterOptions& options,
                                   RegisterDiagnostics* diagnostics) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) {
    throw std::invalid_argument("register: point sets must have the same shape");
  }
  if (x.cols() < 1) throw std::invalid_argument("register: need at least one point");
  if (options.restarts < 1) throw std::invalid_argument("register: restarts must be >= 1");
  if (options.max_iters < 1) throw std::invalid_argument("register: max_iters must be >= 1");

  const int d = static_cast<int>(x.rows());
  std::mt19937_64 rng(options.seed);
  if (diagnostics) {
    diagnostics->residuals.assign(static_cast<std::size_t>(options.restarts), {});
    diagnostics->best_restart = -1;
  }

  RegistrationResult best;
  best.residual = std::numeric_limits<double>::infinity();

  for (int restart = 0; restart < options.restarts; ++restart) {
    Eigen::MatrixXd m = (restart == 0) ? Eigen::MatrixXd::Identity(d, d)
                                       : random_orthogonal(d, rng);
    Correspondence corr;
    double residual = std::numeric_limits<double>::infinity();
    for (int iter = 0; iter < options.max_iters; ++iter) {
      corr = solve_assignment(m * x, y);
      // Align X against the Y columns in matched order.
      Eigen::MatrixXd target(y.rows(), y.cols());
      for (int j = 0; j < corr.size(); ++j) {
        target.col(corr.perm[static_cast<std::size_t>(j)]) = y.col(j);
      }
      m = solve_procrustes(x, target, /*allow_reflections=*/true).matrix;
      const double next = registration_residual(m, x, y, corr);
      if (diagnostics) {
        diagnostics->residuals[static_cast<std::size_t>(restart)].push_back(next);
      }
      const bool converged = residual - next < options.tol;
      residual = next;
      if (converged) break;
    }
    if (residual < best.residual) {
      best.transform.matrix = m;
      best.correspondence = corr;
      best.residual = residual;
      if (diagnostics) diagnostics->best_restart = restart;
    }
  }
  return best;
}

OrthogonalTransform orthogonal_from_vertex_permutation(const VertexMapping& pi, int n) {
  if (!pi.is_bijection(n)) {
    throw std::invalid_argument("orthogonal_from_vertex_permutation: not a bijection");
  }
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) p(pi(i), i) = 1.0;
  return OrthogonalTransform{std::move(p)};
}

std::vector<std::pair<int, int>> reflection_decomposition(const VertexMapping& pi, int n) {
  if (!pi.is_bijection(n)) {
    throw std::invalid_argument("reflection_decomposition: not a bijection");
  }
  // Cycle decomposition; a cycle of length L yields L-1 transpositions.
  // Reversed on return so that the left-to-right product of swap matrices
  // equals the permutation matrix of pi.
  std::vector<std::pair<int, int>> swaps;
  std::vector<int> current = pi.map();
  for (int i = 0; i < n; ++i) {
    while (current[static_cast<std::size_t>(i)] != i) {
      const int j = current[static_cast<std::size_t>(i)];
      swaps.emplace_back(i, j);
      std::swap(current[static_cast<std::size_t>(i)], current[static_cast<std::size_t>(j)]);
    }
  }
  std::reverse(swaps.begin(), swaps.end());
  return swaps;
}

}  // namespace graphreg
