#include "graphreg/embedding.hpp"

#include <cstdio>
#include <stdexcept>

namespace graphreg {

Eigen::MatrixXd simplex_points(int n) {
  if (n < 1) throw std::invalid_argument("simplex_points: need at least one vertex");
  Eigen::MatrixXd sv = Eigen::MatrixXd::Identity(n, n);
  sv.array() -= 1.0 / n;
  return sv;
}

Eigen::MatrixXd edge_points(const Eigen::MatrixXd& vertex_points,
                            const std::vector<Edge>& edges) {
  const auto n = vertex_points.cols();
  Eigen::MatrixXd se(vertex_points.rows(), static_cast<Eigen::Index>(edges.size()));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw std::invalid_argument("edge_points: endpoint out of range");
    }
    se.col(static_cast<Eigen::Index>(i)) = (vertex_points.col(u) + vertex_points.col(v)) / 2.0;
  }
  return se;
}

PointCloud embed(const Graph& g) {
  const int n = g.vertex_count();
  PointCloud cloud;
  cloud.vertex_count = n;
  cloud.points.resize(n, n + g.edge_count());
  cloud.points.leftCols(n) = simplex_points(n);
  cloud.points.rightCols(g.edge_count()) = edge_points(cloud.points.leftCols(n), g.edges());
  return cloud;
}

PointCloud embed_digraph(const Digraph& g) {
  const int n = g.vertex_count();
  const int m = g.arc_count();
  PointCloud cloud;
  cloud.vertex_count = n;
  cloud.points.resize(n, n + 2 * m);
  cloud.points.leftCols(n) = simplex_points(n);
  for (int i = 0; i < m; ++i) {
    auto [u, v] = g.arcs()[static_cast<std::size_t>(i)];
    Eigen::VectorXd mid = (cloud.points.col(u) + cloud.points.col(v)) / 2.0;
    cloud.points.col(n + i) = mid;
    cloud.points.col(n + m + i) = (mid + cloud.points.col(v)) / 2.0;
  }
  return cloud;
}

PointCloud embed_hypergraph(const Hypergraph& h) {
  const int n = h.vertex_count();
  PointCloud cloud;
  cloud.vertex_count = n;
  cloud.points.resize(n, n + h.hyperedge_count());
  cloud.points.leftCols(n) = simplex_points(n);
  for (int i = 0; i < h.hyperedge_count(); ++i) {
    const auto& members = h.hyperedges()[static_cast<std::size_t>(i)];
    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
    for (int v : members) centroid += cloud.points.col(v);
    cloud.points.col(n + i) = centroid / static_cast<double>(members.size());
  }
  return cloud;
}

std::string to_csv(const PointCloud& cloud) {
  std::string out;
  out += std::to_string(cloud.dimension());
  out += ',';
  out += std::to_string(cloud.total_points());
  out += '\n';
  char buf[64];
  for (Eigen::Index r = 0; r < cloud.dimension(); ++r) {
    for (Eigen::Index c = 0; c < cloud.total_points(); ++c) {
      std::snprintf(buf, sizeof(buf), "%.17g", cloud.points(r, c));
      if (c > 0) out += ',';
      out += buf;
    }
    out += '\n';
  }
  return out;
}

}  // namespace graphreg
