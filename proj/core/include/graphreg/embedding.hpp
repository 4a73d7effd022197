#pragma once

#include <string>

#include <Eigen/Dense>

#include "graphreg/graph.hpp"

namespace graphreg {

/// Point-cloud form of a graph: d x (vertex_count + sample_count) matrix.
///
/// The leading vertex_count columns are the vertices of a centered regular
/// simplex (one per graph vertex, all pairwise distances sqrt(2)); the
/// remaining columns are the sample points standing in for edges.
struct PointCloud {
  Eigen::MatrixXd points;
  Eigen::Index vertex_count = 0;

  Eigen::Index dimension() const { return points.rows(); }
  Eigen::Index total_points() const { return points.cols(); }
  Eigen::Index sample_count() const { return points.cols() - vertex_count; }

  auto vertex_block() const { return points.leftCols(vertex_count); }
  auto sample_block() const { return points.rightCols(sample_count()); }
};

/// Vertices of the centered standard simplex in R^n: column i is
/// e_i - (1/n) * 1. Columns sum to zero and are pairwise sqrt(2) apart.
/// Throws std::invalid_argument for n < 1.
Eigen::MatrixXd simplex_points(int n);

/// One midpoint column per edge, in canonical edge order.
Eigen::MatrixXd edge_points(const Eigen::MatrixXd& vertex_points,
                            const std::vector<Edge>& edges);

/// [simplex vertices | edge midpoints].
PointCloud embed(const Graph& g);

/// Directed variant: each arc (u,v) contributes its midpoint m and the
/// further midpoint (m + p_v)/2, i.e. the 3/4-point toward the head.
/// Columns: all midpoints in arc order, then all 3/4-points in arc order.
PointCloud embed_digraph(const Digraph& g);

/// Hypergraph variant: one centroid column per hyperedge.
PointCloud embed_hypergraph(const Hypergraph& h);

/// CSV dump: header "d,k" then d rows of k comma-separated values,
/// vertex columns first. Values are printed round-trip exact.
std::string to_csv(const PointCloud& cloud);

}  // namespace graphreg
