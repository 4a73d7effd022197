#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "graphreg/embedding.hpp"
#include "support/test_support.hpp"

using namespace graphreg;

namespace {
constexpr double kSqrt2 = 1.4142135623730951;
}

TEST_CASE("simplex_points small cases") {
  SUBCASE("n=1 is a single zero column") {
    const Eigen::MatrixXd s = simplex_points(1);
    CHECK(s.rows() == 1);
    CHECK(s.cols() == 1);
    CHECK(s(0, 0) == 0.0);
  }
  SUBCASE("n=2 is the centered pair") {
    const Eigen::MatrixXd s = simplex_points(2);
    CHECK(s(0, 0) == doctest::Approx(0.5));
    CHECK(s(1, 0) == doctest::Approx(-0.5));
    CHECK(s(0, 1) == doctest::Approx(-0.5));
    CHECK(s(1, 1) == doctest::Approx(0.5));
  }
  SUBCASE("n=3 has entries 2/3 and -1/3") {
    const Eigen::MatrixXd s = simplex_points(3);
    for (int c = 0; c < 3; ++c) {
      for (int r = 0; r < 3; ++r) {
        CHECK(s(r, c) == doctest::Approx(r == c ? 2.0 / 3.0 : -1.0 / 3.0).epsilon(1e-15));
      }
    }
  }
  SUBCASE("n=0 is rejected") { CHECK_THROWS_AS(simplex_points(0), std::invalid_argument); }
}

TEST_CASE("simplex columns are centered and equidistant for n up to 50") {
  for (int n = 2; n <= 50; ++n) {
    const Eigen::MatrixXd s = simplex_points(n);
    CHECK(s.rowwise().mean().norm() < 1e-12);
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        worst = std::max(worst, std::abs((s.col(i) - s.col(j)).norm() - kSqrt2));
      }
    }
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("edge_points places midpoints") {
  SUBCASE("antipodal pair midpoint is the origin") {
    const Eigen::MatrixXd se = edge_points(simplex_points(2), {{0, 1}});
    CHECK(se.col(0).norm() == 0.0);
  }
  SUBCASE("n=3 edge (0,1) midpoint") {
    const Eigen::MatrixXd se = edge_points(simplex_points(3), {{0, 1}});
    CHECK(se(0, 0) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
    CHECK(se(1, 0) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
    CHECK(se(2, 0) == doctest::Approx(-1.0 / 3.0).epsilon(1e-15));
  }
  SUBCASE("empty edge list gives a d x 0 matrix") {
    const Eigen::MatrixXd se = edge_points(simplex_points(4), {});
    CHECK(se.rows() == 4);
    CHECK(se.cols() == 0);
  }
  SUBCASE("out-of-range endpoints are rejected") {
    CHECK_THROWS_AS(edge_points(simplex_points(3), {{0, 3}}), std::invalid_argument);
  }
}

TEST_CASE("embed shapes and invariants") {
  SUBCASE("K3 gives a 3x6 cloud") {
    const PointCloud cloud = embed(testsupport::complete_graph(3));
    CHECK(cloud.dimension() == 3);
    CHECK(cloud.total_points() == 6);
    CHECK(cloud.vertex_count == 3);
  }
  SUBCASE("edgeless graph on 4 vertices gives just the simplex") {
    const PointCloud cloud = embed(Graph(4, {}));
    CHECK(cloud.total_points() == 4);
    CHECK(cloud.sample_count() == 0);
  }
  SUBCASE("P3 edge columns sit at the endpoint midpoints") {
    const PointCloud cloud = embed(testsupport::path_graph(3));
    CHECK(cloud.total_points() == 5);
    CHECK((cloud.points.col(3) - (cloud.points.col(0) + cloud.points.col(1)) / 2.0).norm() == 0.0);
    CHECK((cloud.points.col(4) - (cloud.points.col(1) + cloud.points.col(2)) / 2.0).norm() == 0.0);
  }
  SUBCASE("vertex block is centered for every variant") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 8);
      const int slots = n * (n - 1) / 2;
      const Graph g = testsupport::random_graph(
          n, static_cast<int>(rng() % static_cast<std::uint64_t>(slots + 1)), rng);
      const PointCloud cloud = embed(g);
      CHECK(cloud.vertex_block().rowwise().mean().norm() < 1e-12);
    }
  }
}

TEST_CASE("embed_digraph samples midpoint plus 3/4-point per arc") {
  SUBCASE("single arc in n=2") {
    const PointCloud cloud = embed_digraph(Digraph(2, {{0, 1}}));
    CHECK(cloud.total_points() == 4);
    CHECK(cloud.points.col(2).norm() == 0.0);  // midpoint
    CHECK(cloud.points(0, 3) == doctest::Approx(-0.25));
    CHECK(cloud.points(1, 3) == doctest::Approx(0.25));
  }
  SUBCASE("reversing the arc flips the 3/4-point") {
    const PointCloud cloud = embed_digraph(Digraph(2, {{1, 0}}));
    CHECK(cloud.points(0, 3) == doctest::Approx(0.25));
    CHECK(cloud.points(1, 3) == doctest::Approx(-0.25));
  }
  SUBCASE("no arcs leaves the vertex simplex") {
    const PointCloud cloud = embed_digraph(Digraph(3, {}));
    CHECK(cloud.total_points() == 3);
  }
  SUBCASE("column order is all midpoints then all 3/4-points") {
    const Digraph d(3, {{0, 1}, {2, 0}});
    const PointCloud cloud = embed_digraph(d);
    CHECK(cloud.total_points() == 7);
    const auto sv = cloud.vertex_block();
    CHECK((cloud.points.col(3) - (sv.col(0) + sv.col(1)) / 2.0).norm() == 0.0);
    CHECK((cloud.points.col(4) - (sv.col(2) + sv.col(0)) / 2.0).norm() == 0.0);
    CHECK((cloud.points.col(5) - (cloud.points.col(3) + sv.col(1)) / 2.0).norm() == 0.0);
    CHECK((cloud.points.col(6) - (cloud.points.col(4) + sv.col(0)) / 2.0).norm() == 0.0);
  }
}

TEST_CASE("embed_hypergraph samples centroids") {
  SUBCASE("the full simplex centroid is the origin") {
    const PointCloud cloud = embed_hypergraph(Hypergraph(3, {{0, 1, 2}}));
    CHECK(cloud.points.col(3).norm() < 1e-12);
  }
  SUBCASE("a 2-ary hyperedge equals the simple-edge midpoint") {
    const PointCloud hyper = embed_hypergraph(Hypergraph(3, {{0, 1}}));
    const PointCloud simple = embed(Graph(3, {{0, 1}}));
    CHECK((hyper.points.col(3) - simple.points.col(3)).norm() == 0.0);
  }
  SUBCASE("triple inside n=4") {
    const PointCloud cloud = embed_hypergraph(Hypergraph(4, {{0, 1, 2}}));
    const Eigen::MatrixXd sv = simplex_points(4);
    const Eigen::VectorXd expected = (sv.col(0) + sv.col(1) + sv.col(2)) / 3.0;
    CHECK((cloud.points.col(4) - expected).norm() < 1e-16);
    CHECK(cloud.points(0, 4) == doctest::Approx(1.0 / 12.0).epsilon(1e-15));
    CHECK(cloud.points(3, 4) == doctest::Approx(-0.25).epsilon(1e-15));
  }
}

TEST_CASE("permutation matrices commute with the simplex exactly") {
  std::mt19937_64 rng(13);
  for (int n = 1; n <= 8; ++n) {
    for (int trial = 0; trial < 25; ++trial) {
      const auto pi = testsupport::random_permutation(n, rng);
      const Eigen::MatrixXd p = orthogonal_from_vertex_permutation(pi, n).matrix;
      const Eigen::MatrixXd s = simplex_points(n);
      CHECK((p * s - s * p).norm() == 0.0);
    }
  }
}

TEST_CASE("distinct edges map to distinct midpoints") {
  for (int n = 2; n <= 9; ++n) {
    const Graph g = testsupport::complete_graph(n);
    const Eigen::MatrixXd se = edge_points(simplex_points(n), g.edges());
    for (int i = 0; i < se.cols(); ++i) {
      for (int j = i + 1; j < se.cols(); ++j) {
        CHECK((se.col(i) - se.col(j)).squaredNorm() >= 0.5 - 1e-12);
      }
    }
  }
}

TEST_CASE("to_csv round-trips the matrix text") {
  const PointCloud cloud = embed(testsupport::path_graph(3));
  const std::string csv = to_csv(cloud);
  CHECK(csv.substr(0, 4) == "3,5\n");
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
  // Every value prints with enough digits to reparse exactly.
  CHECK(csv.find("0.66666666666666674") != std::string::npos);
}
