#pragma once

#include <cstdint>
#include <optional>

#include "graphreg/embedding.hpp"
#include "graphreg/graph.hpp"
#include "graphreg/registration.hpp"

namespace graphreg {

/// Residual threshold under which a registration counts as exact.
/// 64-bit arithmetic on clouds of <= 10^3 points with edge scale sqrt(2)
/// keeps accumulated error well below this.
inline constexpr double kZeroResidualTolerance = 1e-9;

struct IsoResult {
  bool decision = false;
  std::optional<VertexMapping> witness;
  /// Geometric residual of the witness; +inf when decision is false.
  double residual = 0.0;
};

/// The edge correspondence forced by a vertex bijection: edge i of e1 maps
/// onto the position of (pi(u), pi(v)) in e2. Returns the correspondence
/// with perm[j] = index in e1 of the edge sent to e2's edge j, or nullopt
/// if some image edge is absent (pi is not edge-preserving).
std::optional<Correspondence> induced_edge_permutation(const VertexMapping& pi,
                                                       const std::vector<Edge>& e1,
                                                       const std::vector<Edge>& e2);

/// Exact residual ||P_pi * S1 - S2 * P||^2_F of the candidate pi, where the
/// vertex block of P is P_pi and the edge block is the induced edge
/// permutation when pi preserves edges, otherwise the cost-minimizing
/// assignment between mapped edge midpoints and S2's edge columns.
/// +inf when the graphs have different vertex or edge counts.
double vertex_map_residual(const Graph& g1, const Graph& g2, const VertexMapping& pi);

/// Geometric isomorphism decision: searches vertex bijections (backtracking
/// pruned by degree) and accepts the first candidate whose registration
/// residual is at most tol. The accepted transform is the permutation
/// matrix of the candidate and the point correspondence is forced by it.
IsoResult is_isomorphic(const Graph& g1, const Graph& g2,
                        double tol = kZeroResidualTolerance);

/// Ground-truth decision on adjacency alone: backtracking over vertex
/// bijections that preserve adjacency, no geometry anywhere. Same result
/// contract as is_isomorphic.
IsoResult oracle_is_isomorphic(const Graph& g1, const Graph& g2);

/// Order of the automorphism group: the number of vertex bijections of g
/// onto itself whose registration residual against g's own cloud is at
/// most tol. At least 1 (the identity), at most n!.
std::uint64_t count_automorphisms(const Graph& g, double tol = kZeroResidualTolerance);

/// True iff some non-identity bijection registers exactly; early exit on
/// the first witness.
bool has_nontrivial_automorphism(const Graph& g, double tol = kZeroResidualTolerance);

/// Does g1 contain a subgraph isomorphic to g2? True iff some injection of
/// the vertices of g2 into g1 maps every edge of g2 onto an edge of g1.
/// Each witness is certified geometrically: the image columns of g1's
/// cloud, recentered on the image simplex centroid, must register onto
/// g2's (zero-padded) cloud with residual at most tol.
IsoResult is_subgraph_isomorphic(const Graph& g1, const Graph& g2,
                                 double tol = kZeroResidualTolerance);

/// Checks a candidate witness both ways: combinatorially
/// (apply_vertex_permutation(g1, pi) == g2) and geometrically (residual of
/// pi at most tol). The verdicts must agree; disagreement throws
/// std::logic_error since it signals a bug or a broken tolerance.
bool verify_isomorphism(const Graph& g1, const Graph& g2, const VertexMapping& pi,
                        double tol = kZeroResidualTolerance);

}  // namespace graphreg
