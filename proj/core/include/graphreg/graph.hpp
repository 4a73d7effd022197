#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graphreg/mapping.hpp"

namespace graphreg {

/// Unordered vertex pair stored with first < second.
using Edge = std::pair<int, int>;
/// Ordered vertex pair (tail, head).
using Arc = std::pair<int, int>;

enum class ParseErrorKind {
  malformed_header,
  malformed_line,
  endpoint_out_of_range,
  self_loop,
  duplicate_edge,
};

class ParseError : public std::runtime_error {
public:
  ParseError(ParseErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ParseErrorKind kind() const { return kind_; }

private:
  ParseErrorKind kind_;
};

/// Simple undirected graph: no loops, no multi-edges.
///
/// Vertices are the integers 0..n-1. Edges are kept canonical: each pair
/// (u,v) with u < v, the list sorted lexicographically. The canonical order
/// gives every edge a stable position, which the geometric layers rely on
/// when they talk about "the column of edge i".
class Graph {
public:
  Graph() = default;
  /// Validates and canonicalizes. Throws ParseError on loops, duplicate
  /// edges (after canonicalization) or endpoints outside 0..n-1.
  Graph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(int u, int v) const;
  /// Position of canonical edge (u,v) in the sorted edge list, or -1.
  int edge_index(int u, int v) const;

  std::vector<int> degrees() const;

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

/// Directed graph: ordered arcs, no loops, at most one arc per ordered pair.
class Digraph {
public:
  Digraph() = default;
  Digraph(int n, std::vector<Arc> arcs);

  int vertex_count() const { return n_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const std::vector<Arc>& arcs() const { return arcs_; }

  friend bool operator==(const Digraph&, const Digraph&) = default;

private:
  int n_ = 0;
  std::vector<Arc> arcs_;
};

/// Hypergraph: each hyperedge is a set of >= 2 vertices, stored sorted,
/// the list of hyperedges sorted lexicographically with no duplicates.
class Hypergraph {
public:
  Hypergraph() = default;
  Hypergraph(int n, std::vector<std::vector<int>> hyperedges);

  int vertex_count() const { return n_; }
  int hyperedge_count() const { return static_cast<int>(hyperedges_.size()); }
  const std::vector<std::vector<int>>& hyperedges() const { return hyperedges_; }

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

private:
  int n_ = 0;
  std::vector<std::vector<int>> hyperedges_;
};

/// Edge-list text format, one graph per string:
///   line 1: "n m"            (undirected; "n m d" directed, "n m h" hypergraph)
///   then m lines, one edge each: "u v" / arc "u v" / hyperedge "k v1 ... vk"
/// Whitespace separated, 0-indexed, LF line endings.
Graph parse_graph(const std::string& text);
Digraph parse_digraph(const std::string& text);
Hypergraph parse_hypergraph(const std::string& text);

std::string serialize_graph(const Graph& g);
std::string serialize_digraph(const Digraph& g);
std::string serialize_hypergraph(const Hypergraph& h);

/// Relabels vertices: every edge (u,v) becomes (pi(u), pi(v)), canonicalized.
/// Throws std::invalid_argument if pi is not a bijection on 0..n-1.
Graph apply_vertex_permutation(const Graph& g, const VertexMapping& pi);

}  // namespace graphreg
