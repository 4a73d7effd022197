#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "graphreg/graph.hpp"
#include "support/test_support.hpp"

using namespace graphreg;

TEST_CASE("parse_graph reads the edge-list format") {
  const Graph g = parse_graph("3 2\n0 1\n1 2");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
}

TEST_CASE("parse_graph accepts an empty edge set") {
  const Graph g = parse_graph("2 0");
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 0);
}

TEST_CASE("parse_graph canonicalizes reversed and unsorted input") {
  const Graph g = parse_graph("4 3\n3 0\n2 1\n1 0");
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}});
}

TEST_CASE("parse_graph rejects malformed input with distinct errors") {
  auto kind_of = [](const std::string& text) {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return e.kind();
    }
    FAIL("expected a parse error");
    return ParseErrorKind::malformed_header;
  };
  CHECK(kind_of("") == ParseErrorKind::malformed_header);
  CHECK(kind_of("banana") == ParseErrorKind::malformed_header);
  CHECK(kind_of("3 1") == ParseErrorKind::malformed_header);        // missing edge line
  CHECK(kind_of("3 1\n0 1\n1 2") == ParseErrorKind::malformed_header);
  CHECK(kind_of("3 1\n0") == ParseErrorKind::malformed_line);
  CHECK(kind_of("3 1\n0 1 2") == ParseErrorKind::malformed_line);
  CHECK(kind_of("3 1\n0 3") == ParseErrorKind::endpoint_out_of_range);
  CHECK(kind_of("3 1\n-1 0") == ParseErrorKind::endpoint_out_of_range);
  CHECK(kind_of("3 1\n2 2") == ParseErrorKind::self_loop);
  CHECK(kind_of("3 2\n0 1\n1 0") == ParseErrorKind::duplicate_edge);
}

TEST_CASE("serialize_graph emits the canonical form") {
  CHECK(serialize_graph(Graph(3, {{0, 1}, {1, 2}})) == "3 2\n0 1\n1 2\n");
  CHECK(serialize_graph(Graph(1, {})) == "1 0\n");
  CHECK(serialize_graph(Graph(4, {{0, 1}, {0, 2}, {0, 3}})) == "4 3\n0 1\n0 2\n0 3\n");
}

TEST_CASE("parse and serialize round-trip on random graphs") {
  std::mt19937_64 rng(20240811);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 9);
    const int slots = n * (n - 1) / 2;
    const int m = static_cast<int>(rng() % static_cast<std::uint64_t>(slots + 1));
    const Graph g = testsupport::random_graph(n, m, rng);
    CHECK(parse_graph(serialize_graph(g)) == g);
  }
}

TEST_CASE("digraph parsing keeps arc direction and rejects duplicates") {
  const Digraph d = parse_digraph("3 2 d\n1 0\n0 1");
  CHECK(d.arcs() == std::vector<Arc>{{0, 1}, {1, 0}});
  CHECK_THROWS_AS(parse_digraph("3 2 d\n0 1\n0 1"), ParseError);
  CHECK_THROWS_AS(parse_digraph("3 1\n0 1"), ParseError);  // missing flag
  CHECK(parse_digraph(serialize_digraph(d)) == d);
}

TEST_CASE("hypergraph parsing sorts members and the list") {
  const Hypergraph h = parse_hypergraph("4 2 h\n3 2 0 1\n2 3 0");
  CHECK(h.hyperedges() == std::vector<std::vector<int>>{{0, 1, 2}, {0, 3}});
  CHECK_THROWS_AS(parse_hypergraph("4 1 h\n3 0 1"), ParseError);    // k mismatch
  CHECK_THROWS_AS(parse_hypergraph("4 1 h\n3 0 1 1"), ParseError);  // repeated member
  CHECK_THROWS_AS(parse_hypergraph("4 1 h\n1 0"), ParseError);      // too small
  CHECK_THROWS_AS(parse_hypergraph("4 2 h\n2 0 1\n2 1 0"), ParseError);
  CHECK(parse_hypergraph(serialize_hypergraph(h)) == h);
}

TEST_CASE("apply_vertex_permutation relabels edges") {
  const Graph path = testsupport::path_graph(3);
  SUBCASE("flipping a path gives the same canonical edge list") {
    CHECK(apply_vertex_permutation(path, VertexMapping({2, 1, 0})) == path);
  }
  SUBCASE("a triangle is invariant under every permutation") {
    const Graph k3 = testsupport::complete_graph(3);
    for (const auto& image : testsupport::all_permutations(3)) {
      CHECK(apply_vertex_permutation(k3, VertexMapping(image)) == k3);
    }
  }
  SUBCASE("rotating a star moves the center") {
    const Graph star = testsupport::star_graph(4);
    const Graph rotated = apply_vertex_permutation(star, VertexMapping({1, 2, 3, 0}));
    CHECK(rotated.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {1, 3}});
  }
  SUBCASE("non-bijections are rejected") {
    CHECK_THROWS_AS(apply_vertex_permutation(path, VertexMapping({0, 0, 1})),
                    std::invalid_argument);
    CHECK_THROWS_AS(apply_vertex_permutation(path, VertexMapping({0, 1})),
                    std::invalid_argument);
  }
}

TEST_CASE("permutation algebra on random graphs") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const int slots = n * (n - 1) / 2;
    const Graph g = testsupport::random_graph(
        n, static_cast<int>(rng() % static_cast<std::uint64_t>(slots + 1)), rng);
    const VertexMapping a = testsupport::random_permutation(n, rng);
    const VertexMapping b = testsupport::random_permutation(n, rng);

    CHECK(apply_vertex_permutation(g, VertexMapping::identity(n)) == g);
    const Graph via_two = apply_vertex_permutation(apply_vertex_permutation(g, a), b);
    const Graph via_composition = apply_vertex_permutation(g, VertexMapping::compose(b, a));
    CHECK(via_two == via_composition);

    const Graph h = apply_vertex_permutation(g, a);
    CHECK(h.vertex_count() == g.vertex_count());
    CHECK(h.edge_count() == g.edge_count());
  }
}
