#include "graphreg/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace graphreg {

namespace {

void check_endpoint(int v, int n, const std::string& where) {
  if (v < 0 || v >= n) {
    throw ParseError(ParseErrorKind::endpoint_out_of_range,
                     where + ": vertex " + std::to_string(v) +
                         " outside 0.." + std::to_string(n - 1));
  }
}

Edge canonical_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Splits into non-empty lines, tolerating trailing blank lines and CR.
std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur)) {
    if (!cur.empty() && cur.back() == '\r') cur.pop_back();
    lines.push_back(cur);
  }
  while (!lines.empty() && lines.back().find_first_not_of(" \t") == std::string::npos)
    lines.pop_back();
  return lines;
}

std::vector<long long> parse_ints(const std::string& line) {
  std::istringstream in(line);
  std::vector<long long> out;
  long long x;
  while (in >> x) out.push_back(x);
  std::string rest;
  if (in.fail() && !in.eof() && (in.clear(), in >> rest)) {
    throw ParseError(ParseErrorKind::malformed_line, "non-numeric token '" + rest + "'");
  }
  return out;
}

struct Header {
  int n = 0;
  int m = 0;
  char flag = 0;  // 0 = simple graph, 'd' = digraph, 'h' = hypergraph
};

Header parse_header(const std::vector<std::string>& lines) {
  if (lines.empty()) {
    throw ParseError(ParseErrorKind::malformed_header, "empty input");
  }
  std::istringstream in(lines[0]);
  long long n, m;
  if (!(in >> n >> m) || n < 0 || m < 0) {
    throw ParseError(ParseErrorKind::malformed_header,
                     "header must be \"n m\" with n, m >= 0: '" + lines[0] + "'");
  }
  Header h;
  h.n = static_cast<int>(n);
  h.m = static_cast<int>(m);
  std::string tail;
  if (in >> tail) {
    if (tail == "d" || tail == "h") {
      h.flag = tail[0];
    } else {
      throw ParseError(ParseErrorKind::malformed_header,
                       "unknown header flag '" + tail + "'");
    }
    if (in >> tail) {
      throw ParseError(ParseErrorKind::malformed_header, "trailing tokens in header");
    }
  }
  return h;
}

void check_line_count(const Header& h, const std::vector<std::string>& lines) {
  if (static_cast<int>(lines.size()) - 1 != h.m) {
    throw ParseError(ParseErrorKind::malformed_header,
                     "header declares " + std::to_string(h.m) + " edge lines, found " +
                         std::to_string(lines.size() - 1));
  }
}

}  // namespace

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw ParseError(ParseErrorKind::malformed_header, "negative vertex count");
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u == v) {
      throw ParseError(ParseErrorKind::self_loop,
                       "self-loop at vertex " + std::to_string(u));
    }
    check_endpoint(u, n, "edge");
    check_endpoint(v, n, "edge");
    edges_.push_back(canonical_edge(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw ParseError(ParseErrorKind::duplicate_edge,
                     "duplicate edge (" + std::to_string(dup->first) + "," +
                         std::to_string(dup->second) + ")");
  }
}

bool Graph::has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

int Graph::edge_index(int u, int v) const {
  if (u == v) return -1;
  Edge e = canonical_edge(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return -1;
  return static_cast<int>(it - edges_.begin());
}

std::vector<int> Graph::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(n_), 0);
  for (auto [u, v] : edges_) {
    ++deg[static_cast<std::size_t>(u)];
    ++deg[static_cast<std::size_t>(v)];
  }
  return deg;
}

Digraph::Digraph(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
  if (n < 0) throw ParseError(ParseErrorKind::malformed_header, "negative vertex count");
  for (auto [u, v] : arcs_) {
    if (u == v) {
      throw ParseError(ParseErrorKind::self_loop,
                       "self-loop at vertex " + std::to_string(u));
    }
    check_endpoint(u, n, "arc");
    check_endpoint(v, n, "arc");
  }
  std::sort(arcs_.begin(), arcs_.end());
  if (std::adjacent_find(arcs_.begin(), arcs_.end()) != arcs_.end()) {
    throw ParseError(ParseErrorKind::duplicate_edge, "duplicate arc");
  }
}

Hypergraph::Hypergraph(int n, std::vector<std::vector<int>> hyperedges)
    : n_(n), hyperedges_(std::move(hyperedges)) {
  if (n < 0) throw ParseError(ParseErrorKind::malformed_header, "negative vertex count");
  for (auto& he : hyperedges_) {
    for (int v : he) check_endpoint(v, n, "hyperedge");
    std::sort(he.begin(), he.end());
    if (std::adjacent_find(he.begin(), he.end()) != he.end()) {
      throw ParseError(ParseErrorKind::duplicate_edge,
                       "repeated vertex inside a hyperedge");
    }
    if (he.size() < 2) {
      throw ParseError(ParseErrorKind::malformed_line,
                       "hyperedge must relate at least 2 vertices");
    }
  }
  std::sort(hyperedges_.begin(), hyperedges_.end());
  if (std::adjacent_find(hyperedges_.begin(), hyperedges_.end()) != hyperedges_.end()) {
    throw ParseError(ParseErrorKind::duplicate_edge, "duplicate hyperedge");
  }
}

Graph parse_graph(const std::string& text) {
  auto lines = split_lines(text);
  Header h = parse_header(lines);
  if (h.flag != 0) {
    throw ParseError(ParseErrorKind::malformed_header,
                     "expected a simple-graph header \"n m\"");
  }
  check_line_count(h, lines);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(h.m));
  for (int i = 0; i < h.m; ++i) {
    auto nums = parse_ints(lines[static_cast<std::size_t>(i) + 1]);
    if (nums.size() != 2) {
      throw ParseError(ParseErrorKind::malformed_line,
                       "edge line " + std::to_string(i + 2) + " must be \"u v\"");
    }
    edges.emplace_back(static_cast<int>(nums[0]), static_cast<int>(nums[1]));
  }
  return Graph(h.n, std::move(edges));
}

Digraph parse_digraph(const std::string& text) {
  auto lines = split_lines(text);
  Header h = parse_header(lines);
  if (h.flag != 'd') {
    throw ParseError(ParseErrorKind::malformed_header,
                     "expected a digraph header \"n m d\"");
  }
  check_line_count(h, lines);
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(h.m));
  for (int i = 0; i < h.m; ++i) {
    auto nums = parse_ints(lines[static_cast<std::size_t>(i) + 1]);
    if (nums.size() != 2) {
      throw ParseError(ParseErrorKind::malformed_line,
                       "arc line " + std::to_string(i + 2) + " must be \"u v\"");
    }
    arcs.emplace_back(static_cast<int>(nums[0]), static_cast<int>(nums[1]));
  }
  return Digraph(h.n, std::move(arcs));
}

Hypergraph parse_hypergraph(const std::string& text) {
  auto lines = split_lines(text);
  Header h = parse_header(lines);
  if (h.flag != 'h') {
    throw ParseError(ParseErrorKind::malformed_header,
                     "expected a hypergraph header \"n m h\"");
  }
  check_line_count(h, lines);
  std::vector<std::vector<int>> hyperedges;
  hyperedges.reserve(static_cast<std::size_t>(h.m));
  for (int i = 0; i < h.m; ++i) {
    auto nums = parse_ints(lines[static_cast<std::size_t>(i) + 1]);
    if (nums.empty() || static_cast<long long>(nums.size()) != nums[0] + 1) {
      throw ParseError(ParseErrorKind::malformed_line,
                       "hyperedge line " + std::to_string(i + 2) +
                           " must be \"k v1 ... vk\"");
    }
    hyperedges.emplace_back(nums.begin() + 1, nums.end());
  }
  return Hypergraph(h.n, std::move(hyperedges));
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::string serialize_digraph(const Digraph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.arc_count() << " d\n";
  for (auto [u, v] : g.arcs()) out << u << ' ' << v << '\n';
  return out.str();
}

std::string serialize_hypergraph(const Hypergraph& h) {
  std::ostringstream out;
  out << h.vertex_count() << ' ' << h.hyperedge_count() << " h\n";
  for (const auto& he : h.hyperedges()) {
    out << he.size();
    for (int v : he) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

Graph apply_vertex_permutation(const Graph& g, const VertexMapping& pi) {
  if (!pi.is_bijection(g.vertex_count())) {
    throw std::invalid_argument("vertex permutation must be a bijection on 0..n-1");
  }
  std::vector<Edge> mapped;
  mapped.reserve(g.edges().size());
  for (auto [u, v] : g.edges()) mapped.push_back(canonical_edge(pi(u), pi(v)));
  return Graph(g.vertex_count(), std::move(mapped));
}

VertexMapping VertexMapping::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i;
  return VertexMapping(std::move(images));
}

bool VertexMapping::is_injective(int codomain_size) const {
  std::vector<char> seen(static_cast<std::size_t>(codomain_size), 0);
  for (int v : images_) {
    if (v < 0 || v >= codomain_size) return false;
    if (seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  return true;
}

VertexMapping VertexMapping::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < size(); ++i) inv[static_cast<std::size_t>(images_[static_cast<std::size_t>(i)])] = i;
  return VertexMapping(std::move(inv));
}

VertexMapping VertexMapping::compose(const VertexMapping& outer, const VertexMapping& inner) {
  std::vector<int> images(inner.images_.size());
  for (int i = 0; i < inner.size(); ++i) images[static_cast<std::size_t>(i)] = outer(inner(i));
  return VertexMapping(std::move(images));
}

}  // namespace graphreg
