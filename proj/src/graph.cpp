#include "vcp3/graph.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <sstream>

namespace vcp3 {

void VertexSet::normalize() {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

VertexSet VertexSet::from_mask(std::uint32_t mask) {
  VertexSet s;
  for (int v = 0; mask != 0; ++v, mask >>= 1) {
    if (mask & 1u) s.ids_.push_back(v);
  }
  return s;
}

std::uint32_t VertexSet::to_mask() const {
  std::uint32_t mask = 0;
  for (Vertex v : ids_) {
    assert(v >= 0 && v < 32);
    mask |= (1u << v);
  }
  return mask;
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

void VertexSet::insert(Vertex v) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it == ids_.end() || *it != v) ids_.insert(it, v);
}

void VertexSet::erase(Vertex v) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it != ids_.end() && *it == v) ids_.erase(it);
}

Graph::Graph(int vertex_count) : n_(vertex_count), adj_(static_cast<std::size_t>(vertex_count)) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex id " + std::to_string(v) + " out of range");
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  if (has_edge(u, v)) return;
  auto& au = adj_[static_cast<std::size_t>(u)];
  auto& av = adj_[static_cast<std::size_t>(v)];
  au.insert(std::lower_bound(au.begin(), au.end(), v), v);
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  edges_.emplace_back(std::min(u, v), std::max(u, v));
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& au = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(au.begin(), au.end(), v);
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return adj_[static_cast<std::size_t>(v)];
}

int Graph::max_degree() const {
  int d = 0;
  for (Vertex v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

namespace {

bool is_blank_or_comment(const std::string& line, char comment_char) {
  for (char c : line) {
    if (c == comment_char) return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Graph parse_edge_list(std::istream& in) {
  std::string line;
  int lineno = 0;
  std::vector<Edge> raw;
  Vertex max_id = -1;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_blank_or_comment(line, '#')) continue;
    std::istringstream ls(line);
    long long u, v;
    if (!(ls >> u >> v)) throw ParseError(lineno, "expected `u v`, got: " + line);
    std::string rest;
    if (ls >> rest) throw ParseError(lineno, "trailing tokens: " + rest);
    if (u < 0 || v < 0) throw ParseError(lineno, "negative vertex id");
    if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
    raw.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    max_id = std::max({max_id, static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  Graph g(max_id + 1);
  for (auto [u, v] : raw) g.add_edge(u, v);
  return g;
}

Graph parse_pace_gr(std::istream& in) {
  std::string line;
  int lineno = 0;
  long long n = -1, m = -1;
  std::vector<Edge> raw;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == 'c') continue;
    if (is_blank_or_comment(line, 'c')) continue;
    std::istringstream ls(line);
    if (line[0] == 'p') {
      if (n >= 0) throw ParseError(lineno, "duplicate problem header");
      std::string p, tw;
      if (!(ls >> p >> tw >> n >> m) || p != "p" || tw != "tw" || n < 0 || m < 0)
        throw ParseError(lineno, "expected `p tw <n> <m>`");
      continue;
    }
    if (line[0] == 'e') {
      if (n < 0) throw ParseError(lineno, "edge line before problem header");
      std::string e;
      long long u, v;
      if (!(ls >> e >> u >> v)) throw ParseError(lineno, "expected `e u v`");
      if (u < 1 || u > n || v < 1 || v > n) throw ParseError(lineno, "vertex id out of [1, n]");
      if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
      raw.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
      continue;
    }
    throw ParseError(lineno, "unrecognized line: " + line);
  }
  if (n < 0) throw ParseError(lineno, "missing `p tw` header");
  Graph g(static_cast<int>(n));
  for (auto [u, v] : raw) g.add_edge(u, v);
  return g;
}

}  // namespace

Graph parse_graph(std::istream& in, GraphFormat format) {
  return format == GraphFormat::EdgeList ? parse_edge_list(in) : parse_pace_gr(in);
}

Graph parse_graph_file(const std::string& path, GraphFormat format) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return parse_graph(in, format);
}

void emit_gr(std::ostream& out, const Graph& g) {
  out << "p tw " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

bool is_vcp3_set(const Graph& g, const VertexSet& f) {
  std::vector<char> in_f(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex v : f) in_f[static_cast<std::size_t>(v)] = 1;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (in_f[static_cast<std::size_t>(v)]) continue;
    int deg = 0;
    for (Vertex u : g.neighbors(v)) {
      if (!in_f[static_cast<std::size_t>(u)] && ++deg > 1) return false;
    }
  }
  return true;
}

bool is_connected_induced(const Graph& g, const VertexSet& f) {
  if (f.empty()) return false;
  std::vector<char> in_f(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex v : f) in_f[static_cast<std::size_t>(v)] = 1;
  std::vector<Vertex> stack = {f[0]};
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  seen[static_cast<std::size_t>(f[0])] = 1;
  int reached = 0;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    ++reached;
    for (Vertex u : g.neighbors(v)) {
      if (in_f[static_cast<std::size_t>(u)] && !seen[static_cast<std::size_t>(u)]) {
        seen[static_cast<std::size_t>(u)] = 1;
        stack.push_back(u);
      }
    }
  }
  return reached == f.size();
}

}  // namespace vcp3
