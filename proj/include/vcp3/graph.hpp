#pragma once

#include <cstdint>
#include <initializer_list>
#include <istream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vcp3 {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;  // normalized u < v

/// Thrown by the text parsers; carries the 1-based input line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Sorted set of vertex ids. Small and value-semantic; the solvers pass
/// these around freely.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vs) : ids_(vs) { normalize(); }
  explicit VertexSet(std::vector<Vertex> vs) : ids_(std::move(vs)) { normalize(); }

  static VertexSet from_mask(std::uint32_t mask);
  std::uint32_t to_mask() const;  // requires all ids < 32

  bool contains(Vertex v) const;
  void insert(Vertex v);
  void erase(Vertex v);

  int size() const { return static_cast<int>(ids_.size()); }
  bool empty() const { return ids_.empty(); }
  const std::vector<Vertex>& ids() const { return ids_; }
  Vertex operator[](int i) const { return ids_[static_cast<std::size_t>(i)]; }

  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  bool operator==(const VertexSet&) const = default;

 private:
  void normalize();
  std::vector<Vertex> ids_;
};

/// Simple undirected graph. No self-loops, no parallel edges; adjacency
/// lists are kept sorted. Treat instances as immutable once built -- they
/// are then safe to share across concurrent solver runs.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  /// Inserts edge {u,v}; duplicates are ignored, self-loops rejected.
  void add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;

  const std::vector<Vertex>& neighbors(Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  int max_degree() const;

  /// Edges normalized as (min,max), in insertion order.
  const std::vector<Edge>& edges() const { return edges_; }

 private:
  void check_vertex(Vertex v) const;
  int n_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Edge> edges_;
};

enum class GraphFormat { EdgeList, PaceGr };

/// Parses either a plain 0-indexed edge list (`u v` per line, `#` comments)
/// or a PACE 2017 `.gr` file (`p tw n m` header, `e u v` lines, 1-indexed).
/// PACE ids are shifted to 0-indexed internally. Duplicate edge lines are
/// deduplicated; self-loops and malformed lines raise ParseError.
Graph parse_graph(std::istream& in, GraphFormat format);
Graph parse_graph_file(const std::string& path, GraphFormat format);

void emit_gr(std::ostream& out, const Graph& g);

/// True iff every vertex of g - f has degree at most one in g - f,
/// i.e. no path on three vertices survives the deletion of f.
bool is_vcp3_set(const Graph& g, const VertexSet& f);

/// True iff g[f] has exactly one connected component. Singletons count as
/// connected; the empty set does not.
bool is_connected_induced(const Graph& g, const VertexSet& f);

}  // namespace vcp3
