#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "vcp3/graph.hpp"

namespace vcp3 {

/// Rooted tree of bags. Valid when (1) the bags cover every vertex,
/// (2) every edge has a bag containing both endpoints, and (3) the nodes
/// holding any given vertex form a connected subtree.
struct TreeDecomposition {
  std::vector<VertexSet> bags;
  std::vector<int> parent;                 // -1 at the root
  std::vector<std::vector<int>> children;  // derived from parent
  int root = -1;

  int node_count() const { return static_cast<int>(bags.size()); }
  int width() const;  // max bag size - 1; -1 for the empty decomposition

  /// Rebuilds children lists (and root) from the parent array.
  void rebuild_children();
  /// Re-roots the tree at new_root by flipping parent pointers.
  void reroot(int new_root);
};

struct ValidationReport {
  std::vector<Vertex> missing_vertices;            // condition 1 witnesses
  std::vector<Edge> uncovered_edges;               // condition 2 witnesses
  std::vector<Vertex> disconnected_vertices;       // condition 3 witnesses
  std::vector<Vertex> out_of_range_vertices;       // bag ids outside [0, n)
  bool structural_error = false;                   // tree links malformed
  std::string structural_detail;

  bool valid() const {
    return missing_vertices.empty() && uncovered_edges.empty() &&
           disconnected_vertices.empty() && out_of_range_vertices.empty() && !structural_error;
  }
  std::string to_string() const;
};

/// Checks the three decomposition conditions; violations are reported with
/// witnesses, not thrown.
ValidationReport validate(const TreeDecomposition& td, const Graph& g);

enum class EliminationStrategy { MinDegree, MinFill };

/// Builds a valid decomposition from an elimination ordering. The width is
/// heuristic, not guaranteed optimal.
TreeDecomposition heuristic_decompose(const Graph& g, EliminationStrategy strategy);

/// PACE 2017 `.td` reader/writer. 1-indexed on the wire, rooted at bag 1.
TreeDecomposition parse_td(std::istream& in);
TreeDecomposition parse_td_file(const std::string& path);
void emit_td(std::ostream& out, const TreeDecomposition& td, int vertex_count);

}  // namespace vcp3
