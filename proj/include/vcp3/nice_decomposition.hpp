#pragma once

#include <array>
#include <string>
#include <vector>

#include "vcp3/tree_decomposition.hpp"

namespace vcp3 {

enum class NodeKind { Leaf, IntroduceVertex, IntroduceEdge, Forget, Join };

constexpr const char* node_kind_name(NodeKind k) {
  switch (k) {
    case NodeKind::Leaf: return "leaf";
    case NodeKind::IntroduceVertex: return "introduce_vertex";
    case NodeKind::IntroduceEdge: return "introduce_edge";
    case NodeKind::Forget: return "forget";
    case NodeKind::Join: return "join";
  }
  return "?";
}

struct NiceNode {
  NodeKind kind = NodeKind::Leaf;
  VertexSet bag;           // vertices in ascending order; order fixes DP digit positions
  int child = -1;          // single child, or left child of a join
  int child2 = -1;         // right child of a join
  Vertex vertex = -1;      // introduce-vertex / forget label
  Vertex edge_u = -1;      // introduce-edge label (u < v)
  Vertex edge_v = -1;
};

/// Rooted binary decomposition with typed nodes; root and leaves carry
/// empty bags and every graph edge is introduced at exactly one
/// introduce-edge node.
struct NiceDecomposition {
  std::vector<NiceNode> nodes;
  int root = -1;

  int node_count() const { return static_cast<int>(nodes.size()); }
  int width() const;
  std::array<int, 5> kind_counts() const;  // indexed by NodeKind

  /// Children-before-parents evaluation order.
  std::vector<int> post_order() const;
};

/// Transforms a valid decomposition into the refined nice form: binarized
/// joins, unit-step introduce/forget chains, empty root and leaf bags, and
/// one introduce-edge node per graph edge placed directly below the forget
/// node of whichever endpoint leaves first. Throws std::invalid_argument
/// when validate(td, g) reports violations.
NiceDecomposition make_nice(const TreeDecomposition& td, const Graph& g);

/// Checks every structural invariant of the nice form, including the
/// node-count bound (16 * (width+1) * n, with degenerate sizes clamped to 1)
/// and the exactly-once edge introduction rule. Also re-checks the three
/// underlying decomposition conditions.
ValidationReport validate_nice(const NiceDecomposition& nd, const Graph& g);

/// View of a nice decomposition as a plain bag tree (used by the validator
/// and handy in tests).
TreeDecomposition as_tree_decomposition(const NiceDecomposition& nd);

}  // namespace vcp3
