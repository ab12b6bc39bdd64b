#pragma once

#include <cstdint>
#include <vector>

#include "vcp3/graph.hpp"
#include "vcp3/nice_decomposition.hpp"
#include "vcp3/subset_convolution.hpp"

namespace vcp3 {

/// Per-vertex DP states: in the cover set, outside and isolated in the
/// processed subgraph, or outside with degree exactly one.
enum Color3 : int { kInCover = 0, kFreeIsolated = 1, kFreeDegreeOne = 2 };

/// Colorings of a bag are base-3 indices, one digit per bag position in
/// ascending vertex order (the order stored in NiceNode::bag).
namespace coloring3 {

inline constexpr int kMaxBag = 20;

constexpr std::uint32_t pow3(int e) {
  std::uint32_t r = 1;
  for (int i = 0; i < e; ++i) r *= 3;
  return r;
}

inline int digit(std::uint32_t index, int pos) { return static_cast<int>(index / pow3(pos) % 3); }

inline std::uint32_t set_digit(std::uint32_t index, int pos, int value) {
  return index + (static_cast<std::uint32_t>(value) - static_cast<std::uint32_t>(digit(index, pos))) * pow3(pos);
}

/// Widens the index by one digit at `pos` (digits at >= pos shift up).
inline std::uint32_t insert_digit(std::uint32_t index, int pos, int value) {
  const std::uint32_t low = index % pow3(pos);
  const std::uint32_t high = index / pow3(pos);
  return low + (static_cast<std::uint32_t>(value) + 3 * high) * pow3(pos);
}

/// Drops the digit at `pos` (inverse of insert_digit).
inline std::uint32_t remove_digit(std::uint32_t index, int pos) {
  const std::uint32_t low = index % pow3(pos);
  const std::uint32_t high = index / (pow3(pos) * 3);
  return low + high * pow3(pos);
}

}  // namespace coloring3

/// One node's table: values[f] is the minimum cover size over the processed
/// subgraph realizing coloring f, kInf when infeasible. `choice` records the
/// child coloring behind each finite entry for unary nodes; join splits are
/// re-derived from the child tables during backtracking, always resolving
/// ties toward the smallest child coloring index.
struct DpTable {
  int node = -1;
  std::vector<std::int32_t> values;
  std::vector<std::int32_t> choice;  // child coloring index, -1 when absent
};

enum class ConvolutionMode { Auto, Fast, Naive };

struct SolveOptions {
  ConvolutionMode convolution = ConvolutionMode::Auto;
  int fast_threshold = 8;  // Auto switches to the transform path at this ground size
  bool validate_input = true;
};

DpTable table_leaf(const NiceDecomposition& nd, int t);
DpTable table_introduce_vertex(const NiceDecomposition& nd, int t, const DpTable& child);
DpTable table_introduce_edge(const NiceDecomposition& nd, int t, const DpTable& child);
DpTable table_forget(const NiceDecomposition& nd, int t, const DpTable& child);
DpTable table_join(const NiceDecomposition& nd, int t, const DpTable& left, const DpTable& right,
                   const SolveOptions& options = {});

/// All node tables in post-order; retained so witnesses and per-entry
/// certificates can be extracted afterwards.
struct DpRun {
  std::vector<DpTable> tables;  // indexed by node id
};

DpRun evaluate_tables(const NiceDecomposition& nd, const SolveOptions& options = {});

/// Walks choice tags downward from (node, coloring) and returns the cover
/// set realizing that entry. The entry must be finite.
VertexSet extract_witness(const NiceDecomposition& nd, const DpRun& run, int node,
                          std::uint32_t coloring);

struct SolveResult {
  int size = 0;
  VertexSet witness;
};

/// Minimum cover size c[root, empty] plus a witness reconstructed by
/// backtracking; the witness is re-checked before returning.
SolveResult solve_vcp3(const Graph& g, const NiceDecomposition& nd, const SolveOptions& options = {});

}  // namespace vcp3
